#include "mwb/descriptor.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace mwb {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw input_error("descriptor: " + what); }

long long require_int(const json& v, const char* what) {
  if (!v.is_number_integer()) bad(std::string(what) + " must be an integer");
  return v.get<long long>();
}

}  // namespace

std::string exact_eig_str(const ExactEig& e) {
  const Rat phase = e.phase.mod1();
  std::string s;
  if (!phase.is_zero()) s = "zeta(" + phase.str() + ")";
  if (!e.qexp.is_zero()) {
    if (!s.empty()) s += "*";
    s += "q^(" + e.qexp.str() + ")";
  }
  return s.empty() ? "1" : s;
}

ExactEig parse_exact_eig(const std::string& text) {
  detail::TextCursor cur{text, 0};
  ExactEig e{Rat(0), Rat(0)};
  if (cur.accept("1")) {
    if (!cur.eof()) bad("trailing text after eigenvalue '1'");
    return e;
  }
  bool any = false;
  if (cur.peek_is("z")) {
    cur.expect("zeta(");
    e.phase = cur.parse_rat().mod1();
    cur.expect(")");
    any = true;
    if (cur.accept("*") && !cur.peek_is("q")) bad("expected q^(...) after '*'");
  }
  if (cur.peek_is("q")) {
    cur.expect("q^(");
    e.qexp = cur.parse_rat();
    cur.expect(")");
    any = true;
  }
  if (!any || !cur.eof()) bad("eigenvalue text must be \"1\", \"zeta(a/b)\", \"q^(u/v)\" or \"zeta(a/b)*q^(u/v)\"");
  return e;
}

RepDescriptor parse_descriptor(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) bad("top level must be an object");
  for (const auto& [key, val] : j.items()) {
    (void)val;
    if (key != "kind" && key != "field" && key != "m" && key != "q" &&
        key != "eigenvalues" && key != "characters")
      bad("unknown key \"" + key + "\"");
  }

  RepDescriptor d;
  if (!j.contains("kind") || !j["kind"].is_string()) bad("\"kind\" must be \"gl\" or \"sp\"");
  d.kind = j["kind"].get<std::string>();
  if (d.kind != "gl" && d.kind != "sp") bad("\"kind\" must be \"gl\" or \"sp\"");
  if (!j.contains("field") || !j["field"].is_string())
    bad("\"field\" must be \"padic\" or \"complex\"");
  d.field = j["field"].get<std::string>();
  if (d.field != "padic" && d.field != "complex")
    bad("\"field\" must be \"padic\" or \"complex\"");
  if (!j.contains("m")) bad("\"m\" is required");
  long long m = require_int(j["m"], "\"m\"");
  if (m < 1 || m > 1000000) bad("\"m\" out of range");
  d.m = (uint32_t)m;

  if (d.field == "complex") {
    if (j.contains("q")) bad("\"q\" is only for p-adic descriptors");
    if (j.contains("eigenvalues")) bad("complex descriptors use \"characters\"");
    if (!j.contains("characters") || !j["characters"].is_array() || j["characters"].empty())
      bad("\"characters\" must be a nonempty array");
    for (const auto& ch : j["characters"]) {
      if (!ch.is_array() || ch.size() != 3 || !ch[1].is_number() || !ch[2].is_number())
        bad("each character must be [l, t_re, t_im]");
      ComplexCharacter c;
      c.l = require_int(ch[0], "character l");
      c.t = cx(ch[1].get<double>(), ch[2].get<double>());
      d.chars.push_back(c);
    }
    return d;
  }

  if (j.contains("characters")) bad("p-adic descriptors use \"eigenvalues\"");
  if (!j.contains("q")) bad("\"q\" is required for p-adic descriptors");
  long long q = require_int(j["q"], "\"q\"");
  if (q < 2 || q > 1000000000) bad("\"q\" out of range");
  d.q = (uint32_t)q;
  if ((d.q - 1) % (2 * d.m) != 0) bad("2m must divide q-1");
  if (!j.contains("eigenvalues") || !j["eigenvalues"].is_array() || j["eigenvalues"].empty())
    bad("\"eigenvalues\" must be a nonempty array");
  bool saw_exact = false, saw_numeric = false;
  for (const auto& ev : j["eigenvalues"]) {
    if (ev.is_string()) {
      saw_exact = true;
      d.exact_eigs.push_back(parse_exact_eig(ev.get<std::string>()));
    } else if (ev.is_array() && ev.size() == 2 && ev[0].is_number() && ev[1].is_number()) {
      saw_numeric = true;
      cx v(ev[0].get<double>(), ev[1].get<double>());
      if (v == 0.0) bad("eigenvalues must be nonzero");
      d.numeric_eigs.push_back(v);
    } else {
      bad("each eigenvalue must be a string or [re, im]");
    }
  }
  if (saw_exact && saw_numeric) bad("eigenvalues must be all-exact or all-numeric");
  d.exact = saw_exact;
  return d;
}

RepDescriptor load_descriptor_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open descriptor file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_descriptor(ss.str());
}

std::string dump_descriptor(const RepDescriptor& d) {
  json j;
  j["kind"] = d.kind;
  j["field"] = d.field;
  j["m"] = d.m;
  if (d.field == "complex") {
    json arr = json::array();
    for (const auto& c : d.chars) arr.push_back({c.l, c.t.real(), c.t.imag()});
    j["characters"] = arr;
  } else {
    j["q"] = d.q;
    json arr = json::array();
    if (d.exact)
      for (const auto& e : d.exact_eigs) arr.push_back(exact_eig_str(e));
    else
      for (const auto& v : d.numeric_eigs) arr.push_back({v.real(), v.imag()});
    j["eigenvalues"] = arr;
  }
  return j.dump();
}

SatakeRepExact descriptor_to_exact(const RepDescriptor& d) {
  if (d.field != "padic" || !d.exact)
    throw input_error("descriptor: exact Satake data needs a p-adic descriptor with string eigenvalues");
  return make_rep<ExactEig>(d.kind == "sp" ? RepKind::Sp : RepKind::GL, d.m, d.exact_eigs);
}

SatakeRepNum descriptor_to_numeric(const RepDescriptor& d) {
  if (d.field != "padic" || d.exact)
    throw input_error("descriptor: numeric Satake data needs a p-adic descriptor with [re, im] eigenvalues");
  return make_rep<cx>(d.kind == "sp" ? RepKind::Sp : RepKind::GL, d.m, d.numeric_eigs);
}

ComplexRep descriptor_to_complex(const RepDescriptor& d) {
  if (d.field != "complex")
    throw input_error("descriptor: archimedean data needs a complex-field descriptor");
  return make_complex_rep(d.kind == "sp" ? ArchKind::SpLike : ArchKind::GL, d.m, d.chars);
}

}  // namespace mwb
