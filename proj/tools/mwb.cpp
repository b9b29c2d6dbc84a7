#include <complex>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mwb/archgamma.hpp"
#include "mwb/cover.hpp"
#include "mwb/descriptor.hpp"
#include "mwb/lfactor.hpp"
#include "mwb/verify.hpp"

namespace {

using namespace mwb;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t end = s.find(sep, pos);
    if (end == std::string::npos) end = s.size();
    out.push_back(s.substr(pos, end - pos));
    pos = end + 1;
  }
  return out;
}

// "val:unit" notation, e.g. "2:3" for 3*pi^2.
LocalFieldElem parse_val_unit(const ResidueField& F, const std::string& s) {
  const auto pos = s.find(':');
  try {
    if (pos == std::string::npos) throw std::invalid_argument(s);
    const int v = std::stoi(s.substr(0, pos));
    const long long u = std::stoll(s.substr(pos + 1));
    return local_elem(F, v, u);
  } catch (const std::logic_error&) {
    throw input_error("expected an element as \"val:unit\", got \"" + s + "\"");
  }
}

// "u*pi^v" notation with trivial parts dropped: "1", "5", "pi", "5*pi^-2".
LocalFieldElem parse_local_text(const ResidueField& F, const std::string& text) {
  detail::TextCursor cur{text};
  long long unit = 1;
  long long val = 0;
  if (cur.accept("pi")) {
    val = cur.accept("^") ? cur.parse_ll() : 1;
  } else {
    unit = cur.parse_ll();
    if (cur.accept("*")) {
      cur.expect("pi");
      val = cur.accept("^") ? cur.parse_ll() : 1;
    }
  }
  if (!cur.eof())
    throw input_error("trailing characters in element \"" + text + "\"");
  return local_elem(F, (int)val, unit);
}

// Monomial element spec "t=<e1>,<e2>,...;w=<i0>,<i1>,...;eps=<k>"; w defaults
// to the identity, eps to 0. Sp kind takes the full 2d torus and permutation.
MonomialCoverElem parse_elem_spec(GroupKind kind, const ResidueField& F,
                                  const std::string& spec) {
  std::vector<LocalFieldElem> t;
  std::vector<int> w;
  long long eps = 0;
  bool have_t = false;
  for (const auto& part : split(spec, ';')) {
    if (part.empty()) continue;
    const size_t eq = part.find('=');
    if (eq == std::string::npos)
      throw input_error("element part \"" + part + "\" is not key=value");
    const std::string key = part.substr(0, eq);
    const std::string rest = part.substr(eq + 1);
    try {
      if (key == "t") {
        for (const auto& item : split(rest, ',')) t.push_back(parse_local_text(F, item));
        have_t = true;
      } else if (key == "w") {
        for (const auto& item : split(rest, ',')) w.push_back(std::stoi(item));
      } else if (key == "eps") {
        eps = std::stoll(rest);
      } else {
        throw input_error("unknown element key \"" + key + "\"");
      }
    } catch (const std::logic_error&) {
      throw input_error("element part \"" + part + "\" has a malformed value");
    }
  }
  if (!have_t) throw input_error("element spec needs a torus part t=...");
  if (w.empty()) {
    w.resize(t.size());
    std::iota(w.begin(), w.end(), 0);
  }
  SignedPermutation p;
  p.perm = w;
  p.signs.assign(w.size(), 1);
  return MonomialCoverElem::from_parts(kind, F, t, p, RootOfUnity(eps, F.m()));
}

GroupKind parse_kind(const std::string& s) {
  if (s == "gl") return GroupKind::GL;
  if (s == "sp") return GroupKind::Sp;
  if (s == "glinsp") return GroupKind::GLinSp;
  throw input_error("unknown group kind \"" + s + "\"");
}

cx parse_cx(const std::string& s) {
  const auto pos = s.find(',');
  try {
    if (pos == std::string::npos) return cx(std::stod(s), 0.0);
    return cx(std::stod(s.substr(0, pos)), std::stod(s.substr(pos + 1)));
  } catch (const std::logic_error&) {
    throw input_error("expected a complex number as \"re[,im]\", got \"" + s + "\"");
  }
}

std::string cx_str(cx z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

nlohmann::json cx_json(cx z) { return nlohmann::json::array({z.real(), z.imag()}); }

int run_hilbert(uint32_t q, uint32_t m, const std::string& at, const std::string& bt,
                const std::string& format) {
  const ResidueField F(q, m);
  const auto a = parse_val_unit(F, at);
  const auto b = parse_val_unit(F, bt);
  const auto h = hilbert_symbol(F, a, b);
  if (format == "json") {
    nlohmann::json j;
    j["a"] = local_str(F, a);
    j["b"] = local_str(F, b);
    j["q"] = q;
    j["m"] = m;
    j["exponent"] = h.exponent();
    j["symbol"] = h.str();
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("(%s, %s)_%u = %s  [exponent %u mod %u, value %s]\n",
                local_str(F, a).c_str(), local_str(F, b).c_str(), m, h.str().c_str(),
                h.exponent(), m, cx_str(h.as_complex()).c_str());
  }
  return 0;
}

int run_cocycle(uint32_t q, uint32_t m, const std::string& kind_s,
                const std::string& xs, const std::string& ys,
                const std::string& format) {
  const ResidueField F(q, m);
  const GroupKind kind = parse_kind(kind_s);
  const auto x = parse_elem_spec(kind, F, xs);
  const auto y = parse_elem_spec(kind, F, ys);
  const auto z = monomial_mul(x, y);
  const auto one = RootOfUnity::identity(F.m());
  const auto sigma = monomial_mul(x.with_eps(one), y.with_eps(one)).eps();
  if (format == "json") {
    nlohmann::json j;
    j["kind"] = kind_name(kind);
    j["q"] = q;
    j["m"] = m;
    j["x"] = x.str();
    j["y"] = y.str();
    j["product"] = z.str();
    j["cocycle_exponent"] = sigma.exponent();
    j["cocycle"] = sigma.str();
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("x          = %s\n", x.str().c_str());
    std::printf("y          = %s\n", y.str().c_str());
    std::printf("x*y        = %s\n", z.str().c_str());
    std::printf("sigma(x,y) = %s\n", sigma.str().c_str());
  }
  return 0;
}

template <class E>
int lfactor_run(const std::vector<SatakeRep<E>>& reps, const std::string& op,
                DoublingBranch br, uint32_t cpar, const std::optional<cx>& sval,
                uint32_t q, const std::string& format) {
  FuncOf<E> f;
  bool have_check = false, check_ok = false;
  if (op == "std") {
    f = l_std(reps[0]);
  } else if (op == "pair") {
    f = l_pair(reps[0], reps[1]);
  } else if (op == "sym2") {
    f = l_sym2(reps[0]);
  } else if (op == "ext2") {
    f = l_ext2(reps[0]);
  } else if (op == "a" || op == "b" || op == "c") {
    if (reps[0].kind != RepKind::GL)
      throw input_error("normalizer factors take a gl-kind descriptor");
    f = op == "a"   ? a_factor(br, reps[0], cpar)
        : op == "b" ? b_factor(br, reps[0], cpar)
                    : c_factor(br, reps[0], cpar);
  } else {  // gamma
    if (reps[1].kind != RepKind::GL)
      throw input_error("the twist descriptor of gamma must be gl-kind");
    f = gamma_unramified_doubling(reps[0], reps[1]);
    const auto refl =
        gamma_unramified_doubling(dual_rep(reps[0]), dual_rep(reps[1])).subst(-1, Rat(1));
    check_ok = (f * refl).is_one();
    have_check = true;
  }
  std::optional<cx> value;
  if (sval) value = f.value((double)q, *sval);
  if (format == "json") {
    nlohmann::json j;
    j["op"] = op;
    if (op == "a" || op == "b" || op == "c") {
      j["branch"] = br == DoublingBranch::Sp ? "sp" : "gl";
      j["c"] = cpar;
    }
    j["canonical"] = f.str();
    j["degree_num"] = f.degree_num();
    j["degree_den"] = f.degree_den();
    if (have_check) j["functional_equation"] = check_ok ? "pass" : "fail";
    if (value) {
      j["s"] = cx_json(*sval);
      j["value"] = cx_json(*value);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("op        : %s\n", op.c_str());
    std::printf("canonical : %s\n", f.str().c_str());
    std::printf("degree    : num %d, den %d in X = q^-s\n", f.degree_num(),
                f.degree_den());
    if (have_check)
      std::printf("self-check gamma(s) * gamma(1-s, duals) = 1 : %s\n",
                  check_ok ? "pass" : "fail");
    if (value)
      std::printf("value at s = %s : %s\n", cx_str(*sval).c_str(),
                  cx_str(*value).c_str());
  }
  return have_check && !check_ok ? 1 : 0;
}

int run_lfactor(const std::vector<std::string>& files, const std::string& op,
                const std::string& branch_s, uint32_t cpar, const std::string& s_text,
                const std::string& format) {
  const size_t need = (op == "pair" || op == "gamma") ? 2 : 1;
  if (files.size() != need)
    throw input_error(op + " takes exactly " + std::to_string(need) +
                      " descriptor file(s), got " + std::to_string(files.size()));
  std::vector<RepDescriptor> ds;
  for (const auto& f : files) ds.push_back(load_descriptor_file(f));
  for (const auto& d : ds) {
    if (d.field != "padic")
      throw input_error("lfactor needs p-adic descriptors (use gamma-c over the complex field)");
    if (d.exact != ds[0].exact)
      throw input_error("descriptors must share the eigenvalue representation");
  }
  const DoublingBranch br = branch_s == "gl" ? DoublingBranch::GL : DoublingBranch::Sp;
  std::optional<cx> sval;
  if (!s_text.empty()) sval = parse_cx(s_text);
  if (ds[0].exact) {
    std::vector<SatakeRepExact> reps;
    for (const auto& d : ds) reps.push_back(descriptor_to_exact(d));
    return lfactor_run<ExactEig>(reps, op, br, cpar, sval, ds[0].q, format);
  }
  std::vector<SatakeRepNum> reps;
  for (const auto& d : ds) reps.push_back(descriptor_to_numeric(d));
  return lfactor_run<std::complex<double>>(reps, op, br, cpar, sval, ds[0].q, format);
}

int run_gamma_c(const std::string& pi_file, const std::string& tau_file,
                const std::string& s_text, const std::optional<std::string>& b_text,
                const std::string& format) {
  const auto pi = descriptor_to_complex(load_descriptor_file(pi_file));
  const auto tau = descriptor_to_complex(load_descriptor_file(tau_file));
  const cx s = parse_cx(s_text);
  ArchPsi psi;
  if (b_text) psi.b = parse_cx(*b_text);
  const auto dg = doubling_gamma_complex(s, pi, tau, psi);
  cx log_dual = 0.0;
  for (const auto& chi : doubling_index_set(pi, tau))
    log_dual += log_tate_l(1.0 - s, chi.inv());
  const cx recon = dg.eps * std::exp(log_dual) / dg.l_value;
  const double recon_res =
      std::abs(dg.gamma - recon) / std::max(1.0, std::abs(dg.gamma));
  const cx direct = rs_gamma_direct(s, pi, tau, psi);
  const cx via_rho = rs_gamma_via_rho(s, pi, tau, psi);
  const double two_path = std::abs(direct - via_rho) / std::max(1.0, std::abs(direct));
  if (format == "json") {
    nlohmann::json j;
    j["s"] = cx_json(s);
    j["psi_b"] = cx_json(psi.b);
    j["gamma"] = cx_json(dg.gamma);
    j["l_value"] = cx_json(dg.l_value);
    j["eps"] = cx_json(dg.eps);
    j["reconstruction_residual"] = recon_res;
    j["rs_two_path_residual"] = two_path;
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("gamma = %s\n", cx_str(dg.gamma).c_str());
    std::printf("L     = %s\n", cx_str(dg.l_value).c_str());
    std::printf("eps   = %s\n", cx_str(dg.eps).c_str());
    std::printf("reconstruction |gamma - eps L(1-s,duals)/L(s)| residual : %.3g\n",
                recon_res);
    std::printf("rankin-selberg two-path residual                        : %.3g\n",
                two_path);
  }
  return 0;
}

int run_verify(const std::string& selector, uint64_t seed, long long samples,
               bool sabotage, const std::string& format) {
  SuiteOptions opt;
  opt.seed = seed;
  opt.samples = samples;
  opt.sabotage = sabotage;
  const auto checks = run_suite(selector, opt);
  std::cout << (format == "json" ? report_json(selector, opt, checks)
                                 : report_table(checks));
  return all_pass(checks) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic of m-fold metaplectic covers: Hilbert symbols, "
               "covering cocycles, local L/gamma factors"};
  app.require_subcommand(1);
  const auto fmt_check = CLI::IsMember({"json", "table"});

  auto* hil = app.add_subcommand("hilbert", "tame Hilbert symbol of two leading terms");
  std::string h_a, h_b, h_fmt = "table";
  uint32_t h_q = 0, h_m = 0;
  hil->add_option("a", h_a, "first element as val:unit")->required();
  hil->add_option("b", h_b, "second element as val:unit")->required();
  hil->add_option("--q", h_q, "residue field size, an odd prime")->required();
  hil->add_option("--m", h_m, "symbol order, 2m | q-1")->required();
  hil->add_option("--format", h_fmt, "output format")->check(fmt_check);

  auto* coc = app.add_subcommand("cocycle", "multiply two monomial cover elements");
  std::string c_x, c_y, c_kind = "gl", c_fmt = "table";
  uint32_t c_q = 0, c_m = 0;
  coc->add_option("x", c_x, "element spec t=...;w=...;eps=...")->required();
  coc->add_option("y", c_y, "element spec t=...;w=...;eps=...")->required();
  coc->add_option("--q", c_q, "residue field size, an odd prime")->required();
  coc->add_option("--m", c_m, "cover degree, 2m | q-1")->required();
  coc->add_option("--kind", c_kind, "group kind")
      ->check(CLI::IsMember({"gl", "sp", "glinsp"}));
  coc->add_option("--format", c_fmt, "output format")->check(fmt_check);

  auto* lf = app.add_subcommand("lfactor", "unramified local factors, exact in q^-s");
  std::vector<std::string> l_files;
  std::string l_op, l_branch = "sp", l_s, l_fmt = "table";
  uint32_t l_c = 1;
  lf->add_option("files", l_files, "descriptor file(s)")->required()->expected(1, 2);
  lf->add_option("--op", l_op, "factor to compute")
      ->required()
      ->check(CLI::IsMember({"std", "pair", "sym2", "ext2", "a", "b", "c", "gamma"}));
  lf->add_option("--branch", l_branch, "doubling branch for a/b/c factors")
      ->check(CLI::IsMember({"sp", "gl"}));
  lf->add_option("--c", l_c, "doubling parameter c for a/b/c factors");
  lf->add_option("--s", l_s, "evaluate numerically at s = re[,im]");
  lf->add_option("--format", l_fmt, "output format")->check(fmt_check);

  auto* gc = app.add_subcommand("gamma-c", "archimedean gamma factor over the complex field");
  std::string g_pi, g_tau, g_s, g_b, g_fmt = "table";
  gc->add_option("pi", g_pi, "complex-field descriptor file")->required();
  gc->add_option("tau", g_tau, "complex-field descriptor file")->required();
  gc->add_option("--s", g_s, "evaluation point s = re[,im]")->required();
  auto* g_bopt = gc->add_option("--b", g_b, "additive character parameter b = re[,im]");
  gc->add_option("--format", g_fmt, "output format")->check(fmt_check);

  auto* ver = app.add_subcommand("verify", "run the identity verification suite");
  std::string v_sel, v_fmt = "table";
  uint64_t v_seed = 0;
  long long v_samples = 0;
  bool v_sab = false;
  ver->add_option("selector", v_sel, "cocycle|lfactor|arch|all")->required();
  ver->add_option("--seed", v_seed, "RNG seed")->envname("MWB_SEED");
  ver->add_option("--samples", v_samples, "override per-check sample counts");
  ver->add_flag("--sabotage", v_sab, "inject a deliberate defect to test the harness");
  ver->add_option("--format", v_fmt, "output format")->check(fmt_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*hil) return run_hilbert(h_q, h_m, h_a, h_b, h_fmt);
    if (*coc) return run_cocycle(c_q, c_m, c_kind, c_x, c_y, c_fmt);
    if (*lf) return run_lfactor(l_files, l_op, l_branch, l_c, l_s, l_fmt);
    if (*gc)
      return run_gamma_c(g_pi, g_tau, g_s,
                         *g_bopt ? std::optional<std::string>(g_b) : std::nullopt,
                         g_fmt);
    if (*ver) return run_verify(v_sel, v_seed, v_samples, v_sab, v_fmt);
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
