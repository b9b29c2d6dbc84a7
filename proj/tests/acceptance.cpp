// Acceptance gate: one printed line per criterion, nonzero exit on any
// failure. Budgets and tolerances are pinned here, not configurable.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "mwb/descriptor.hpp"
#include "mwb/verify.hpp"

namespace {

using mwb::CheckResult;

struct Gate {
  int failures = 0;

  void report(int n, const std::string& label, bool pass, double secs,
              const std::string& why) {
    std::printf("criterion %d: %-52s %s (%.2f s)\n", n, label.c_str(),
                pass ? "pass" : "FAIL", secs);
    if (!pass) {
      std::printf("  reason: %s\n", why.c_str());
      ++failures;
    }
  }
};

const CheckResult* find(const std::vector<CheckResult>& checks,
                        const std::string& name) {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

double total_ms(const std::vector<CheckResult>& checks) {
  double ms = 0.0;
  for (const auto& c : checks) ms += c.ms;
  return ms;
}

// Accumulates the first failure reason; empty means the criterion holds.
struct Why {
  std::string text;
  void require(bool ok, const std::string& reason) {
    if (!ok && text.empty()) text = reason;
  }
  void require_pass(const CheckResult* c, const std::string& name) {
    require(c != nullptr, "check " + name + " missing");
    if (c) require(c->status == "pass", "check " + name + " failed: " + c->witness);
  }
};

std::vector<CheckResult> timed_suite(const std::string& selector, double& secs) {
  const auto t0 = std::chrono::steady_clock::now();
  mwb::SuiteOptions opt;
  opt.seed = 42;
  auto checks = mwb::run_suite(selector, opt);
  secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
             .count();
  return checks;
}

}  // namespace

int main() {
  Gate gate;

  double cocycle_secs = 0.0;
  const auto cocycle = timed_suite("cocycle", cocycle_secs);

  {
    Why why;
    const char* names[] = {
        "cocycle-associativity", "cocycle-inverses",
        "block-compatibility",   "weyl-conjugation",
        "scalar-centrality",     "diamond-routes",
        "diag-embed-power",      "doubling-commutation",
        "star-automorphism",     "pairing-cohomology",
        "scalar-commutator-vanishing", "unipotent-conjugation",
    };
    for (const char* n : names) why.require_pass(find(cocycle, n), n);
    const auto* assoc = find(cocycle, "cocycle-associativity");
    why.require(assoc && assoc->samples >= 50000,
                "associativity needs >= 10^4 triples per field pair");
    const auto* block = find(cocycle, "block-compatibility");
    why.require(block && block->samples >= 1000,
                "block compatibility needs >= 10^3 cases");
    const auto* weyl = find(cocycle, "weyl-conjugation");
    why.require(weyl && weyl->samples >= 1000,
                "weyl conjugation needs >= 10^3 cases");
    why.require(cocycle_secs < 60.0, "suite exceeded the 60 s budget");
    gate.report(1, "exact covering cocycle identity suite", why.text.empty(),
                cocycle_secs, why.text);
  }

  {
    Why why;
    const auto* h = find(cocycle, "hilbert-symbol-laws");
    why.require_pass(h, "hilbert-symbol-laws");
    // exhaustive over |valuation| <= 2: 30 x 30 element pairs at least
    why.require(h && h->samples >= 900, "exhaustive law sweep too small");
    why.require(h && h->ms < 5000.0, "symbol sweep exceeded the 5 s budget");
    why.require(h && h->tolerance == 0.0, "symbol laws must be exact");
    gate.report(2, "exhaustive tame symbol laws at q=7, m=3",
                why.text.empty(), h ? h->ms / 1000.0 : 0.0, why.text);
  }

  {
    Why why;
    double secs = 0.0;
    const auto lf = timed_suite("lfactor", secs);
    const char* names[] = {
        "gamma-reflection-doubling", "gamma-reflection-rankin",
        "normalizer-composition",    "gamma-multiplicativity-pi",
        "gamma-multiplicativity-tau", "integral-functional-equation",
        "degree-bookkeeping",        "factored-text-round-trip",
    };
    for (const char* n : names) why.require_pass(find(lf, n), n);
    const auto* rd = find(lf, "gamma-reflection-doubling");
    const auto* rr = find(lf, "gamma-reflection-rankin");
    why.require(rd && rr && rd->samples + rr->samples >= 200,
                "reflection sweep needs >= 200 descriptors");
    for (const auto& c : lf)
      why.require(c.tolerance == 0.0,
                  "rational-function checks must be exact: " + c.name);
    why.require(secs < 30.0, "suite exceeded the 30 s budget");
    gate.report(3, "exact local factor identity suite", why.text.empty(),
                secs, why.text);
  }

  {
    Why why;
    double secs = 0.0;
    const auto ar = timed_suite("arch", secs);
    const auto* gm = find(ar, "gamma-multiplication");
    why.require_pass(gm, "gamma-multiplication");
    why.require(gm && gm->samples >= 100 && gm->tolerance == 1e-10,
                "multiplication sweep needs >= 100 points at 1e-10");
    const auto* tp = find(ar, "power-expansion-two-path");
    why.require_pass(tp, "power-expansion-two-path");
    why.require(tp && tp->samples >= 500 && tp->tolerance == 1e-8,
                "two-path sweep needs >= 500 points at 1e-8");
    for (const char* n : {"doubling-reconstruction", "tate-functional-equation",
                          "additive-twist"}) {
      const auto* c = find(ar, n);
      why.require_pass(c, n);
      why.require(c && c->tolerance == 1e-8,
                  std::string(n) + " must be pinned at 1e-8");
    }
    why.require_pass(find(ar, "near-pole-guard"), "near-pole-guard");
    why.require(secs < 60.0, "suite exceeded the 60 s budget");
    gate.report(4, "archimedean gamma numerical suite", why.text.empty(),
                secs, why.text);
  }

  {
    Why why;
    const auto t0 = std::chrono::steady_clock::now();
    const int rc =
        std::system(MWB_BIN " verify all --seed 42 > /dev/null 2>&1");
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    why.require(WIFEXITED(rc) && WEXITSTATUS(rc) == 0,
                "mwb verify all --seed 42 must exit 0");
    const char* fixtures[] = {
        "{\"eigenvalues\":[\"zeta(1/3)*q^(1/2)\",\"q^(-1)\"],"
        "\"field\":\"padic\",\"kind\":\"sp\",\"m\":3,\"q\":7}",
        "{\"eigenvalues\":[\"zeta(2/3)\",\"q^(1/3)\"],"
        "\"field\":\"padic\",\"kind\":\"gl\",\"m\":3,\"q\":7}",
        "{\"characters\":[[2,0.3,0.1],[-1,-0.2,0.4]],"
        "\"field\":\"complex\",\"kind\":\"sp\",\"m\":3}",
        "{\"eigenvalues\":[[0.5,0.25],[-1.0,0.0]],"
        "\"field\":\"padic\",\"kind\":\"gl\",\"m\":2,\"q\":13}",
    };
    for (const char* text : fixtures) {
      const std::string canon = mwb::dump_descriptor(mwb::parse_descriptor(text));
      why.require(mwb::dump_descriptor(mwb::parse_descriptor(canon)) == canon,
                  "descriptor round-trip must be byte-exact");
    }
    gate.report(5, "command line verification and round-trip", why.text.empty(),
                secs, why.text);
  }

  std::printf("%d of 5 acceptance criteria pass\n", 5 - gate.failures);
  return gate.failures == 0 ? 0 : 1;
}
