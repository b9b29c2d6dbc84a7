#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mwb {

// One machine-checked identity sweep. Exact checks report the number of
// failing samples as the residual; numeric checks report the worst residual
// seen against their pinned tolerance. witness holds the first failing case.
struct CheckResult {
  std::string name;
  std::string status;  // "pass" | "fail" | "skip"
  double residual = 0.0;
  double tolerance = 0.0;  // 0 for exact checks
  long long samples = 0;
  double ms = 0.0;  // shown in tables, omitted from JSON to keep reports byte-stable
  std::string witness;
};

struct SuiteOptions {
  uint64_t seed = 0;
  long long samples = 0;  // 0 keeps per-check defaults
  bool sabotage = false;  // append a deliberately corrupted comparison (harness self-test)
};

// selector: "cocycle" | "lfactor" | "arch" | "all". Anything else is an
// input_error. Deterministic: a fixed (selector, options) pair yields an
// identical result list on every run.
std::vector<CheckResult> run_suite(const std::string& selector, const SuiteOptions& opt);

std::string report_json(const std::string& selector, const SuiteOptions& opt,
                        const std::vector<CheckResult>& checks);
std::string report_table(const std::vector<CheckResult>& checks);
bool all_pass(const std::vector<CheckResult>& checks);

}  // namespace mwb
