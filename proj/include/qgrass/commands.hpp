#pragma once

#include "qgrass/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qgrass {

// Engine and structure checks shared by the CLI suites.
CheckResult check_confluence(int n, int words, int max_len, std::uint64_t seed);
CheckResult check_coassociativity(int n, int samples, std::uint64_t seed);
CheckResult check_det_central(int n);
CheckResult check_classical_limit(int n, int words, std::uint64_t seed);
CheckResult check_antipode(int n);
CheckResult check_r_axioms(int n);
CheckResult check_goodearl(int n);
CheckResult check_laplace(int n);
CheckResult check_star(int n);
CheckResult check_killing_constants(int n, int r);
CheckResult check_q_modes(int n);
CheckResult check_calculus_dim(int n, int r);

struct IntRange {
  int lo = 0, hi = -1;
  bool empty() const { return hi < lo; }
  // "3" or "2..4"
  static IntRange parse(const std::string& s);
};

enum class RunMode { Exact, Prescreen };

struct CheckConfig {
  std::optional<IntRange> n, r;
  std::optional<int> k_max, max_deg;
  RunMode mode = RunMode::Exact;
  std::uint64_t seed = 1;
  int jobs = 1;
};

// thrown for parameter combinations that no check can run on
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

const std::vector<std::string>& command_names();

struct RunOutcome {
  int exit_code = 0;  // 0 all passed, 1 some check failed
  std::vector<CheckResult> checks;
  nlohmann::json report;
};

// throws UsageError on an unknown command or invalid parameters
RunOutcome run(const std::string& command, const CheckConfig& config);
nlohmann::json config_json(const CheckConfig& c);

}  // namespace qgrass
