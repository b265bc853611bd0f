#pragma once

#include <json.hpp>

#include <chrono>
#include <string>
#include <vector>

namespace qgrass {

struct CheckResult {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json expected;
  nlohmann::json got;
  bool pass = false;
  double millis = 0;
};

nlohmann::json to_json(const CheckResult& c);
std::string to_text(const CheckResult& c);
// {"schema": "qgrass-report/1", "command", "config", "checks": [...], "pass"}.
// The caller adds wall-clock data under "timestamps".
nlohmann::json make_report(const std::string& command, const nlohmann::json& config,
                           const std::vector<CheckResult>& checks);
// drops "timestamps" and per-check "millis"; what remains is reproducible byte for byte
nlohmann::json strip_timing(nlohmann::json report);
// write to a temporary file next to path, then rename
void write_atomically(const std::string& path, const std::string& content);

class Stopwatch {
 public:
  Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
  double millis() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

}  // namespace qgrass
