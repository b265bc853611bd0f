#include "qgrass/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace qgrass {

nlohmann::json to_json(const CheckResult& c) {
  return {{"check", c.check}, {"params", c.params}, {"expected", c.expected},
          {"got", c.got},     {"pass", c.pass},     {"millis", c.millis}};
}

std::string to_text(const CheckResult& c) {
  std::string s = (c.pass ? "PASS " : "FAIL ") + c.check + " " + c.params.dump();
  s += " expected=" + c.expected.dump() + " got=" + c.got.dump();
  char buf[32];
  std::snprintf(buf, sizeof buf, " (%.0f ms)", c.millis);
  return s + buf;
}

nlohmann::json make_report(const std::string& command, const nlohmann::json& config,
                           const std::vector<CheckResult>& checks) {
  nlohmann::json arr = nlohmann::json::array();
  bool all = true;
  for (const auto& c : checks) {
    arr.push_back(to_json(c));
    all = all && c.pass;
  }
  return {{"schema", "qgrass-report/1"}, {"command", command}, {"config", config},
          {"checks", arr},               {"pass", all}};
}

nlohmann::json strip_timing(nlohmann::json report) {
  report.erase("timestamps");
  if (report.contains("checks"))
    for (auto& c : report["checks"]) c.erase("millis");
  return report;
}

void write_atomically(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp);
    out << content;
    if (!out.flush()) throw std::runtime_error("cannot write " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

}  // namespace qgrass
