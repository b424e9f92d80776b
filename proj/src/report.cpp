#include "vietoris/report.hpp"

#include <algorithm>
#include <cstdio>

namespace vietoris {

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Report::Report(std::string command, Json parameters)
    : command_(std::move(command)), parameters_(std::move(parameters)), started_(std::chrono::steady_clock::now()) {}

void Report::merge(const Report& other, const std::string& section) {
  for (auto c : other.checks_) {
    c.name = section + "/" + c.name;
    checks_.push_back(std::move(c));
  }
  for (const auto& [k, v] : other.results_.items()) results_[section + "/" + k] = v;
}

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const auto& c) { return c.passed; }));
}

Json Report::to_json(bool include_wall_time, bool include_checks) const {
  Json out;
  out["command"] = command_;
  out["parameters"] = parameters_;
  out["results"] = results_;
  Json checks = Json::array();
  for (const auto& c : checks_) {
    if (!include_checks && c.passed) continue;
    Json rec;
    rec["name"] = c.name;
    rec["inputs"] = c.inputs;
    rec["digest"] = fnv1a_hex(c.inputs);
    rec["result"] = c.passed ? "pass" : "fail";
    if (!c.margin.empty()) {
      rec["margin"] = c.margin;
      rec["margin_approx"] = c.margin_approx;
    }
    checks.push_back(std::move(rec));
  }
  out["checks"] = std::move(checks);
  out["summary"] = Json{{"total", checks_.size()}, {"passed", passed()}, {"failed", failed()}};
  if (include_wall_time) {
    const auto elapsed = std::chrono::steady_clock::now() - started_;
    out["wall_time_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  }
  return out;
}

}  // namespace vietoris
