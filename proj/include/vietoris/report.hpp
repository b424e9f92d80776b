#pragma once

#include "vietoris/inequality.hpp"
#include "vietoris/io.hpp"

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace vietoris {

/// One line of a machine-readable report.
struct CheckRecord {
  std::string name;
  std::string inputs;   // short human-readable description of the instance
  bool passed = false;
  std::string margin;   // exact text ("3/40") or empty when not numeric
  double margin_approx = 0.0;
};

/// 64-bit FNV-1a, hex encoded; used as the inputs digest in reports.
std::string fnv1a_hex(const std::string& text);

/// Accumulates checks for one CLI command. Field order of the JSON output is
/// fixed so that reports diff cleanly between runs.
class Report {
public:
  explicit Report(std::string command, Json parameters = Json::object());

  void add(CheckRecord record) { checks_.push_back(std::move(record)); }
  void add(const std::string& name, const std::string& inputs, bool passed) { add({name, inputs, passed, "", 0.0}); }

  template <Scalar T>
  void add(const Inequality<T>& ineq, const std::string& inputs) {
    add({ineq.name, inputs, ineq.holds(), scalar_text(ineq.margin()), ScalarTraits<T>::to_double(ineq.margin())});
  }

  /// Appends every check of `other`, prefixing names with `section/`.
  void merge(const Report& other, const std::string& section);

  void set_result(const std::string& key, Json value) { results_[key] = std::move(value); }
  const Json& results() const { return results_; }

  const std::vector<CheckRecord>& checks() const { return checks_; }
  std::size_t passed() const;
  std::size_t failed() const { return checks_.size() - passed(); }
  bool ok() const { return failed() == 0; }
  const std::string& command() const { return command_; }

  /// Full report. With `include_checks` false only failing checks are listed.
  Json to_json(bool include_wall_time = true, bool include_checks = true) const;

private:
  std::string command_;
  Json parameters_;
  Json results_ = Json::object();
  std::vector<CheckRecord> checks_;
  std::chrono::steady_clock::time_point started_;
};

}  // namespace vietoris
