#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace hopfcurv {

enum class Status { pass, fail, error };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

/// Either an exact symbolic zero or a floating-point magnitude. Exact zeros
/// serialize as the string "exact-zero", never as 0.0.
struct Residual {
  bool exact_zero = false;
  double value = 0.0;

  static Residual exact() { return {true, 0.0}; }
  static Residual numeric(double v) { return {false, v}; }
  friend bool operator==(const Residual&, const Residual&) = default;
};

struct CheckReport {
  std::string checkName;
  Status status = Status::error;
  Residual maxAbsResidual;
  nlohmann::json details = nlohmann::json::object();
  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

/// One invocation of the tool: {command, config, reports[], summary}.
struct RunReport {
  std::string command;
  nlohmann::json config = nlohmann::json::object();
  std::vector<CheckReport> reports;

  bool all_pass() const;
  nlohmann::json summary() const;
  friend bool operator==(const RunReport&, const RunReport&) = default;
};

void to_json(nlohmann::json& j, const Residual& r);
void from_json(const nlohmann::json& j, Residual& r);
void to_json(nlohmann::json& j, const CheckReport& r);
void from_json(const nlohmann::json& j, CheckReport& r);
void to_json(nlohmann::json& j, const RunReport& r);
void from_json(const nlohmann::json& j, RunReport& r);

/// Pass iff value <= tolerance (and finite).
CheckReport threshold_report(std::string name, double value, double tolerance,
                             nlohmann::json details = nlohmann::json::object());

}  // namespace hopfcurv
