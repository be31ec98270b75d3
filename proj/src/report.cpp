#include "hopfcurv/report.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hopfcurv {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
  }
  return "error";
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "error") return Status::error;
  throw std::invalid_argument("unknown status: " + s);
}

bool RunReport::all_pass() const {
  for (const auto& r : reports)
    if (r.status != Status::pass) return false;
  return true;
}

nlohmann::json RunReport::summary() const {
  int pass = 0, fail = 0, error = 0;
  for (const auto& r : reports) {
    switch (r.status) {
      case Status::pass: ++pass; break;
      case Status::fail: ++fail; break;
      case Status::error: ++error; break;
    }
  }
  return {{"total", reports.size()}, {"pass", pass}, {"fail", fail}, {"error", error},
          {"status", all_pass() ? "pass" : "fail"}};
}

void to_json(nlohmann::json& j, const Residual& r) {
  if (r.exact_zero) j = "exact-zero";
  else j = r.value;
}

void from_json(const nlohmann::json& j, Residual& r) {
  if (j.is_string()) {
    if (j.get<std::string>() != "exact-zero") throw std::invalid_argument("bad residual marker");
    r = Residual::exact();
  } else if (j.is_null()) {
    // JSON has no NaN; a non-finite residual is written as null.
    r = Residual::numeric(std::numeric_limits<double>::quiet_NaN());
  } else {
    r = Residual::numeric(j.get<double>());
  }
}

void to_json(nlohmann::json& j, const CheckReport& r) {
  j = {{"checkName", r.checkName},
       {"status", to_string(r.status)},
       {"maxAbsResidual", r.maxAbsResidual},
       {"details", r.details}};
}

void from_json(const nlohmann::json& j, CheckReport& r) {
  r.checkName = j.at("checkName").get<std::string>();
  r.status = status_from_string(j.at("status").get<std::string>());
  r.maxAbsResidual = j.at("maxAbsResidual").get<Residual>();
  r.details = j.at("details");
}

void to_json(nlohmann::json& j, const RunReport& r) {
  j = {{"command", r.command}, {"config", r.config}, {"reports", r.reports}, {"summary", r.summary()}};
}

void from_json(const nlohmann::json& j, RunReport& r) {
  r.command = j.at("command").get<std::string>();
  r.config = j.at("config");
  r.reports = j.at("reports").get<std::vector<CheckReport>>();
}

CheckReport threshold_report(std::string name, double value, double tolerance, nlohmann::json details) {
  CheckReport r;
  r.checkName = std::move(name);
  r.maxAbsResidual = Residual::numeric(value);
  r.status = (std::isfinite(value) && value <= tolerance) ? Status::pass : Status::fail;
  details["tolerance"] = tolerance;
  r.details = std::move(details);
  return r;
}

}  // namespace hopfcurv
