#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopfcurv/report.hpp"
#include "hopfcurv/scan.hpp"

namespace hopfcurv {

/// Thrown for invalid command configuration; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  int grid = 16;
  double step = 1e-5;
  double tol = 1e-6;
  bool strict = false;  ///< halves every tolerance
  int threads = default_threads();

  double scaled(double t) const { return strict ? 0.5 * t : t; }
  nlohmann::json to_json() const;
};

/// Tolerances that are not command flags.
inline constexpr double kPrincipalTolerance = 1e-7;
inline constexpr double kDelta2Tolerance = 1e-5;
inline constexpr double kStructureTolerance = 1e-10;
inline constexpr double kFrameTolerance = 1e-12;
inline constexpr double kInequalitySlack = 1e-6;
inline constexpr double kCrosscheckTolerance = 1e-4;
inline constexpr double kSphereHopfTolerance = 1e-8;

RunReport cmd_check_ruled(const RunConfig& cfg);

/// Deficit of the geodesic sphere of radius r from its closed-form Ricci tensor.
double sphere_expected_deficit(double radius);
/// Ascending principal curvatures of the geodesic-sphere model.
Vec3 sphere_principal_curvatures(double radius);

RunReport cmd_check_sphere(double radius, const RunConfig& cfg);

RunReport cmd_check_tube(const RunConfig& cfg);

/// Empty `names` runs the whole suite.
RunReport cmd_symbolic(const std::vector<std::string>& names, const RunConfig& cfg);

/// Parses "ruled", "sphere:<r>" or "perturbed-ruled:<eps>,<seed>".
SurfaceChart chart_from_spec(const std::string& spec);

struct ScanOutput {
  RunReport report;
  std::vector<ScanRow> rows;
};

/// Computes the scan rows and the inequality check over them.
ScanOutput cmd_scan(const std::string& surface, const RunConfig& cfg);

/// Writes rows as csv or json to `path`. Throws std::runtime_error on I/O failure.
void write_scan(const ScanOutput& scan, const std::string& path, const std::string& format);

/// Intrinsic finite-difference curvature against the Gauss equation.
RunReport cmd_crosscheck(const std::string& surface, const RunConfig& cfg);

}  // namespace hopfcurv
