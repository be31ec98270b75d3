#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "hopfcurv/classification.hpp"
#include "hopfcurv/curvature.hpp"

namespace hopfcurv {

/// Everything computed at one grid point. `error` is set (and the numeric
/// fields are meaningless) when the point could not be processed.
struct PointResult {
  Params q = Params::Zero();
  std::string error;
  bool singular = false;
  ShapeData shape;
  CurvatureReport curvature;
  std::optional<EqualityBasisReport> equalityBasis;
  std::optional<double> ruledResidual;
  /// max deviation from the frame and structure invariants
  double frameInvariant = 0.0;
  double structureInvariant = 0.0;

  bool ok() const { return error.empty() && !singular; }
};

struct PointOptions {
  ShapeOptions shape;
  bool with_sectional = false;
  bool with_classification = false;
  bool ruled_minimal = true;
  double hopf_tolerance = kHopfTolerance;
};

PointResult evaluate_point(const SurfaceChart& chart, const Params& q, const PointOptions& opts);

/// Max deviation of a frame from orthonormality of {E1,E2,E3,N,p,ip}.
double frame_invariant_residual(const MovingFrame& f);
/// Max deviation from P skew, P xi = 0, P^2 = -I + xi xi^T, |xi| = 1.
double structure_invariant_residual(const ShapeData& s);

int default_threads();

/// Evaluates every grid point; results are in grid order regardless of the
/// thread count.
std::vector<PointResult> evaluate_grid(const SurfaceChart& chart, int grid, const PointOptions& opts,
                                       int threads = default_threads());

/// One row of scan output.
struct ScanRow {
  Params q = Params::Zero();
  double maxRicci = 0, meanCurvSq = 0, deficit = 0, alpha = 0, hopfDefect = 0, traceA = 0;
  std::string flags;
};

ScanRow to_scan_row(const PointResult& p);

inline constexpr const char* kCsvHeader = "u,v,theta,maxRicci,meanCurvSq,deficit,alpha,hopfDefect,traceA,flags";

void write_csv(std::ostream& out, const std::vector<ScanRow>& rows);
nlohmann::json rows_to_json(const std::vector<ScanRow>& rows);
std::vector<ScanRow> rows_from_json(const nlohmann::json& j);

}  // namespace hopfcurv
