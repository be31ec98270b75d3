#include "hopfcurv/scan.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "hopfcurv/errors.hpp"

namespace hopfcurv {

double frame_invariant_residual(const MovingFrame& f) {
  const std::array<AmbientVector, 6> v{f.E[0], f.E[1], f.E[2], f.normal, f.p, f.vertical};
  double worst = 0.0;
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j) worst = std::max(worst, std::abs(real_inner(v[i], v[j]) - (i == j ? 1.0 : 0.0)));
  return worst;
}

double structure_invariant_residual(const ShapeData& s) {
  double worst = (s.P + s.P.transpose()).cwiseAbs().maxCoeff();
  worst = std::max(worst, (s.P * s.xi).cwiseAbs().maxCoeff());
  worst = std::max(worst, (s.P * s.P + Mat3::Identity() - s.xi * s.xi.transpose()).cwiseAbs().maxCoeff());
  worst = std::max(worst, std::abs(s.xi.norm() - 1.0));
  return worst;
}

PointResult evaluate_point(const SurfaceChart& chart, const Params& q, const PointOptions& opts) {
  PointResult r;
  r.q = q;
  if (chart.is_singular(q)) {
    r.singular = true;
    return r;
  }
  try {
    const PointGeometry g = analyze_point(chart, q, opts.shape);
    r.shape = g.shape;
    r.frameInvariant = frame_invariant_residual(g.frame);
    r.structureInvariant = structure_invariant_residual(g.shape);
    r.curvature = curvature_report(g.shape, opts.with_sectional);
    if (opts.with_classification && g.shape.hopfDefect > opts.hopf_tolerance) {
      r.equalityBasis = equality_basis(g.shape, opts.hopf_tolerance);
      r.ruledResidual = ruled_check(g.shape, opts.ruled_minimal, opts.hopf_tolerance);
    }
  } catch (const RankDeficient&) {
    r.error = "RankDeficient";
  } catch (const AsymmetryExceeded&) {
    r.error = "AsymmetryExceeded";
  } catch (const std::exception& e) {
    r.error = std::string("error:") + e.what();
  }
  return r;
}

int default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

std::vector<PointResult> evaluate_grid(const SurfaceChart& chart, int grid, const PointOptions& opts, int threads) {
  const auto points = grid_points(chart, grid);
  std::vector<PointResult> out(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) out[i] = evaluate_point(chart, points[i], opts);
  };
  const int n = std::max(1, std::min<int>(threads, static_cast<int>(points.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

ScanRow to_scan_row(const PointResult& p) {
  ScanRow row;
  row.q = p.q;
  if (!p.ok()) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    row.maxRicci = row.meanCurvSq = row.deficit = row.alpha = row.hopfDefect = row.traceA = nan;
    row.flags = p.singular ? "singular" : p.error;
    return row;
  }
  row.maxRicci = p.curvature.maxRicci;
  row.meanCurvSq = p.curvature.meanCurvSq;
  row.deficit = p.curvature.deficit;
  row.alpha = p.shape.alpha;
  row.hopfDefect = p.shape.hopfDefect;
  row.traceA = p.shape.A.trace();
  return row;
}

namespace {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

nlohmann::json number_or_null(double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(); }

double number_from(const nlohmann::json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << format_number(r.q(0)) << ',' << format_number(r.q(1)) << ',' << format_number(r.q(2)) << ','
        << format_number(r.maxRicci) << ',' << format_number(r.meanCurvSq) << ',' << format_number(r.deficit)
        << ',' << format_number(r.alpha) << ',' << format_number(r.hopfDefect) << ','
        << format_number(r.traceA) << ',' << r.flags << '\n';
  }
}

nlohmann::json rows_to_json(const std::vector<ScanRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"u", r.q(0)},
                   {"v", r.q(1)},
                   {"theta", r.q(2)},
                   {"maxRicci", number_or_null(r.maxRicci)},
                   {"meanCurvSq", number_or_null(r.meanCurvSq)},
                   {"deficit", number_or_null(r.deficit)},
                   {"alpha", number_or_null(r.alpha)},
                   {"hopfDefect", number_or_null(r.hopfDefect)},
                   {"traceA", number_or_null(r.traceA)},
                   {"flags", r.flags}});
  }
  return arr;
}

std::vector<ScanRow> rows_from_json(const nlohmann::json& j) {
  std::vector<ScanRow> rows;
  for (const auto& o : j) {
    ScanRow r;
    r.q = Params(o.at("u").get<double>(), o.at("v").get<double>(), o.at("theta").get<double>());
    r.maxRicci = number_from(o.at("maxRicci"));
    r.meanCurvSq = number_from(o.at("meanCurvSq"));
    r.deficit = number_from(o.at("deficit"));
    r.alpha = number_from(o.at("alpha"));
    r.hopfDefect = number_from(o.at("hopfDefect"));
    r.traceA = number_from(o.at("traceA"));
    r.flags = o.at("flags").get<std::string>();
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace hopfcurv
