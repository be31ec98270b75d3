#include "hopfcurv/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "hopfcurv/algebra/checks.hpp"
#include "hopfcurv/errors.hpp"
#include "hopfcurv/intrinsic.hpp"
#include "hopfcurv/sym3.hpp"

namespace hopfcurv {

namespace {

using nlohmann::json;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void require_grid(int grid, int minimum = 2) {
  if (grid < minimum) throw UsageError("--grid must be at least " + std::to_string(minimum));
}

struct GridSummary {
  int points = 0;
  int failed = 0;
  json failures = json::array();
};

GridSummary summarize(const std::vector<PointResult>& results) {
  GridSummary s;
  for (const auto& r : results) {
    if (r.singular) continue;
    ++s.points;
    if (!r.error.empty()) {
      ++s.failed;
      if (s.failures.size() < 10) s.failures.push_back({{"q", {r.q(0), r.q(1), r.q(2)}}, {"error", r.error}});
    }
  }
  return s;
}

// Max of f over good points; failed points make the check fail.
template <typename F>
CheckReport grid_max_report(const std::string& name, const std::vector<PointResult>& results,
                            const GridSummary& summary, double tolerance, F&& f) {
  double worst = -std::numeric_limits<double>::infinity();
  Params where = Params::Zero();
  for (const auto& r : results) {
    if (!r.ok()) continue;
    const double v = f(r);
    if (!(v <= worst)) {
      worst = v;
      where = r.q;
    }
  }
  if (worst == -std::numeric_limits<double>::infinity()) worst = 0.0;
  CheckReport rep = threshold_report(name, worst, tolerance,
                                     {{"points", summary.points}, {"argmax", {where(0), where(1), where(2)}}});
  if (summary.failed > 0) {
    rep.status = Status::error;
    rep.details["failedPoints"] = summary.failed;
    rep.details["failures"] = summary.failures;
  }
  return rep;
}

ShapeData sphere_model(double r) {
  Mat3 A = Mat3::Zero();
  A.diagonal() << 2.0 / std::tan(2.0 * r), 1.0 / std::tan(r), 1.0 / std::tan(r);
  Mat3 P = Mat3::Zero();
  P(2, 1) = 1.0;   // P e2 = e3
  P(1, 2) = -1.0;  // P e3 = -e2
  return make_shape_data(A, P, Vec3::UnitX());
}

}  // namespace

json RunConfig::to_json() const {
  return {{"grid", grid}, {"step", step}, {"tol", tol}, {"strict", strict}, {"threads", threads}};
}

RunReport cmd_check_ruled(const RunConfig& cfg) {
  require_grid(cfg.grid);
  const auto start = std::chrono::steady_clock::now();
  RunReport run;
  run.command = "check ruled";
  run.config = cfg.to_json();

  PointOptions opts;
  opts.shape.step = cfg.step;
  opts.with_sectional = true;
  opts.with_classification = true;
  opts.ruled_minimal = true;
  const SurfaceChart chart = ruled_chart();
  const auto results = evaluate_grid(chart, cfg.grid, opts, cfg.threads);
  const GridSummary sum = summarize(results);
  if (sum.points == 0) throw UsageError("empty grid");

  const double tol = cfg.scaled(cfg.tol);
  const double inf = std::numeric_limits<double>::infinity();
  run.reports.push_back(grid_max_report("ruled.deficit", results, sum, tol,
                                        [](const PointResult& r) { return std::abs(r.curvature.deficit); }));
  run.reports.push_back(grid_max_report("ruled.traceA", results, sum, tol,
                                        [](const PointResult& r) { return std::abs(r.shape.A.trace()); }));
  run.reports.push_back(grid_max_report("ruled.alpha", results, sum, tol,
                                        [](const PointResult& r) { return std::abs(r.shape.alpha); }));
  run.reports.push_back(grid_max_report("ruled.equalityBasis", results, sum, tol, [inf](const PointResult& r) {
    return r.equalityBasis ? std::max(r.equalityBasis->blockResidual, r.equalityBasis->traceResidual) : inf;
  }));
  run.reports.push_back(grid_max_report("ruled.ruledForm", results, sum, tol, [inf](const PointResult& r) {
    return r.ruledResidual ? *r.ruledResidual : inf;
  }));
  run.reports.push_back(grid_max_report("ruled.delta2", results, sum, cfg.scaled(kDelta2Tolerance),
                                        [](const PointResult& r) {
                                          return std::abs(r.curvature.delta2 - r.curvature.maxRicci);
                                        }));
  run.reports.push_back(grid_max_report("ruled.frameInvariants", results, sum, cfg.scaled(kFrameTolerance),
                                        [](const PointResult& r) { return r.frameInvariant; }));
  run.reports.push_back(grid_max_report("ruled.structureInvariants", results, sum,
                                        cfg.scaled(kStructureTolerance),
                                        [](const PointResult& r) { return r.structureInvariant; }));

  // beta must stay away from zero everywhere; residual counts offending points.
  double min_beta = inf;
  int hopf_points = 0;
  for (const auto& r : results) {
    if (!r.ok()) continue;
    min_beta = std::min(min_beta, r.shape.hopfDefect);
    if (r.shape.hopfDefect <= kHopfTolerance) ++hopf_points;
  }
  run.reports.push_back(threshold_report("ruled.hopfDefect", hopf_points, 0,
                                         {{"minHopfDefect", min_beta}, {"hopfThreshold", kHopfTolerance}}));
  for (auto& r : run.reports) r.details["seconds"] = seconds_since(start);
  return run;
}

Vec3 sphere_principal_curvatures(double radius) { return symmetric_eigenvalues(sphere_model(radius).A); }

double sphere_expected_deficit(double radius) {
  const ShapeData model = sphere_model(radius);
  const Vec3 ev = symmetric_eigenvalues(ricci_closed_form(model));
  return 2.25 * model.meanCurvature * model.meanCurvature + 5.0 - ev(2);
}

RunReport cmd_check_sphere(double radius, const RunConfig& cfg) {
  require_grid(cfg.grid);
  if (!(radius > 0.0 && radius < std::numbers::pi / 2)) throw UsageError("--radius must lie in (0, pi/2)");
  RunReport run;
  run.command = "check sphere";
  run.config = cfg.to_json();
  run.config["radius"] = radius;

  PointOptions opts;
  opts.shape.step = cfg.step;
  opts.with_sectional = true;
  const SurfaceChart chart = sphere_chart(radius);
  const auto results = evaluate_grid(chart, cfg.grid, opts, cfg.threads);
  const GridSummary sum = summarize(results);
  if (sum.points == 0) throw UsageError("empty grid");

  const double expected = sphere_expected_deficit(radius);
  const Vec3 model = sphere_principal_curvatures(radius);
  const Vec3 model_flipped = symmetric_eigenvalues(-sphere_model(radius).A);

  CheckReport deficit = grid_max_report("sphere.deficit", results, sum, cfg.scaled(cfg.tol),
                                        [expected](const PointResult& r) {
                                          return std::abs(r.curvature.deficit - expected);
                                        });
  deficit.details["expectedDeficit"] = expected;
  run.reports.push_back(deficit);

  // The normal orientation is a convention, so compare against both signs.
  CheckReport principal = grid_max_report(
      "sphere.principalCurvatures", results, sum, cfg.scaled(kPrincipalTolerance),
      [&](const PointResult& r) {
        const Vec3 ev = symmetric_eigenvalues(r.shape.A);
        return std::min((ev - model).cwiseAbs().maxCoeff(), (ev - model_flipped).cwiseAbs().maxCoeff());
      });
  principal.details["model"] = {model(0), model(1), model(2)};
  run.reports.push_back(principal);

  run.reports.push_back(grid_max_report("sphere.hopfDefect", results, sum, cfg.scaled(kSphereHopfTolerance),
                                        [](const PointResult& r) { return r.shape.hopfDefect; }));
  run.reports.push_back(grid_max_report("sphere.delta2", results, sum, cfg.scaled(kDelta2Tolerance),
                                        [](const PointResult& r) {
                                          return std::abs(r.curvature.delta2 - r.curvature.maxRicci);
                                        }));
  run.reports.push_back(grid_max_report("sphere.frameInvariants", results, sum, cfg.scaled(kFrameTolerance),
                                        [](const PointResult& r) { return r.frameInvariant; }));
  run.reports.push_back(grid_max_report("sphere.structureInvariants", results, sum,
                                        cfg.scaled(kStructureTolerance),
                                        [](const PointResult& r) { return r.structureInvariant; }));
  return run;
}

RunReport cmd_check_tube(const RunConfig& cfg) {
  RunReport run;
  run.command = "check tube";
  run.config = cfg.to_json();
  CheckReport rep;
  rep.checkName = "tube.radius";
  try {
    const HopfRadii radii = hopf_equality_radii();
    const double closed_dev = std::abs(radii.rTube - radii.rTubeClosedForm);
    const double decimal_dev = std::abs(radii.rTube - 0.33311971);
    const double sphere_dev = std::abs(radii.rSphere - std::numbers::pi / 4);
    const bool ok = closed_dev <= cfg.scaled(1e-12) && decimal_dev <= cfg.scaled(1e-7) && sphere_dev == 0.0;
    rep.status = ok ? Status::pass : Status::fail;
    rep.maxAbsResidual = Residual::numeric(closed_dev);
    rep.details = {{"rTube", radii.rTube},
                   {"rTubeClosedForm", radii.rTubeClosedForm},
                   {"rSphere", radii.rSphere},
                   {"closedFormDeviation", closed_dev},
                   {"decimalDeviation", decimal_dev},
                   {"toleranceClosedForm", cfg.scaled(1e-12)},
                   {"toleranceDecimal", cfg.scaled(1e-7)},
                   {"sphereModel", radii.sphereModel},
                   {"tubeModel", radii.tubeModel}};
  } catch (const NoRoot& e) {
    rep.status = Status::fail;
    rep.maxAbsResidual = Residual::numeric(std::numeric_limits<double>::infinity());
    rep.details = {{"error", e.what()}};
  }
  run.reports.push_back(rep);
  return run;
}

RunReport cmd_symbolic(const std::vector<std::string>& names, const RunConfig& cfg) {
  std::vector<std::string> selected = names;
  if (selected.empty() || (selected.size() == 1 && selected[0] == "all")) selected = algebra::symbolic_check_names();
  for (const auto& n : selected) {
    const auto& known = algebra::symbolic_check_names();
    if (std::find(known.begin(), known.end(), n) == known.end()) throw UsageError("unknown symbolic check: " + n);
  }
  RunReport run;
  run.command = "symbolic";
  run.config = cfg.to_json();
  run.config["checks"] = selected;
  for (const auto& n : selected) {
    const auto start = std::chrono::steady_clock::now();
    const algebra::SymbolicOutcome o = algebra::run_symbolic(n);
    CheckReport rep;
    rep.checkName = o.name;
    rep.status = o.pass ? Status::pass : Status::fail;
    rep.maxAbsResidual = o.pass ? Residual::exact() : Residual::numeric(o.max_abs_coefficient);
    for (const auto& [k, v] : o.details) rep.details[k] = v;
    rep.details["seconds"] = seconds_since(start);
    run.reports.push_back(std::move(rep));
  }
  return run;
}

SurfaceChart chart_from_spec(const std::string& spec) {
  if (spec == "ruled") return ruled_chart();
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  try {
    if (kind == "sphere") {
      if (args.empty()) throw UsageError("sphere needs a radius, e.g. sphere:0.785398");
      return sphere_chart(std::stod(args));
    }
    if (kind == "perturbed-ruled") {
      const auto comma = args.find(',');
      if (args.empty() || comma == std::string::npos)
        throw UsageError("perturbed-ruled needs epsilon and seed, e.g. perturbed-ruled:0.05,1");
      return perturbed_ruled_chart(std::stod(args.substr(0, comma)), std::stoull(args.substr(comma + 1)));
    }
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const UsageError*>(&e)) throw;
    throw UsageError("bad surface parameters in '" + spec + "'");
  }
  throw UsageError("unknown surface: " + spec);
}

ScanOutput cmd_scan(const std::string& surface, const RunConfig& cfg) {
  require_grid(cfg.grid);
  const SurfaceChart chart = chart_from_spec(surface);
  ScanOutput out;
  out.report.command = "scan";
  out.report.config = cfg.to_json();
  out.report.config["surface"] = surface;

  PointOptions opts;
  opts.shape.step = cfg.step;
  const auto results = evaluate_grid(chart, cfg.grid, opts, cfg.threads);
  out.rows.reserve(results.size());
  for (const auto& r : results) out.rows.push_back(to_scan_row(r));
  const GridSummary sum = summarize(results);

  // The inequality: deficit >= -slack at every row.
  CheckReport ineq = grid_max_report("scan.inequality", results, sum, cfg.scaled(kInequalitySlack),
                                     [](const PointResult& r) { return std::max(0.0, -r.curvature.deficit); });
  double max_deficit = -std::numeric_limits<double>::infinity();
  double min_deficit = std::numeric_limits<double>::infinity();
  for (const auto& r : results) {
    if (!r.ok()) continue;
    max_deficit = std::max(max_deficit, r.curvature.deficit);
    min_deficit = std::min(min_deficit, r.curvature.deficit);
  }
  ineq.details["rows"] = out.rows.size();
  ineq.details["maxDeficit"] = max_deficit;
  ineq.details["minDeficit"] = min_deficit;
  out.report.reports.push_back(ineq);
  return out;
}

void write_scan(const ScanOutput& scan, const std::string& path, const std::string& format) {
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  if (format == "csv") {
    write_csv(file, scan.rows);
  } else if (format == "json") {
    json j = scan.report;
    j["rows"] = rows_to_json(scan.rows);
    file << j.dump(2) << '\n';
  } else {
    throw UsageError("unknown format: " + format);
  }
  if (!file) throw std::runtime_error("write to " + path + " failed");
}

RunReport cmd_crosscheck(const std::string& surface, const RunConfig& cfg) {
  require_grid(cfg.grid);
  const SurfaceChart chart = chart_from_spec(surface);
  RunReport run;
  run.command = "crosscheck";
  run.config = cfg.to_json();
  run.config["surface"] = surface;

  const auto points = grid_points(chart, cfg.grid);
  double worst = 0.0;
  int failed = 0, used = 0;
  json holomorphic = json::array();
  for (const auto& q : points) {
    if (chart.is_singular(q)) continue;
    try {
      const PointGeometry g = analyze_point(chart, q);
      const Tensor4 intrinsic = intrinsic_riemann(chart, q, cfg.step);
      const Tensor4 gauss = gauss_riemann_coordinates(g.shape, g.frame);
      worst = std::max(worst, max_abs_difference(intrinsic, gauss));
      ++used;
      // Curvature of the plane orthogonal to xi, recorded for the first few points.
      if (holomorphic.size() < 5) {
        const Vec3 x = g.shape.P * (g.shape.P * Vec3::UnitX());
        const Vec3 X = (x.norm() > 0.5 ? x : Vec3(g.shape.P * (g.shape.P * Vec3::UnitY()))).normalized();
        const Vec3 Y = g.shape.P * X;
        const Mat3 metric = induced_metric(chart, q);
        holomorphic.push_back(coordinate_sectional(intrinsic, metric, g.frame.coeffs * X, g.frame.coeffs * Y));
      }
    } catch (const GeometryError&) {
      ++failed;
    }
  }
  CheckReport rep = threshold_report("crosscheck.riemann", worst, cfg.scaled(kCrosscheckTolerance),
                                     {{"points", used}, {"holomorphicPlaneCurvature", holomorphic}});
  if (failed > 0 || used == 0) {
    rep.status = Status::error;
    rep.details["failedPoints"] = failed;
  }
  run.reports.push_back(rep);
  return run;
}

}  // namespace hopfcurv
