// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Thresholds are the published ones; do not loosen them here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "hopfcurv/algebra/checks.hpp"
#include "hopfcurv/commands.hpp"
#include "hopfcurv/sym3.hpp"
#include "oracles.hpp"

using namespace hopfcurv;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      note += (note.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
  }
  void info(const std::string& s) { note += (note.empty() ? "" : "; ") + s; }
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double residual_of(const RunReport& run, const std::string& name) {
  for (const auto& r : run.reports)
    if (r.checkName == name) return r.maxAbsResidual.exact_zero ? 0.0 : r.maxAbsResidual.value;
  return INFINITY;
}

Outcome ruled_equality() {
  Outcome o;
  RunConfig cfg;
  cfg.grid = 16;
  cfg.threads = 1;
  const auto t0 = std::chrono::steady_clock::now();
  const RunReport run = cmd_check_ruled(cfg);
  const double secs = seconds_since(t0);
  for (const char* name : {"ruled.deficit", "ruled.traceA", "ruled.alpha", "ruled.equalityBasis", "ruled.ruledForm"}) {
    const double r = residual_of(run, name);
    o.require(r < 1e-6, std::string(name) + " = " + fmt(r));
    o.info(std::string(name).substr(6) + " " + fmt(r));
  }
  o.require(run.all_pass(), "every ruled report passes");
  o.require(secs < 30.0, "runtime " + fmt(secs) + " s");
  o.info("16^3 single-threaded in " + fmt(secs) + " s");
  return o;
}

Outcome sphere_equality() {
  Outcome o;
  PointOptions opts;
  double def4 = 0, eig4 = 0, def6 = 0;
  for (const auto& r : evaluate_grid(sphere_chart(pi / 4), 8, opts)) {
    o.require(r.ok(), "sphere pi/4 point evaluates");
    def4 = std::max(def4, std::abs(r.curvature.deficit));
    const Vec3 ev = symmetric_eigenvalues(r.shape.A);
    const Vec3 flipped = symmetric_eigenvalues(-r.shape.A);
    eig4 = std::max(eig4, std::min((ev - Vec3(0, 1, 1)).cwiseAbs().maxCoeff(),
                                   (flipped - Vec3(0, 1, 1)).cwiseAbs().maxCoeff()));
  }
  for (const auto& r : evaluate_grid(sphere_chart(pi / 6), 8, opts)) {
    o.require(r.ok(), "sphere pi/6 point evaluates");
    def6 = std::max(def6, std::abs(r.curvature.deficit - 1.0 / 3.0));
  }
  o.require(def4 < 1e-6, "pi/4 deficit " + fmt(def4));
  o.require(eig4 < 1e-7, "pi/4 principal curvatures off by " + fmt(eig4));
  o.require(def6 < 1e-6, "pi/6 deficit - 1/3 = " + fmt(def6));
  RunConfig cfg;
  cfg.grid = 8;
  o.require(cmd_check_sphere(pi / 4, cfg).all_pass(), "check sphere pi/4");
  o.require(cmd_check_sphere(pi / 6, cfg).all_pass(), "check sphere pi/6");
  o.info("pi/4 |deficit| " + fmt(def4) + ", curvatures " + fmt(eig4) + "; pi/6 |deficit-1/3| " + fmt(def6));
  return o;
}

Outcome tube_radius() {
  Outcome o;
  const HopfRadii r = hopf_equality_radii();
  const double closed = std::atan((1 + std::sqrt(5.0) - std::sqrt(2 + 2 * std::sqrt(5.0))) / 2);
  o.require(std::abs(r.rTube - 0.33311971) < 1e-7, "decimal match");
  o.require(std::abs(r.rTube - closed) < 1e-12, "closed-form match");
  o.require(std::abs(r.rSphere - pi / 4) < 1e-15, "sphere radius pi/4");
  char buf[64];
  std::snprintf(buf, sizeof buf, "rTube %.12f, closed form gap %.2g", r.rTube, std::abs(r.rTube - closed));
  o.info(buf);
  return o;
}

Outcome symbolic_suite() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const RunReport run = cmd_symbolic({}, RunConfig{});
  const double secs = seconds_since(t0);
  for (const auto& r : run.reports) {
    o.require(r.status == Status::pass && r.maxAbsResidual.exact_zero, r.checkName + " exact");
  }
  o.require(run.reports.size() == algebra::symbolic_check_names().size(), "all checks ran");
  const auto res = algebra::check_resultant();
  if (const auto* sign = res.find("sign")) o.info("resultant sign " + *sign);
  o.require(secs < 300.0, "runtime " + fmt(secs) + " s");
  o.info(std::to_string(run.reports.size()) + " checks exact in " + fmt(secs) + " s");
  return o;
}

Outcome strictness() {
  Outcome o;
  RunConfig cfg;
  cfg.grid = 12;
  const ScanOutput s = cmd_scan("perturbed-ruled:0.05,1", cfg);
  double lo = INFINITY, hi = -INFINITY;
  int bad = 0;
  for (const auto& row : s.rows) {
    if (!std::isfinite(row.deficit)) {
      ++bad;
      continue;
    }
    lo = std::min(lo, row.deficit);
    hi = std::max(hi, row.deficit);
  }
  o.require(s.rows.size() == 12u * 12u * 12u, "row count");
  o.require(bad == 0, std::to_string(bad) + " unusable rows");
  o.require(lo >= -1e-6, "min deficit " + fmt(lo));
  o.require(hi > 1e-3, "max deficit " + fmt(hi));
  o.info("min deficit " + fmt(lo) + ", max " + fmt(hi) + " over " + std::to_string(s.rows.size()) + " rows");
  return o;
}

Outcome oracle_equivalences() {
  Outcome o;
  RunConfig cross;
  cross.grid = 5;
  cross.step = 1e-3;
  const double cr = residual_of(cmd_crosscheck("ruled", cross), "crosscheck.riemann");
  const double cs = residual_of(cmd_crosscheck("sphere:0.78539816339744828", cross), "crosscheck.riemann");
  o.require(cr < 1e-4 && cs < 1e-4, "intrinsic vs Gauss " + fmt(cr) + ", " + fmt(cs));

  const double ricci = verify_ricci_closed_form(1000, 31337u);
  o.require(ricci < 1e-12, "closed-form Ricci " + fmt(ricci));

  PointOptions opts;
  opts.with_sectional = true;
  double d2 = 0;
  for (const auto& c : {ruled_chart(), sphere_chart(pi / 4), sphere_chart(pi / 6), perturbed_ruled_chart(0.05, 1)})
    for (const auto& r : evaluate_grid(c, 5, opts))
      if (r.ok()) d2 = std::max(d2, std::abs(r.curvature.delta2 - r.curvature.maxRicci));
  o.require(d2 < 1e-5, "delta(2) vs maxRic " + fmt(d2));

  std::mt19937 rng(2718u);
  std::uniform_int_distribution<int> shift(-20, 20);
  int sturm_bad = 0;
  for (int k = 0; k < 100; ++k) {
    const auto roots = oracle::random_roots(rng);
    const algebra::Rational lo(shift(rng) * 2 + 1, 2), hi = lo + 10;
    if (algebra::sturm_count(oracle::from_roots(roots), lo, hi) != oracle::roots_inside(roots, lo, hi)) ++sturm_bad;
  }
  o.require(sturm_bad == 0, std::to_string(sturm_bad) + " Sturm mismatches");

  std::uniform_int_distribution<int> coef(-4, 4), ex(0, 1);
  int det_bad = 0;
  for (int k = 0; k < 20; ++k) {
    algebra::PolyMatrix a(4, std::vector<algebra::MPoly>(4));
    for (auto& row : a)
      for (auto& e : row)
        for (int t = 0; t < 2; ++t)
          e += algebra::MPoly::monomial({static_cast<std::uint16_t>(ex(rng)), static_cast<std::uint16_t>(ex(rng)), 0, 0, 0},
                                        coef(rng));
    if (algebra::bareiss_determinant(a) != oracle::cofactor_determinant(a)) ++det_bad;
  }
  o.require(det_bad == 0, std::to_string(det_bad) + " Bareiss mismatches");
  o.info("crosscheck " + fmt(cr) + "/" + fmt(cs) + ", Ricci " + fmt(ricci) + ", delta(2) " + fmt(d2) +
         ", Sturm 100/100, Bareiss 20/20");
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"ruled equality", ruled_equality},
      {"sphere equality", sphere_equality},
      {"tube radius", tube_radius},
      {"symbolic suite exact", symbolic_suite},
      {"inequality strictness and validity", strictness},
      {"oracle equivalences", oracle_equivalences},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("threw: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::printf("%s  %s  (%s)\n", o.pass ? "PASS" : "FAIL", name, o.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
