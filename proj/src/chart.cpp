#include "hopfcurv/chart.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <random>
#include <vector>

#include "hopfcurv/errors.hpp"

namespace hopfcurv {

namespace {

using cd = std::complex<double>;

constexpr double kSingularMargin = 1e-6;

}  // namespace

SurfaceChart ruled_chart() {
  SurfaceChart chart;
  chart.name = "ruled";
  chart.parameter_names = {"u", "v", "theta"};
  chart.evaluate = [](const Params& q) {
    const double u = q(0), v = q(1), th = q(2);
    return AmbientVector(std::cos(u) * std::cos(v), std::cos(u) * std::sin(v),
                         std::sin(u) * std::polar(1.0, th));
  };
  chart.partials = [](const Params& q) {
    const double u = q(0), v = q(1), th = q(2);
    const cd e = std::polar(1.0, th);
    return std::array<AmbientVector, 3>{
        AmbientVector(-std::sin(u) * std::cos(v), -std::sin(u) * std::sin(v), std::cos(u) * e),
        AmbientVector(-std::cos(u) * std::sin(v), std::cos(u) * std::cos(v), 0.0),
        AmbientVector(0.0, 0.0, cd(0, 1) * std::sin(u) * e)};
  };
  chart.domain = {Interval{0.3, 1.2}, Interval{0.1, 6.1}, Interval{0.1, 6.1}};
  chart.is_singular = [](const Params& q) {
    return std::abs(std::sin(q(0))) < kSingularMargin || std::abs(std::cos(q(0))) < kSingularMargin;
  };
  return chart;
}

SurfaceChart sphere_chart(double radius) {
  if (!(radius > 0.0 && radius < std::numbers::pi / 2)) {
    throw DomainError("sphere radius must lie in (0, pi/2)");
  }
  const double cr = std::cos(radius), sr = std::sin(radius);
  SurfaceChart chart;
  chart.name = "sphere";
  chart.parameter_names = {"phi", "s", "t"};
  chart.evaluate = [cr, sr](const Params& q) {
    return AmbientVector(cr * std::polar(1.0, q(0)), sr * std::cos(q(1)),
                         sr * std::sin(q(1)) * std::polar(1.0, q(2)));
  };
  chart.partials = [cr, sr](const Params& q) {
    const cd i(0, 1);
    const cd ephi = std::polar(1.0, q(0));
    const cd et = std::polar(1.0, q(2));
    return std::array<AmbientVector, 3>{
        AmbientVector(i * cr * ephi, 0.0, 0.0),
        AmbientVector(0.0, -sr * std::sin(q(1)), sr * std::cos(q(1)) * et),
        AmbientVector(0.0, 0.0, i * sr * std::sin(q(1)) * et)};
  };
  chart.domain = {Interval{0.1, 6.1}, Interval{0.3, 1.2}, Interval{0.1, 6.1}};
  chart.is_singular = [](const Params& q) {
    return std::abs(std::sin(q(1))) < kSingularMargin || std::abs(std::cos(q(1))) < kSingularMargin;
  };
  return chart;
}

namespace {

// One trigonometric mode a·cos(n·q) + b·sin(n·q) of a real displacement component.
struct Mode {
  Eigen::Vector3d freq;
  double cos_coeff;
  double sin_coeff;
};

struct Displacement {
  std::array<std::vector<Mode>, 6> components;

  Eigen::Matrix<double, 6, 1> value(const Params& q) const {
    Eigen::Matrix<double, 6, 1> w = Eigen::Matrix<double, 6, 1>::Zero();
    for (int k = 0; k < 6; ++k) {
      for (const auto& m : components[k]) {
        const double phase = m.freq.dot(q);
        w(k) += m.cos_coeff * std::cos(phase) + m.sin_coeff * std::sin(phase);
      }
    }
    return w;
  }

  // Column a holds the derivative with respect to parameter a.
  Eigen::Matrix<double, 6, 3> jacobian(const Params& q) const {
    Eigen::Matrix<double, 6, 3> jac = Eigen::Matrix<double, 6, 3>::Zero();
    for (int k = 0; k < 6; ++k) {
      for (const auto& m : components[k]) {
        const double phase = m.freq.dot(q);
        const double d = -m.cos_coeff * std::sin(phase) + m.sin_coeff * std::cos(phase);
        jac.row(k) += d * m.freq.transpose();
      }
    }
    return jac;
  }
};

Displacement make_displacement(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> freq(-2, 2);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  Displacement d;
  for (auto& comp : d.components) {
    for (int t = 0; t < 3; ++t) {
      Mode m;
      m.freq = Eigen::Vector3d(freq(rng), freq(rng), freq(rng));
      m.cos_coeff = coeff(rng);
      m.sin_coeff = coeff(rng);
      comp.push_back(m);
    }
  }
  return d;
}

}  // namespace

SurfaceChart perturbed_ruled_chart(double epsilon, std::uint64_t seed) {
  auto base = std::make_shared<SurfaceChart>(ruled_chart());
  auto disp = std::make_shared<Displacement>(make_displacement(seed));
  SurfaceChart chart;
  chart.name = "perturbed-ruled";
  chart.parameter_names = base->parameter_names;
  chart.domain = base->domain;
  chart.is_singular = base->is_singular;
  chart.evaluate = [base, disp, epsilon](const Params& q) {
    const Eigen::Matrix<double, 6, 1> y = to_real(base->evaluate(q)) + epsilon * disp->value(q);
    return from_real(y / y.norm());
  };
  chart.partials = [base, disp, epsilon](const Params& q) {
    const Eigen::Matrix<double, 6, 1> y = to_real(base->evaluate(q)) + epsilon * disp->value(q);
    const auto base_partials = base->partials(q);
    const Eigen::Matrix<double, 6, 3> jac = epsilon * disp->jacobian(q);
    const double n = y.norm();
    std::array<AmbientVector, 3> out;
    for (int a = 0; a < 3; ++a) {
      const Eigen::Matrix<double, 6, 1> dy = to_real(base_partials[a]) + jac.col(a);
      out[a] = from_real(Eigen::Matrix<double, 6, 1>(dy / n - y * (y.dot(dy) / (n * n * n))));
    }
    return out;
  };
  return chart;
}

std::vector<Params> grid_points(const SurfaceChart& chart, int n) {
  std::vector<Params> pts;
  pts.reserve(static_cast<std::size_t>(n) * n * n);
  auto coord = [n](const Interval& iv, int k) {
    return n == 1 ? iv.lo : iv.lo + (iv.hi - iv.lo) * k / (n - 1);
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        pts.emplace_back(coord(chart.domain[0], i), coord(chart.domain[1], j), coord(chart.domain[2], k));
      }
    }
  }
  return pts;
}

}  // namespace hopfcurv
