#include "shear/counterexample.hpp"

#include <cmath>
#include <memory>
#include <numbers>

#include "shear/disk_function.hpp"
#include "shear/errors.hpp"
#include "shear/growth.hpp"

namespace shear {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// i/(1-ζ)³ = u + iv, so h = e^u · e^{iv}. Returns u and the unit factor e^{iv}.
std::pair<double, Complex> h_parts(Complex zeta) {
  const Complex w = 1.0 / ((1.0 - zeta) * (1.0 - zeta) * (1.0 - zeta));
  const double u = -w.imag();
  const double v = std::remainder(w.real(), kTwoPi);
  return {u, std::polar(1.0, v)};
}

class CounterexampleModel final : public DiskFunctionModel {
 public:
  ScaledComplex value(Complex zeta) const override {
    const auto [u, phase] = h_parts(zeta);
    return {u, zeta * zeta * phase};
  }

  ScaledComplex derivative(Complex zeta) const override {
    const auto [u, phase] = h_parts(zeta);
    const Complex one_minus = 1.0 - zeta;
    const Complex q = one_minus * one_minus;
    const Complex factor = 2.0 * zeta + Complex(0.0, 3.0) * zeta * zeta / (q * q);
    return {u, factor * phase};
  }

  std::string describe() const override { return "counterexample g(z) = z^2 exp(i/(1-z)^3)"; }
};

void require_upper_half(double r) {
  if (!(r > 0.5 && r < 1.0)) throw DomainError("lower bound holds for r in (1/2,1) only");
}

}  // namespace

Complex counterexample_h(Complex zeta) {
  const auto [u, phase] = h_parts(zeta);
  return std::exp(u) * phase;
}

ShearingMap counterexample_map() {
  static const std::shared_ptr<const DiskFunctionModel> model = std::make_shared<CounterexampleModel>();
  return ShearingMap(DiskFunction(model));
}

double unit_modulus_check(std::span<const double> r_grid) {
  double worst = 0.0;
  for (double r : r_grid) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("unit modulus grid must lie in (0,1)");
    worst = std::max(worst, std::abs(std::abs(counterexample_h(r)) - 1.0));
  }
  return worst;
}

double ce_lower_bound(double r) {
  require_upper_half(r);
  const double b = 1.0 - r;
  return 3.0 * r * r / (b * b * b * b) - (1.0 + 2.0 * r);
}

double ce_simplified_bound(double r) {
  require_upper_half(r);
  const double b = 1.0 - r;
  return 2.0 * r * r / (b * b * b * b);
}

double divergence_ratio(double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("divergence ratio needs r in (0,1)");
  const double b = 1.0 - r;
  return shear_opnorm(counterexample_map(), BallPoint(0.0, r)) * b * b * b;
}

double radial_image_bound(double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("radial image needs r in (0,1)");
  const ComplexPair w = shear_eval(counterexample_map(), BallPoint(0.0, r));
  return std::sqrt(std::norm(w[0]) + std::norm(w[1]));
}

DivergenceScan divergence_scan(std::span<const double> r_grid, double c_report) {
  if (!(c_report > 0.0)) throw ConfigError("C_report must be positive");
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    if (!(r_grid[i] > 0.5 && r_grid[i] < 1.0)) throw ConfigError("divergence grid must lie in (1/2,1)");
    if (i > 0 && !(r_grid[i] > r_grid[i - 1])) throw ConfigError("divergence grid must be strictly increasing");
  }

  const ShearingMap f = counterexample_map();
  DivergenceScan scan;
  scan.c_report = c_report;
  for (double r : r_grid) {
    const double b = 1.0 - r;
    const double norm = shear_opnorm(f, BallPoint(0.0, r));
    scan.records.push_back({r, norm, ce_lower_bound(r), ce_simplified_bound(r), norm * b * b * b, 4.0});
  }

  scan.ratio_increasing = true;
  for (std::size_t i = 1; i < scan.records.size(); ++i) {
    if (!(scan.records[i].ratio > scan.records[i - 1].ratio)) scan.ratio_increasing = false;
  }
  if (scan.records.size() < 2) {
    scan.verdict = Verdict::InsufficientGrid;
  } else if (scan.ratio_increasing && scan.records.back().ratio > 4.0 * c_report) {
    scan.verdict = Verdict::Affirmative;
  } else {
    scan.verdict = Verdict::Inconclusive;
  }
  return scan;
}

std::vector<double> default_divergence_grid() { return {0.6, 0.7, 0.8, 0.9, 0.95, 0.99}; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Affirmative: return "affirmative";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::InsufficientGrid: return "insufficient grid";
  }
  return "?";
}

}  // namespace shear
