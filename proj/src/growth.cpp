#include "shear/growth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "shear/errors.hpp"
#include "shear/sampling.hpp"

namespace shear {

namespace {

void require_unit_open(double r, const char* what) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError(std::string(what) + " must lie in (0,1)");
}

}  // namespace

SingularValues singular_values2(const Jacobian2& j) {
  const double scale = std::max({std::abs(j.a11), std::abs(j.a12), std::abs(j.a21), std::abs(j.a22)});
  if (scale == 0.0) return {};
  const Complex a11 = j.a11 / scale, a12 = j.a12 / scale, a21 = j.a21 / scale, a22 = j.a22 / scale;
  // Entries of J*J; T² - 4D = (m11 - m22)² + 4|m12|² avoids the cancellation in the expanded form.
  const double m11 = std::norm(a11) + std::norm(a21);
  const double m22 = std::norm(a12) + std::norm(a22);
  const Complex m12 = std::conj(a11) * a12 + std::conj(a21) * a22;
  const double t = m11 + m22;
  const double root = std::hypot(m11 - m22, 2.0 * std::abs(m12));
  const double smax = std::sqrt((t + root) / 2.0);
  const double det_abs = std::abs(a11 * a22 - a12 * a21);
  return {smax * scale, det_abs / smax * scale};
}

double opnorm2(const Jacobian2& j) { return singular_values2(j).max; }

double shear_opnorm(const ShearingMap& f, const BallPoint& z) {
  const double m = std::abs(f.g().derivative(z.z2()));
  return (m + std::hypot(m, 2.0)) / 2.0;
}

double s0_growth_bound(double r) {
  require_unit_open(r, "growth radius r");
  const double a = 1.0 + std::sqrt(r);
  const double b = 1.0 - r;
  return a * a / (b * b * b);
}

double schwarz_pick_bound(double rho, double zeta_norm) {
  require_unit_open(rho, "rho");
  if (!(zeta_norm >= 0.0 && zeta_norm < 1.0)) throw DomainError("|zeta| must lie in [0,1)");
  const double b = 1.0 - rho;
  return 1.0 / (b * b * (1.0 - zeta_norm * zeta_norm));
}

std::vector<GrowthRecord> growth_conformance_scan(const ShearingMap& f, std::span<const double> r_grid,
                                                  const GrowthScanConfig& config) {
  if (!starlike_certificate(f).certified()) {
    throw NotCertifiedError("growth bound applies to S0 maps only; this shear has no starlike certificate");
  }
  if (config.angular < 1 || config.radial < 1) throw ConfigError("growth scan grid counts must be >= 1");
  for (double r : r_grid) require_unit_open(r, "growth radius r");

  return evaluate_indexed<GrowthRecord>(r_grid.size(), config.threads, [&](std::size_t idx) {
    const double r = r_grid[idx];
    double sup = 1.0;  // ‖df(0)‖
    for (int i = 1; i <= config.radial; ++i) {
      const double rho = r * i / config.radial;
      for (int k = 0; k < config.angular; ++k) {
        const BallPoint z(0.0, std::polar(rho, 2.0 * std::numbers::pi * k / config.angular));
        sup = std::max(sup, shear_opnorm(f, z));
      }
    }
    const double bound = s0_growth_bound(r);
    return GrowthRecord{r, sup, bound, sup <= bound + 1e-9};
  });
}

}  // namespace shear
