#pragma once

#include <span>
#include <vector>

#include "shear/shear_map.hpp"

namespace shear {

struct SingularValues {
  double max = 0.0;
  double min = 0.0;
};

/// Both singular values of J: σmax² = (T + √(T² - 4D))/2 with T = Σ|a_ij|², D = |det J|²,
/// and σmin = √D / σmax (the companion root).
SingularValues singular_values2(const Jacobian2& j);

/// Operator (spectral) norm of J.
double opnorm2(const Jacobian2& j);

/// Exact norm of the unipotent shear Jacobian: (m + √(m² + 4))/2 with m = |g'(z2)|.
double shear_opnorm(const ShearingMap& f, const BallPoint& z);

/// (1 + √r)² / (1 - r)³: bound on ‖df(z)‖ for ‖z‖ ≤ r and f ∈ S⁰.
double s0_growth_bound(double r);

/// 1 / ((1 - ρ)² (1 - |ζ|²)): bound on ‖df(ρζ)‖ for f ∈ S⁰.
double schwarz_pick_bound(double rho, double zeta_norm);

struct GrowthRecord {
  double r = 0.0;
  double sampled_sup_norm = 0.0;
  double bound_value = 0.0;
  bool conforms = false;
};

struct GrowthScanConfig {
  int angular = 2048;
  int radial = 256;
  int threads = 1;
};

/// Sampled sup of ‖df‖ over ‖z‖ ≤ r against s0_growth_bound(r), for each r.
/// Shear norms depend on z2 only, so the sup is taken over the disk |z2| ≤ r.
/// Throws NotCertifiedError unless f carries a starlike certificate.
std::vector<GrowthRecord> growth_conformance_scan(const ShearingMap& f, std::span<const double> r_grid,
                                                  const GrowthScanConfig& config = {});

}  // namespace shear
