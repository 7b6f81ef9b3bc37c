#pragma once

#include <span>
#include <string>
#include <vector>

#include "shear/shear_map.hpp"

namespace shear {

/// h(ζ) = exp(i/(1-ζ)³), with the phase reduced mod 2π before exponentiation.
Complex counterexample_h(Complex zeta);

/// f(z) = (z1 + z2² h(z2), z2). Closed form only: no coefficient access.
///
/// Runge image (a limit of polynomial shears) but ‖df(0,r)‖(1-r)³ is unbounded,
/// which no map in A₀(C²)∘S⁰(B²) allows.
ShearingMap counterexample_map();

/// max over the grid of ||h(r)| - 1|.
double unit_modulus_check(std::span<const double> r_grid);

/// 3r²/(1-r)⁴ - (1+2r), a lower bound on ‖df(0,r)‖ valid for r ∈ (1/2,1).
double ce_lower_bound(double r);

/// 2r²/(1-r)⁴ ≤ ce_lower_bound(r) on (1/2,1).
double ce_simplified_bound(double r);

/// ‖df(0,r)‖ · (1-r)³ for r ∈ (0,1). S⁰ maps keep this ≤ 4.
double divergence_ratio(double r);

/// ‖f(0,r)‖ = r√(1+r²), always below √2.
double radial_image_bound(double r);

struct DivergenceRecord {
  double r = 0.0;
  double opnorm = 0.0;
  double lower_bound = 0.0;
  double simplified_bound = 0.0;
  double ratio = 0.0;
  /// (1-r)³ · 4/(1-r)³: the S⁰ ceiling on the ratio.
  double ceiling = 4.0;
};

enum class Verdict { Affirmative, Inconclusive, InsufficientGrid };

struct DivergenceScan {
  std::vector<DivergenceRecord> records;
  Verdict verdict = Verdict::InsufficientGrid;
  double c_report = 10.0;
  bool ratio_increasing = false;
};

/// Records along a strictly increasing grid in (1/2,1). The verdict is affirmative
/// when the ratio increases along the grid and its last value exceeds 4·c_report,
/// i.e. no ‖dΦ‖ ≤ c_report can reconcile f with the S⁰ growth bound.
/// Throws ConfigError for grids that are unsorted or leave (1/2,1).
DivergenceScan divergence_scan(std::span<const double> r_grid, double c_report = 10.0);

/// {0.6, 0.7, 0.8, 0.9, 0.95, 0.99}.
std::vector<double> default_divergence_grid();

std::string to_string(Verdict v);

}  // namespace shear
