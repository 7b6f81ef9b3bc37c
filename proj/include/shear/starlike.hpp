#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shear/extended_real.hpp"
#include "shear/sampling.hpp"
#include "shear/shear_map.hpp"

namespace shear {

/// Scan values below this count as violations; absorbs rounding at margin-0 certificates.
inline constexpr double kViolationThreshold = -1e-12;

/// Re⟨[df(z)]^{-1} f(z), z⟩ = ‖z‖² + Re((g(z2) - z2 g'(z2)) conj(z1)).
/// Nonnegative on the punctured ball iff f is starlike. Throws OverflowError
/// where the value leaves double range; see starlike_quantity_extended.
double starlike_quantity(const ShearingMap& f, const BallPoint& z);
ExtendedReal starlike_quantity_extended(const ShearingMap& f, const BallPoint& z);

/// 1/α² - (|z1 + g(z2) - g(αz2)/α|² + |z2|²). Positive means the starlike-image
/// inequality holds at (α, z). Throws DomainError for α ∉ (0,1].
double eq1_residual(const ShearingMap& f, double alpha, const BallPoint& z);
ExtendedReal eq1_residual_extended(const ShearingMap& f, double alpha, const BallPoint& z);

struct ScanReport {
  std::string scan;
  ExtendedReal extremum;
  BallPoint witness;
  /// α at the witness (eq1 scans only).
  std::optional<double> witness_alpha;
  std::size_t samples = 0;
  double threshold = kViolationThreshold;
  bool violation = false;
  std::string config_digest;
};

struct TraceRow {
  double s, t, phase1, phase2, value;
};

/// Minimum of the starlike functional over the sampler's points; radius must be ≤ 0.999.
/// Deterministic for a fixed config regardless of config.threads.
ScanReport starlike_scan(const ShearingMap& f, const SamplerConfig& config,
                         std::vector<TraceRow>* trace = nullptr);

/// Minimum eq1 residual over alphas × samples. This is a necessary-condition
/// check only: a clean report does not certify starlikeness.
ScanReport eq1_scan(const ShearingMap& f, std::span<const double> alphas, const SamplerConfig& config,
                    std::vector<TraceRow>* trace = nullptr);

/// {0.1, 0.2, ..., 1.0}.
std::vector<double> default_alpha_grid();

struct BoundednessReport {
  /// max log|g| over the probes; -inf when g vanishes at all of them.
  double max_log_abs = 0.0;
  Complex witness{};
  std::size_t samples = 0;

  bool identically_small() const;
};

/// max log|g(ζ)| over `angular` equally spaced points of |ζ| = r plus the
/// probes, each rescaled onto that circle.
BoundednessReport boundedness_scan(const DiskFunction& g, double r, int angular,
                                   std::span<const Complex> probes = {});

/// The point 1 - δe^{iφ} of modulus r, approaching ζ = 1 along the direction φ.
/// Throws DomainError when the ray at angle φ misses the circle.
Complex aligned_boundary_probe(double r, double phase);

}  // namespace shear
