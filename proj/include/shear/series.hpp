#pragma once

#include <array>
#include <complex>
#include <optional>
#include <span>
#include <vector>

namespace shear {

using Complex = std::complex<double>;
using ComplexPair = std::array<Complex, 2>;

/// A point of the open unit ball in C². Construction checks the invariant.
class BallPoint {
 public:
  BallPoint() = default;
  /// Throws DomainError unless both coordinates are finite and |z1|²+|z2|² < 1.
  BallPoint(Complex z1, Complex z2);

  Complex z1() const { return z1_; }
  Complex z2() const { return z2_; }
  double norm_sq() const { return std::norm(z1_) + std::norm(z2_); }
  ComplexPair pair() const { return {z1_, z2_}; }

  friend bool operator==(const BallPoint&, const BallPoint&) = default;

 private:
  Complex z1_{};
  Complex z2_{};
};

/// Lexicographic order on (Re z1, Im z1, Re z2, Im z2); used to break ties in scan reductions.
bool lex_less(const BallPoint& a, const BallPoint& b);

/// Taylor data a_2, a_3, ..., a_M of a normalized disk function g(ζ) = Σ_{k≥2} a_k ζ^k.
///
/// Indices 0 and 1 are not stored, so g(0) = g'(0) = 0 holds by construction.
/// The tail bound, when known, bounds Σ_{k>M} k|a_k|; a polynomial has tail 0.
/// An absent tail bound marks a non-polynomial source whose weighted sums are not
/// known to be finite.
class CoefficientSeries {
 public:
  /// g ≡ 0.
  CoefficientSeries() = default;
  /// coeffs[i] is a_{i+2}. Throws DomainError on non-finite data or a negative tail bound.
  explicit CoefficientSeries(std::vector<Complex> coeffs, std::optional<double> tail_bound = 0.0);

  /// Highest stored degree M (1 when no coefficients are stored).
  int max_degree() const { return static_cast<int>(coeffs_.size()) + 1; }
  /// a_k, zero outside 2..M.
  Complex coeff(int k) const;
  std::span<const Complex> coeffs() const { return coeffs_; }
  std::optional<double> tail_bound() const { return tail_bound_; }
  bool is_polynomial() const { return tail_bound_ == 0.0; }

  friend bool operator==(const CoefficientSeries&, const CoefficientSeries&) = default;

 private:
  std::vector<Complex> coeffs_;
  std::optional<double> tail_bound_ = 0.0;
};

/// Σ_{k=2..M} a_k ζ^k by Horner's rule. Throws DomainError for |ζ| ≥ 1.
Complex series_eval(const CoefficientSeries& s, Complex zeta);

/// Σ_{k=2..M} k a_k ζ^{k-1}. Throws DomainError for |ζ| ≥ 1.
Complex series_deriv_eval(const CoefficientSeries& s, Complex zeta);

/// Σ k|a_k| + tail bound, or nullopt when the tail is unknown.
std::optional<double> coeff_sum_s1(const CoefficientSeries& s);

/// Σ (k-1)|a_k| + tail bound, or nullopt when the tail is unknown.
std::optional<double> coeff_sum_s2(const CoefficientSeries& s);

/// Σ_{k>n} k|a_k|, including the tail bound; nullopt when the tail is unknown.
/// Throws DomainError for n < 1.
std::optional<double> tail_sum(const CoefficientSeries& s, int n);

/// Re(u1 conj(v1) + u2 conj(v2)). The second argument is conjugated.
double re_inner(const ComplexPair& u, const ComplexPair& v);

}  // namespace shear
