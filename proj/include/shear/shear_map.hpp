#pragma once

#include <optional>
#include <string>

#include "shear/disk_function.hpp"
#include "shear/series.hpp"

namespace shear {

/// f(z) = (z1 + g(z2), z2) on the unit ball of C². Injective for every g.
class ShearingMap {
 public:
  /// Identity shear (g ≡ 0).
  ShearingMap() = default;
  explicit ShearingMap(DiskFunction g) : g_(std::move(g)) {}

  static ShearingMap from_series(CoefficientSeries s) {
    return ShearingMap(DiskFunction::from_series(std::move(s)));
  }

  const DiskFunction& g() const { return g_; }
  const CoefficientSeries* coefficients() const { return g_.coefficients(); }

 private:
  DiskFunction g_;
};

/// Row-major 2×2 complex matrix.
struct Jacobian2 {
  Complex a11{1.0}, a12{}, a21{}, a22{1.0};

  Complex det() const { return a11 * a22 - a12 * a21; }
};

ComplexPair shear_eval(const ShearingMap& f, const BallPoint& z);

/// (w1 - g(w2), w2); defined for every w1 and |w2| < 1.
ComplexPair shear_inverse_eval(const ShearingMap& f, const ComplexPair& w);

/// [[1, g'(z2)], [0, 1]].
Jacobian2 shear_jacobian(const ShearingMap& f, const BallPoint& z);

/// Polynomial shear with g_m = Σ_{k=2..m} a_k ζ^k (tail 0).
/// Throws UnsupportedRepresentation without coefficient access, DomainError for m < 2.
ShearingMap truncate_shear(const ShearingMap& f, int m);

/// f_n^{-1} ∘ f: the shear whose coefficients are {a_k}_{k>n}; the tail bound is kept.
ShearingMap tail_compose(const ShearingMap& f, int n);

enum class CertificateKind { Starlike, Starshapelike, Embeddable };
enum class CertificateStatus { Certified, NotCertified };

struct Certificate {
  CertificateKind kind = CertificateKind::Starlike;
  CertificateStatus status = CertificateStatus::NotCertified;
  /// Minimal certified degree N; set only for certified Embeddable certificates.
  std::optional<int> degree;
  /// Criterion slack; -inf (or +inf for Starshapelike) when the coefficient sums are not finite.
  double margin = 0.0;
  /// Starlike certificates only: a starlike normalized map lies in S⁰.
  bool s0_member = false;

  bool certified() const { return status == CertificateStatus::Certified; }
};

/// 3√3/2, the sharp bound on Σ(k-1)|a_k| for starlikeness.
double starlike_constant();

/// Smallest N ≤ n_max with Σ_{k>N} k|a_k| ≤ 1, giving a Loewner chain with range C².
Certificate embed_certificate(const ShearingMap& f, int n_max);

/// Certified iff Σ(k-1)|a_k| ≤ 3√3/2.
Certificate starlike_certificate(const ShearingMap& f);

/// Certified iff Σ k|a_k| is finite; margin carries that sum.
Certificate starshapelike_certificate(const ShearingMap& f);

std::string to_string(CertificateKind kind);
std::string to_string(CertificateStatus status);

}  // namespace shear
