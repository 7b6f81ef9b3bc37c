#include "shear/series.hpp"

#include <cmath>
#include <string>
#include <tuple>

#include "shear/errors.hpp"

namespace shear {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_disk(Complex zeta) {
  if (!finite(zeta) || std::abs(zeta) >= 1.0) {
    throw DomainError("point outside the open unit disk: |zeta| = " + std::to_string(std::abs(zeta)));
  }
}

// Neumaier-compensated sum of w(k)|a_k| for k > first, accumulated from the highest degree down.
template <class Weight>
double weighted_abs_sum(const CoefficientSeries& s, int first, double tail, Weight weight) {
  double sum = tail;
  double comp = 0.0;
  for (int k = s.max_degree(); k > first; --k) {
    const double term = weight(k) * std::abs(s.coeff(k));
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

}  // namespace

BallPoint::BallPoint(Complex z1, Complex z2) : z1_(z1), z2_(z2) {
  if (!finite(z1) || !finite(z2) || norm_sq() >= 1.0) {
    throw DomainError("point outside the open unit ball: |z|^2 = " + std::to_string(norm_sq()));
  }
}

bool lex_less(const BallPoint& a, const BallPoint& b) {
  return std::make_tuple(a.z1().real(), a.z1().imag(), a.z2().real(), a.z2().imag()) <
         std::make_tuple(b.z1().real(), b.z1().imag(), b.z2().real(), b.z2().imag());
}

CoefficientSeries::CoefficientSeries(std::vector<Complex> coeffs, std::optional<double> tail_bound)
    : coeffs_(std::move(coeffs)), tail_bound_(tail_bound) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!finite(coeffs_[i])) {
      throw DomainError("non-finite coefficient a_" + std::to_string(i + 2));
    }
  }
  if (tail_bound_ && !(std::isfinite(*tail_bound_) && *tail_bound_ >= 0.0)) {
    throw DomainError("tail bound must be a finite nonnegative real");
  }
}

Complex CoefficientSeries::coeff(int k) const {
  if (k < 2 || k > max_degree()) return {};
  return coeffs_[static_cast<std::size_t>(k - 2)];
}

Complex series_eval(const CoefficientSeries& s, Complex zeta) {
  require_disk(zeta);
  Complex acc{};
  for (int k = s.max_degree(); k >= 2; --k) acc = acc * zeta + s.coeff(k);
  return acc * zeta * zeta;
}

Complex series_deriv_eval(const CoefficientSeries& s, Complex zeta) {
  require_disk(zeta);
  Complex acc{};
  for (int k = s.max_degree(); k >= 2; --k) acc = acc * zeta + static_cast<double>(k) * s.coeff(k);
  return acc * zeta;
}

std::optional<double> coeff_sum_s1(const CoefficientSeries& s) { return tail_sum(s, 1); }

std::optional<double> coeff_sum_s2(const CoefficientSeries& s) {
  if (!s.tail_bound()) return std::nullopt;
  return weighted_abs_sum(s, 1, *s.tail_bound(), [](int k) { return k - 1.0; });
}

std::optional<double> tail_sum(const CoefficientSeries& s, int n) {
  if (n < 1) throw DomainError("tail_sum requires N >= 1");
  if (!s.tail_bound()) return std::nullopt;
  return weighted_abs_sum(s, n, *s.tail_bound(), [](int k) { return static_cast<double>(k); });
}

double re_inner(const ComplexPair& u, const ComplexPair& v) {
  return (u[0] * std::conj(v[0]) + u[1] * std::conj(v[1])).real();
}

}  // namespace shear
