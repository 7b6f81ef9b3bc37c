#pragma once

// Test-only reference computations. Nothing here calls into the code paths it checks.

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace oracle {

using C = std::complex<double>;

/// a_k = 2^-k for k = 2..m as stored data; the full series is ζ²/(4 - 2ζ).
inline std::vector<C> geometric_coeffs(int m) {
  std::vector<C> out;
  for (int k = 2; k <= m; ++k) out.emplace_back(std::ldexp(1.0, -k), 0.0);
  return out;
}

/// Σ_{k>m} k 2^-k = (m + 2) / 2^m.
inline double geometric_weighted_tail(int m) { return (m + 2) / std::ldexp(1.0, m); }

inline C geometric_closed_form(C z) { return z * z / (4.0 - 2.0 * z); }
inline C geometric_closed_form_deriv(C z) {
  return (2.0 * z * (4.0 - 2.0 * z) + 2.0 * z * z) / ((4.0 - 2.0 * z) * (4.0 - 2.0 * z));
}

/// Centered difference along the real axis; holomorphic functions need no other direction.
template <class F>
C central_difference(F f, C z, double h = 1e-6) {
  return (f(z + h) - f(z - h)) / (2.0 * h);
}

using Matrix = std::array<C, 4>;  // row-major

/// Largest singular value by repeated squaring of M = J*J (a power iteration on
/// M^(2^k)), followed by the Rayleigh quotient of M on the dominant column.
inline double power_iteration_opnorm(const Matrix& j, int iterations = 200) {
  // M = J^H J
  Matrix m{std::conj(j[0]) * j[0] + std::conj(j[2]) * j[2], std::conj(j[0]) * j[1] + std::conj(j[2]) * j[3],
           std::conj(j[1]) * j[0] + std::conj(j[3]) * j[2], std::conj(j[1]) * j[1] + std::conj(j[3]) * j[3]};
  Matrix p = m;
  for (int it = 0; it < iterations; ++it) {
    Matrix q{p[0] * p[0] + p[1] * p[2], p[0] * p[1] + p[1] * p[3], p[2] * p[0] + p[3] * p[2], p[2] * p[1] + p[3] * p[3]};
    double scale = 0.0;
    for (const C& x : q) scale = std::max(scale, std::abs(x));
    if (scale == 0.0) return 0.0;
    for (C& x : q) x /= scale;
    p = q;
  }
  const double n0 = std::norm(p[0]) + std::norm(p[2]);
  const double n1 = std::norm(p[1]) + std::norm(p[3]);
  const std::array<C, 2> v = n0 >= n1 ? std::array<C, 2>{p[0], p[2]} : std::array<C, 2>{p[1], p[3]};
  const std::array<C, 2> mv{m[0] * v[0] + m[1] * v[1], m[2] * v[0] + m[3] * v[1]};
  const double num = (std::conj(v[0]) * mv[0] + std::conj(v[1]) * mv[1]).real();
  const double den = std::norm(v[0]) + std::norm(v[1]);
  return std::sqrt(num / den);
}

/// Uniform point of the open ball of radius `radius` in C².
inline std::array<C, 2> random_ball_point(std::mt19937_64& rng, double radius) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::array<double, 4> x{n(rng), n(rng), n(rng), n(rng)};
  double len = 0.0;
  for (double v : x) len += v * v;
  len = std::sqrt(len);
  const double s = radius * std::pow(u(rng), 0.25) / len;
  return {C(x[0] * s, x[1] * s), C(x[2] * s, x[3] * s)};
}

}  // namespace oracle
