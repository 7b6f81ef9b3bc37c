#include "shear/shear_map.hpp"

#include <cmath>
#include <limits>

#include "shear/errors.hpp"

namespace shear {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const CoefficientSeries& require_coefficients(const ShearingMap& f, const char* op) {
  const CoefficientSeries* s = f.coefficients();
  if (s == nullptr) {
    throw UnsupportedRepresentation(std::string(op) + ": " + f.g().describe() +
                                    " is closed-form and has no coefficient access");
  }
  return *s;
}

}  // namespace

ComplexPair shear_eval(const ShearingMap& f, const BallPoint& z) {
  return {z.z1() + f.g().value(z.z2()), z.z2()};
}

ComplexPair shear_inverse_eval(const ShearingMap& f, const ComplexPair& w) {
  return {w[0] - f.g().value(w[1]), w[1]};
}

Jacobian2 shear_jacobian(const ShearingMap& f, const BallPoint& z) {
  return {1.0, f.g().derivative(z.z2()), 0.0, 1.0};
}

ShearingMap truncate_shear(const ShearingMap& f, int m) {
  const CoefficientSeries& s = require_coefficients(f, "truncate_shear");
  if (m < 2) throw DomainError("truncation degree must be >= 2");
  const auto kept = s.coeffs().first(std::min<std::size_t>(s.coeffs().size(), static_cast<std::size_t>(m - 1)));
  return ShearingMap::from_series(CoefficientSeries({kept.begin(), kept.end()}, 0.0));
}

ShearingMap tail_compose(const ShearingMap& f, int n) {
  const CoefficientSeries& s = require_coefficients(f, "tail_compose");
  if (n < 1) throw DomainError("tail_compose requires N >= 1");
  std::vector<Complex> coeffs(s.coeffs().begin(), s.coeffs().end());
  for (int k = 2; k <= std::min(n, s.max_degree()); ++k) coeffs[static_cast<std::size_t>(k - 2)] = 0.0;
  return ShearingMap::from_series(CoefficientSeries(std::move(coeffs), s.tail_bound()));
}

double starlike_constant() { return 3.0 * std::sqrt(3.0) / 2.0; }

Certificate embed_certificate(const ShearingMap& f, int n_max) {
  Certificate cert;
  cert.kind = CertificateKind::Embeddable;
  cert.margin = -kInf;
  const CoefficientSeries* s = f.coefficients();
  if (s == nullptr || !s->tail_bound()) return cert;
  for (int n = 1; n <= n_max; ++n) {
    const double tail = *tail_sum(*s, n);
    cert.margin = 1.0 - tail;
    if (tail <= 1.0) {
      cert.status = CertificateStatus::Certified;
      cert.degree = n;
      return cert;
    }
  }
  return cert;
}

Certificate starlike_certificate(const ShearingMap& f) {
  Certificate cert;
  cert.kind = CertificateKind::Starlike;
  cert.margin = -kInf;
  const CoefficientSeries* s = f.coefficients();
  if (s == nullptr) return cert;
  const auto s2 = coeff_sum_s2(*s);
  if (!s2) return cert;
  cert.margin = starlike_constant() - *s2;
  if (*s2 <= starlike_constant()) {
    cert.status = CertificateStatus::Certified;
    cert.s0_member = true;
  }
  return cert;
}

Certificate starshapelike_certificate(const ShearingMap& f) {
  Certificate cert;
  cert.kind = CertificateKind::Starshapelike;
  cert.margin = kInf;
  const CoefficientSeries* s = f.coefficients();
  if (s == nullptr) return cert;
  if (const auto s1 = coeff_sum_s1(*s)) {
    cert.status = CertificateStatus::Certified;
    cert.margin = *s1;
  }
  return cert;
}

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::Starlike: return "Starlike";
    case CertificateKind::Starshapelike: return "Starshapelike";
    case CertificateKind::Embeddable: return "Embeddable";
  }
  return "?";
}

std::string to_string(CertificateStatus status) {
  return status == CertificateStatus::Certified ? "Certified" : "NotCertified";
}

}  // namespace shear
