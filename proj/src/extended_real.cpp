#include "shear/extended_real.hpp"

#include <cmath>
#include <limits>

#include "shear/errors.hpp"

namespace shear {

namespace {

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

}  // namespace

ExtendedReal ExtendedReal::from_double(double x) {
  ExtendedReal r;
  r.sign_ = sign_of(x);
  if (std::isfinite(x)) {
    r.value_ = x;
  } else {
    r.plain_ = false;
    r.value_ = x;
    r.log_abs_ = std::numeric_limits<double>::infinity();
  }
  return r;
}

ExtendedReal ExtendedReal::from_log(int sign, double log_abs) {
  if (sign == 0 || log_abs == -std::numeric_limits<double>::infinity()) return {};
  if (log_abs <= kLogOverflow) return from_double(sign * std::exp(log_abs));
  ExtendedReal r;
  r.plain_ = false;
  r.sign_ = sign > 0 ? 1 : -1;
  r.value_ = r.sign_ * std::numeric_limits<double>::infinity();
  r.log_abs_ = log_abs;
  return r;
}

ExtendedReal ExtendedReal::scaled(double log_scale, double x) {
  if (x == 0.0) return {};
  if (log_scale == 0.0) return from_double(x);
  if (log_scale <= kLogOverflow) {
    const double v = x * std::exp(log_scale);
    if (std::isfinite(v) && std::abs(v) <= std::exp(kLogOverflow)) return from_double(v);
  }
  return from_log(sign_of(x), log_scale + std::log(std::abs(x)));
}

double ExtendedReal::value() const { return value_; }

double ExtendedReal::log_abs() const {
  if (!plain_) return log_abs_;
  return std::log(std::abs(value_));
}

ExtendedReal operator+(const ExtendedReal& a, const ExtendedReal& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  if (a.plain_ && b.plain_) return ExtendedReal::from_double(a.value_ + b.value_);

  const double la = a.log_abs();
  const double lb = b.log_abs();
  const ExtendedReal& big = la >= lb ? a : b;
  const double lbig = std::max(la, lb);
  const double lsmall = std::min(la, lb);
  if (a.sign_ == b.sign_) {
    return ExtendedReal::from_log(big.sign_, lbig + std::log1p(std::exp(lsmall - lbig)));
  }
  if (la == lb) return {};
  return ExtendedReal::from_log(big.sign_, lbig + std::log1p(-std::exp(lsmall - lbig)));
}

bool operator<(const ExtendedReal& a, const ExtendedReal& b) {
  if (a.plain_ && b.plain_) return a.value_ < b.value_;
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
  if (a.sign_ == 0) return false;
  const double la = a.log_abs();
  const double lb = b.log_abs();
  return a.sign_ > 0 ? la < lb : la > lb;
}

bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
  if (a.plain_ != b.plain_) return false;
  if (a.plain_) return a.value_ == b.value_;
  return a.sign_ == b.sign_ && a.log_abs_ == b.log_abs_;
}

std::complex<double> ScaledComplex::value() const {
  const double la = log_abs();
  if (la > kLogOverflow) {
    throw OverflowError("plain evaluation refused: log-magnitude " + std::to_string(la) +
                        " exceeds overflow threshold");
  }
  if (log_scale == 0.0) return mantissa;
  if (log_scale <= kLogOverflow) return mantissa * std::exp(log_scale);
  return std::polar(std::exp(la), std::arg(mantissa));
}

double ScaledComplex::log_abs() const { return log_scale + std::log(std::abs(mantissa)); }

ScaledComplex operator+(const ScaledComplex& a, const ScaledComplex& b) {
  if (a.mantissa == std::complex<double>{}) return b;
  if (b.mantissa == std::complex<double>{}) return a;
  if (a.log_scale == b.log_scale) return {a.log_scale, a.mantissa + b.mantissa};
  const double top = std::max(a.log_scale, b.log_scale);
  return {top, a.mantissa * std::exp(a.log_scale - top) + b.mantissa * std::exp(b.log_scale - top)};
}

ScaledComplex operator-(const ScaledComplex& a, const ScaledComplex& b) {
  return a + ScaledComplex{b.log_scale, -b.mantissa};
}

ScaledComplex operator*(const ScaledComplex& a, std::complex<double> c) {
  return {a.log_scale, a.mantissa * c};
}

}  // namespace shear
