#pragma once

#include <complex>

namespace shear {

/// Natural-log magnitude above which plain double evaluation is refused (e^709 overflows).
inline constexpr double kLogOverflow = 700.0;

/// A real number that stays exact while it fits in a double and falls back to
/// sign + log|x| beyond e^700. Used for every magnitude comparison that can
/// involve the counterexample's exp(1/δ³) growth.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;

  static ExtendedReal from_double(double x);
  static ExtendedReal from_log(int sign, double log_abs);
  /// sign(x) · e^log_scale · |x|, kept plain when representable.
  static ExtendedReal scaled(double log_scale, double x);

  bool is_plain() const { return plain_; }
  /// Exact value when plain, ±inf otherwise.
  double value() const;
  int sign() const { return sign_; }
  /// log|x|; -inf for zero.
  double log_abs() const;

  friend ExtendedReal operator+(const ExtendedReal& a, const ExtendedReal& b);
  friend ExtendedReal operator-(const ExtendedReal& a) {
    ExtendedReal r = a;
    r.value_ = -a.value_;
    r.sign_ = -a.sign_;
    return r;
  }
  friend ExtendedReal operator-(const ExtendedReal& a, const ExtendedReal& b) { return a + (-b); }
  friend bool operator<(const ExtendedReal& a, const ExtendedReal& b);
  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b);

 private:
  bool plain_ = true;
  double value_ = 0.0;    // authoritative when plain_
  int sign_ = 0;
  double log_abs_ = 0.0;  // authoritative when !plain_
};

/// z = e^log_scale · mantissa. Lets closed-form functions carry magnitudes far past double range.
struct ScaledComplex {
  double log_scale = 0.0;
  std::complex<double> mantissa{};

  /// Plain value; throws OverflowError when log|z| > kLogOverflow.
  std::complex<double> value() const;
  double log_abs() const;
};

ScaledComplex operator+(const ScaledComplex& a, const ScaledComplex& b);
ScaledComplex operator-(const ScaledComplex& a, const ScaledComplex& b);
ScaledComplex operator*(const ScaledComplex& a, std::complex<double> c);

}  // namespace shear
