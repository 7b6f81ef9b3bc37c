#pragma once

#include <memory>
#include <string>

#include "shear/extended_real.hpp"
#include "shear/series.hpp"

namespace shear {

/// Backing implementation of a DiskFunction. Implementations are immutable.
class DiskFunctionModel {
 public:
  virtual ~DiskFunctionModel() = default;
  /// g(ζ) in scaled form; callers have already checked |ζ| < 1.
  virtual ScaledComplex value(Complex zeta) const = 0;
  /// g'(ζ) in scaled form.
  virtual ScaledComplex derivative(Complex zeta) const = 0;
  /// Coefficient access, or nullptr for closed-form functions.
  virtual const CoefficientSeries* coefficients() const { return nullptr; }
  virtual std::string describe() const = 0;
};

/// A holomorphic g on the unit disk with g(0) = g'(0) = 0.
///
/// Plain evaluators refuse (OverflowError) past log|g| > 700; the scaled
/// evaluators and log_abs never overflow.
class DiskFunction {
 public:
  /// g ≡ 0.
  DiskFunction();
  explicit DiskFunction(std::shared_ptr<const DiskFunctionModel> model);

  static DiskFunction from_series(CoefficientSeries s);

  Complex value(Complex zeta) const;
  Complex derivative(Complex zeta) const;
  ScaledComplex value_scaled(Complex zeta) const;
  ScaledComplex derivative_scaled(Complex zeta) const;
  /// log|g(ζ)|, -inf where g vanishes.
  double log_abs(Complex zeta) const;

  const CoefficientSeries* coefficients() const { return model_->coefficients(); }
  std::string describe() const { return model_->describe(); }

 private:
  std::shared_ptr<const DiskFunctionModel> model_;
};

}  // namespace shear
