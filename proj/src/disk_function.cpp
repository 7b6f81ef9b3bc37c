#include "shear/disk_function.hpp"

#include <cmath>

#include "shear/errors.hpp"

namespace shear {

namespace {

class SeriesModel final : public DiskFunctionModel {
 public:
  explicit SeriesModel(CoefficientSeries s) : series_(std::move(s)) {}

  ScaledComplex value(Complex zeta) const override { return {0.0, series_eval(series_, zeta)}; }
  ScaledComplex derivative(Complex zeta) const override {
    return {0.0, series_deriv_eval(series_, zeta)};
  }
  const CoefficientSeries* coefficients() const override { return &series_; }
  std::string describe() const override {
    return "series(M=" + std::to_string(series_.max_degree()) + ")";
  }

 private:
  CoefficientSeries series_;
};

void require_disk(Complex zeta) {
  if (!std::isfinite(zeta.real()) || !std::isfinite(zeta.imag()) || std::abs(zeta) >= 1.0) {
    throw DomainError("point outside the open unit disk: |zeta| = " + std::to_string(std::abs(zeta)));
  }
}

}  // namespace

DiskFunction::DiskFunction() : DiskFunction(std::make_shared<SeriesModel>(CoefficientSeries{})) {}

DiskFunction::DiskFunction(std::shared_ptr<const DiskFunctionModel> model) : model_(std::move(model)) {}

DiskFunction DiskFunction::from_series(CoefficientSeries s) {
  return DiskFunction(std::make_shared<SeriesModel>(std::move(s)));
}

Complex DiskFunction::value(Complex zeta) const { return value_scaled(zeta).value(); }

Complex DiskFunction::derivative(Complex zeta) const { return derivative_scaled(zeta).value(); }

ScaledComplex DiskFunction::value_scaled(Complex zeta) const {
  require_disk(zeta);
  return model_->value(zeta);
}

ScaledComplex DiskFunction::derivative_scaled(Complex zeta) const {
  require_disk(zeta);
  return model_->derivative(zeta);
}

double DiskFunction::log_abs(Complex zeta) const { return value_scaled(zeta).log_abs(); }

}  // namespace shear
