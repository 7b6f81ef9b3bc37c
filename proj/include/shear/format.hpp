#pragma once

#include <complex>
#include <string>

namespace shear {

/// 17 significant digits, '.' separator, "inf"/"-inf"/"nan" for non-finite values.
std::string format_real(double x);

/// "re,im" with format_real components.
std::string format_complex(std::complex<double> z);

}  // namespace shear
