#include "shear/format.hpp"

#include <fmt/format.h>

namespace shear {

std::string format_real(double x) { return fmt::format("{:.17g}", x); }

std::string format_complex(std::complex<double> z) {
  return format_real(z.real()) + "," + format_real(z.imag());
}

}  // namespace shear
