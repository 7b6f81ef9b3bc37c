#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "shear/series.hpp"

namespace shear {

/// Parses a series-spec document:
///
///     {"start": 2, "coeffs": [[re, im], ...], "tail_bound": 0.25}
///
/// `coeffs` lists a_start, a_{start+1}, ... and `start` must be 2. A missing
/// `tail_bound` means the data is a polynomial (tail 0); an explicit `null`
/// marks a non-polynomial source with an unknown tail. Throws ConfigError with
/// a location diagnostic on malformed input.
CoefficientSeries parse_series_spec(std::string_view text, std::string_view source = "<input>");

CoefficientSeries load_series_spec(const std::filesystem::path& path);

}  // namespace shear
