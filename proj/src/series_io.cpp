#include "shear/series_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "shear/errors.hpp"

namespace shear {

using nlohmann::json;

namespace {

[[noreturn]] void fail(std::string_view source, const std::string& what) {
  throw ConfigError(std::string(source) + ": " + what);
}

double number_at(const json& v, std::string_view source, const std::string& where) {
  if (!v.is_number()) fail(source, where + ": expected a number");
  return v.get<double>();
}

}  // namespace

CoefficientSeries parse_series_spec(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(source, "parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) fail(source, "top level must be an object");

  if (!doc.contains("start")) fail(source, "missing field 'start'");
  if (!doc["start"].is_number_integer() || doc["start"].get<long long>() != 2) {
    fail(source, "field 'start' must be 2 (a_0 and a_1 are fixed to zero)");
  }

  std::vector<Complex> coeffs;
  if (doc.contains("coeffs")) {
    const json& arr = doc["coeffs"];
    if (!arr.is_array()) fail(source, "field 'coeffs' must be an array of [re, im] pairs");
    coeffs.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string where = "coeffs[" + std::to_string(i) + "] (a_" + std::to_string(i + 2) + ")";
      const json& pair = arr[i];
      if (!pair.is_array() || pair.size() != 2) fail(source, where + ": expected [re, im]");
      coeffs.emplace_back(number_at(pair[0], source, where), number_at(pair[1], source, where));
    }
  }

  std::optional<double> tail = 0.0;
  if (doc.contains("tail_bound")) {
    const json& t = doc["tail_bound"];
    tail = t.is_null() ? std::nullopt : std::optional<double>(number_at(t, source, "tail_bound"));
  }

  try {
    return CoefficientSeries(std::move(coeffs), tail);
  } catch (const DomainError& e) {
    fail(source, e.what());
  }
}

CoefficientSeries load_series_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open series spec '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_series_spec(buf.str(), path.string());
}

}  // namespace shear
