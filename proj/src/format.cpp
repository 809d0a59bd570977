#include "hypqch/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace hypqch {

double round_sig12(double value) {
  if (!std::isfinite(value) || value == 0.0) return value == 0.0 ? 0.0 : value;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return std::strtod(buf, nullptr);
}

std::string format_sig12(double value) {
  if (value == 0.0) value = 0.0;  // drop negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

nlohmann::json rounded(const nlohmann::json& doc) {
  if (doc.is_number_float()) return round_sig12(doc.get<double>());
  if (doc.is_object()) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [key, value] : doc.items()) out[key] = rounded(value);
    return out;
  }
  if (doc.is_array()) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& value : doc) out.push_back(rounded(value));
    return out;
  }
  return doc;
}

}  // namespace hypqch
