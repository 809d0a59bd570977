#pragma once

#include <string>

#include <json.hpp>

namespace hypqch {

/// Current version of every JSON document this library emits.
inline constexpr int kSchemaVersion = 1;

/// Rounds to 12 significant digits. The result prints identically on every
/// platform when serialized by nlohmann::json.
double round_sig12(double value);

/// `%.12g` rendering used by CSV and text output.
std::string format_sig12(double value);

/// Recursively rounds every floating-point leaf of `doc` to 12 significant digits.
nlohmann::json rounded(const nlohmann::json& doc);

}  // namespace hypqch
