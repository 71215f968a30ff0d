#pragma once

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "splice/domains.hpp"
#include "splice/error.hpp"
#include "splice/rational.hpp"
#include "splice/scale.hpp"

namespace splice {

// fixed 15-significant-digit rendering shared by every report writer
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

// doubles destined for JSON pass through the same 15-digit text, so JSON
// and CSV reports agree on every value and reruns are byte-identical
inline double json_real(double v) { return std::strtod(format_double(v).c_str(), nullptr); }

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, v);
  return buf;
}

inline nlohmann::json parse_json_text(const std::string& text) {
  nlohmann::json parsed = nlohmann::json::parse(text, nullptr, false);
  if (parsed.is_discarded()) fail(errc::invalid_spec, "malformed JSON");
  return parsed;
}

// rationals arrive as "p/q" strings, integers, or decimals; a decimal is
// accepted only when its binary value is exactly representable, so 0.5
// means 1/2 but 0.3 must be written "3/10" when the true ratio is meant
inline Rational rational_from_json(const nlohmann::json& v) {
  if (v.is_string()) {
    const auto text = v.get<std::string>();
    if (auto r = Rational::parse(text)) return *r;
    fail(errc::invalid_spec, "bad rational literal: " + text);
  }
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number_float()) {
    try {
      return Rational::from_double(v.get<double>());
    } catch (const Error&) {
      fail(errc::invalid_spec, "decimal out of exact range; write it as a \"p/q\" string");
    }
  }
  fail(errc::invalid_spec, "expected a rational: \"p/q\" string or number");
}

// a scale parameter additionally tolerates decimals with no exact binary
// form by dropping to the floating-point path (irrational experiments)
inline ScaleParameter scale_from_json(const nlohmann::json& v) {
  if (v.is_string()) {
    const auto text = v.get<std::string>();
    if (auto s = ScaleParameter::parse(text)) return *s;
    fail(errc::invalid_spec, "bad scale literal: " + text);
  }
  if (v.is_number_integer()) return ScaleParameter::exact(Rational(v.get<long long>()));
  if (v.is_number_float()) {
    const double x = v.get<double>();
    try {
      return ScaleParameter::exact(Rational::from_double(x));
    } catch (const Error&) {
      return ScaleParameter::real(x);
    }
  }
  fail(errc::invalid_spec, "expected a scale: \"p/q\" string or number");
}

inline SplitSpec split_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("cuts") || !j.contains("gaps") || !j["cuts"].is_array() ||
      !j["gaps"].is_array())
    fail(errc::invalid_spec, "domain spec must be an object with \"cuts\" and \"gaps\" arrays");
  SplitSpec spec;
  for (const auto& c : j["cuts"]) spec.cuts.push_back(rational_from_json(c));
  for (const auto& g : j["gaps"]) spec.gaps.push_back(rational_from_json(g));
  return spec;
}

inline std::optional<ScaleParameter> beta_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("beta")) return std::nullopt;
  return scale_from_json(j["beta"]);
}

}  // namespace splice
