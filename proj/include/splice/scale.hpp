#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "splice/error.hpp"
#include "splice/rational.hpp"

namespace splice {

// Positive scale parameter.  Either an exact rational p/q (carried through
// integer arithmetic end to end) or a plain floating-point value for
// irrational experiments.  "5/2" and "3" parse exact, "2.5" parses real.
class ScaleParameter {
 public:
  static ScaleParameter exact(const Rational& r) {
    if (r.num() <= 0) fail(errc::invalid_parameter, "scale parameter must be positive");
    ScaleParameter s;
    s.rat_ = r;
    s.value_ = r.to_double();
    s.exact_ = true;
    return s;
  }
  static ScaleParameter exact(long long p, long long q) { return exact(Rational(p, q)); }

  static ScaleParameter real(double v) {
    if (!(v > 0.0) || !std::isfinite(v))
      fail(errc::invalid_parameter, "scale parameter must be positive and finite");
    ScaleParameter s;
    s.value_ = v;
    s.exact_ = false;
    return s;
  }

  static std::optional<ScaleParameter> parse(std::string_view text) {
    if (auto r = Rational::parse(text)) {
      if (r->num() <= 0) return std::nullopt;
      return exact(*r);
    }
    try {
      std::size_t pos = 0;
      double v = std::stod(std::string(text), &pos);
      if (pos != text.size() || !(v > 0.0) || !std::isfinite(v)) return std::nullopt;
      return real(v);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  bool is_exact() const { return exact_; }
  double value() const { return value_; }

  const Rational& rational() const {
    if (!exact_) fail(errc::unsupported, "operation requires an exact rational scale parameter");
    return rat_;
  }

  std::string str() const { return exact_ ? rat_.str() : format_real(value_); }

 private:
  ScaleParameter() = default;

  static std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  }

  Rational rat_;
  double value_ = 0.0;
  bool exact_ = false;
};

}  // namespace splice
