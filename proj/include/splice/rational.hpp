#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "splice/error.hpp"

namespace splice {

// Exact rational arithmetic on 64-bit numerator/denominator with 128-bit
// intermediates.  Values that leave the 64-bit range after reduction throw
// rather than silently losing exactness.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit on purpose
  Rational(long long n, long long d) { init(static_cast<__int128>(n), static_cast<__int128>(d)); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // Exact value of a finite double (every finite double is dyadic).
  static Rational from_double(double x) {
    if (!std::isfinite(x)) fail(errc::invalid_parameter, "non-finite value has no rational form");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [1/2, 1)
    auto mant = static_cast<long long>(std::ldexp(m, 53));
    exp -= 53;
    if (exp >= 0) {
      if (exp > 10) fail(errc::invalid_parameter, "value too large for exact rational form");
      return Rational(mant << exp, 1);
    }
    if (exp < -62) fail(errc::invalid_parameter, "value too small for exact rational form");
    return Rational(mant, 1LL << -exp);
  }

  // "p/q" or a bare integer; anything else (including decimals) is rejected.
  static std::optional<Rational> parse(std::string_view text) {
    auto read_int = [](std::string_view s, long long* out) -> bool {
      if (s.empty()) return false;
      std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
      if (i == s.size()) return false;
      __int128 acc = 0;
      for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
        acc = acc * 10 + (s[i] - '0');
        if (acc > static_cast<__int128>(std::numeric_limits<long long>::max())) return false;
      }
      *out = static_cast<long long>(acc);
      if (s[0] == '-') *out = -*out;
      return true;
    };
    long long p = 0, q = 1;
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      if (!read_int(text, &p)) return std::nullopt;
      return Rational(p);
    }
    if (!read_int(text.substr(0, slash), &p) || !read_int(text.substr(slash + 1), &q) || q <= 0)
      return std::nullopt;
    return Rational(p, q);
  }

  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  long long floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  long long ceil() const { return -(-*this).floor(); }

  // x - floor(x), in [0, 1)
  Rational frac() const { return *this - Rational(floor()); }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) fail(errc::invalid_parameter, "rational division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend Rational abs(const Rational& a) { return a.num_ < 0 ? -a : a; }

 private:
  using i128 = __int128;

  static i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational make(i128 n, i128 d) {
    Rational r;
    r.init(n, d);
    return r;
  }

  void init(i128 n, i128 d) {
    if (d == 0) fail(errc::invalid_parameter, "rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr i128 lo = std::numeric_limits<long long>::min();
    constexpr i128 hi = std::numeric_limits<long long>::max();
    if (n < lo || n > hi || d > hi)
      fail(errc::invalid_parameter, "rational overflow; use smaller p/q values");
    num_ = static_cast<long long>(n);
    den_ = static_cast<long long>(d);
  }

  long long num_;
  long long den_;
};

}  // namespace splice
