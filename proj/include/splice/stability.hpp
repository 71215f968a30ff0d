#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <vector>

#include "splice/error.hpp"

namespace splice {

// distance from x to the nearest integer, in [0, 1/2]
inline double integer_distance(double x) {
  if (!std::isfinite(x)) fail(errc::invalid_parameter, "integer_distance: non-finite input");
  return std::abs(std::remainder(x, 1.0));
}

// D(L) = 1 - cos(pi L) + sin(pi L), the defect functional behind the
// quarter-bound frame constants
inline double kadec_D(double L) {
  if (!(L >= 0.0)) fail(errc::invalid_parameter, "kadec_D: L must be nonnegative");
  return 1.0 - std::cos(std::numbers::pi * L) + std::sin(std::numbers::pi * L);
}

struct BoundPair {
  double lower = 0.0;
  double upper = 0.0;
};

// frame constants A = 1 - D(L), B = 1 + D(L) for a perturbation with
// sup|delta_n| = L; only valid below the quarter threshold where A > 0
inline BoundPair kadec_bounds(double L) {
  if (!(L >= 0.0)) fail(errc::invalid_parameter, "kadec_bounds: L must be nonnegative");
  if (L >= 0.25) fail(errc::out_of_theorem_range, "kadec_bounds: requires L < 1/4");
  const double c = std::cos(std::numbers::pi * L);
  const double s = std::sin(std::numbers::pi * L);
  return {c - s, 2.0 - c + s};
}

// largest displacement of a frame sequence for L^2[-gamma, gamma] with
// bounds A <= B that is guaranteed to stay a frame sequence
inline double balan_radius(double gamma, double A, double B) {
  if (!(gamma > 0.0)) fail(errc::invalid_parameter, "balan_radius: gamma must be positive");
  if (!(A > 0.0) || !(A <= B)) fail(errc::invalid_parameter, "balan_radius: need 0 < A <= B");
  const double shrink = (1.0 - std::sqrt(A / B)) / std::numbers::sqrt2;
  return 1.0 / (8.0 * gamma) - std::asin(shrink) / (2.0 * std::numbers::pi * gamma);
}

// frame bounds after displacing every frequency by at most delta; the
// trigonometric arguments are gamma*delta in radians, as the closed form
// prescribes
inline BoundPair balan_perturbed_bounds(double gamma, double A, double B, double delta) {
  if (!(gamma > 0.0)) fail(errc::invalid_parameter, "balan_perturbed_bounds: gamma must be positive");
  if (!(A > 0.0) || !(A <= B))
    fail(errc::invalid_parameter, "balan_perturbed_bounds: need 0 < A <= B");
  if (!(delta >= 0.0) || delta >= balan_radius(gamma, A, B))
    fail(errc::out_of_theorem_range, "balan_perturbed_bounds: delta outside the admissible radius");
  const double d = 1.0 - std::cos(gamma * delta) + std::sin(gamma * delta);
  const double lo = A * std::pow(1.0 - std::sqrt(A / B) * d, 2);
  const double hi = B * std::pow(1.0 + d, 2);
  return {lo, hi};
}

// deviation model for the m-segment check: either a uniform envelope
// sup|delta_n| <= L, or an explicit finite list of deviations
struct DeviationSpec {
  std::optional<double> envelope_L;
  std::vector<double> values;

  static DeviationSpec envelope(double L) {
    DeviationSpec s;
    s.envelope_L = L;
    return s;
  }
  static DeviationSpec samples(std::vector<double> v) {
    DeviationSpec s;
    s.values = std::move(v);
    return s;
  }
  bool is_envelope() const { return envelope_L.has_value(); }
};

struct StabilityReport {
  double L = 0.0;
  double A = 0.0;                // lower frame constant of the base perturbation
  std::vector<double> b_gamma;   // B_{gamma_j}(L), one per translated segment
  std::vector<double> sin_sup;   // sup_n sin(pi dist(Z, delta_n b_j)) per segment
  std::vector<double> margins;   // b_gamma[j] * sin_sup[j]
  double lhs = 0.0;              // max over the margins
  double rhs = 0.0;              // A / (2 sqrt(m))
  bool satisfied = false;
};

namespace detail {

inline void check_segment_data(int m, const std::vector<double>& gammas,
                               const std::vector<long long>& gaps) {
  if (m <= 0) fail(errc::invalid_parameter, "segment count must be positive");
  if (gammas.size() != static_cast<std::size_t>(m))
    fail(errc::invalid_parameter, "need one half-length per segment");
  for (double g : gammas)
    if (!(g > 0.0) || !std::isfinite(g))
      fail(errc::invalid_parameter, "half-lengths must be positive");
  if (gaps.size() + 1 != static_cast<std::size_t>(m))
    fail(errc::invalid_parameter, "need one gap per translated segment (m-1 entries)");
  for (long long b : gaps)
    if (b < 0) fail(errc::invalid_parameter, "gaps must be nonnegative integers");
}

}  // namespace detail

// the m-segment certificate: segment j >= 1 carries half-length gammas[j]
// and integer translation gaps[j-1]; the system {e^{2 pi i (n+delta_n) x}}
// stays a Riesz basis for the translated union when lhs < rhs
inline StabilityReport stability_check(int m, const std::vector<double>& gammas,
                                       const std::vector<long long>& gaps,
                                       const DeviationSpec& deviations) {
  detail::check_segment_data(m, gammas, gaps);

  double L = 0.0;
  if (deviations.is_envelope()) {
    L = *deviations.envelope_L;
    if (!(L >= 0.0) || !std::isfinite(L))
      fail(errc::invalid_parameter, "envelope must be a nonnegative real");
  } else {
    for (double d : deviations.values) {
      if (!std::isfinite(d)) fail(errc::invalid_parameter, "deviations must be finite");
      L = std::max(L, std::abs(d));
    }
  }
  if (L >= 0.25) fail(errc::out_of_theorem_range, "stability_check: requires sup|delta_n| < 1/4");

  StabilityReport report;
  report.L = L;
  report.A = std::cos(std::numbers::pi * L) - std::sin(std::numbers::pi * L);
  report.rhs = report.A / (2.0 * std::sqrt(static_cast<double>(m)));

  for (int j = 1; j < m; ++j) {
    const double gamma = gammas[static_cast<std::size_t>(j)];
    const auto b = static_cast<double>(gaps[static_cast<std::size_t>(j - 1)]);
    const double bg = 2.0 - std::cos(std::numbers::pi * gamma * L) +
                      std::sin(std::numbers::pi * gamma * L);

    double worst = 0.0;
    if (deviations.is_envelope()) {
      // delta*b sweeps [-bL, bL], so the distance to the integers peaks at
      // min(bL, 1/2)
      worst = std::min(b * L, 0.5);
    } else {
      for (double d : deviations.values) worst = std::max(worst, integer_distance(d * b));
    }
    const double sup = std::sin(std::numbers::pi * worst);

    report.b_gamma.push_back(bg);
    report.sin_sup.push_back(sup);
    report.margins.push_back(bg * sup);
  }

  report.lhs = report.margins.empty()
                   ? 0.0
                   : *std::max_element(report.margins.begin(), report.margins.end());
  report.satisfied = report.lhs < report.rhs;
  return report;
}

// linear sufficient condition: chord bounds A(L) >= 1 - 4L and
// B_gamma(L) <= 1 + 4 gamma L together with sin(pi x) <= pi x turn the
// certificate into one comparison; a true result implies stability_check
inline bool stability_linearized(int m, const std::vector<double>& gammas,
                                 const std::vector<long long>& gaps, double L,
                                 const std::vector<double>& dists) {
  detail::check_segment_data(m, gammas, gaps);
  if (!(L >= 0.0) || !std::isfinite(L))
    fail(errc::invalid_parameter, "envelope must be a nonnegative real");
  if (L >= 0.25) fail(errc::out_of_theorem_range, "stability_linearized: requires L < 1/4");
  if (dists.size() + 1 != static_cast<std::size_t>(m))
    fail(errc::invalid_parameter, "need one distance envelope per translated segment");
  for (double d : dists)
    if (!(d >= 0.0) || d > 0.5)
      fail(errc::invalid_parameter, "distance envelopes live in [0, 1/2]");

  double lhs = 0.0;
  for (int j = 1; j < m; ++j)
    lhs = std::max(lhs, (1.0 + 4.0 * L * gammas[static_cast<std::size_t>(j)]) *
                            dists[static_cast<std::size_t>(j - 1)]);
  const double rhs = (1.0 - 4.0 * L) / (2.0 * std::sqrt(static_cast<double>(m)) * std::numbers::pi);
  return lhs <= rhs;
}

}  // namespace splice
