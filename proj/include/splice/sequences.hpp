#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "splice/error.hpp"
#include "splice/rational.hpp"
#include "splice/scale.hpp"

namespace splice {

// Floating-point fractional parts snap to the nearest integer within this
// tolerance before any branch on {x} is taken, so that values which are
// integers up to roundoff behave like integers.
inline constexpr double kIntegerSnapTol = 1e-12;

inline double fractional_part_snapped(double x, double* floor_out = nullptr) {
  double fl = std::floor(x);
  double f = x - fl;
  if (f < kIntegerSnapTol) {
    f = 0.0;
  } else if (f > 1.0 - kIntegerSnapTol) {
    f = 0.0;
    fl += 1.0;
  }
  if (floor_out) *floor_out = fl;
  return f;
}

// Sawtooth profile of the rounding deviation: g(x) = 1 - {x} if {x} >= 1/2,
// else -{x}.  One-periodic, |g| <= 1/2, g(n beta)/beta reproduces the
// rounded-sequence deviation below.
inline double sawtooth_g(double x) {
  double f = fractional_part_snapped(x);
  return f >= 0.5 ? 1.0 - f : -f;
}

// Deviation of the rounded sequence: lambda_n = n + delta_n is the point of
// (1/beta)Z nearest to n, ties at {beta n} = 1/2 resolved upward.
inline Rational delta_star_exact(long long n, const Rational& beta) {
  if (beta.num() <= 0) fail(errc::invalid_parameter, "scale parameter must be positive");
  const long long p = beta.num();
  const long long q = beta.den();
  long long r = static_cast<long long>((static_cast<__int128>(p) * n) % q);
  if (r < 0) r += q;
  if (2 * r >= q) return Rational(q - r, p);
  return Rational(-r, p);
}

inline double delta_star(long long n, const ScaleParameter& beta) {
  if (beta.is_exact()) return delta_star_exact(n, beta.rational()).to_double();
  const double b = beta.value();
  const double x = b * static_cast<double>(n);
  double fl = 0.0;
  const double f = fractional_part_snapped(x, &fl);
  const double rounded = f >= 0.5 ? fl + 1.0 : fl;
  return (rounded - x) / b;
}

// Sign of the deviation branch: +1 iff {beta n} >= 1/2.
inline int xi_sign(long long n, const ScaleParameter& beta) {
  if (beta.is_exact()) {
    const long long q = beta.rational().den();
    long long r = static_cast<long long>(
        (static_cast<__int128>(beta.rational().num()) * n) % q);
    if (r < 0) r += q;
    return 2 * r >= q ? 1 : -1;
  }
  return fractional_part_snapped(beta.value() * static_cast<double>(n)) >= 0.5 ? 1 : -1;
}

enum class Provenance { star, perturbed, lattice, lattice_complement };

inline const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::star: return "star";
    case Provenance::perturbed: return "perturbed";
    case Provenance::lattice: return "lattice";
    case Provenance::lattice_complement: return "lattice-complement";
  }
  return "?";
}

// A finite symmetric window of a frequency sequence.  indices and lambdas are
// aligned and sorted; exact_lambdas is populated whenever the generating data
// was exact rational.
struct FrequencySet {
  Provenance provenance = Provenance::perturbed;
  int window = 0;  // index bound: indices lie in [-window, window]
  std::optional<int> value_window;  // complement sets also track the bound on |lambda|
  std::vector<long long> indices;
  Eigen::VectorXd lambdas;
  std::vector<Rational> exact_lambdas;  // empty when not exactly representable
  std::optional<ScaleParameter> beta;
  std::optional<Rational> lattice_delta;

  std::size_t size() const { return indices.size(); }
  bool has_exact() const { return !exact_lambdas.empty(); }

  Eigen::VectorXd deviations() const {
    Eigen::VectorXd d(lambdas.size());
    for (Eigen::Index i = 0; i < lambdas.size(); ++i)
      d[i] = lambdas[i] - static_cast<double>(indices[static_cast<std::size_t>(i)]);
    return d;
  }

  // Position of index n; requires the contiguous-index provenances.
  std::size_t position_of(long long n) const {
    if (indices.empty() || n < indices.front() || n > indices.back() ||
        indices.back() - indices.front() + 1 != static_cast<long long>(indices.size()))
      fail(errc::out_of_range, "index " + std::to_string(n) + " not in the stored window");
    return static_cast<std::size_t>(n - indices.front());
  }
};

// lambda_n = n + delta_n for the rounded deviation above.  beta >= 1 keeps the
// sequence strictly increasing and separated; smaller beta is refused unless
// explicitly allowed for experiments.
inline FrequencySet star_frequency_set(const ScaleParameter& beta, int window,
                                       bool allow_subunit_beta = false) {
  if (window < 1) fail(errc::invalid_parameter, "window must be >= 1");
  if (beta.value() < 1.0 && !allow_subunit_beta)
    fail(errc::domain_violation, "scale parameter below 1 breaks separation; pass the override to experiment");
  FrequencySet fs;
  fs.provenance = Provenance::star;
  fs.window = window;
  fs.beta = beta;
  const std::size_t count = static_cast<std::size_t>(2 * window + 1);
  fs.indices.reserve(count);
  fs.lambdas.resize(static_cast<Eigen::Index>(count));
  const bool exact = beta.is_exact();
  if (exact) fs.exact_lambdas.reserve(count);
  for (long long n = -window; n <= window; ++n) {
    const std::size_t i = static_cast<std::size_t>(n + window);
    fs.indices.push_back(n);
    if (exact) {
      Rational lam = Rational(n) + delta_star_exact(n, beta.rational());
      fs.exact_lambdas.push_back(lam);
      fs.lambdas[static_cast<Eigen::Index>(i)] = lam.to_double();
    } else {
      fs.lambdas[static_cast<Eigen::Index>(i)] =
          static_cast<double>(n) + delta_star(n, beta);
    }
  }
  return fs;
}

// lambda_n = n + deviations[n + window]; deviations supplied explicitly.
inline FrequencySet perturbed_frequency_set(int window, const Eigen::VectorXd& deviations) {
  if (window < 1) fail(errc::invalid_parameter, "window must be >= 1");
  if (deviations.size() != 2 * window + 1)
    fail(errc::invalid_parameter, "need exactly 2*window+1 deviations");
  FrequencySet fs;
  fs.provenance = Provenance::perturbed;
  fs.window = window;
  fs.indices.reserve(deviations.size());
  fs.lambdas.resize(deviations.size());
  for (long long n = -window; n <= window; ++n) {
    fs.indices.push_back(n);
    fs.lambdas[n + window] = static_cast<double>(n) + deviations[n + window];
  }
  return fs;
}

// lambda_n = n / delta on the regular lattice of spacing 1/delta.
inline FrequencySet lattice_frequency_set(const Rational& delta, int window) {
  if (window < 1) fail(errc::invalid_parameter, "window must be >= 1");
  if (delta.num() <= 0) fail(errc::invalid_parameter, "lattice spacing parameter must be positive");
  FrequencySet fs;
  fs.provenance = Provenance::lattice;
  fs.window = window;
  fs.lattice_delta = delta;
  const std::size_t count = static_cast<std::size_t>(2 * window + 1);
  fs.indices.reserve(count);
  fs.lambdas.resize(static_cast<Eigen::Index>(count));
  fs.exact_lambdas.reserve(count);
  for (long long n = -window; n <= window; ++n) {
    fs.indices.push_back(n);
    Rational lam = Rational(n) / delta;
    fs.exact_lambdas.push_back(lam);
    fs.lambdas[n + window] = lam.to_double();
  }
  return fs;
}

// Smallest gap between consecutive frequencies (after sorting by value).
inline double separation_gap(const FrequencySet& fs) {
  if (fs.size() < 2) fail(errc::invalid_parameter, "need at least two frequencies");
  std::vector<double> v(fs.lambdas.data(), fs.lambdas.data() + fs.lambdas.size());
  std::sort(v.begin(), v.end());
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < v.size(); ++i) gap = std::min(gap, v[i] - v[i - 1]);
  return gap;
}

// Exact period of the deviation sequence: q for beta = p/q in lowest terms.
inline long long period_of(const ScaleParameter& beta) {
  if (!beta.is_exact())
    fail(errc::unsupported, "deviations are periodic only for exact rational scale parameters");
  return beta.rational().den();
}

// |1/N * sum of deviations over the index block (mN, (m+1)N]|.
inline double avdonin_average(const FrequencySet& fs, long long block_size, long long block_index) {
  if (block_size < 1) fail(errc::invalid_parameter, "block size must be >= 1");
  const long long lo = block_index * block_size + 1;
  const long long hi = (block_index + 1) * block_size;
  double sum = 0.0;
  for (long long n = lo; n <= hi; ++n) {
    const std::size_t i = fs.position_of(n);
    sum += fs.lambdas[static_cast<Eigen::Index>(i)] - static_cast<double>(n);
  }
  return std::abs(sum) / static_cast<double>(block_size);
}

// (1/N) sum_{n=1..N} g(n beta); tends to 0 for irrational beta by
// equidistribution, giving small in-average deviations at scale beta.
inline double weyl_average(double beta, long long count) {
  if (count < 1) fail(errc::invalid_parameter, "term count must be >= 1");
  if (!(beta > 0.0) || !std::isfinite(beta))
    fail(errc::invalid_parameter, "scale parameter must be positive and finite");
  double sum = 0.0;
  for (long long n = 1; n <= count; ++n) sum += sawtooth_g(beta * static_cast<double>(n));
  return sum / static_cast<double>(count);
}

}  // namespace splice
