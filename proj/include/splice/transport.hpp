#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "splice/domains.hpp"
#include "splice/error.hpp"
#include "splice/gram.hpp"
#include "splice/sequences.hpp"

namespace splice {

namespace detail {

// b*lambda reduced to [-1/2, 1/2], exactly when both factors are rational.
inline double reduced_product(const Rational& b, const Rational& lambda) {
  Rational f = (b * lambda).frac();  // in [0, 1)
  if (f > Rational(1, 2)) f -= Rational(1);
  return f.to_double();
}

inline double reduced_product(double b, double lambda) {
  return std::remainder(b * lambda, 1.0);
}

}  // namespace detail

// Largest |e^{-2 pi i b lambda} - 1| over stored frequencies and gaps, i.e.
// 2 |sin(pi b lambda)| after reduction mod 1.  Zero exactly when every
// b*lambda is an integer, which is what makes gap translations invisible to
// the Gram matrix.
inline double modulation_defect(const FrequencySet& fs, const std::vector<Rational>& gaps) {
  double worst = 0.0;
  const bool exact = fs.has_exact();
  for (const Rational& b : gaps) {
    if (b.is_zero()) continue;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      double r = exact ? detail::reduced_product(b, fs.exact_lambdas[i])
                       : detail::reduced_product(b.to_double(),
                                                 fs.lambdas[static_cast<Eigen::Index>(i)]);
      const double d = r == 0.0 ? 0.0 : 2.0 * std::abs(std::sin(std::numbers::pi * r));
      if (d > worst) worst = d;
    }
  }
  return worst;
}

inline double modulation_defect(const FrequencySet& fs, const std::vector<double>& gaps) {
  double worst = 0.0;
  for (double b : gaps) {
    if (b == 0.0) continue;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const double r =
          detail::reduced_product(b, fs.lambdas[static_cast<Eigen::Index>(i)]);
      const double d = r == 0.0 ? 0.0 : 2.0 * std::abs(std::sin(std::numbers::pi * r));
      if (d > worst) worst = d;
    }
  }
  return worst;
}

// Table of unit phases e^{2 pi i b_k lambda_n}; rows follow the stored
// frequency order, columns the gap list.
inline Eigen::MatrixXcd transport_phases(const FrequencySet& fs, const std::vector<Rational>& gaps) {
  Eigen::MatrixXcd w(static_cast<Eigen::Index>(fs.size()),
                     static_cast<Eigen::Index>(gaps.size()));
  const bool exact = fs.has_exact();
  for (std::size_t k = 0; k < gaps.size(); ++k) {
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const double r = exact
                           ? detail::reduced_product(gaps[k], fs.exact_lambdas[i])
                           : detail::reduced_product(gaps[k].to_double(),
                                                     fs.lambdas[static_cast<Eigen::Index>(i)]);
      const double a = 2.0 * std::numbers::pi * r;
      w(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = {std::cos(a), std::sin(a)};
    }
  }
  return w;
}

struct TransportReport {
  Eigen::Index order = 0;
  double max_deviation = 0.0;
};

// The split system g_n = sum_k chi_{piece k} e^{2 pi i lambda_n (x - b_k)} is
// a segment-wise translate of e^{2 pi i lambda_n x} on [0,1), so the two Gram
// matrices agree identically; this evaluates both sides independently and
// reports the worst entry deviation (floating-point noise only).
inline TransportReport transported_gram_check(const SplitSpec& spec, const FrequencySet& fs) {
  const SegmentUnion j_domain = build_split(spec);
  const GramMatrix base = gram(fs, SegmentUnion::unit_interval());
  const auto n = static_cast<Eigen::Index>(fs.size());
  const auto segs = j_domain.segments();
  Eigen::MatrixXcd gj(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    gj(a, a) = std::complex<double>(j_domain.measure(), 0.0);
    for (Eigen::Index b = a + 1; b < n; ++b) {
      const double diff = fs.lambdas[a] - fs.lambdas[b];
      std::complex<double> acc{0.0, 0.0};
      for (std::size_t k = 0; k < segs.size(); ++k) {
        const double arg = -2.0 * std::numbers::pi * diff * spec.gaps[k].to_double();
        acc += segment_integral(diff, segs[k]) * std::complex<double>(std::cos(arg), std::sin(arg));
      }
      gj(a, b) = acc;
      gj(b, a) = std::conj(acc);
    }
  }
  TransportReport report;
  report.order = n;
  report.max_deviation = (gj - base.entries).cwiseAbs().maxCoeff();
  return report;
}

// Lattice points k/delta in [-window, window] that do not collide with any
// lambda_n = n + delta_n; membership is decided in exact integer arithmetic.
inline FrequencySet complement_frequencies(const ScaleParameter& beta, const Rational& delta,
                                           int window) {
  if (!beta.is_exact())
    fail(errc::unsupported, "complement frequencies need an exact rational scale parameter");
  if (delta.num() <= 0) fail(errc::invalid_parameter, "ambient length must be positive");
  if (window < 1) fail(errc::invalid_parameter, "window must be >= 1");
  const Rational b = beta.rational();
  if (!(delta / b).is_integer())
    fail(errc::hypothesis_violation,
         "ambient length " + delta.str() + " is not an integer multiple of beta = " + b.str());
  const long long kmax = (delta * Rational(window)).floor();
  FrequencySet fs;
  fs.provenance = Provenance::lattice_complement;
  fs.window = static_cast<int>(kmax);
  fs.value_window = window;
  fs.beta = beta;
  fs.lattice_delta = delta;
  std::vector<double> lams;
  for (long long k = -kmax; k <= kmax; ++k) {
    const Rational t = Rational(k) / delta;
    bool collides = false;
    const long long base = t.floor();
    for (long long n = base - 1; n <= base + 2 && !collides; ++n)
      collides = (Rational(n) + delta_star_exact(n, b)) == t;
    if (collides) continue;
    fs.indices.push_back(k);
    fs.exact_lambdas.push_back(t);
    lams.push_back(t.to_double());
  }
  fs.lambdas = Eigen::Map<Eigen::VectorXd>(lams.data(), static_cast<Eigen::Index>(lams.size()));
  return fs;
}

struct DilationReport {
  double rho = 0.0;
  double shift = 0.0;
  double max_relative_deviation = 0.0;
};

// Spectrum covariance under x -> shift + rho x: the Gram of the rescaled
// frequencies on the moved domain is rho times a unitary conjugate of the
// original, so sorted spectra agree after scaling by rho.
inline DilationReport dilation_check(const FrequencySet& fs, const SegmentUnion& domain,
                                     double rho, double shift) {
  if (!(rho > 0.0) || !std::isfinite(rho) || !std::isfinite(shift))
    fail(errc::invalid_parameter, "need a positive finite dilation and finite shift");
  const Eigen::VectorXd base = hermitian_eigenvalues(gram(fs, domain));

  FrequencySet scaled;
  scaled.provenance = Provenance::perturbed;
  scaled.window = fs.window;
  scaled.indices = fs.indices;
  scaled.lambdas = fs.lambdas / rho;
  std::vector<Segment> segs;
  for (const Segment& s : domain.segments())
    segs.push_back({shift + rho * s.start, shift + rho * s.end});
  const Eigen::VectorXd moved = hermitian_eigenvalues(gram(scaled, SegmentUnion(segs)));

  const double scale = rho * base.cwiseAbs().maxCoeff();
  DilationReport report;
  report.rho = rho;
  report.shift = shift;
  report.max_relative_deviation =
      (moved - rho * base).cwiseAbs().maxCoeff() / (scale > 0.0 ? scale : 1.0);
  return report;
}

}  // namespace splice
