#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <thread>
#include <vector>

#include "splice/domains.hpp"
#include "splice/error.hpp"
#include "splice/sequences.hpp"

namespace splice {

// Worker threads for embarrassingly parallel entry work.  SPLICE_THREADS caps
// the pool; results do not depend on the thread count.
inline int worker_count(std::size_t items) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  std::size_t cap = hw;
  if (const char* env = std::getenv("SPLICE_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1) cap = std::min<std::size_t>(cap, static_cast<std::size_t>(v));
  }
  if (items < 64) return 1;
  return static_cast<int>(std::min(cap, items));
}

inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const int workers = worker_count(count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = static_cast<std::size_t>(w); i < count;
           i += static_cast<std::size_t>(workers))
        body(i);
    });
  for (auto& t : pool) t.join();
}

// sin(z)/z with a series guard; the guard keeps tiny frequency differences
// cancellation-free.
inline double stable_sinc(double z) {
  if (std::abs(z) < 1e-4) {
    const double z2 = z * z;
    return 1.0 - z2 / 6.0 * (1.0 - z2 / 20.0 * (1.0 - z2 / 42.0));
  }
  return std::sin(z) / z;
}

// Integral of e^{2 pi i f x} over one segment, written about the midpoint:
// h e^{i theta c} sinc(theta h / 2) with theta = 2 pi f.  Equivalent to
// (e^{i theta t} - e^{i theta s}) / (i theta) but stable for small f.
inline std::complex<double> segment_integral(double freq_diff, const Segment& seg) {
  const double theta = 2.0 * std::numbers::pi * freq_diff;
  const double h = seg.length();
  const double mag = h * stable_sinc(0.5 * theta * h);
  const double phase = theta * seg.midpoint();
  return {mag * std::cos(phase), mag * std::sin(phase)};
}

// <e_lambda, e_mu> over the union; equal frequencies give the measure exactly.
inline std::complex<double> pair_inner_product(double lambda, double mu, const SegmentUnion& d) {
  if (lambda == mu) return {d.measure(), 0.0};
  std::complex<double> acc{0.0, 0.0};
  for (const Segment& s : d.segments()) acc += segment_integral(lambda - mu, s);
  return acc;
}

struct GramMatrix {
  Eigen::MatrixXcd entries;
  Eigen::VectorXd lambdas;
  double domain_measure = 0.0;

  Eigen::Index order() const { return entries.rows(); }
};

// Hermitian matrix of pairwise inner products.  The upper triangle is
// computed and mirrored, so the result is exactly Hermitian and independent
// of assembly order and thread count.
inline GramMatrix gram(const FrequencySet& fs, const SegmentUnion& domain) {
  if (fs.size() == 0) fail(errc::invalid_parameter, "empty frequency set");
  if (domain.count() == 0) fail(errc::invalid_parameter, "empty domain");
  const auto n = static_cast<Eigen::Index>(fs.size());
  GramMatrix g;
  g.lambdas = fs.lambdas;
  g.domain_measure = domain.measure();
  g.entries.resize(n, n);
  Eigen::MatrixXcd& m = g.entries;
  const Eigen::VectorXd& lam = g.lambdas;
  const double measure = g.domain_measure;
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t row) {
    const auto i = static_cast<Eigen::Index>(row);
    m(i, i) = std::complex<double>(measure, 0.0);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const std::complex<double> v = pair_inner_product(lam[i], lam[j], domain);
      m(i, j) = v;
      m(j, i) = std::conj(v);
    }
  });
  return g;
}

// Eigenvalues of (m + m^H)/2 in ascending order.
inline Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
  if (m.rows() == 0 || m.rows() != m.cols())
    fail(errc::invalid_matrix, "need a nonempty square matrix");
  if (!m.allFinite()) fail(errc::invalid_matrix, "matrix has non-finite entries");
  Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) fail(errc::invalid_matrix, "eigenvalue iteration failed");
  return solver.eigenvalues();
}

inline Eigen::VectorXd hermitian_eigenvalues(const GramMatrix& g) {
  return hermitian_eigenvalues(g.entries);
}

struct FrameBoundPoint {
  int window = 0;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
};

struct FrameBoundEstimate {
  std::vector<FrameBoundPoint> series;
};

// Extreme Gram eigenvalues along a growing window schedule.  Windows nest, so
// lambda_min can only go down and lambda_max up along the series.
inline FrameBoundEstimate frame_bounds(const std::function<FrequencySet(int)>& builder,
                                       const SegmentUnion& domain,
                                       const std::vector<int>& schedule) {
  if (schedule.empty()) fail(errc::invalid_parameter, "empty window schedule");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (schedule[i] < 1) fail(errc::invalid_parameter, "window sizes must be >= 1");
    if (i > 0 && schedule[i] <= schedule[i - 1])
      fail(errc::invalid_parameter, "window schedule must be strictly increasing");
  }
  FrameBoundEstimate est;
  est.series.reserve(schedule.size());
  for (int w : schedule) {
    const Eigen::VectorXd ev = hermitian_eigenvalues(gram(builder(w), domain));
    est.series.push_back({w, ev[0], ev[ev.size() - 1]});
  }
  return est;
}

}  // namespace splice
