#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "splice/domains.hpp"
#include "splice/gram.hpp"
#include "splice/sequences.hpp"
#include "splice/stability.hpp"

namespace splice {

// frequencies on a d-dimensional window: one 1-D factor per axis, sharing
// the same index window, with multi-indices enumerated axis 0 slowest
struct ProductFrequencySet {
  std::vector<FrequencySet> factors;
  int window = 0;

  std::size_t dimension() const { return factors.size(); }

  Eigen::Index order() const {
    Eigen::Index n = 1;
    for (const auto& f : factors) n *= static_cast<Eigen::Index>(f.size());
    return n;
  }
};

// matrix orders grow like (2N+1)^d, so the dimension is capped unless the
// caller raises the limit explicitly
inline ProductFrequencySet product_frequencies(const std::vector<ScaleParameter>& betas,
                                               int window, std::size_t max_dimension = 3) {
  if (betas.empty()) fail(errc::invalid_parameter, "need at least one axis scale");
  if (betas.size() > max_dimension)
    fail(errc::invalid_parameter, "dimension exceeds the configured cap");
  ProductFrequencySet out;
  out.window = window;
  out.factors.reserve(betas.size());
  for (const auto& beta : betas) out.factors.push_back(star_frequency_set(beta, window));
  return out;
}

// Gram matrix of the product system on a split cube. Entries are assembled
// as products of the per-axis Gram entries (the Kronecker product of the
// axis matrices), never by d-dimensional quadrature.
inline GramMatrix product_gram(const ProductFrequencySet& pfs, const BoxUnion& box) {
  if (pfs.dimension() == 0) fail(errc::invalid_parameter, "empty product set");
  if (box.dimension() != pfs.dimension())
    fail(errc::invalid_parameter, "box dimension does not match the frequency set");

  const std::size_t d = pfs.dimension();
  std::vector<GramMatrix> axis;
  axis.reserve(d);
  for (std::size_t k = 0; k < d; ++k)
    axis.push_back(gram(pfs.factors[k], box.axis_domains[k]));

  std::vector<Eigen::Index> sizes(d);
  for (std::size_t k = 0; k < d; ++k) sizes[k] = axis[k].entries.rows();

  GramMatrix out;
  out.domain_measure = box.volume();
  out.entries.resize(pfs.order(), pfs.order());

  std::vector<Eigen::Index> ri(d, 0), ci(d, 0);
  for (Eigen::Index r = 0; r < out.entries.rows(); ++r) {
    Eigen::Index rest = r;
    for (std::size_t k = d; k-- > 0;) {
      ri[k] = rest % sizes[k];
      rest /= sizes[k];
    }
    for (Eigen::Index c = 0; c < out.entries.cols(); ++c) {
      rest = c;
      for (std::size_t k = d; k-- > 0;) {
        ci[k] = rest % sizes[k];
        rest /= sizes[k];
      }
      std::complex<double> v = axis[0].entries(ri[0], ci[0]);
      for (std::size_t k = 1; k < d; ++k) v *= axis[k].entries(ri[k], ci[k]);
      out.entries(r, c) = v;
    }
  }
  return out;
}

// frame constants multiply across axes
inline BoundPair product_bounds(const std::vector<BoundPair>& per_axis) {
  if (per_axis.empty()) fail(errc::invalid_parameter, "need at least one axis bound pair");
  BoundPair out{1.0, 1.0};
  for (const auto& p : per_axis) {
    if (!(p.lower > 0.0) || !(p.upper > 0.0))
      fail(errc::invalid_parameter, "frame constants must be positive");
    if (p.lower > p.upper) fail(errc::invalid_parameter, "lower bound exceeds upper bound");
    out.lower *= p.lower;
    out.upper *= p.upper;
  }
  return out;
}

}  // namespace splice
