#pragma once

#include <string>
#include <utility>
#include <vector>

#include "splice/error.hpp"
#include "splice/rational.hpp"
#include "splice/scale.hpp"

namespace splice {

struct Segment {
  double start = 0.0;
  double end = 0.0;  // half-open [start, end)
  double length() const { return end - start; }
  double midpoint() const { return 0.5 * (start + end); }
};

// Sorted, pairwise disjoint half-open segments; touching endpoints allowed.
class SegmentUnion {
 public:
  SegmentUnion() = default;

  explicit SegmentUnion(std::vector<Segment> segments) : segments_(std::move(segments)) {
    double total = 0.0;
    for (std::size_t i = 0; i < segments_.size(); ++i) {
      const Segment& s = segments_[i];
      if (!(s.start < s.end)) fail(errc::invalid_parameter, "segment must have positive length");
      if (i > 0 && segments_[i - 1].end > s.start)
        fail(errc::invalid_parameter, "segments must be sorted and disjoint");
      total += s.length();
    }
    measure_ = total;
  }

  static SegmentUnion interval(double a, double b) { return SegmentUnion({{a, b}}); }
  static SegmentUnion unit_interval() { return interval(0.0, 1.0); }

  const std::vector<Segment>& segments() const { return segments_; }
  std::size_t count() const { return segments_.size(); }
  double measure() const { return measure_; }

 private:
  std::vector<Segment> segments_;
  double measure_ = 0.0;
};

// Cut points 0 = a_0 < ... < a_m = 1 of the unit interval together with
// nondecreasing translations b_0 = 0 <= b_1 <= ... <= b_{m-1}; piece j is
// [a_j + b_j, a_{j+1} + b_j).  All data exact rational.
struct SplitSpec {
  std::vector<Rational> cuts;
  std::vector<Rational> gaps;

  std::size_t segment_count() const { return gaps.size(); }
};

inline std::vector<std::string> validate(const SplitSpec& spec) {
  std::vector<std::string> problems;
  if (spec.cuts.size() < 2) problems.push_back("need at least two cut points");
  if (!spec.cuts.empty() && spec.cuts.front() != Rational(0))
    problems.push_back("cuts must start at 0");
  if (!spec.cuts.empty() && spec.cuts.back() != Rational(1))
    problems.push_back("cuts must end at 1");
  for (std::size_t i = 1; i < spec.cuts.size(); ++i)
    if (!(spec.cuts[i - 1] < spec.cuts[i])) {
      problems.push_back("cut points must be strictly increasing");
      break;
    }
  if (spec.gaps.size() + 1 != spec.cuts.size())
    problems.push_back("need exactly one gap per piece (one fewer than cut points)");
  if (!spec.gaps.empty() && spec.gaps.front() != Rational(0))
    problems.push_back("first gap must be 0");
  for (std::size_t i = 1; i < spec.gaps.size(); ++i)
    if (spec.gaps[i] < spec.gaps[i - 1]) {
      problems.push_back("gaps must be nondecreasing");
      break;
    }
  return problems;
}

inline void require_valid(const SplitSpec& spec) {
  auto problems = validate(spec);
  if (problems.empty()) return;
  std::string msg = "invalid split spec:";
  for (const auto& p : problems) msg += " " + p + ";";
  msg.pop_back();
  fail(errc::invalid_spec, msg);
}

inline std::vector<std::pair<Rational, Rational>> split_segments_exact(const SplitSpec& spec) {
  require_valid(spec);
  std::vector<std::pair<Rational, Rational>> out;
  out.reserve(spec.segment_count());
  for (std::size_t j = 0; j < spec.segment_count(); ++j)
    out.emplace_back(spec.cuts[j] + spec.gaps[j], spec.cuts[j + 1] + spec.gaps[j]);
  return out;
}

inline SegmentUnion build_split(const SplitSpec& spec) {
  std::vector<Segment> segs;
  for (const auto& [s, t] : split_segments_exact(spec))
    segs.push_back({s.to_double(), t.to_double()});
  return SegmentUnion(std::move(segs));
}

struct CenterHalfLength {
  double center = 0.0;
  double half_length = 0.0;
};

// Piece j has center (a_j + a_{j+1})/2 + b_j and half-length
// (a_{j+1} - a_j)/2; the half-lengths of a valid spec sum to 1/2.
inline std::vector<CenterHalfLength> centers_halflengths(const SplitSpec& spec) {
  require_valid(spec);
  std::vector<CenterHalfLength> out;
  out.reserve(spec.segment_count());
  for (std::size_t j = 0; j < spec.segment_count(); ++j) {
    Rational c = (spec.cuts[j] + spec.cuts[j + 1]) / Rational(2) + spec.gaps[j];
    Rational g = (spec.cuts[j + 1] - spec.cuts[j]) / Rational(2);
    out.push_back({c.to_double(), g.to_double()});
  }
  return out;
}

struct ComplementDomain {
  Rational delta;  // right endpoint of the ambient interval [0, delta]
  std::vector<std::pair<Rational, Rational>> segments_exact;
  SegmentUnion domain;
};

// Smallest multiple of beta, of the form ceil((1 + b_last)/beta) * beta, whose
// interval [0, delta] contains the split domain; the complement is taken
// there.  Requires every nonzero gap to be an integer multiple of beta.
inline ComplementDomain complement_domain(const SplitSpec& spec, const ScaleParameter& beta) {
  require_valid(spec);
  if (!beta.is_exact())
    fail(errc::unsupported,
         "complement construction checks gap/beta integrality exactly; pass beta as p/q");
  const Rational b = beta.rational();
  for (std::size_t k = 1; k < spec.gaps.size(); ++k)
    if (!(spec.gaps[k] / b).is_integer())
      fail(errc::hypothesis_violation,
           "gap " + spec.gaps[k].str() + " is not an integer multiple of beta = " + b.str());
  const Rational b_last = spec.gaps.empty() ? Rational(0) : spec.gaps.back();
  const Rational delta = Rational(((Rational(1) + b_last) / b).ceil()) * b;

  ComplementDomain out;
  out.delta = delta;
  Rational cursor(0);
  for (const auto& [s, t] : split_segments_exact(spec)) {
    if (cursor < s) out.segments_exact.emplace_back(cursor, s);
    cursor = t;
  }
  if (cursor < delta) out.segments_exact.emplace_back(cursor, delta);
  std::vector<Segment> segs;
  for (const auto& [s, t] : out.segments_exact) segs.push_back({s.to_double(), t.to_double()});
  out.domain = SegmentUnion(std::move(segs));
  return out;
}

// Cartesian product of per-axis split domains.
struct BoxUnion {
  std::vector<SplitSpec> axes;
  std::vector<SegmentUnion> axis_domains;

  std::size_t dimension() const { return axes.size(); }

  double volume() const {
    double v = 1.0;
    for (const auto& d : axis_domains) v *= d.measure();
    return v;
  }

  std::size_t box_count() const {
    std::size_t n = 1;
    for (const auto& d : axis_domains) n *= d.count();
    return n;
  }

  // Rectangles in lexicographic order, axis 0 slowest.
  std::vector<std::vector<Segment>> boxes() const {
    std::vector<std::vector<Segment>> out;
    std::vector<std::size_t> idx(dimension(), 0);
    for (;;) {
      std::vector<Segment> box;
      box.reserve(dimension());
      for (std::size_t a = 0; a < dimension(); ++a)
        box.push_back(axis_domains[a].segments()[idx[a]]);
      out.push_back(std::move(box));
      std::size_t a = dimension();
      while (a > 0) {
        --a;
        if (++idx[a] < axis_domains[a].count()) break;
        idx[a] = 0;
        if (a == 0) return out;
      }
      if (dimension() == 0) return out;
    }
  }
};

inline BoxUnion box_product(std::vector<SplitSpec> axes) {
  if (axes.empty()) fail(errc::invalid_parameter, "need at least one axis");
  BoxUnion out;
  for (const auto& spec : axes) out.axis_domains.push_back(build_split(spec));
  out.axes = std::move(axes);
  return out;
}

}  // namespace splice
