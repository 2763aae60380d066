#ifndef UNLATTICE_SRC_SEGMENTS_HPP
#define UNLATTICE_SRC_SEGMENTS_HPP

// Common piecewise-affine form behind StepFn and PLFn. A segment is affine on
// [a, b) with one-sided values wa (at a+) and wb (at b-); neighbouring segments
// need not agree at their shared endpoint.

#include <vector>

#include "unlattice/element.hpp"
#include "unlattice/rational.hpp"

namespace unlattice::detail {

struct Segment {
  Rational a, b, wa, wb;

  Rational at(const Rational& t) const;
  Rational length() const { return b - a; }
};

using Segments = std::vector<Segment>;

Segments to_segments(const StepFn& f);
Segments to_segments(const PLFn& f);
/// Throws KindMismatch for carriers without a [0,1] representation.
Segments to_segments(const Element& e);

/// Split segments at the given points (sorted, strictly inside (0,1) or ignored).
Segments refine(const Segments& s, const std::vector<Rational>& cuts);
/// Brings two partitions of [0,1] onto their common refinement.
void align(Segments& lhs, Segments& rhs);
/// Splits each segment where its affine piece changes strict sign.
Segments split_at_roots(const Segments& s);

Segments combine(const Segments& lhs, const Segments& rhs, LatticeOp op);
Segments absolute(const Segments& s);
Segments scaled(const Segments& s, const Rational& alpha);

StepFn to_step(const Segments& s);
PLFn to_pl(const Segments& s);

bool nonnegative(const Segments& s);
Rational value_at(const Segments& s, const Rational& t);

/// {t : |f(t)| > eps} as sorted, merged half-open intervals.
std::vector<Interval> superlevel(const Segments& s, const Rational& eps);

Rational integral_abs(const Segments& s);
/// Integral of |f|^p for integer p >= 1.
Rational integral_abs_pow(const Segments& s, unsigned p);
double integral_abs_pow_approx(const Segments& s, double p);
Rational sup_abs(const Segments& s);
/// ess sup |x| / e for e >= 0; infinity when no finite multiple of e dominates |x|.
ExtScalar ratio_sup(const Segments& x, const Segments& e);

}  // namespace unlattice::detail

#endif  // UNLATTICE_SRC_SEGMENTS_HPP
