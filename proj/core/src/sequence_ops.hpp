#ifndef UNLATTICE_SRC_SEQUENCE_OPS_HPP
#define UNLATTICE_SRC_SEQUENCE_OPS_HPP

#include "unlattice/element.hpp"
#include "unlattice/norm.hpp"

namespace unlattice::detail {

TailSeq combine(const TailSeq& a, const TailSeq& b, LatticeOp op);
TailSeq absolute(const TailSeq& a);
TailSeq scaled(const TailSeq& a, const Rational& alpha);
bool nonnegative(const TailSeq& a);

/// Sum of |x_n|^p, infinite unless the tail is zero.
ExtScalar power_sum(const TailSeq& a, unsigned p);
double power_sum_approx(const TailSeq& a, double p);
/// sup_n |x_n|.
ExtScalar sup_abs(const TailSeq& a);
/// sup_n |x_n| / e_n for e >= 0.
ExtScalar ratio_sup(const TailSeq& x, const TailSeq& e);

}  // namespace unlattice::detail

#endif  // UNLATTICE_SRC_SEQUENCE_OPS_HPP
