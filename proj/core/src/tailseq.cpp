#include <algorithm>
#include <cmath>

#include "sequence_ops.hpp"
#include "unlattice/element.hpp"
#include "unlattice/error.hpp"

namespace unlattice {

namespace {

// Longest prefix we are willing to materialize when a tail crossing lies far out.
constexpr Index kMaxPrefix = Index{1} << 22;

Index checked_index(const Rational& r) {
  if (r <= 0) return 0;
  Rational c = ceil_rational(r);
  if (c > Rational(static_cast<unsigned long>(kMaxPrefix))) {
    throw Error(ErrorCode::BadParams, "tail crossing beyond materialization limit");
  }
  return c.get_num().get_ui();
}

// Index after which the affine tail slope*n + intercept keeps a constant sign.
Index sign_settles_after(const Rational& slope, const Rational& intercept) {
  if (slope == 0) return 0;
  return checked_index(-intercept / slope);
}

}  // namespace

TailSeq::TailSeq(std::vector<Rational> prefix, Rational slope, Rational intercept)
    : prefix_(std::move(prefix)), slope_(std::move(slope)), intercept_(std::move(intercept)) {
  canonicalize();
}

TailSeq TailSeq::unit(Index n) {
  if (n == 0) throw Error(ErrorCode::BadParams, "sequence indices start at 1");
  std::vector<Rational> p(n, Rational(0));
  p.back() = 1;
  return zero_tail(std::move(p));
}

TailSeq::TailKind TailSeq::tail_kind() const {
  if (slope_ != 0) return TailKind::Affine;
  return intercept_ == 0 ? TailKind::Zero : TailKind::Const;
}

Rational TailSeq::operator()(Index n) const {
  if (n == 0) throw Error(ErrorCode::BadParams, "sequence indices start at 1");
  if (n <= prefix_.size()) return prefix_[n - 1];
  return tail_value(n);
}

std::vector<Rational> TailSeq::expanded_prefix(Index length) const {
  std::vector<Rational> out = prefix_;
  out.reserve(std::max<Index>(length, prefix_.size()));
  for (Index n = prefix_.size() + 1; n <= length; ++n) out.push_back(tail_value(n));
  return out;
}

void TailSeq::canonicalize() {
  while (!prefix_.empty() && prefix_.back() == tail_value(prefix_.size())) prefix_.pop_back();
}

namespace detail {

TailSeq combine(const TailSeq& a, const TailSeq& b, LatticeOp op) {
  Index length = std::max(a.prefix_length(), b.prefix_length());
  Rational slope;
  Rational intercept;
  switch (op) {
    case LatticeOp::Sum:
      slope = a.slope() + b.slope();
      intercept = a.intercept() + b.intercept();
      break;
    case LatticeOp::Diff:
      slope = a.slope() - b.slope();
      intercept = a.intercept() - b.intercept();
      break;
    case LatticeOp::Meet:
    case LatticeOp::Join: {
      Rational ds = a.slope() - b.slope();
      Rational di = a.intercept() - b.intercept();
      length = std::max(length, sign_settles_after(ds, di));
      // Sign of a - b on the tail, once settled.
      int sign = ds != 0 ? sgn(ds) : sgn(di);
      bool a_smaller = sign <= 0;
      bool take_a = (op == LatticeOp::Meet) ? a_smaller : !a_smaller;
      slope = take_a ? a.slope() : b.slope();
      intercept = take_a ? a.intercept() : b.intercept();
      break;
    }
  }
  // Read prefixes in place; only the part past a prefix needs the tail formula.
  Rational ta;
  Rational tb;
  auto at = [](const TailSeq& s, Index i, Rational& scratch) -> const Rational& {
    if (i < s.prefix_length()) return s.prefix()[i];
    scratch = s.tail_value(i + 1);
    return scratch;
  };
  std::vector<Rational> out(length);
  for (Index i = 0; i < length; ++i) {
    const Rational& x = at(a, i, ta);
    const Rational& y = at(b, i, tb);
    switch (op) {
      case LatticeOp::Sum: out[i] = x + y; break;
      case LatticeOp::Diff: out[i] = x - y; break;
      case LatticeOp::Meet: out[i] = x < y ? x : y; break;
      case LatticeOp::Join: out[i] = x < y ? y : x; break;
    }
  }
  return TailSeq(std::move(out), slope, intercept);
}

TailSeq absolute(const TailSeq& a) {
  Index length = std::max(a.prefix_length(), sign_settles_after(a.slope(), a.intercept()));
  std::vector<Rational> p = a.expanded_prefix(length);
  for (auto& x : p) x = abs(x);
  int sign = a.slope() != 0 ? sgn(a.slope()) : sgn(a.intercept());
  Rational s = sign < 0 ? Rational(-a.slope()) : a.slope();
  Rational i = sign < 0 ? Rational(-a.intercept()) : a.intercept();
  return TailSeq(std::move(p), s, i);
}

TailSeq scaled(const TailSeq& a, const Rational& alpha) {
  std::vector<Rational> p = a.prefix();
  for (auto& x : p) x *= alpha;
  return TailSeq(std::move(p), alpha * a.slope(), alpha * a.intercept());
}

bool nonnegative(const TailSeq& a) {
  if (std::any_of(a.prefix().begin(), a.prefix().end(), [](const Rational& x) { return x < 0; })) return false;
  if (a.slope() < 0) return false;
  Index length = std::max(a.prefix_length(), sign_settles_after(a.slope(), a.intercept()));
  for (Index n = a.prefix_length() + 1; n <= length + 1; ++n) {
    if (a.tail_value(n) < 0) return false;
  }
  return true;
}

ExtScalar power_sum(const TailSeq& a, unsigned p) {
  if (a.tail_kind() != TailSeq::TailKind::Zero) return ExtScalar::infinity();
  Rational total = 0;
  for (const auto& x : a.prefix()) total += pow(abs(x), p);
  return total;
}

double power_sum_approx(const TailSeq& a, double p) {
  if (a.tail_kind() != TailSeq::TailKind::Zero) return std::numeric_limits<double>::infinity();
  double total = 0;
  for (const auto& x : a.prefix()) total += std::pow(std::abs(x.get_d()), p);
  return total;
}

ExtScalar sup_abs(const TailSeq& a) {
  if (a.tail_kind() == TailSeq::TailKind::Affine) return ExtScalar::infinity();
  Rational m = abs(a.intercept());
  for (const auto& x : a.prefix()) m = std::max(m, abs(x));
  return m;
}

ExtScalar ratio_sup(const TailSeq& x, const TailSeq& e) {
  if (!nonnegative(e)) throw Error(ErrorCode::BadParams, "unit element must be positive");
  Index length = std::max({x.prefix_length(), e.prefix_length(), sign_settles_after(x.slope(), x.intercept()),
                           sign_settles_after(e.slope(), e.intercept())});
  std::vector<Rational> px = x.expanded_prefix(length);
  std::vector<Rational> pe = e.expanded_prefix(length);
  ExtScalar best(0L);
  for (Index i = 0; i < length; ++i) {
    Rational xv = abs(px[i]);
    if (pe[i] > 0) {
      best = max(best, ExtScalar(Rational(xv / pe[i])));
    } else if (xv > 0) {
      return ExtScalar::infinity();
    }
  }
  // Tail: both pieces have settled signs, so |x_n| / e_n is a monotone
  // ratio of affine functions for n > length.
  int sx = x.slope() != 0 ? sgn(x.slope()) : sgn(x.intercept());
  Rational xs = sx < 0 ? Rational(-x.slope()) : x.slope();
  Rational xi = sx < 0 ? Rational(-x.intercept()) : x.intercept();
  const Rational& es = e.slope();
  const Rational& ei = e.intercept();
  if (es == 0 && ei == 0) {
    if (xs != 0 || xi != 0) return ExtScalar::infinity();
    return best;
  }
  Index first = length + 1;
  Rational n(static_cast<unsigned long>(first));
  best = max(best, ExtScalar(Rational((xs * n + xi) / (es * n + ei))));
  if (es > 0) {
    best = max(best, ExtScalar(Rational(xs / es)));
  } else if (xs > 0) {
    return ExtScalar::infinity();
  }
  return best;
}

}  // namespace detail

}  // namespace unlattice
