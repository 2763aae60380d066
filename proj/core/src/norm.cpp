#include "unlattice/norm.hpp"

#include <cmath>

#include "segments.hpp"
#include "sequence_ops.hpp"
#include "unlattice/error.hpp"

namespace unlattice {

NormSpec NormSpec::lp(const Rational& p) {
  if (p < 1) throw Error(ErrorCode::BadParams, "Lp requires p >= 1");
  if (p == 1) return l1();
  return {Kind::Lp, p, nullptr};
}

NormSpec NormSpec::unit_norm(Element e) {
  if (!is_positive(e)) throw Error(ErrorCode::BadParams, "unit norm needs a positive element");
  return {Kind::Unit, Rational(1), std::make_shared<const Element>(std::move(e))};
}

unsigned NormSpec::power() const {
  if (kind == Kind::Lp && is_integer(p)) return static_cast<unsigned>(p.get_num().get_ui());
  return 1;
}

bool NormSpec::exact() const { return kind != Kind::Lp || is_integer(p); }

std::string NormSpec::describe() const {
  switch (kind) {
    case Kind::L1: return "L1";
    case Kind::Lp: return "Lp(" + to_string(p) + ")";
    case Kind::Sup: return "sup";
    case Kind::Unit: return "unit";
    case Kind::Ell1: return "l1";
    case Kind::EllInf: return "linf";
    case Kind::SumL1: return "sumL1";
  }
  return "?";
}

bool NormValue::below(const Rational& eps) const {
  if (!exact) return approx < eps.get_d();
  if (powered.is_infinite()) return false;
  return powered.value() < pow(eps, power);
}

NormValue make_norm_value(ExtScalar powered, unsigned power) {
  NormValue v;
  v.power = power;
  double d = powered.to_double();
  v.approx = power == 1 ? d : std::pow(d, 1.0 / power);
  v.powered = std::move(powered);
  return v;
}

namespace {

NormValue approx_value(double powered_sum, double p) {
  NormValue v;
  v.exact = false;
  v.power = 1;
  v.approx = std::pow(powered_sum, 1.0 / p);
  v.powered = ExtScalar(0L);
  return v;
}

[[noreturn]] void mismatch(const NormSpec& spec, CarrierKind kind) {
  throw Error(ErrorCode::KindMismatch, "norm " + spec.describe() + " not defined on carrier " + to_string(kind));
}

NormValue segments_norm(const detail::Segments& s, const NormSpec& spec, CarrierKind kind) {
  switch (spec.kind) {
    case NormSpec::Kind::L1: return make_norm_value(detail::integral_abs(s), 1);
    case NormSpec::Kind::Lp:
      if (spec.exact()) return make_norm_value(detail::integral_abs_pow(s, spec.power()), spec.power());
      return approx_value(detail::integral_abs_pow_approx(s, spec.p.get_d()), spec.p.get_d());
    case NormSpec::Kind::Sup: return make_norm_value(detail::sup_abs(s), 1);
    case NormSpec::Kind::Unit: return make_norm_value(detail::ratio_sup(s, detail::to_segments(*spec.unit)), 1);
    default: mismatch(spec, kind);
  }
}

NormValue sequence_norm(const TailSeq& a, const NormSpec& spec) {
  switch (spec.kind) {
    case NormSpec::Kind::Ell1: return make_norm_value(detail::power_sum(a, 1), 1);
    case NormSpec::Kind::Lp:
      if (spec.exact()) return make_norm_value(detail::power_sum(a, spec.power()), spec.power());
      return approx_value(detail::power_sum_approx(a, spec.p.get_d()), spec.p.get_d());
    case NormSpec::Kind::EllInf:
    case NormSpec::Kind::Sup: return make_norm_value(detail::sup_abs(a), 1);
    case NormSpec::Kind::Unit: {
      const auto* e = std::get_if<TailSeq>(spec.unit.get());
      if (e == nullptr) mismatch(spec, CarrierKind::Sequence);
      return make_norm_value(detail::ratio_sup(a, *e), 1);
    }
    default: mismatch(spec, CarrierKind::Sequence);
  }
}

NormValue direct_sum_norm(const DirectSumElem& a, const NormSpec& spec) {
  switch (spec.kind) {
    case NormSpec::Kind::SumL1:
    case NormSpec::Kind::L1: {
      Rational total = 0;
      for (const auto& [id, f] : a.components()) total += detail::integral_abs(detail::to_segments(f));
      return make_norm_value(total, 1);
    }
    case NormSpec::Kind::Sup: {
      Rational m = 0;
      for (const auto& [id, f] : a.components()) m = std::max(m, detail::sup_abs(detail::to_segments(f)));
      return make_norm_value(m, 1);
    }
    default: mismatch(spec, CarrierKind::DirectSum);
  }
}

}  // namespace

NormValue norm(const Element& a, const NormSpec& spec) {
  switch (kind_of(a)) {
    case CarrierKind::Step:
    case CarrierKind::PiecewiseLinear: return segments_norm(detail::to_segments(a), spec, kind_of(a));
    case CarrierKind::Sequence: return sequence_norm(std::get<TailSeq>(a), spec);
    case CarrierKind::DirectSum: return direct_sum_norm(std::get<DirectSumElem>(a), spec);
  }
  mismatch(spec, kind_of(a));
}

NormValue truncated_norm(const Element& y, const Element& x, const NormSpec& spec) {
  auto function_like = [](const Element& e) {
    return kind_of(e) == CarrierKind::Step || kind_of(e) == CarrierKind::PiecewiseLinear;
  };
  if (function_like(y) && function_like(x)) {
    detail::Segments t = detail::combine(detail::absolute(detail::to_segments(y)), detail::to_segments(x), LatticeOp::Meet);
    return segments_norm(t, spec, kind_of(y));
  }
  const auto* xs = std::get_if<TailSeq>(&x);
  const auto* ys = std::get_if<TailSeq>(&y);
  if (xs && ys && xs->tail_kind() == TailSeq::TailKind::Zero) {
    // Only the coordinates where x is nonzero survive the truncation.
    std::vector<Rational> head;
    head.reserve(xs->prefix_length());
    for (Index i = 1; i <= xs->prefix_length(); ++i) {
      Rational a = abs((*ys)(i));
      const Rational& b = xs->prefix()[i - 1];
      head.push_back(a < b ? a : b);
    }
    return norm(TailSeq::zero_tail(std::move(head)), spec);
  }
  if (xs && ys && spec.kind == NormSpec::Kind::EllInf && xs->slope() == 0 && ys->slope() != 0) {
    // |y| grows past the constant tail c of x, so the tail contributes exactly sup = c
    // however far out the crossing lies.
    const Index len = std::max(xs->prefix_length(), ys->prefix_length());
    Rational best = xs->intercept();
    for (Index i = 1; i <= len; ++i) {
      Rational a = abs((*ys)(i));
      Rational b = (*xs)(i);
      Rational m = a < b ? a : b;
      if (best < m) best = m;
    }
    return make_norm_value(ExtScalar(best), 1);
  }
  return norm(meet(abs_val(y), x), spec);
}

}  // namespace unlattice
