#include "unlattice/element.hpp"

#include <algorithm>
#include <set>

#include "segments.hpp"
#include "sequence_ops.hpp"
#include "unlattice/error.hpp"

namespace unlattice {

// ---------------------------------------------------------------- Region

Region::Region(std::vector<Interval> pieces) : pieces_(std::move(pieces)) {
  std::sort(pieces_.begin(), pieces_.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const auto& p = pieces_[i];
    if (!(p.lo < p.hi)) throw Error(ErrorCode::BadRegion, "empty or reversed interval");
    if (p.lo < 0 || p.hi > 1) throw Error(ErrorCode::BadRegion, "interval outside [0,1]");
    if (i > 0 && pieces_[i - 1].hi > p.lo) throw Error(ErrorCode::BadRegion, "overlapping intervals");
  }
}

Rational Region::measure() const {
  Rational m = 0;
  for (const auto& p : pieces_) m += p.hi - p.lo;
  return m;
}

bool Region::contains(const Rational& t) const {
  return std::any_of(pieces_.begin(), pieces_.end(), [&](const Interval& p) { return p.lo <= t && t < p.hi; });
}

// ---------------------------------------------------------------- StepFn

StepFn::StepFn() : breakpoints_{Rational(0), Rational(1)}, values_{Rational(0)} {}

StepFn::StepFn(std::vector<Rational> breakpoints, std::vector<Rational> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.size() < 2 || values_.size() + 1 != breakpoints_.size()) {
    throw Error(ErrorCode::BadParams, "step function needs k+1 breakpoints for k values");
  }
  if (breakpoints_.front() != 0 || breakpoints_.back() != 1) {
    throw Error(ErrorCode::BadParams, "step function breakpoints must start at 0 and end at 1");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i - 1] < breakpoints_[i])) throw Error(ErrorCode::BadParams, "breakpoints not increasing");
  }
  canonicalize();
}

StepFn StepFn::constant(const Rational& c) { return StepFn({Rational(0), Rational(1)}, {c}); }

StepFn StepFn::indicator(const Rational& lo, const Rational& hi, const Rational& c) {
  if (!(0 <= lo && lo < hi && hi <= 1)) throw Error(ErrorCode::BadParams, "indicator interval outside [0,1]");
  std::vector<Rational> t{Rational(0)};
  std::vector<Rational> v;
  if (lo > 0) {
    t.push_back(lo);
    v.push_back(0);
  }
  v.push_back(c);
  t.push_back(hi);
  if (hi < 1) {
    v.push_back(0);
    t.push_back(1);
  }
  return StepFn(std::move(t), std::move(v));
}

Rational StepFn::operator()(const Rational& t) const { return detail::value_at(detail::to_segments(*this), t); }

void StepFn::canonicalize() {
  std::vector<Rational> t{breakpoints_.front()};
  std::vector<Rational> v{values_.front()};
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (values_[i] == v.back()) continue;
    t.push_back(breakpoints_[i]);
    v.push_back(values_[i]);
  }
  t.push_back(breakpoints_.back());
  breakpoints_ = std::move(t);
  values_ = std::move(v);
}

// ---------------------------------------------------------------- PLFn

PLFn::PLFn() : breakpoints_{Rational(0), Rational(1)}, node_values_{Rational(0), Rational(0)} {}

PLFn::PLFn(std::vector<Rational> breakpoints, std::vector<Rational> node_values)
    : breakpoints_(std::move(breakpoints)), node_values_(std::move(node_values)) {
  if (breakpoints_.size() < 2 || node_values_.size() != breakpoints_.size()) {
    throw Error(ErrorCode::BadParams, "piecewise-linear function needs one value per node");
  }
  if (breakpoints_.front() != 0 || breakpoints_.back() != 1) {
    throw Error(ErrorCode::BadParams, "piecewise-linear nodes must start at 0 and end at 1");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i - 1] < breakpoints_[i])) throw Error(ErrorCode::BadParams, "nodes not increasing");
  }
  canonicalize();
}

PLFn PLFn::constant(const Rational& c) { return PLFn({Rational(0), Rational(1)}, {c, c}); }

PLFn PLFn::tent(const Rational& lo, const Rational& hi, const Rational& peak) {
  if (!(0 <= lo && lo < hi && hi <= 1)) throw Error(ErrorCode::BadParams, "tent support outside [0,1]");
  Rational mid = (lo + hi) / 2;
  std::vector<Rational> t;
  std::vector<Rational> w;
  if (lo > 0) {
    t.push_back(0);
    w.push_back(0);
  }
  t.push_back(lo);
  w.push_back(0);
  t.push_back(mid);
  w.push_back(peak);
  t.push_back(hi);
  w.push_back(0);
  if (hi < 1) {
    t.push_back(1);
    w.push_back(0);
  }
  return PLFn(std::move(t), std::move(w));
}

Rational PLFn::operator()(const Rational& t) const { return detail::value_at(detail::to_segments(*this), t); }

void PLFn::canonicalize() {
  std::vector<Rational> t{breakpoints_.front()};
  std::vector<Rational> w{node_values_.front()};
  for (std::size_t i = 1; i + 1 < breakpoints_.size(); ++i) {
    // Drop node i when it lies on the segment from the last kept node to node i+1.
    const Rational& s0 = t.back();
    const Rational& w0 = w.back();
    Rational lhs = (node_values_[i] - w0) * (breakpoints_[i + 1] - s0);
    Rational rhs = (node_values_[i + 1] - w0) * (breakpoints_[i] - s0);
    if (lhs == rhs) continue;
    t.push_back(breakpoints_[i]);
    w.push_back(node_values_[i]);
  }
  t.push_back(breakpoints_.back());
  w.push_back(node_values_.back());
  breakpoints_ = std::move(t);
  node_values_ = std::move(w);
}

// ---------------------------------------------------------------- DirectSumElem

DirectSumElem::DirectSumElem(std::map<ComponentId, StepFn> components) {
  for (auto& [id, f] : components) {
    if (!f.is_zero()) components_.emplace(id, std::move(f));
  }
}

StepFn DirectSumElem::component(ComponentId id) const {
  auto it = components_.find(id);
  return it == components_.end() ? StepFn() : it->second;
}

// ---------------------------------------------------------------- dispatch

const char* to_string(CarrierKind kind) {
  switch (kind) {
    case CarrierKind::Step: return "step";
    case CarrierKind::PiecewiseLinear: return "pl";
    case CarrierKind::Sequence: return "seq";
    case CarrierKind::DirectSum: return "sum";
  }
  return "?";
}

CarrierKind kind_of(const Element& e) {
  switch (e.index()) {
    case 0: return CarrierKind::Step;
    case 1: return CarrierKind::PiecewiseLinear;
    case 2: return CarrierKind::Sequence;
    default: return CarrierKind::DirectSum;
  }
}

bool is_zero(const Element& e) {
  return std::visit([](const auto& x) { return x.is_zero(); }, e);
}

Element zero_of(CarrierKind kind) {
  switch (kind) {
    case CarrierKind::Step: return StepFn();
    case CarrierKind::PiecewiseLinear: return PLFn();
    case CarrierKind::Sequence: return TailSeq();
    case CarrierKind::DirectSum: return DirectSumElem();
  }
  return StepFn();
}

namespace {

void require_same_kind(const Element& a, const Element& b) {
  if (a.index() != b.index()) {
    throw Error(ErrorCode::KindMismatch,
                std::string(to_string(kind_of(a))) + " vs " + to_string(kind_of(b)));
  }
}

std::set<DirectSumElem::ComponentId> component_union(const DirectSumElem& a, const DirectSumElem& b) {
  std::set<DirectSumElem::ComponentId> ids;
  for (const auto& [id, f] : a.components()) ids.insert(id);
  for (const auto& [id, f] : b.components()) ids.insert(id);
  return ids;
}

}  // namespace

Element combine(const Element& a, const Element& b, LatticeOp op) {
  require_same_kind(a, b);
  switch (kind_of(a)) {
    case CarrierKind::Step:
      return detail::to_step(detail::combine(detail::to_segments(std::get<StepFn>(a)),
                                             detail::to_segments(std::get<StepFn>(b)), op));
    case CarrierKind::PiecewiseLinear:
      return detail::to_pl(detail::combine(detail::to_segments(std::get<PLFn>(a)),
                                           detail::to_segments(std::get<PLFn>(b)), op));
    case CarrierKind::Sequence:
      return detail::combine(std::get<TailSeq>(a), std::get<TailSeq>(b), op);
    case CarrierKind::DirectSum: {
      const auto& x = std::get<DirectSumElem>(a);
      const auto& y = std::get<DirectSumElem>(b);
      std::map<DirectSumElem::ComponentId, StepFn> out;
      for (auto id : component_union(x, y)) {
        out.emplace(id, std::get<StepFn>(combine(Element(x.component(id)), Element(y.component(id)), op)));
      }
      return DirectSumElem(std::move(out));
    }
  }
  return a;
}

Element meet(const Element& a, const Element& b) { return combine(a, b, LatticeOp::Meet); }
Element join(const Element& a, const Element& b) { return combine(a, b, LatticeOp::Join); }
Element operator+(const Element& a, const Element& b) { return combine(a, b, LatticeOp::Sum); }
Element operator-(const Element& a, const Element& b) { return combine(a, b, LatticeOp::Diff); }

Element abs_val(const Element& a) {
  switch (kind_of(a)) {
    case CarrierKind::Step: return detail::to_step(detail::absolute(detail::to_segments(std::get<StepFn>(a))));
    case CarrierKind::PiecewiseLinear: return detail::to_pl(detail::absolute(detail::to_segments(std::get<PLFn>(a))));
    case CarrierKind::Sequence: return detail::absolute(std::get<TailSeq>(a));
    case CarrierKind::DirectSum: {
      std::map<DirectSumElem::ComponentId, StepFn> out;
      for (const auto& [id, f] : std::get<DirectSumElem>(a).components()) {
        out.emplace(id, std::get<StepFn>(abs_val(Element(f))));
      }
      return DirectSumElem(std::move(out));
    }
  }
  return a;
}

Element scale(const Rational& alpha, const Element& a) {
  switch (kind_of(a)) {
    case CarrierKind::Step: return detail::to_step(detail::scaled(detail::to_segments(std::get<StepFn>(a)), alpha));
    case CarrierKind::PiecewiseLinear: return detail::to_pl(detail::scaled(detail::to_segments(std::get<PLFn>(a)), alpha));
    case CarrierKind::Sequence: return detail::scaled(std::get<TailSeq>(a), alpha);
    case CarrierKind::DirectSum: {
      std::map<DirectSumElem::ComponentId, StepFn> out;
      for (const auto& [id, f] : std::get<DirectSumElem>(a).components()) {
        out.emplace(id, std::get<StepFn>(scale(alpha, Element(f))));
      }
      return DirectSumElem(std::move(out));
    }
  }
  return a;
}

bool is_positive(const Element& a) {
  switch (kind_of(a)) {
    case CarrierKind::Step:
    case CarrierKind::PiecewiseLinear: return detail::nonnegative(detail::to_segments(a));
    case CarrierKind::Sequence: return detail::nonnegative(std::get<TailSeq>(a));
    case CarrierKind::DirectSum: {
      const auto& comps = std::get<DirectSumElem>(a).components();
      return std::all_of(comps.begin(), comps.end(), [](const auto& kv) { return is_positive(Element(kv.second)); });
    }
  }
  return false;
}

bool leq(const Element& a, const Element& b) { return is_positive(b - a); }

Rational level_measure(const Element& f, const Rational& eps) {
  Rational m = 0;
  for (const auto& iv : detail::superlevel(detail::to_segments(f), eps)) m += iv.hi - iv.lo;
  return m;
}

Rational level_measure(const Element& f, const Rational& eps, const Region& region) {
  Rational m = 0;
  for (const auto& iv : detail::superlevel(detail::to_segments(f), eps)) {
    for (const auto& r : region.pieces()) {
      Rational lo = iv.lo > r.lo ? iv.lo : r.lo;
      Rational hi = iv.hi < r.hi ? iv.hi : r.hi;
      if (lo < hi) m += hi - lo;
    }
  }
  return m;
}

Region superlevel_set(const Element& f, const Rational& eps) {
  return Region(detail::superlevel(detail::to_segments(f), eps));
}

StepFn restrict(const StepFn& f, const Region& region) {
  std::vector<Rational> cuts;
  for (const auto& p : region.pieces()) {
    cuts.push_back(p.lo);
    cuts.push_back(p.hi);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  detail::Segments segs = detail::refine(detail::to_segments(f), cuts);
  for (auto& s : segs) {
    if (!region.contains(s.a)) {
      s.wa = 0;
      s.wb = 0;
    }
  }
  return detail::to_step(segs);
}

}  // namespace unlattice
