#include "unlattice/gallery.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "unlattice/error.hpp"

namespace unlattice {

namespace {

Rational inv(Index n) { return Rational(1) / Rational(static_cast<unsigned long>(n)); }
Rational as_rational(Index n) { return Rational(static_cast<unsigned long>(n)); }

Index identity(Index k) { return k; }

/// min(1, sup x)^p for L0 pairs with an integer exponent: bounds (|f| ^ x)^p when |f| <= 1.
std::optional<Rational> l0_scale(const SpacePair& pair, const Element& x) {
  if (pair.ambient != Ambient::L0UnitInterval || !pair.norm.exact()) return std::nullopt;
  Rational m = norm(x, NormSpec::sup()).value().value();
  if (m > 1) m = 1;
  return pow(m, pair.norm.power());
}

/// Length L of the prefix when x is a sequence vanishing after L.
std::optional<Index> zero_tail_length(const Element& x) {
  const auto* s = std::get_if<TailSeq>(&x);
  if (s == nullptr || s->tail_kind() != TailSeq::TailKind::Zero) return std::nullopt;
  return s->prefix_length();
}

bool is_sup_norm(const SpacePair& pair) {
  return pair.norm.kind == NormSpec::Kind::Sup || pair.norm.kind == NormSpec::Kind::EllInf;
}

bool is_ones_seq(const Element& e) { return e == Element(TailSeq::ones()); }
bool is_one_fn(const Element& e) {
  return e == Element(StepFn::constant(Rational(1))) || e == Element(PLFn::constant(Rational(1)));
}

ClosedForm always(Element witness, Rational eps, std::string why) {
  return ClosedForm{std::move(witness), eps, eps, identity, std::move(why)};
}

Index ceil_index(const Rational& r) { return ceil_rational(r).get_num().get_ui(); }
Index floor_index(const Rational& r) { return floor_rational(r).get_num().get_ui(); }

/// Last k with 2^-k > t; for t > 0 the dyadic block [0, 2^-k) misses t afterwards.
Index dyadic_last_cover(const Rational& t) {
  Index k = 0;
  while (pow2(-static_cast<std::int64_t>(k) - 1) > t) ++k;
  return k;
}

Index typewriter_pattern(const Rational& t, Index k) {
  Index base = Index{1} << k;
  if (t >= 1) return 2 * base - 1;  // t = 1 reads the last block's value
  return base + floor_index(t * as_rational(base));
}

Family unit_vectors() {
  Family f;
  f.name = "unit_vectors";
  f.kind = CarrierKind::Sequence;
  f.eval = [](Index n) { return Element(TailSeq::unit(n)); };
  f.un_cert = [](const SpacePair&, const Element& x) -> std::optional<RateCert> {
    if (auto len = zero_tail_length(x)) return RateCert::eventually_zero_after(*len);
    return std::nullopt;
  };
  f.un_refute = [](const SpacePair& pair) -> std::optional<ClosedForm> {
    if (pair.ideal != IdealKind::EllInf) return std::nullopt;
    return always(TailSeq::ones(), Rational(1), "|e_n| ^ 1 = e_n has sup norm 1 for every n");
  };
  f.uniform_refute = [](const Element& e) -> std::optional<ClosedForm> {
    if (!is_ones_seq(e)) return std::nullopt;
    return always(e, Rational(1), "||e_n||_1 = 1 for every n");
  };
  f.pointwise_cert = [](const Probe& p) -> std::optional<RateCert> {
    if (const auto* i = std::get_if<Index>(&p)) return RateCert::eventually_zero_after(*i);
    return std::nullopt;
  };
  return f;
}

Family scaled_ramp() {
  Family f;
  f.name = "scaled_ramp";
  f.kind = CarrierKind::Sequence;
  f.eval = [](Index n) { return Element(TailSeq::affine_tail({}, inv(n), Rational(0))); };
  f.un_cert = [](const SpacePair& pair, const Element& x) -> std::optional<RateCert> {
    auto len = zero_tail_length(x);
    if (!len || !pair.norm.exact()) return std::nullopt;
    // |z/n| ^ x <= (1, 2, ..., L, 0, ...) / n
    std::vector<Rational> head;
    for (Index i = 1; i <= *len; ++i) head.push_back(as_rational(i));
    NormValue c = norm(TailSeq::zero_tail(std::move(head)), pair.norm);
    return RateCert::power_law(c.powered.value(), pair.norm.power());
  };
  f.un_refute = [](const SpacePair& pair) -> std::optional<ClosedForm> {
    if (pair.ideal != IdealKind::EllInf) return std::nullopt;
    return always(TailSeq::ones(), Rational(1), "min(i/n, 1) = 1 for i >= n, so the gauge at 1 is 1 for every n");
  };
  f.uniform_refute = [](const Element& e) -> std::optional<ClosedForm> {
    if (!is_ones_seq(e)) return std::nullopt;
    return always(e, Rational(1), "z/n is unbounded, so ||z/n||_1 is infinite for every n");
  };
  f.pointwise_cert = [](const Probe& p) -> std::optional<RateCert> {
    if (const auto* i = std::get_if<Index>(&p)) return RateCert::power_law(as_rational(*i), 1);
    return std::nullopt;
  };
  return f;
}

Family scaled_unit() {
  Family f;
  f.name = "scaled_unit";
  f.kind = CarrierKind::Sequence;
  f.eval = [](Index n) { return Element(TailSeq::const_tail({}, inv(n))); };
  f.un_cert = [](const SpacePair& pair, const Element& x) -> std::optional<RateCert> {
    if (is_sup_norm(pair)) return RateCert::power_law(Rational(1), 1);
    auto len = zero_tail_length(x);
    if (!len || !pair.norm.exact()) return std::nullopt;
    return RateCert::power_law(as_rational(*len), pair.norm.power());
  };
  f.uniform_cert = [](const Element& e) -> std::optional<RateCert> {
    if (!is_ones_seq(e)) return std::nullopt;
    return RateCert::power_law(Rational(1), 1);
  };
  f.pointwise_cert = [](const Probe&) -> std::optional<RateCert> { return RateCert::power_law(Rational(1), 1); };
  return f;
}

TailSeq block_indicator(Index n) {
  Index lo = Index{1} << (n - 1);
  std::vector<Rational> head(2 * lo - 1, Rational(0));
  for (Index i = lo; i < 2 * lo; ++i) head[i - 1] = 1;
  return TailSeq::zero_tail(std::move(head));
}

Family disjoint_blocks() {
  Family f;
  f.name = "disjoint_blocks";
  f.kind = CarrierKind::Sequence;
  f.eval_limit = 14;
  f.eval = [](Index n) { return Element(block_indicator(n)); };
  f.un_cert = [](const SpacePair&, const Element& x) -> std::optional<RateCert> {
    auto len = zero_tail_length(x);
    if (!len) return std::nullopt;
    return RateCert::eventually_zero_after(*len == 0 ? 0 : floor_log2(*len) + 1);
  };
  f.un_refute = [](const SpacePair& pair) -> std::optional<ClosedForm> {
    if (pair.ideal != IdealKind::EllInf) return std::nullopt;
    return always(TailSeq::ones(), Rational(1), "each block indicator has sup norm 1");
  };
  f.uniform_refute = [](const Element& e) -> std::optional<ClosedForm> {
    if (!is_ones_seq(e)) return std::nullopt;
    return always(e, Rational(1), "each block indicator has ||.||_1 = 1");
  };
  f.pointwise_cert = [](const Probe& p) -> std::optional<RateCert> {
    if (const auto* i = std::get_if<Index>(&p)) return RateCert::eventually_zero_after(floor_log2(*i) + 1);
    return std::nullopt;
  };
  return f;
}

Family prefix_indicators() {
  Family f;
  f.name = "prefix_indicators";
  f.kind = CarrierKind::Sequence;
  f.eval = [](Index n) { return Element(TailSeq::zero_tail(std::vector<Rational>(n, Rational(1)))); };
  f.increasing = true;
  f.supremum = TailSeq::ones();
  f.upper_bound = TailSeq::ones();
  f.limit = TailSeq::ones();
  f.un_refute = [](const SpacePair& pair) -> std::optional<ClosedForm> {
    if (pair.ambient != Ambient::SequencesRN) return std::nullopt;
    return always(TailSeq::unit(1), Rational(1), "the first coordinate equals 1 for every n");
  };
  f.pointwise_refute = [](const Probe& p) -> std::optional<ClosedForm> {
    const auto* i = std::get_if<Index>(&p);
    if (i == nullptr) return std::nullopt;
    Index shift = *i - 1;
    return ClosedForm{std::nullopt, Rational(1), Rational(1), [shift](Index k) { return k + shift; },
                      "coordinate i equals 1 once n >= i"};
  };

  auto r = std::make_shared<Family>();
  r->name = "prefix_indicators-residual";
  r->kind = CarrierKind::Sequence;
  r->eval = [](Index n) { return Element(TailSeq::const_tail(std::vector<Rational>(n, Rational(0)), Rational(-1))); };
  r->un_cert = [](const SpacePair&, const Element& x) -> std::optional<RateCert> {
    if (auto len = zero_tail_length(x)) return RateCert::eventually_zero_after(*len);
    return std::nullopt;
  };
  r->un_refute = [](const SpacePair& pair) -> std::optional<ClosedForm> {
    if (pair.ideal != IdealKind::EllInf) return std::nullopt;
    return always(TailSeq::ones(), Rational(1), "the residual is -1 on every coordinate past n");
  };
  r->uniform_refute = [](const Element& e) -> std::optional<ClosedForm> {
    if (!is_ones_seq(e)) return std::nullopt;
    return always(e, Rational(1), "the residual has ||.||_1 = 1");
  };
  r->pointwise_cert = [](const Probe& p) -> std::optional<RateCert> {
    if (const auto* i = std::get_if<Index>(&p)) return RateCert::eventually_zero_after(*i);
    return std::nullopt;
  };
  f.residual = r;
  return f;
}

void attach_typewriter_certs(Family& f) {
  f.un_cert = [](const SpacePair& pair, const Element& x) -> std::optional<RateCert> {
    if (auto s = l0_scale(pair, x)) return RateCert::dyadic_log(*s);
    return std::nullopt;
  };
  f.measure_cert = RateCert::dyadic_log(Rational(1));
  f.uniform_refute = [](const Element& e) -> std::optional<ClosedForm> {
    if (!is_one_fn(e)) return std::nullopt;
    return always(e, Rational(1), "every block indicator has ||.||_1 = 1");
  };
}

Family typewriter() {
  Family f;
  f.name = "typewriter";
  f.kind = CarrierKind::Step;
  f.eval = [](Index n) { return Element(typewriter_element(n)); };
  f.upper_bound = StepFn::constant(Rational(1));
  attach_typewriter_certs(f);
  f.ae_recurrence = AeRecurrence{Region::unit(), ratio(1, 2), typewriter_pattern,
                                 "every t in [0,1) lies in one block of each dyadic generation, index 2^k + floor(t 2^k)"};
  f.pointwise_refute = [](const Probe& p) -> std::optional<ClosedForm> {
    const auto* t = std::get_if<Rational>(&p);
    if (t == nullptr) return std::nullopt;
    Rational at = *t;
    return ClosedForm{std::nullopt, ratio(1, 2), ratio(1, 2), [at](Index k) { return typewriter_pattern(at, k); },
                      "value 1 recurs once per dyadic generation"};
  };
  return f;
}

Family typewriter_dyadic() {
  Family f;
  f.name = "typewriter_dyadic";
  f.kind = CarrierKind::Step;
  f.eval = [](Index k) { return Element(StepFn::indicator(Rational(0), pow2(-static_cast<std::int64_t>(k)))); };
  f.upper_bound = StepFn::constant(Rational(1));
  f.un_cert = [](const SpacePair& pair, const Element& x) -> std::optional<RateCert> {
    if (auto s = l0_scale(pair, x)) return RateCert::power_law(*s, 1);  // 2^-k <= 1/k
    return std::nullopt;
  };
  f.measure_cert = RateCert::power_law(Rational(1), 1);
  f.ae_decay = AeDecay{{Rational(0)},
                       [](const Rational& t) { return RateCert::eventually_zero_after(dyadic_last_cover(t)); },
                       "supports [0, 2^-k) shrink to {0}"};
  f.pointwise_cert = [](const Probe& p) -> std::optional<RateCert> {
    const auto* t = std::get_if<Rational>(&p);
    if (t == nullptr || *t == 0) return std::nullopt;
    return RateCert::eventually_zero_after(dyadic_last_cover(*t));
  };
  f.pointwise_refute = [](const Probe& p) -> std::optional<ClosedForm> {
    const auto* t = std::get_if<Rational>(&p);
    if (t == nullptr || *t != 0) return std::nullopt;
    return ClosedForm{std::nullopt, ratio(1, 2), ratio(1, 2), identity, "every support contains 0"};
  };
  f.uniform_refute = [](const Element& e) -> std::optional<ClosedForm> {
    if (!is_one_fn(e)) return std::nullopt;
    return always(e, Rational(1), "every indicator has ||.||_1 = 1");
  };
  return f;
}

Family moving_bump() {
  Family f;
  f.name = "moving_bump";
  f.kind = CarrierKind::PiecewiseLinear;
  f.eval = [](Index n) { return Element(moving_bump_element(n)); };
  f.upper_bound = PLFn::constant(Rational(1));
  f.un_cert = [](const SpacePair& pair, const Element& x) -> std::optional<RateCert> {
    if (auto s = l0_scale(pair, x)) return RateCert::power_law(*s, 2);  // support length 1/(n(n+1))
    if (pair.ideal != IdealKind::VanishAtZero) return std::nullopt;
    const auto& g = std::get<PLFn>(x);
    const auto& s = g.breakpoints();
    const auto& w = g.node_values();
    // x = 0 on [0, a]: the bump leaves the support of x once 1/n <= a.
    std::size_t i = 0;
    while (i + 1 < w.size() && w[i + 1] == 0) ++i;
    if (i > 0) return RateCert::eventually_zero_after(ceil_index(1 / s[i]) - 1);
    // Otherwise x(t) <= K t with K the largest node slope from the origin.
    Rational k = 0;
    for (std::size_t j = 1; j < s.size(); ++j) k = std::max(k, Rational(w[j] / s[j]));
    return RateCert::power_law(k, 1);
  };
  f.un_refute = [](const SpacePair& pair) -> std::optional<ClosedForm> {
    if (pair.ideal != IdealKind::ContinuousAll) return std::nullopt;
    return always(PLFn::constant(Rational(1)), Rational(1), "the bump peaks at 1 under the constant 1");
  };
  f.uniform_refute = [](const Element& e) -> std::optional<ClosedForm> {
    if (!is_one_fn(e)) return std::nullopt;
    return always(e, Rational(1), "sup norm of every bump is 1");
  };
  f.measure_cert = RateCert::power_law(Rational(1), 2);
  auto at_point = [](const Rational& t) {
    return RateCert::eventually_zero_after(t == 0 ? 0 : ceil_index(1 / t));
  };
  f.ae_decay = AeDecay{{}, at_point, "the bump at t > 0 vanishes once 1/n < t; at 0 it is always 0"};
  f.pointwise_cert = [at_point](const Probe& p) -> std::optional<RateCert> {
    const auto* t = std::get_if<Rational>(&p);
    if (t == nullptr) return std::nullopt;
    return at_point(*t);
  };
  return f;
}

Family constant_family(std::string name, StepFn value) {
  Family f;
  f.name = std::move(name);
  f.kind = CarrierKind::Step;
  f.constant = true;
  f.eval = [value](Index) { return Element(value); };
  f.upper_bound = value;
  return f;
}

Family constant_one() {
  Family f = constant_family("constant_one", StepFn::constant(Rational(1)));
  f.measure_refute = ClosedForm{std::nullopt, ratio(1, 2), Rational(1), identity, "mu{1 > 1/2} = 1 for every n"};
  return f;
}

StepFn rising_element(Index n) {
  if (n == 1) return StepFn::constant(Rational(0));
  return StepFn::indicator(Rational(0), 1 - inv(n));
}

Family rising() {
  Family f;
  f.name = "rising";
  f.kind = CarrierKind::Step;
  f.eval = [](Index n) { return Element(rising_element(n)); };
  f.increasing = true;
  f.supremum = StepFn::constant(Rational(1));
  f.upper_bound = StepFn::constant(Rational(1));
  f.limit = StepFn::constant(Rational(1));
  auto from_two = [](Index k) { return k + 1; };
  f.un_refute = [from_two](const SpacePair& pair) -> std::optional<ClosedForm> {
    if (pair.ambient != Ambient::L0UnitInterval || !pair.unit) return std::nullopt;
    return ClosedForm{pair.unit->element, ratio(1, 2), ratio(1, 2), from_two,
                      "for n >= 2 the indicator covers [0, 1/2), so the gauge at the unit is >= 1/2"};
  };
  f.measure_refute = ClosedForm{std::nullopt, ratio(1, 2), ratio(1, 2), from_two, "mu{f_n > 1/2} = 1 - 1/n >= 1/2"};

  auto r = std::make_shared<Family>();
  r->name = "rising-residual";
  r->kind = CarrierKind::Step;
  r->eval = [](Index n) { return Element(rising_element(n)) - Element(StepFn::constant(Rational(1))); };
  r->un_cert = [](const SpacePair& pair, const Element& x) -> std::optional<RateCert> {
    if (auto s = l0_scale(pair, x)) return RateCert::power_law(*s, 1);
    return std::nullopt;
  };
  r->measure_cert = RateCert::power_law(Rational(1), 1);
  r->ae_decay = AeDecay{{Rational(1)},
                        [](const Rational& t) { return RateCert::eventually_zero_after(floor_index(1 / (1 - t))); },
                        "the residual at t < 1 vanishes once 1 - 1/n > t"};
  f.residual = r;
  return f;
}

Family gamma_family(const FamilyParams& params) {
  if (params.gamma_k == 0) throw Error(ErrorCode::BadParams, "gamma_family needs K >= 1");
  std::vector<std::map<Index, Index>> position;  // component -> (index n -> k)
  Index last = 0;
  for (const auto& tuple : params.gamma) {
    std::map<Index, Index> pos;
    Index prev = 0, k = 0;
    for (Index n : tuple) {
      if (n <= prev) throw Error(ErrorCode::BadParams, "gamma tuples must be strictly increasing positive integers");
      prev = n;
      if (n > params.gamma_k) break;
      pos[n] = ++k;
      last = std::max(last, n);
    }
    position.push_back(std::move(pos));
  }
  Family f;
  f.name = "gamma_family";
  f.kind = CarrierKind::DirectSum;
  f.eval = [position](Index n) {
    std::map<DirectSumElem::ComponentId, StepFn> comps;
    for (std::size_t c = 0; c < position.size(); ++c) {
      auto it = position[c].find(n);
      if (it != position[c].end()) comps.emplace(static_cast<DirectSumElem::ComponentId>(c), typewriter_element(it->second));
    }
    return Element(DirectSumElem(std::move(comps)));
  };
  f.un_cert = [last](const SpacePair&, const Element&) -> std::optional<RateCert> {
    return RateCert::eventually_zero_after(last);
  };
  return f;
}

}  // namespace

std::vector<std::vector<Index>> FamilyParams::default_gamma() {
  constexpr Index kMax = 64;
  auto build = [](auto pred) {
    std::vector<Index> out;
    for (Index n = 1; n <= kMax; ++n) {
      if (pred(n)) out.push_back(n);
    }
    return out;
  };
  return {
      build([](Index) { return true; }),
      build([](Index n) { return n % 2 == 0; }),
      build([](Index n) { return n > 1 && (n & (n - 1)) == 0; }),
      build([](Index n) { return n % 2 == 1; }),
      build([](Index n) {
        Index r = 1;
        while (r * r < n) ++r;
        return r * r == n;
      }),
      build([](Index n) { return n >= 3; }),
      build([](Index n) { return n % 3 == 0; }),
      build([](Index n) { return n % 5 == 0; }),
  };
}

StepFn typewriter_element(Index n) {
  if (n == 0) throw Error(ErrorCode::BadParams, "typewriter index starts at 1");
  unsigned j = floor_log2(n);
  Index i = n - (Index{1} << j);
  Rational width = pow2(-static_cast<std::int64_t>(j));
  return StepFn::indicator(as_rational(i) * width, as_rational(i + 1) * width);
}

PLFn moving_bump_element(Index n) {
  if (n == 0) throw Error(ErrorCode::BadParams, "moving bump index starts at 1");
  return PLFn::tent(inv(n + 1), inv(n));
}

Family typewriter_subsequence(std::vector<Index> positions, std::string name) {
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] == 0 || (i > 0 && positions[i] <= positions[i - 1])) {
      throw Error(ErrorCode::BadParams, "subsequence positions must be strictly increasing and positive");
    }
  }
  Family f;
  f.name = std::move(name);
  f.kind = CarrierKind::Step;
  f.eval_limit = positions.size();
  f.eval = [positions](Index k) { return Element(typewriter_element(positions[k - 1])); };
  f.upper_bound = StepFn::constant(Rational(1));
  attach_typewriter_certs(f);  // positions[k-1] >= k keeps the dyadic bound
  bool full = true, dyadic = true;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    full = full && positions[i] == i + 1;
    dyadic = dyadic && (positions[i] & (positions[i] - 1)) == 0;
  }
  if (full) {
    f.ae_recurrence = AeRecurrence{Region::unit(), ratio(1, 2), typewriter_pattern,
                                   "the full typewriter order: each t recurs once per dyadic generation"};
  } else if (dyadic) {
    std::vector<Index> levels;
    for (Index p : positions) levels.push_back(floor_log2(p));
    f.ae_decay = AeDecay{{Rational(0)},
                         [levels](const Rational& t) {
                           Index cover = 0;
                           while (cover < levels.size() && pow2(-static_cast<std::int64_t>(levels[cover])) > t) ++cover;
                           return RateCert::eventually_zero_after(cover);
                         },
                         "positions 2^j pick blocks [0, 2^-j), which shrink to {0}"};
  }
  return f;
}

Family family(std::string_view name, const FamilyParams& params) {
  if (name == "unit_vectors") return unit_vectors();
  if (name == "scaled_ramp") return scaled_ramp();
  if (name == "scaled_unit") return scaled_unit();
  if (name == "disjoint_blocks") return disjoint_blocks();
  if (name == "prefix_indicators") return prefix_indicators();
  if (name == "typewriter") return typewriter();
  if (name == "typewriter_dyadic") return typewriter_dyadic();
  if (name == "moving_bump") return moving_bump();
  if (name == "rising") return rising();
  if (name == "constant_one") return constant_one();
  if (name == "zero") return constant_family("zero", StepFn::constant(Rational(0)));
  if (name == "off_band") return constant_family("off_band", StepFn::indicator(ratio(1, 2), Rational(1)));
  if (name == "gamma_family") return gamma_family(params);
  throw Error(ErrorCode::BadParams, "unknown family '" + std::string(name) + "'");
}

std::vector<GalleryEntry> gallery_entries() {
  return {
      {"unit_vectors", "-", "e_n in R^N; un-null for l1 and c0, not for l_inf", CarrierKind::Sequence},
      {"scaled_ramp", "-", "(1, 2, 3, ...)/n; pointwise null, never enters the l_inf unit neighbourhood",
       CarrierKind::Sequence},
      {"scaled_unit", "-", "(1/n) times the constant one sequence; uniformly null", CarrierKind::Sequence},
      {"disjoint_blocks", "-", "indicator of coordinates [2^(n-1), 2^n); disjoint, materialized up to n = 14",
       CarrierKind::Sequence},
      {"prefix_indicators", "-", "indicator of coordinates 1..n; increases to the constant one", CarrierKind::Sequence},
      {"typewriter", "-", "indicator of the dyadic block of n = 2^j + i; null in measure, not a.e.", CarrierKind::Step},
      {"typewriter_dyadic", "-", "typewriter along n = 2^k, i.e. [0, 2^-k); null a.e. off 0", CarrierKind::Step},
      {"moving_bump", "-", "tent of height 1 on [1/(n+1), 1/n]; null in the vanish-at-0 ideal, not in C[0,1]",
       CarrierKind::PiecewiseLinear},
      {"rising", "-", "indicator of [0, 1 - 1/n); increases to the constant one", CarrierKind::Step},
      {"constant_one", "-", "the constant one function", CarrierKind::Step},
      {"zero", "-", "the zero function", CarrierKind::Step},
      {"off_band", "-", "constant indicator of [1/2, 1), disjoint from the band [0, 1/2)", CarrierKind::Step},
      {"gamma_family", "gamma: list of increasing tuples; K: truncation (default 8 tuples, K = 64)",
       "component c at the k-th entry of tuple c carries typewriter(k)", CarrierKind::DirectSum},
  };
}

std::vector<ExpectedRow> expected_table() {
  using VC = VerdictClass;
  return {
      {"unit_vectors", "l1@RN", Mode::Un, VC::CertifiedNull},
      {"unit_vectors", "c0@RN", Mode::Un, VC::CertifiedNull},
      {"unit_vectors", "linf@RN", Mode::Un, VC::Refuted},
      {"unit_vectors", "linf@RN", Mode::Uniform, VC::Refuted},
      {"unit_vectors", "l1@RN", Mode::Pointwise, VC::CertifiedNull},
      {"scaled_ramp", "l1@RN", Mode::Un, VC::CertifiedNull},
      {"scaled_ramp", "linf@RN", Mode::Un, VC::Refuted},
      {"scaled_ramp", "linf@RN", Mode::Uniform, VC::Refuted},
      {"scaled_ramp", "l1@RN", Mode::Pointwise, VC::CertifiedNull},
      {"scaled_unit", "linf@RN", Mode::Un, VC::CertifiedNull},
      {"scaled_unit", "linf@RN", Mode::Uniform, VC::CertifiedNull},
      {"disjoint_blocks", "l1@RN", Mode::Un, VC::CertifiedNull},
      {"disjoint_blocks", "linf@RN", Mode::Un, VC::Refuted},
      {"prefix_indicators", "l1@RN", Mode::Un, VC::Refuted},
      {"moving_bump", "X0@C01", Mode::Un, VC::CertifiedNull},
      {"moving_bump", "C@C01", Mode::Un, VC::Refuted},
      {"moving_bump", "L1@L0", Mode::Un, VC::CertifiedNull},
      {"moving_bump", "L1@L0", Mode::Measure, VC::CertifiedNull},
      {"moving_bump", "L1@L0", Mode::Ae, VC::CertifiedNull},
      {"typewriter", "L1@L0", Mode::Un, VC::CertifiedNull},
      {"typewriter", "L2@L0", Mode::Un, VC::CertifiedNull},
      {"typewriter", "L1@L0", Mode::Measure, VC::CertifiedNull},
      {"typewriter", "L1@L0", Mode::Ae, VC::Refuted},
      {"typewriter", "L1@L0", Mode::Pointwise, VC::Refuted},
      {"typewriter_dyadic", "L1@L0", Mode::Un, VC::CertifiedNull},
      {"typewriter_dyadic", "L1@L0", Mode::Ae, VC::CertifiedNull},
      {"rising", "L1@L0", Mode::Un, VC::Refuted},
      {"rising", "L1@L0", Mode::Measure, VC::Refuted},
      {"constant_one", "L1@L0", Mode::Un, VC::Refuted},
      {"constant_one", "L1@L0", Mode::Measure, VC::Refuted},
      {"constant_one", "L1@L0", Mode::Ae, VC::Refuted},
      {"zero", "L1@L0", Mode::Un, VC::CertifiedNull},
      {"zero", "L1@L0", Mode::Ae, VC::CertifiedNull},
      {"off_band", "bandA(1)@L0", Mode::Un, VC::CertifiedNull},
      {"off_band", "L1@L0", Mode::Un, VC::Refuted},
      {"gamma_family", "suml1@gamma", Mode::Un, VC::CertifiedNull},
  };
}

}  // namespace unlattice
