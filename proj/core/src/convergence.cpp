#include "unlattice/convergence.hpp"

#include <algorithm>
#include <set>

#include "unlattice/error.hpp"
#include "unlattice/serialize.hpp"

namespace unlattice {

const char* to_string(Mode mode) {
  switch (mode) {
    case Mode::Un: return "un";
    case Mode::Pointwise: return "pointwise";
    case Mode::Measure: return "measure";
    case Mode::Ae: return "ae";
    case Mode::Uniform: return "uniform";
  }
  return "?";
}

Mode parse_mode(std::string_view text) {
  for (Mode m : {Mode::Un, Mode::Pointwise, Mode::Measure, Mode::Ae, Mode::Uniform}) {
    if (text == to_string(m)) return m;
  }
  throw Error(ErrorCode::BadParams, "unknown mode '" + std::string(text) + "'");
}

const char* to_string(VerdictClass cls) {
  switch (cls) {
    case VerdictClass::CertifiedNull: return "CertifiedNull";
    case VerdictClass::EmpiricallyNull: return "EmpiricallyNull";
    case VerdictClass::Refuted: return "Refuted";
    case VerdictClass::Inconclusive: return "Inconclusive";
  }
  return "?";
}

const char* to_string(Evidence evidence) {
  return evidence == Evidence::ClosedForm ? "ClosedForm" : "SampledIndices";
}

Outcome outcome(const Verdict& v) {
  if (v.is_null()) return Outcome::Null;
  return v.cls == VerdictClass::Refuted ? Outcome::Refuted : Outcome::Inconclusive;
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Null: return "null";
    case Outcome::Refuted: return "refuted";
    case Outcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::vector<Rational> CheckConfig::default_eps_grid() {
  std::vector<Rational> grid;
  for (int k = 1; k <= 20; ++k) grid.push_back(pow2(-k));
  return grid;
}

std::vector<Index> sample_indices(Index horizon) {
  std::set<Index> out;
  for (Index n = 1; n <= std::min<Index>(horizon, 256); ++n) out.insert(n);
  Index stride = (horizon + 255) / 256;
  for (Index n = stride; n <= horizon; n += stride) out.insert(n);
  if (horizon >= 1) out.insert(horizon);
  return {out.begin(), out.end()};
}

NormValue gauge(const Element& y, const Element& x, const SpacePair& pair) {
  if (!pair.accepts(kind_of(y))) throw Error(ErrorCode::KindMismatch, "y is not in the ambient lattice of " + pair.id);
  if (!is_positive(x) || !pair.in_ideal(x)) throw Error(ErrorCode::NotInIdeal, "test vector is not in X_+ for " + pair.id);
  return truncated_norm(y, x, pair.norm);
}

bool in_un_neighborhood(const Element& y, const Rational& eps, const Element& x, const SpacePair& pair) {
  if (eps <= 0) throw Error(ErrorCode::BadParams, "neighborhood radius must be positive");
  return gauge(y, x, pair).below(eps);
}

NormValue un_metric(const Element& y1, const Element& y2, const Element& u, const SpacePair& pair) {
  if (!pair.unit || !(pair.unit->element == u)) {
    throw Error(ErrorCode::BadUnit, "metric needs the unit witness declared for " + pair.id);
  }
  return gauge(y1 - y2, u, pair);
}

namespace {

bool greater(const NormValue& a, const NormValue& b) {
  if (a.exact && b.exact && a.power == b.power) return a.powered > b.powered;
  return a.approx > b.approx;
}

bool dominated(const NormValue& q, const ExtScalar& bound) {
  if (!q.exact) return false;  // non-integer exponents are never certified
  return q.powered <= bound;
}

NormValue exact_value(Rational v) { return make_norm_value(ExtScalar(std::move(v)), 1); }

Rational value_at(const Element& e, const Probe& probe) {
  if (const auto* i = std::get_if<Index>(&probe)) {
    if (const auto* s = std::get_if<TailSeq>(&e)) return (*s)(*i);
  } else {
    const Rational& t = std::get<Rational>(probe);
    if (const auto* f = std::get_if<StepFn>(&e)) return (*f)(t);
    if (const auto* g = std::get_if<PLFn>(&e)) return (*g)(t);
  }
  throw Error(ErrorCode::KindMismatch, "probe " + to_string(probe) + " does not fit the carrier");
}

using Quantity = std::function<NormValue(const Element& f_n)>;

struct Channel {
  std::string label;
  std::optional<Element> witness;
  Quantity q;
  std::optional<RateCert> cert;
};

struct RefCandidate {
  ClosedForm cf;
  Quantity q;
  Rational threshold;  // q(n) >= threshold along the pattern
};

/// Indices k -> pattern(k) that fit in the horizon, thinned to the sample grid.
std::vector<Index> pattern_samples(const std::function<Index(Index)>& pattern, Index horizon) {
  Index kmax = 0;
  while (kmax < horizon && pattern(kmax + 1) <= horizon) ++kmax;
  std::vector<Index> out;
  for (Index k : sample_indices(kmax)) out.push_back(pattern(k));
  return out;
}

Rational epsilon_under(const NormValue& v) {
  if (!v.exact || v.powered.is_infinite()) return Rational(1);
  return root_floor(v.powered.value(), v.power);
}

/// The certified / closed-form / empirical decision shared by every mode.
Verdict decide(Verdict out, const Family& fam, const CheckConfig& cfg, Index horizon, std::vector<Channel> channels,
               std::optional<RefCandidate> ref, bool constant) {
  out.horizon = horizon;
  const Rational min_eps = *std::min_element(cfg.eps_grid.begin(), cfg.eps_grid.end());
  const Rational max_eps = *std::max_element(cfg.eps_grid.begin(), cfg.eps_grid.end());

  if (constant) {
    // Every index carries the same quantity, so n = 1 decides.
    out.worst_gauge = exact_value(0);
    const Element first = fam(1);
    for (const auto& ch : channels) {
      NormValue v = ch.q(first);
      if (greater(v, out.worst_gauge)) out.worst_gauge = v;
      if (!v.is_zero()) {
        Rational eps = epsilon_under(v);
        if (eps > 0) {
          out.cls = VerdictClass::Refuted;
          out.refutation = Refutation{ch.witness, eps, Evidence::ClosedForm, "constant family, " + ch.label, {1}};
          return out;
        }
      }
    }
    out.cls = VerdictClass::CertifiedNull;
    out.certificates.assign(channels.size(), RateCert::eventually_zero_after(0));
    return out;
  }

  if (ref) {
    auto idx = pattern_samples(ref->cf.pattern, horizon);
    bool holds = !idx.empty();
    NormValue worst = exact_value(0);
    for (Index n : idx) {
      NormValue v = ref->q(fam(n));
      if (greater(v, worst)) worst = v;
      if (!v.at_least(ref->threshold)) {
        holds = false;
        out.note = "closed-form refutation failed its check at n=" + std::to_string(n);
        break;
      }
    }
    if (holds) {
      out.cls = VerdictClass::Refuted;
      out.worst_gauge = worst;
      out.refutation = Refutation{ref->cf.witness, ref->cf.eps, Evidence::ClosedForm, ref->cf.description, idx};
      return out;
    }
  }

  const auto idx = sample_indices(horizon);
  const Index tail_start = (horizon + 1) / 2;
  std::vector<std::vector<NormValue>> values(channels.size());
  for (auto& column : values) column.reserve(idx.size());
  for (Index n : idx) {
    const Element f = fam(n);
    for (std::size_t c = 0; c < channels.size(); ++c) values[c].push_back(channels[c].q(f));
  }
  out.worst_gauge = exact_value(0);
  bool tail_small = true;
  for (std::size_t c = 0; c < channels.size(); ++c) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] < tail_start) continue;
      if (greater(values[c][i], out.worst_gauge)) out.worst_gauge = values[c][i];
      tail_small = tail_small && values[c][i].below(min_eps);
    }
  }

  bool certified = !channels.empty();
  for (std::size_t c = 0; c < channels.size() && certified; ++c) {
    if (!channels[c].cert) {
      certified = false;
      break;
    }
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (!dominated(values[c][i], channels[c].cert->bound(idx[i]))) {
        certified = false;
        if (!out.note.empty()) out.note += "; ";
        out.note += "certificate " + channels[c].cert->describe() + " violated at n=" + std::to_string(idx[i]) +
                    " (" + channels[c].label + ")";
        break;
      }
    }
  }
  if (certified) {
    out.cls = VerdictClass::CertifiedNull;
    for (const auto& ch : channels) out.certificates.push_back(*ch.cert);
    return out;
  }
  if (tail_small) {
    out.cls = VerdictClass::EmpiricallyNull;
    return out;
  }

  // Empirical refutation: every eighth of the tail holds a sample with gauge >= max eps.
  constexpr Index kWindows = 8;
  Index span = horizon - tail_start + 1;
  if (span >= kWindows) {
    for (std::size_t c = 0; c < channels.size(); ++c) {
      std::vector<Index> hits;
      for (Index w = 0; w < kWindows; ++w) {
        Index lo = tail_start + span * w / kWindows;
        Index hi = tail_start + span * (w + 1) / kWindows;  // exclusive
        for (std::size_t i = 0; i < idx.size(); ++i) {
          if (idx[i] >= lo && idx[i] < hi && values[c][i].at_least(max_eps)) {
            hits.push_back(idx[i]);
            break;
          }
        }
        if (hits.size() != w + 1) break;
      }
      if (hits.size() == kWindows) {
        out.cls = VerdictClass::Refuted;
        out.refutation = Refutation{channels[c].witness, max_eps, Evidence::SampledIndices,
                                    "gauge >= eps in every window of the sampled tail, " + channels[c].label, hits};
        return out;
      }
    }
  }
  out.cls = VerdictClass::Inconclusive;
  return out;
}

Verdict blank(const Family& fam, std::string pair, Mode mode) {
  Verdict v;
  v.family = fam.name;
  v.pair = std::move(pair);
  v.mode = mode;
  return v;
}

void require_horizon(const CheckConfig& cfg) {
  if (cfg.horizon == 0) throw Error(ErrorCode::BadParams, "horizon must be at least 1");
  if (cfg.eps_grid.empty()) throw Error(ErrorCode::BadParams, "eps grid is empty");
}

std::optional<RefCandidate> un_candidate(const Family& fam, const SpacePair& pair) {
  if (!fam.un_refute) return std::nullopt;
  auto cf = fam.un_refute(pair);
  if (!cf || !cf->witness) return std::nullopt;
  Element x = *cf->witness;
  Quantity q = [&pair, x](const Element& f) { return gauge(f, x, pair); };
  return RefCandidate{*cf, q, cf->eps};
}

std::vector<Probe> default_probes(const Family& fam) {
  std::vector<Probe> out;
  if (fam.kind == CarrierKind::Sequence) {
    for (Index i = 1; i <= 8; ++i) out.emplace_back(i);
  } else {
    for (long k = 0; k < 16; ++k) out.emplace_back(ratio(k, 16));
  }
  return out;
}

void require_function_carrier(const Family& fam, Mode mode) {
  if (fam.kind != CarrierKind::Step && fam.kind != CarrierKind::PiecewiseLinear) {
    throw Error(ErrorCode::KindMismatch, std::string(to_string(mode)) + " mode needs step or piecewise-linear families");
  }
}

}  // namespace

Verdict check_un_with(const Family& fam, const SpacePair& pair, const std::vector<Element>& vectors,
                      const CheckConfig& cfg) {
  require_horizon(cfg);
  if (!pair.accepts(fam.kind)) throw Error(ErrorCode::KindMismatch, fam.name + " does not live in " + pair.id);
  Index horizon = fam.cap(cfg.horizon);
  std::vector<Channel> channels;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const Element& x = vectors[i];
    if (!is_positive(x) || !pair.in_ideal(x)) throw Error(ErrorCode::NotInIdeal, "test vector not in X_+");
    std::optional<RateCert> cert = fam.un_cert ? fam.un_cert(pair, x) : std::nullopt;
    channels.push_back({"x#" + std::to_string(i), x, [&pair, x](const Element& f) { return gauge(f, x, pair); },
                        std::move(cert)});
  }
  Verdict v = blank(fam, pair.id, Mode::Un);
  return decide(std::move(v), fam, cfg, horizon, std::move(channels), un_candidate(fam, pair), fam.constant);
}

Verdict check_un(const Family& fam, const SpacePair& pair, const CheckConfig& cfg) {
  return check_un_with(fam, pair, test_vectors(pair, cfg.budget).vectors, cfg);
}

Verdict check_un_metric(const Family& fam, const SpacePair& pair, const CheckConfig& cfg) {
  require_horizon(cfg);
  if (!pair.unit) throw Error(ErrorCode::BadUnit, pair.id + " declares no unit witness");
  const Element u = pair.unit->element;
  Element zero = zero_of(fam.kind);
  std::optional<RateCert> cert = fam.un_cert ? fam.un_cert(pair, u) : std::nullopt;
  std::vector<Channel> channels{
      {"d(f_n,0)", u, [&pair, u, zero](const Element& f) { return un_metric(f, zero, u, pair); }, cert}};
  auto ref = un_candidate(fam, pair);
  if (ref && !(*ref->cf.witness == u)) ref.reset();
  Verdict v = blank(fam, pair.id, Mode::Un);
  v.note = "un-metric";
  return decide(std::move(v), fam, cfg, fam.cap(cfg.horizon), std::move(channels), std::move(ref), fam.constant);
}

Verdict check_pointwise(const Family& fam, const CheckConfig& cfg) {
  require_horizon(cfg);
  if (fam.kind == CarrierKind::DirectSum) throw Error(ErrorCode::KindMismatch, "pointwise mode has no direct-sum probes");
  Index horizon = fam.cap(cfg.horizon);
  auto probes = cfg.probes ? *cfg.probes : default_probes(fam);
  Verdict agg = blank(fam, "-", Mode::Pointwise);
  agg.horizon = horizon;
  agg.worst_gauge = exact_value(0);
  bool all_certified = true, all_null = true;
  std::optional<Verdict> first_refuted;
  for (const auto& probe : probes) {
    Quantity q = [probe](const Element& f) { return exact_value(abs(value_at(f, probe))); };
    std::optional<RateCert> cert = fam.pointwise_cert ? fam.pointwise_cert(probe) : std::nullopt;
    std::optional<RefCandidate> ref;
    if (fam.pointwise_refute) {
      if (auto cf = fam.pointwise_refute(probe)) ref = RefCandidate{*cf, q, cf->eps};
    }
    Verdict v = decide(blank(fam, "-", Mode::Pointwise), fam, cfg, horizon, {{to_string(probe), std::nullopt, q, cert}},
                       std::move(ref), fam.constant);
    agg.parts.emplace_back(to_string(probe), v.cls);
    if (greater(v.worst_gauge, agg.worst_gauge)) agg.worst_gauge = v.worst_gauge;
    all_certified = all_certified && v.cls == VerdictClass::CertifiedNull;
    all_null = all_null && v.is_null();
    if (v.cls == VerdictClass::CertifiedNull) agg.certificates.push_back(v.certificates.front());
    if (v.cls == VerdictClass::Refuted && !first_refuted) {
      v.refutation->description = to_string(probe) + ": " + v.refutation->description;
      first_refuted = std::move(v);
    }
  }
  if (first_refuted) {
    agg.cls = VerdictClass::Refuted;
    agg.refutation = first_refuted->refutation;
    agg.certificates.clear();
  } else if (all_certified && !probes.empty()) {
    agg.cls = VerdictClass::CertifiedNull;
  } else {
    agg.certificates.clear();
    agg.cls = all_null && !probes.empty() ? VerdictClass::EmpiricallyNull : VerdictClass::Inconclusive;
  }
  return agg;
}

Verdict check_uniform_unit(const Family& fam, const Element& e, const CheckConfig& cfg) {
  require_horizon(cfg);
  NormSpec spec = NormSpec::unit_norm(e);
  Index horizon = fam.cap(cfg.horizon);
  Quantity q = [spec](const Element& f) { return norm(f, spec); };
  std::optional<RateCert> cert = fam.uniform_cert ? fam.uniform_cert(e) : std::nullopt;
  std::optional<RefCandidate> ref;
  if (fam.uniform_refute) {
    if (auto cf = fam.uniform_refute(e)) ref = RefCandidate{*cf, q, cf->eps};
  }
  Verdict v = decide(blank(fam, "I_e", Mode::Uniform), fam, cfg, horizon, {{"||f_n||_e", e, q, cert}}, std::move(ref),
                     fam.constant);
  // First sampled index after which every sampled element lies in I_e.
  std::optional<Index> first;
  for (Index n : sample_indices(horizon)) {
    bool inside = !q(fam(n)).is_infinite();
    if (inside && !first) first = n;
    if (!inside) first.reset();
  }
  v.first_in_ideal = first;
  return v;
}

Verdict check_in_measure(const Family& fam, const CheckConfig& cfg) {
  require_horizon(cfg);
  require_function_carrier(fam, Mode::Measure);
  Index horizon = fam.cap(cfg.horizon);
  Region region = cfg.region ? *cfg.region : Region::unit();
  std::vector<Channel> channels;
  for (const auto& eps : cfg.eps_grid) {
    channels.push_back({"eps=" + to_string(eps), std::nullopt,
                        [eps, region](const Element& f) { return exact_value(level_measure(f, eps, region)); },
                        fam.measure_cert});
  }
  std::optional<RefCandidate> ref;
  if (fam.measure_refute && !cfg.region) {
    const ClosedForm& cf = *fam.measure_refute;
    ref = RefCandidate{cf, [eps = cf.eps](const Element& f) { return exact_value(level_measure(f, eps)); }, cf.floor};
  }
  return decide(blank(fam, "-", Mode::Measure), fam, cfg, horizon, std::move(channels), std::move(ref), fam.constant);
}

Verdict check_ae(const Family& fam, const CheckConfig& cfg) {
  require_horizon(cfg);
  require_function_carrier(fam, Mode::Ae);
  Index horizon = fam.cap(cfg.horizon);
  Verdict v = blank(fam, "-", Mode::Ae);
  v.horizon = horizon;
  v.worst_gauge = exact_value(0);

  if (fam.constant) {
    Element f = fam(1);
    Rational peak = norm(f, NormSpec::sup()).value().value();
    if (peak == 0) {
      v.cls = VerdictClass::CertifiedNull;
      v.certificates.push_back(RateCert::eventually_zero_after(0));
      return v;
    }
    Rational eps = peak / 2;
    if (level_measure(f, eps) > 0) {
      v.cls = VerdictClass::Refuted;
      v.worst_gauge = exact_value(peak);
      v.refutation = Refutation{std::nullopt, eps, Evidence::ClosedForm,
                                "constant family exceeds eps on " + to_text(superlevel_set(f, eps)), {1}};
      return v;
    }
  }

  constexpr long kPoints = 64;
  if (fam.ae_recurrence) {
    const auto& rec = *fam.ae_recurrence;
    bool holds = rec.set.measure() > 0;
    std::vector<Index> seen;
    for (long j = 0; j < kPoints && holds; ++j) {
      Rational t = ratio(2 * j + 1, 2 * kPoints);
      if (!rec.set.contains(t)) continue;
      for (Index k = 1;; ++k) {
        Index n = rec.pattern(t, k);
        if (n > horizon) break;
        Rational val = abs(value_at(fam(n), Probe{t}));
        if (val < rec.eps) {
          holds = false;
          v.note = "recurrence failed at t=" + to_string(t) + ", n=" + std::to_string(n);
          break;
        }
        if (j == 0) seen.push_back(n);
      }
    }
    if (holds) {
      v.cls = VerdictClass::Refuted;
      v.worst_gauge = exact_value(1);
      v.refutation = Refutation{std::nullopt, rec.eps, Evidence::ClosedForm, rec.description, seen};
      return v;
    }
  }

  if (fam.ae_decay) {
    const auto& dec = *fam.ae_decay;
    const auto idx = sample_indices(horizon);
    bool holds = true;
    for (long j = 0; j <= kPoints && holds; ++j) {
      for (Rational t : {ratio(j, kPoints), ratio(2 * j + 1, 2 * kPoints)}) {
        if (t > 1 || std::find(dec.null_points.begin(), dec.null_points.end(), t) != dec.null_points.end()) continue;
        RateCert cert = dec.at_point(t);
        for (Index n : idx) {
          Rational val = abs(value_at(fam(n), Probe{t}));
          if (!(ExtScalar(val) <= cert.bound(n))) {
            holds = false;
            v.note = "decay certificate failed at t=" + to_string(t) + ", n=" + std::to_string(n);
            break;
          }
        }
        if (!holds) break;
      }
    }
    if (holds) {
      v.cls = VerdictClass::CertifiedNull;
      v.note = dec.description;
      return v;
    }
  }
  v.cls = VerdictClass::Inconclusive;
  return v;
}

Verdict check(const Family& fam, const SpacePair& pair, Mode mode, const CheckConfig& cfg) {
  Verdict v;
  switch (mode) {
    case Mode::Un: return check_un(fam, pair, cfg);
    case Mode::Pointwise: v = check_pointwise(fam, cfg); break;
    case Mode::Measure: v = check_in_measure(fam, cfg); break;
    case Mode::Ae: v = check_ae(fam, cfg); break;
    case Mode::Uniform:
      if (!pair.unit) throw Error(ErrorCode::BadUnit, pair.id + " declares no unit witness for uniform mode");
      v = check_uniform_unit(fam, pair.unit->element, cfg);
      break;
  }
  v.pair = pair.id;
  return v;
}

std::vector<Element> limit_uniqueness_probe(const SpacePair& pair, const Family& fam,
                                            const std::vector<Element>& candidates, const CheckConfig& cfg) {
  std::vector<Element> limits;
  for (const auto& c : candidates) {
    if (!pair.accepts(kind_of(c))) throw Error(ErrorCode::KindMismatch, "candidate not in the ambient lattice");
    if (check_un(shifted(fam, c), pair, cfg).is_null()) limits.push_back(c);
  }
  return limits;
}

bool verify_certificate(const Family& fam, const RateCert& cert, const SpacePair& pair, const Element& x,
                        const std::vector<Index>& indices) {
  for (Index n : indices) {
    if (fam.eval_limit && n > *fam.eval_limit) continue;
    if (!dominated(gauge(fam(n), x, pair), cert.bound(n))) return false;
  }
  return true;
}

bool verify_certificate(const Family& fam, const RateCert& cert, const SpacePair& pair,
                        const std::vector<Index>& indices, unsigned budget) {
  if (indices.empty()) throw Error(ErrorCode::BadParams, "no sample indices");
  for (const auto& x : test_vectors(pair, budget).vectors) {
    if (!verify_certificate(fam, cert, pair, x, indices)) return false;
  }
  return true;
}

bool verify_measure_certificate(const Family& fam, const RateCert& cert, const std::vector<Rational>& eps_grid,
                                const std::vector<Index>& indices, const std::optional<Region>& region) {
  Region r = region ? *region : Region::unit();
  for (Index n : indices) {
    if (fam.eval_limit && n > *fam.eval_limit) continue;
    Element f = fam(n);
    ExtScalar b = cert.bound(n);
    for (const auto& eps : eps_grid) {
      if (!(ExtScalar(level_measure(f, eps, r)) <= b)) return false;
    }
  }
  return true;
}

nlohmann::json to_json(const RateCert& cert) {
  nlohmann::json j;
  switch (cert.kind()) {
    case RateCert::Kind::PowerLaw: j = {{"kind", "PowerLaw"}, {"C", to_string(cert.constant())}, {"r", cert.exponent()}}; break;
    case RateCert::Kind::DyadicLog: j = {{"kind", "DyadicLog"}, {"C", to_string(cert.constant())}}; break;
    case RateCert::Kind::EventuallyZeroAfter: j = {{"kind", "EventuallyZeroAfter"}, {"L", cert.last()}}; break;
    case RateCert::Kind::Custom: {
      j = {{"kind", "Custom"}, {"table", nlohmann::json::array()}};
      for (const auto& [eps, n] : cert.table()) j["table"].push_back({{"eps", to_string(eps)}, {"N", n}});
      break;
    }
    case RateCert::Kind::Sum: {
      j = {{"kind", "Sum"}, {"factor", to_string(cert.constant())}, {"parts", nlohmann::json::array()}};
      for (const auto& p : cert.parts()) j["parts"].push_back(to_json(p));
      break;
    }
  }
  return j;
}

nlohmann::json to_json(const NormValue& v) {
  if (!v.exact) return {{"approx", true}, {"value", v.approx}};
  if (v.power == 1) return to_string(v.powered);
  return {{"power", v.power}, {"powered", to_string(v.powered)}};
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j = {{"family", v.family}, {"pair", v.pair},         {"mode", to_string(v.mode)},
                      {"class", to_string(v.cls)}, {"horizon", v.horizon}, {"worst_gauge", to_json(v.worst_gauge)}};
  if (!v.certificates.empty()) {
    bool uniform = std::all_of(v.certificates.begin(), v.certificates.end(),
                               [&](const RateCert& c) { return c == v.certificates.front(); });
    if (uniform) {
      j["certificate"] = to_json(v.certificates.front());
    } else {
      j["certificate"] = nlohmann::json::array();
      for (const auto& c : v.certificates) j["certificate"].push_back(to_json(c));
    }
  }
  if (v.refutation) {
    const auto& r = *v.refutation;
    if (r.witness) j["witness"] = to_text(*r.witness);
    j["eps"] = to_string(r.eps);
    j["evidence"] = to_string(r.evidence);
    j["description"] = r.description;
    std::vector<Index> head(r.indices.begin(), r.indices.begin() + std::min<std::size_t>(r.indices.size(), 16));
    j["indices"] = head;
  }
  if (v.first_in_ideal) j["first_in_ideal"] = *v.first_in_ideal;
  if (!v.parts.empty()) {
    j["parts"] = nlohmann::json::array();
    for (const auto& [label, cls] : v.parts) j["parts"].push_back({{"probe", label}, {"class", to_string(cls)}});
  }
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

}  // namespace unlattice
