#include "unlattice/laws.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "unlattice/error.hpp"
#include "unlattice/extraction.hpp"
#include "unlattice/gallery.hpp"
#include "unlattice/serialize.hpp"

namespace unlattice {

namespace {

using json = nlohmann::json;

struct LawSpec {
  std::string id;
  std::string title;
};

const std::vector<LawSpec>& catalog() {
  static const std::vector<LawSpec> laws{
      {"L1", "lattice and linear operations preserve un-limits"},
      {"L2", "dense sub-ideals give the same verdicts"},
      {"L3", "L1 and L2 induce the same convergence on L0"},
      {"L4", "a quasi-interior unit alone decides un-convergence"},
      {"L5", "the un-metric agrees with un-convergence"},
      {"L6", "increasing un-convergent families converge to their supremum"},
      {"L7", "disjoint sequences are un-null exactly for order continuous norms"},
      {"L8", "un-null implies pointwise null on R^N; the converse needs order continuity"},
      {"L9", "un-null under L1 equals convergence in measure"},
      {"L10", "a strong unit makes un-convergence uniform convergence"},
      {"L11", "order intervals are un-closed"},
      {"L12", "un-limits are unique iff X is order dense"},
      {"L13", "un-null sequences have a.e.-null subsequences when X has a weak unit"},
      {"L14", "without a weak unit no subsequence need be a.e.-null"},
  };
  return laws;
}

std::vector<std::string> all_family_names() {
  std::vector<std::string> out;
  for (const auto& e : gallery_entries()) out.push_back(e.name);
  return out;
}

std::vector<std::string> pick(const std::vector<std::string>& configured, std::vector<std::string> fallback) {
  return configured.empty() ? fallback : configured;
}

std::vector<Family> families_of(const std::vector<std::string>& names) {
  std::vector<Family> out;
  for (const auto& n : names) out.push_back(family(n));
  return out;
}

json verdict_brief(const Verdict& v) {
  json j = {{"class", to_string(v.cls)}, {"pair", v.pair}, {"mode", to_string(v.mode)}};
  if (v.refutation) j["eps"] = to_string(v.refutation->eps);
  return j;
}

Element one_of(CarrierKind kind) {
  switch (kind) {
    case CarrierKind::Step:
      return StepFn::constant(Rational(1));
    case CarrierKind::PiecewiseLinear:
      return PLFn::constant(Rational(1));
    case CarrierKind::Sequence:
      return TailSeq::ones();
    case CarrierKind::DirectSum:
      break;
  }
  throw Error(ErrorCode::KindMismatch, "no constant one in a direct sum");
}

Family constant_family(std::string name, Element y) {
  Family f;
  f.name = std::move(name);
  f.kind = kind_of(y);
  f.constant = true;
  f.eval = [y](Index) { return y; };
  return f;
}

Family zero_residual(const Family& fam) {
  Family z = constant_family(fam.name + "-residual", zero_of(fam.kind));
  z.un_cert = [](const SpacePair&, const Element&) { return std::optional(RateCert::eventually_zero_after(0)); };
  z.uniform_cert = [](const Element&) { return std::optional(RateCert::eventually_zero_after(0)); };
  z.measure_cert = RateCert::eventually_zero_after(0);
  return z;
}

struct LimitView {
  Element limit;
  Family source;
  Family residual;
  Verdict verdict;  // of the residual
};

/// The family's un-limit on this pair when the residual is certified null.
std::optional<LimitView> certified_limit(const Family& fam, const SpacePair& pair, const CheckConfig& cfg) {
  if (!pair.accepts(fam.kind)) return std::nullopt;
  LimitView view{zero_of(fam.kind), fam, fam, {}};
  if (fam.limit && fam.residual) {
    view = {*fam.limit, fam, *fam.residual, {}};
  } else if (fam.constant) {
    view = {fam(1), fam, zero_residual(fam), {}};
  }
  view.verdict = check_un(view.residual, pair, cfg);
  if (view.verdict.cls != VerdictClass::CertifiedNull) return std::nullopt;
  return view;
}

Counterexample make_counterexample(const Family& fam, const SpacePair& pair, const Verdict& v, const CheckConfig& cfg,
                                   std::string note) {
  Counterexample c;
  c.family = fam.name;
  c.pair = pair.id;
  c.index = fam.cap(cfg.horizon);
  c.x = test_vectors(pair, cfg.budget).vectors.front();
  if (v.refutation) {
    if (!v.refutation->indices.empty()) c.index = v.refutation->indices.front();
    if (v.refutation->witness) c.x = *v.refutation->witness;
  }
  c.y = fam(c.index);
  c.gauge = gauge(c.y, c.x, pair);
  c.note = std::move(note);
  return c;
}

class Runner {
 public:
  Runner(std::string id, const LawConfig& cfg) {
    report_.id = std::move(id);
    report_.config = cfg;
  }

  void add(std::string key, bool pass, json detail, bool in_scope = true) {
    report_.cases.push_back({std::move(key), pass || !in_scope, in_scope, std::move(detail)});
  }

  void counterexample(Counterexample c) { report_.counterexamples.push_back(std::move(c)); }

  /// Records a failed comparison along with the gauge that exhibits the refuted side.
  void mismatch(const Family& fam, const SpacePair& pair, const Verdict& a, const Verdict& b, const CheckConfig& cfg,
                const std::string& note) {
    const Verdict& refuted = a.cls == VerdictClass::Refuted ? a : b;
    try {
      counterexample(make_counterexample(fam, pair, refuted, cfg, note));
    } catch (const Error&) {
      // Pair-free modes may have no gauge to cite; the case detail still records both verdicts.
    }
  }

  LawReport finish() {
    std::stable_sort(report_.cases.begin(), report_.cases.end(),
                     [](const LawCase& a, const LawCase& b) { return a.key < b.key; });
    report_.pass = std::all_of(report_.cases.begin(), report_.cases.end(), [](const LawCase& c) { return c.pass; });
    return std::move(report_);
  }

 private:
  LawReport report_;
};

// ---- L1 ----------------------------------------------------------------------

const char* op_name(LatticeOp op) {
  switch (op) {
    case LatticeOp::Meet:
      return "meet";
    case LatticeOp::Join:
      return "join";
    case LatticeOp::Sum:
      return "sum";
    case LatticeOp::Diff:
      return "diff";
  }
  return "?";
}

/// n -> op(f_n, g_n) - op(a, b), certified by |op(f,g) - op(a,b)| <= |f - a| + |g - b|.
Family combined_residual(const LimitView& f, const LimitView& g, LatticeOp op, const SpacePair& pair,
                         const std::string& name) {
  Element c = combine(f.limit, g.limit, op);
  Family rf = f.residual;
  Family rg = g.residual;
  Family out;
  out.name = name;
  out.kind = rf.kind;
  auto ef = f.source.eval;
  auto eg = g.source.eval;
  const bool zc = is_zero(c);
  out.eval = [ef, eg, c, op, zc](Index n) {
    Element h = combine(ef(n), eg(n), op);
    return zc ? h : h - c;
  };
  if (rf.eval_limit || rg.eval_limit) {
    out.eval_limit = std::min(rf.eval_limit.value_or(~Index{0}), rg.eval_limit.value_or(~Index{0}));
  }
  // (s + t)^p <= 2^(p-1) (s^p + t^p) in the power domain.
  const unsigned p = pair.norm.power();
  const Rational factor = pow2(static_cast<std::int64_t>(p) - 1);
  out.un_cert = [rf, rg, factor](const SpacePair& pr, const Element& x) -> std::optional<RateCert> {
    auto cf = rf.un_cert ? rf.un_cert(pr, x) : std::nullopt;
    auto cg = rg.un_cert ? rg.un_cert(pr, x) : std::nullopt;
    if (!cf || !cg) return std::nullopt;
    return RateCert::sum({*cf, *cg}, factor);
  };
  return out;
}

LawReport law_ops(const LawConfig& cfg) {
  Runner run("L1", cfg);
  const auto pairs = pick(cfg.pairs, {"L1@L0", "L2@L0", "l1@RN", "linf@RN", "X0@C01"});
  const auto names = pick(cfg.families, all_family_names());
  for (const auto& pd : pairs) {
    SpacePair pair = build_pair(pd);
    if (!pair.norm.exact()) {
      run.add(pd, true, {{"skipped", "norm power not an integer"}}, false);
      continue;
    }
    std::vector<std::pair<Family, LimitView>> limited;
    for (const auto& fam : families_of(names)) {
      if (auto view = certified_limit(fam, pair, cfg.check)) limited.emplace_back(fam, std::move(*view));
    }
    for (std::size_t i = 0; i < limited.size(); ++i) {
      for (std::size_t j = i; j < limited.size(); ++j) {
        const auto& [f, fv] = limited[i];
        const auto& [g, gv] = limited[j];
        if (f.kind != g.kind) continue;
        for (LatticeOp op : {LatticeOp::Meet, LatticeOp::Join, LatticeOp::Sum, LatticeOp::Diff}) {
          std::string name = std::string(op_name(op)) + "(" + f.name + "," + g.name + ")";
          Family h = combined_residual(fv, gv, op, pair, name);
          Verdict v = check_un(h, pair, cfg.check);
          bool ok = v.cls == VerdictClass::CertifiedNull;
          run.add(name + "|" + pd, ok,
                  {{"limit", to_text(combine(fv.limit, gv.limit, op))}, {"residual", verdict_brief(v)}});
          if (!ok) run.mismatch(h, pair, v, v, cfg.check, name + " minus op of the limits is not certified null");
        }
      }
    }
  }
  return run.finish();
}

// ---- L2 / L3 / L4 / L5 -------------------------------------------------------

void compare_outcomes(Runner& run, const Family& fam, const SpacePair& pair, const Verdict& a, const Verdict& b,
                      const std::string& key, const std::string& la, const std::string& lb, bool exact_class) {
  bool ok = exact_class ? a.cls == b.cls : outcome(a) == outcome(b);
  run.add(key, ok, {{la, verdict_brief(a)}, {lb, verdict_brief(b)}});
  if (!ok) run.mismatch(fam, pair, a, b, {}, la + " and " + lb + " disagree");
}

LawReport law_dense_ideal(const LawConfig& cfg) {
  Runner run("L2", cfg);
  const auto names = pick(cfg.families, all_family_names());
  SpacePair c00 = build_pair("c00@RN");
  SpacePair c0 = build_pair("c0@RN");
  for (const auto& fam : families_of(names)) {
    if (fam.kind == CarrierKind::Sequence) {
      Verdict a = check_un_with(fam, c0, dense_basis(c00, cfg.check.budget).vectors, cfg.check);
      Verdict b = check_un_with(fam, c0, dense_basis(c0, cfg.check.budget).vectors, cfg.check);
      compare_outcomes(run, fam, c0, a, b, fam.name + "|c0@RN", "c00-basis", "c0-basis", false);
    }
    if (fam.kind == CarrierKind::Step || fam.kind == CarrierKind::PiecewiseLinear) {
      SpacePair l1 = build_pair("L1@L0");
      Verdict a = check_un_with(fam, l1, dense_basis(l1, cfg.check.budget).vectors, cfg.check);
      Verdict b = check_un(fam, l1, cfg.check);
      compare_outcomes(run, fam, l1, a, b, fam.name + "|L1@L0", "simple-basis", "L1-unit", false);
    }
    if (fam.kind == CarrierKind::PiecewiseLinear) {
      SpacePair x0 = build_pair("X0@C01");
      Verdict a = check_un_with(fam, x0, dense_basis(x0, cfg.check.budget).vectors, cfg.check);
      Verdict b = check_un(fam, x0, cfg.check);
      compare_outcomes(run, fam, x0, a, b, fam.name + "|X0@C01", "ramp-basis", "X0-unit", false);
    }
  }
  return run.finish();
}

LawReport law_nested(const LawConfig& cfg) {
  Runner run("L3", cfg);
  const auto names = pick(cfg.families, all_family_names());
  SpacePair l1 = build_pair("L1@L0");
  SpacePair l2 = build_pair("L2@L0");
  for (const auto& fam : families_of(names)) {
    if (fam.kind != CarrierKind::Step && fam.kind != CarrierKind::PiecewiseLinear) continue;
    compare_outcomes(run, fam, l1, check_un(fam, l1, cfg.check), check_un(fam, l2, cfg.check), fam.name, "L1@L0",
                     "L2@L0", false);
  }
  return run.finish();
}

LawReport law_quasi_interior(const LawConfig& cfg) {
  Runner run("L4", cfg);
  const auto pairs = pick(cfg.pairs, {"L1@L0", "L2@L0", "linf@RN"});
  const auto names = pick(cfg.families, all_family_names());
  for (const auto& pd : pairs) {
    SpacePair pair = build_pair(pd);
    if (!pair.unit) {
      run.add(pd, true, {{"skipped", "no unit witness"}}, false);
      continue;
    }
    for (const auto& fam : families_of(names)) {
      if (!pair.accepts(fam.kind)) continue;
      Verdict a = check_un_with(fam, pair, {pair.unit->element}, cfg.check);
      Verdict b = check_un_with(fam, pair, dense_basis(pair, cfg.check.budget).vectors, cfg.check);
      compare_outcomes(run, fam, pair, a, b, fam.name + "|" + pd, "unit", "basis", true);
    }
  }
  return run.finish();
}

LawReport law_metric(const LawConfig& cfg) {
  Runner run("L5", cfg);
  const auto pairs = pick(cfg.pairs, {"L1@L0", "L2@L0", "bandA(1)@L0", "linf@RN", "X0@C01", "C@C01"});
  const auto names = pick(cfg.families, all_family_names());
  for (const auto& pd : pairs) {
    SpacePair pair = build_pair(pd);
    if (!pair.unit) {
      run.add(pd, true, {{"skipped", "not metrizable through a unit"}}, false);
      continue;
    }
    for (const auto& fam : families_of(names)) {
      if (!pair.accepts(fam.kind)) continue;
      Verdict a = check_un_metric(fam, pair, cfg.check);
      Verdict b = check_un(fam, pair, cfg.check);
      bool ok = a.is_null() == b.is_null();
      run.add(fam.name + "|" + pd, ok, {{"metric", verdict_brief(a)}, {"un", verdict_brief(b)}});
      if (!ok) run.mismatch(fam, pair, a, b, cfg.check, "metric and un verdicts disagree on null-ness");
    }
  }
  return run.finish();
}

// ---- L6 / L11 ----------------------------------------------------------------

LawReport law_monotone(const LawConfig& cfg) {
  Runner run("L6", cfg);
  const auto pairs = pick(cfg.pairs, {"L1@L0", "L2@L0", "l1@RN", "c0@RN"});
  const auto names = pick(cfg.families, all_family_names());
  for (const auto& pd : pairs) {
    SpacePair pair = build_pair(pd);
    for (const auto& fam : families_of(names)) {
      if (!pair.accepts(fam.kind)) continue;
      const std::string key = fam.name + "|" + pd;
      if (!fam.increasing) continue;
      auto view = certified_limit(fam, pair, cfg.check);
      if (!view) {
        run.add(key, true, {{"skipped", "no certified un-limit"}}, false);
        continue;
      }
      if (!fam.supremum) {
        run.add(key, false, {{"reason", "increasing family declares no supremum"}});
        continue;
      }
      bool ok = *fam.supremum == view->limit;
      std::optional<Index> bad;
      const Index h = fam.cap(cfg.check.horizon);
      for (Index n : sample_indices(h)) {
        Element fn = fam(n);
        if (!leq(fn, view->limit) || (n < h && !leq(fn, fam(n + 1)))) {
          bad = n;
          break;
        }
      }
      ok = ok && !bad;
      json detail = {{"limit", to_text(view->limit)}, {"supremum", to_text(*fam.supremum)}};
      if (bad) {
        detail["violation_at"] = *bad;
        Counterexample c;
        c.family = fam.name;
        c.pair = pd;
        c.index = *bad;
        c.y = fam(*bad) - view->limit;
        c.x = test_vectors(pair, cfg.check.budget).vectors.front();
        c.gauge = gauge(c.y, c.x, pair);
        c.note = "f_n - limit is not <= 0";
        run.counterexample(std::move(c));
      }
      run.add(key, ok, std::move(detail));
    }
  }
  return run.finish();
}

LawReport law_interval(const LawConfig& cfg) {
  Runner run("L11", cfg);
  const auto pairs = pick(cfg.pairs, {"L1@L0", "l1@RN", "linf@RN", "X0@C01"});
  const auto names = pick(cfg.families, all_family_names());
  for (const auto& pd : pairs) {
    SpacePair pair = build_pair(pd);
    for (const auto& fam : families_of(names)) {
      if (!pair.accepts(fam.kind) || fam.kind == CarrierKind::DirectSum) continue;
      const std::string key = fam.name + "|" + pd;
      const Element u = fam.upper_bound ? *fam.upper_bound : one_of(fam.kind);
      const Element zero = zero_of(fam.kind);
      const Index h = fam.cap(cfg.check.horizon);
      bool inside = true;
      for (Index n : sample_indices(h)) {
        Element fn = fam(n);
        if (!leq(zero, fn) || !leq(fn, u)) {
          inside = false;
          break;
        }
      }
      if (!inside) {
        run.add(key, true, {{"skipped", "not valued in [0, u]"}}, false);
        continue;
      }
      auto view = certified_limit(fam, pair, cfg.check);
      if (!view) {
        run.add(key, true, {{"skipped", "no certified un-limit"}}, false);
        continue;
      }
      bool ok = leq(zero, view->limit) && leq(view->limit, u);
      run.add(key, ok, {{"limit", to_text(view->limit)}, {"u", to_text(u)}});
      if (!ok) {
        Counterexample c;
        c.family = fam.name;
        c.pair = pd;
        c.index = 0;
        c.y = join(view->limit - u, zero - view->limit);
        c.x = test_vectors(pair, cfg.check.budget).vectors.front();
        c.gauge = gauge(c.y, c.x, pair);
        c.note = "limit leaves [0, u]";
        run.counterexample(std::move(c));
      }
    }
  }
  return run.finish();
}

// ---- L7 / L8 / L9 / L10 ------------------------------------------------------

LawReport law_disjoint(const LawConfig& cfg) {
  Runner run("L7", cfg);
  const auto names = pick(cfg.families, {"disjoint_blocks"});
  const auto pairs = pick(cfg.pairs, {"l1@RN", "c0@RN", "linf@RN"});
  for (const auto& fam : families_of(names)) {
    for (const auto& pd : pairs) {
      SpacePair pair = build_pair(pd);
      if (!pair.accepts(fam.kind)) continue;
      Verdict v = check_un(fam, pair, cfg.check);
      const bool want_null = pair.flags.order_continuous;
      bool ok = want_null ? v.is_null() : v.cls == VerdictClass::Refuted;
      run.add(fam.name + "|" + pd, ok,
              {{"verdict", verdict_brief(v)}, {"order_continuous", pair.flags.order_continuous}});
      if (!ok) run.mismatch(fam, pair, v, v, cfg.check, "disjoint family against the order continuity dichotomy");
    }
  }
  return run.finish();
}

LawReport law_atomic(const LawConfig& cfg) {
  Runner run("L8", cfg);
  const auto pairs = pick(cfg.pairs, {"l1@RN", "c0@RN", "linf@RN"});
  const auto names = pick(cfg.families, all_family_names());
  for (const auto& pd : pairs) {
    SpacePair pair = build_pair(pd);
    bool converse_fails = false;
    for (const auto& fam : families_of(names)) {
      if (fam.kind != CarrierKind::Sequence || !pair.accepts(fam.kind)) continue;
      Verdict un = check_un(fam, pair, cfg.check);
      Verdict pw = check_pointwise(fam, cfg.check);
      const std::string key = fam.name + "|" + pd;
      json detail = {{"un", verdict_brief(un)}, {"pointwise", verdict_brief(pw)}};
      bool forward = !un.is_null() || pw.is_null();
      bool converse = !pw.is_null() || un.is_null();
      if (pw.is_null() && un.cls == VerdictClass::Refuted) converse_fails = true;
      bool ok = forward && (converse || !pair.flags.order_continuous);
      run.add(key, ok, std::move(detail));
      if (!ok) run.mismatch(fam, pair, un, pw, cfg.check, "un and pointwise null-ness disagree");
    }
    if (!pair.flags.order_continuous) {
      run.add("converse-failure|" + pd, converse_fails, {{"witnessed", converse_fails}});
    }
  }
  return run.finish();
}

LawReport law_measure(const LawConfig& cfg) {
  Runner run("L9", cfg);
  const auto names = pick(cfg.families, all_family_names());
  SpacePair l1 = build_pair("L1@L0");
  for (const auto& fam : families_of(names)) {
    if (fam.kind != CarrierKind::Step && fam.kind != CarrierKind::PiecewiseLinear) continue;
    compare_outcomes(run, fam, l1, check_un(fam, l1, cfg.check), check_in_measure(fam, cfg.check), fam.name,
                     "un", "measure", false);
  }
  return run.finish();
}

LawReport law_strong_unit(const LawConfig& cfg) {
  Runner run("L10", cfg);
  const auto names = pick(cfg.families, all_family_names());
  const auto pairs = pick(cfg.pairs, {"linf@RN", "C@C01"});
  for (const auto& pd : pairs) {
    SpacePair pair = build_pair(pd);
    if (!pair.unit || pair.unit->kind != UnitKind::Strong) {
      run.add(pd, true, {{"skipped", "no strong unit"}}, false);
      continue;
    }
    for (const auto& fam : families_of(names)) {
      if (!pair.accepts(fam.kind)) continue;
      compare_outcomes(run, fam, pair, check_un(fam, pair, cfg.check),
                       check_uniform_unit(fam, pair.unit->element, cfg.check), fam.name + "|" + pd, "un", "uniform",
                       false);
    }
  }
  return run.finish();
}

// ---- L12 ---------------------------------------------------------------------

/// A nonzero element of the ambient lattice, disjoint from the band when there is one.
Element probe_element(const SpacePair& pair) {
  switch (pair.ambient) {
    case Ambient::L0UnitInterval:
      return StepFn::indicator(ratio(1, 2), Rational(1));
    case Ambient::SequencesRN:
      return TailSeq::unit(1);
    case Ambient::ContinuousUnitInterval:
      return PLFn({Rational(0), Rational(1)}, {Rational(0), Rational(1)});
    case Ambient::DirectSumL0:
      return DirectSumElem(std::map<DirectSumElem::ComponentId, StepFn>{{0, StepFn::indicator(ratio(1, 2), Rational(1))}});
  }
  throw Error(ErrorCode::UnsupportedPair, pair.id);
}

LawReport law_hausdorff(const LawConfig& cfg) {
  Runner run("L12", cfg);
  const auto pairs = pick(cfg.pairs, known_pairs());
  for (const auto& pd : pairs) {
    SpacePair pair = build_pair(pd);
    Element y = probe_element(pair);
    Family fam = constant_family("constant(" + to_text(y) + ")", y);
    auto limits = limit_uniqueness_probe(pair, fam, {zero_of(kind_of(y)), y}, cfg.check);
    json shown = json::array();
    for (const auto& l : limits) shown.push_back(to_text(l));
    bool ok = pair.flags.order_dense ? limits.size() == 1 : limits.size() >= 2;
    run.add(pd, ok, {{"order_dense", pair.flags.order_dense}, {"limits", shown}});
  }
  return run.finish();
}

// ---- L13 / L14 ---------------------------------------------------------------

LawReport law_extraction(const LawConfig& cfg) {
  Runner run("L13", cfg);
  const auto names = pick(cfg.families, all_family_names());
  SpacePair l1 = build_pair("L1@L0");
  for (const auto& base : families_of(names)) {
    if (base.kind != CarrierKind::Step) continue;
    std::vector<Family> candidates{base};
    if (base.residual) candidates.push_back(*base.residual);
    for (const auto& fam : candidates) {
      Verdict un = check_un(fam, l1, cfg.check);
      if (!un.is_null()) {
        run.add(fam.name, true, {{"skipped", "not un-null"}, {"un", verdict_brief(un)}}, false);
        continue;
      }
      std::optional<RateCert> cert = fam.measure_cert;
      if (!cert && fam.constant && is_zero(fam(1))) cert = RateCert::eventually_zero_after(0);
      if (!cert) {
        run.add(fam.name, false, {{"reason", "un-null without a measure certificate"}});
        continue;
      }
      json detail = {{"certificate", cert->describe()}};
      bool ok = false;
      try {
        auto r = extract_ae_subsequence(fam, *cert, cfg.extraction_k);
        ok = r.total < 1 && r.sample_violations == 0;
        for (unsigned k = 1; k <= cfg.extraction_k; ++k) {
          ok = ok && r.mu[k - 1] < pow2(-static_cast<std::int64_t>(k));
          ok = ok && r.indices[k - 1] > (k > 1 ? r.indices[k - 2] : 0);
        }
        detail["indices"] = r.indices;
        detail["total"] = to_string(r.total);
        detail["sample_violations"] = r.sample_violations;
      } catch (const Error& e) {
        detail["error"] = e.what();
      }
      run.add(fam.name, ok, std::move(detail));
    }
  }
  return run.finish();
}

LawReport law_weak_unit(const LawConfig& cfg) {
  Runner run("L14", cfg);
  FamilyParams params;
  params.gamma_k = cfg.gamma_k;
  Family fam = family("gamma_family", params);
  auto report = uo_subsequence_probe(fam, params.gamma, params.gamma_k, cfg.check);
  run.add("un-null|suml1@gamma", report.un_null.is_null(), {{"un", verdict_brief(report.un_null)}});
  for (const auto& ev : report.per_gamma) {
    run.add("gamma-" + std::to_string(ev.component), ev.witnesses_failure,
            {{"gamma", ev.gamma},
             {"matches_typewriter_prefix", ev.matches_typewriter_prefix},
             {"own_view", verdict_brief(ev.own_view)},
             {"index_view", verdict_brief(ev.index_view)}});
  }
  return run.finish();
}

using LawFn = std::function<LawReport(const LawConfig&)>;

const std::map<std::string, LawFn>& dispatch() {
  static const std::map<std::string, LawFn> table{
      {"L1", law_ops},          {"L2", law_dense_ideal},  {"L3", law_nested},      {"L4", law_quasi_interior},
      {"L5", law_metric},       {"L6", law_monotone},     {"L7", law_disjoint},    {"L8", law_atomic},
      {"L9", law_measure},      {"L10", law_strong_unit}, {"L11", law_interval},   {"L12", law_hausdorff},
      {"L13", law_extraction},  {"L14", law_weak_unit},
  };
  return table;
}

}  // namespace

bool reproduces(const Counterexample& c) {
  NormValue again = gauge(c.y, c.x, build_pair(c.pair));
  if (again.exact != c.gauge.exact) return false;
  if (again.exact) return again.power == c.gauge.power && again.powered == c.gauge.powered;
  return again.approx == c.gauge.approx;
}

std::vector<std::string> law_ids() {
  std::vector<std::string> out;
  for (const auto& l : catalog()) out.push_back(l.id);
  return out;
}

std::string law_title(std::string_view id) {
  for (const auto& l : catalog()) {
    if (l.id == id) return l.title;
  }
  throw Error(ErrorCode::UnknownLaw, std::string(id));
}

LawReport run_law(std::string_view id, const LawConfig& config) {
  auto it = dispatch().find(std::string(id));
  if (it == dispatch().end()) throw Error(ErrorCode::UnknownLaw, std::string(id));
  for (const auto& pd : config.pairs) build_pair(pd);
  for (const auto& name : config.families) family(name);
  return it->second(config);
}

json to_json(const Counterexample& c) {
  return {{"family", c.family}, {"pair", c.pair}, {"index", c.index}, {"y", to_text(c.y)},
          {"x", to_text(c.x)},  {"gauge", to_json(c.gauge)}, {"note", c.note}};
}

json to_json(const LawReport& r) {
  json cfg = {{"families", r.config.families},
              {"pairs", r.config.pairs},
              {"horizon", r.config.check.horizon},
              {"budget", r.config.check.budget},
              {"eps_grid", json::array()},
              {"seed", r.config.seed}};
  for (const auto& e : r.config.check.eps_grid) cfg["eps_grid"].push_back(to_string(e));
  json cases = json::array();
  for (const auto& c : r.cases) {
    cases.push_back({{"key", c.key}, {"pass", c.pass}, {"in_scope", c.in_scope}, {"detail", c.detail}});
  }
  json cx = json::array();
  for (const auto& c : r.counterexamples) cx.push_back(to_json(c));
  return {{"law", r.id},     {"title", law_title(r.id)}, {"pass", r.pass},
          {"config", cfg},   {"cases", cases},           {"counterexamples", cx}};
}

}  // namespace unlattice
