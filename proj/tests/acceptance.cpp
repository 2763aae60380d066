// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <bit>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "axioms.hpp"
#include "oracle.hpp"
#include "unlattice/extraction.hpp"
#include "unlattice/gallery.hpp"
#include "unlattice/laws.hpp"
#include "unlattice/serialize.hpp"

using namespace unlattice;

namespace {

struct Tally {
  bool pass = true;
  std::ostringstream notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes << "\n    failed: " << what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<void(Tally&)> body;
};

bool same_class(const Verdict& v, VerdictClass c) { return v.cls == c; }

// ---- 1 -------------------------------------------------------------------------

void gallery_matrix(Tally& o) {
  const Element one_seq = TailSeq::ones();
  {
    Family f = family("unit_vectors");
    Verdict l1 = check_un(f, build_pair("l1@RN"));
    Verdict linf = check_un(f, build_pair("linf@RN"));
    o.require(l1.is_null(), "unit_vectors null under l1@RN");
    o.require(same_class(linf, VerdictClass::Refuted) && linf.refutation && linf.refutation->eps == 1 &&
                  linf.refutation->witness && *linf.refutation->witness == one_seq,
              "unit_vectors Refuted(eps=1, x=1) under linf@RN");
  }
  {
    Family f = family("moving_bump");
    Verdict x0 = check_un(f, build_pair("X0@C01"));
    Verdict c = check_un(f, build_pair("C@C01"));
    o.require(x0.is_null(), "moving_bump null under X0@C01");
    o.require(same_class(c, VerdictClass::Refuted) && c.refutation && c.refutation->eps == 1,
              "moving_bump Refuted(eps=1) under C@C01");
  }
  {
    SpacePair linf = build_pair("linf@RN");
    Verdict v = check_un(family("scaled_ramp"), linf);
    o.require(same_class(v, VerdictClass::Refuted), "scaled_ramp Refuted under linf@RN");
    const TailSeq z = TailSeq::affine_tail({}, 1, 0);  // (1, 2, 3, ...)
    for (Rational t : {Rational(1), ratio(1, 1000), ratio(1, 1000000), pow2(-40), pow2(-200)}) {
      NormValue g = gauge(scale(t, z), one_seq, linf);
      o.require(g.powered == ExtScalar(Rational(1)), "gauge(t z, 1) = 1 for t = " + to_string(t));
      o.require(!in_un_neighborhood(scale(t, z), Rational(1), one_seq, linf), "t z outside U(1, 1)");
    }
  }
  {
    Family tw = family("typewriter");
    SpacePair l1 = build_pair("L1@L0");
    Verdict m = check_in_measure(tw);
    o.require(same_class(m, VerdictClass::CertifiedNull), "typewriter in-measure CertifiedNull");
    Verdict ae = check_ae(tw);
    o.require(same_class(ae, VerdictClass::Refuted), "typewriter a.e. Refuted");
    const Element one = StepFn::constant(Rational(1));
    bool exact = true;
    for (Index n = 1; n <= 4096; ++n) {
      // Block length 2^-floor(log2 n), from the bit width of n.
      Rational expected = pow2(-static_cast<std::int64_t>(std::bit_width(n) - 1));
      if (gauge(tw(n), one, l1).powered != ExtScalar(expected)) {
        exact = false;
        o.notes << "\n    typewriter gauge mismatch at n=" << n;
        break;
      }
    }
    o.require(exact, "typewriter gauges equal 2^-floor(log2 n) for n = 1..4096");
  }
}

// ---- 2 -------------------------------------------------------------------------

void law_suite(Tally& o) {
  for (const auto& id : law_ids()) {
    LawReport r = run_law(id);
    o.require(r.pass, id + " passes");
    for (const auto& c : r.counterexamples) o.require(reproduces(c), id + " counterexample reproduces");
    o.notes << "\n    " << id << ' ' << (r.pass ? "pass" : "FAIL") << " (" << r.cases.size() << " cases)";
  }
}

// ---- 3 -------------------------------------------------------------------------

void axioms(Tally& o) {
  std::uint64_t seed = 1;
  for (const auto& pd : known_pairs()) {
    auto t = oracle::neighbourhood_axioms(build_pair(pd), 1000, seed++);
    o.require(t.triples == 1000 && t.failures == 0, pd + ": " + t.first_failure);
    o.notes << "\n    " << pd << " triples=" << t.triples << " translations=" << t.perturbations
            << " failures=" << t.failures;
  }
}

// ---- 4 -------------------------------------------------------------------------

void quasi_interior(Tally& o) {
  for (const char* pd : {"L1@L0", "L2@L0", "linf@RN"}) {
    SpacePair pair = build_pair(pd);
    for (const auto& e : gallery_entries()) {
      Family fam = family(e.name);
      if (!pair.accepts(fam.kind)) continue;
      Verdict a = check_un_with(fam, pair, {pair.unit->element});
      Verdict b = check_un_with(fam, pair, dense_basis(pair, 16).vectors);
      o.require(a.cls == b.cls, e.name + " on " + pd + ": " + to_string(a.cls) + " vs " + to_string(b.cls));
    }
  }
}

// ---- 5 -------------------------------------------------------------------------

void measure_equivalence(Tally& o) {
  SpacePair l1 = build_pair("L1@L0");
  SpacePair l2 = build_pair("L2@L0");
  for (const auto& e : gallery_entries()) {
    Family fam = family(e.name);
    if (fam.kind != CarrierKind::Step && fam.kind != CarrierKind::PiecewiseLinear) continue;
    Verdict m = check_in_measure(fam);
    Verdict u1 = check_un(fam, l1);
    Verdict u2 = check_un(fam, l2);
    o.require(outcome(u1) == outcome(m), e.name + ": L1 un vs measure");
    o.require(outcome(u2) == outcome(m), e.name + ": L2 un vs measure");
    o.notes << "\n    " << e.name << " measure=" << to_string(m.cls) << " L1=" << to_string(u1.cls)
            << " L2=" << to_string(u2.cls);
  }
}

// ---- 6 -------------------------------------------------------------------------

void extraction(Tally& o) {
  Family tw = family("typewriter");
  ExtractionOptions opts;
  opts.sample_points = 10000;
  auto r = extract_ae_subsequence(tw, *tw.measure_cert, 16, opts);
  o.require(r.indices.size() == 16, "16 indices");
  for (unsigned k = 1; k <= 16 && k <= r.mu.size(); ++k) {
    // Independent recomputation on the exact element.
    Rational mu = level_measure(tw(r.indices[k - 1]), pow2(-static_cast<std::int64_t>(k)));
    o.require(mu == r.mu[k - 1] && mu < pow2(-static_cast<std::int64_t>(k)), "mu_k < 2^-k at k=" + std::to_string(k));
  }
  Rational sum = 0;
  for (const auto& m : r.mu) sum += m;
  o.require(sum == r.total && sum < 1, "sum of mu_k < 1 exactly");
  o.require(r.samples == 10000 && r.sample_violations == 0, "pointwise bounds at 10^4 sampled points");
  o.notes << "\n    total=" << to_string(r.total) << " last index=" << r.indices.back();
}

// ---- 7 -------------------------------------------------------------------------

void gamma_probe(Tally& o) {
  FamilyParams p;
  o.require(p.gamma.size() == 8, "8 tuples");
  auto run = [&] { return uo_subsequence_probe(family("gamma_family", p), p.gamma, p.gamma_k); };
  auto a = run();
  auto b = run();
  o.require(a.un_null.is_null(), "part (a): un-null under suml1@gamma");
  for (const auto& ev : a.per_gamma) {
    if (ev.matches_typewriter_prefix) {
      o.require(ev.witnesses_failure, "part (b): component " + std::to_string(ev.component) + " fails a.e.");
    }
  }
  o.require(to_json(a).dump() == to_json(b).dump(), "byte-identical report");
}

// ---- 8 -------------------------------------------------------------------------

void hausdorff(Tally& o) {
  Family off = family("off_band");
  const Element y = off(1);
  const std::vector<Element> candidates{StepFn::constant(Rational(0)), y};
  auto dense = limit_uniqueness_probe(build_pair("L1@L0"), off, candidates);
  auto band = limit_uniqueness_probe(build_pair("bandA(1)@L0"), off, candidates);
  o.require(dense.size() == 1 && dense[0] == y, "exactly one limit on L1@L0");
  o.require(band.size() >= 2, "at least two limits on bandA(1)@L0");
}

// ---- 9 -------------------------------------------------------------------------

Rational apply(LatticeOp op, const Rational& a, const Rational& b) {
  switch (op) {
    case LatticeOp::Meet: return a < b ? a : b;
    case LatticeOp::Join: return a < b ? b : a;
    case LatticeOp::Sum: return a + b;
    case LatticeOp::Diff: return a - b;
  }
  return 0;
}

void oracle_equivalence(Tally& o) {
  oracle::Generator gen(9);
  long mismatches = 0;
  for (int pairs = 0; pairs < 500; ++pairs) {
    const bool step = pairs % 2 == 0;
    Element a = step ? Element(gen.step()) : Element(gen.pl());
    Element b = step ? Element(gen.step()) : Element(gen.pl());
    std::vector<std::pair<LatticeOp, Element>> results;
    for (LatticeOp op : {LatticeOp::Meet, LatticeOp::Join, LatticeOp::Sum, LatticeOp::Diff}) {
      results.emplace_back(op, combine(a, b, op));
    }
    Element abs_a = abs_val(a);
    for (long k = 0; k < oracle::kGrid; ++k) {
      const Rational t = oracle::grid_point(k);
      const Rational va = oracle::value(a, t);
      const Rational vb = oracle::value(b, t);
      for (const auto& [op, r] : results) {
        if (oracle::value(r, t) != apply(op, va, vb)) ++mismatches;
      }
      if (oracle::value(abs_a, t) != abs(va)) ++mismatches;
    }
    // Level sets: exact on the generated elements, whose breakpoints sit on the grid.
    const Rational eps = gen.positive_rational();
    for (const Element* e : {&a, &b}) {
      if (level_measure(*e, eps) != oracle::grid_level_measure(*e, eps)) ++mismatches;
    }
    if (step) {
      for (const auto& [op, r] : results) {
        if (level_measure(r, eps) != oracle::grid_level_measure(r, eps)) ++mismatches;
      }
    }
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " grid mismatches");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "gallery verdict matrix", 5, gallery_matrix},
      {2, "law suite L1-L14 at defaults", 60, law_suite},
      {3, "neighbourhood-base axioms, 1000 triples per pair", 10, axioms},
      {4, "quasi-interior reduction", 10, quasi_interior},
      {5, "measure equivalence under L1 and L2", 10, measure_equivalence},
      {6, "extraction on typewriter, K = 16", 5, extraction},
      {7, "gamma counterexample probe", 10, gamma_probe},
      {8, "Hausdorff dichotomy", 2, hausdorff},
      {9, "grid oracle equivalence on 500 pairs", 30, oracle_equivalence},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Tally o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s) o.require(false, "runtime over budget");
    all = all && o.pass;
    std::cout << "criterion " << c.id << ' ' << (o.pass ? "PASS" : "FAIL") << ' ' << c.title << " (" << std::fixed
              << std::setprecision(2) << secs << " s, budget " << c.budget_s << " s)" << o.notes.str() << std::endl;
  }
  return all ? 0 : 1;
}
