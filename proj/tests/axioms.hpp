// Random elements per space pair and executable neighbourhood-base checks.
#ifndef UNLATTICE_TESTS_AXIOMS_HPP
#define UNLATTICE_TESTS_AXIOMS_HPP

#include <map>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "unlattice/convergence.hpp"
#include "unlattice/serialize.hpp"

namespace unlattice::oracle {

/// Draws ambient elements y and positive ideal elements x for one pair.
class PairSampler {
 public:
  PairSampler(const SpacePair& pair, std::uint64_t seed) : pair_(pair), gen_(seed) {}

  /// Step or piecewise-linear on L0 pairs, chosen per draw; later draws reuse `kind`.
  Element y(std::optional<CarrierKind> kind = std::nullopt) {
    switch (pair_.ambient) {
      case Ambient::L0UnitInterval: {
        CarrierKind k = kind ? *kind : (coin() ? CarrierKind::Step : CarrierKind::PiecewiseLinear);
        if (pair_.ideal == IdealKind::BandOver) k = CarrierKind::Step;  // band cut-offs are not continuous
        if (k == CarrierKind::Step) return gen_.step();
        return gen_.pl();
      }
      case Ambient::SequencesRN:
        return gen_.seq();
      case Ambient::ContinuousUnitInterval:
        return gen_.pl();
      case Ambient::DirectSumL0: {
        std::map<DirectSumElem::ComponentId, StepFn> parts;
        int count = std::uniform_int_distribution<int>(0, 3)(gen_.engine());
        for (int i = 0; i < count; ++i) parts[std::uniform_int_distribution<int>(0, 5)(gen_.engine())] = gen_.step();
        return DirectSumElem(std::move(parts));
      }
    }
    return gen_.step();
  }

  /// 0 <= x in X, of the given carrier kind.
  Element x(CarrierKind kind) {
    for (;;) {
      Element raw = abs_val(y(kind));
      Element cand = into_ideal(raw);
      if (pair_.in_ideal(cand) && is_positive(cand)) return cand;
    }
  }

  Rational eps() { return gen_.positive_rational(); }
  bool coin() { return std::uniform_int_distribution<int>(0, 1)(gen_.engine()) == 1; }
  std::mt19937_64& engine() { return gen_.engine(); }

 private:
  Element into_ideal(const Element& raw) {
    switch (pair_.ideal) {
      case IdealKind::BandOver:
        return restrict(std::get<StepFn>(raw), pair_.band);
      case IdealKind::EllP:
      case IdealKind::C0:
      case IdealKind::C00: {
        const auto& s = std::get<TailSeq>(raw);
        return TailSeq::zero_tail(s.prefix());
      }
      case IdealKind::VanishAtZero: {
        const auto& f = std::get<PLFn>(raw);
        auto w = f.node_values();
        w.front() = 0;
        return PLFn(f.breakpoints(), std::move(w));
      }
      default:
        return raw;
    }
  }

  const SpacePair& pair_;
  Generator gen_;
};

/// Smallest-effort rational r with r >= ||.|| given its exact p-th power.
inline Rational root_ceil(const NormValue& v) {
  const Rational& powered = v.powered.value();
  Rational r = root_floor(powered, v.power);
  const Rational step = pow2(-40);
  while (pow(r, v.power) < powered) r += step;
  return r;
}

/// a + b >= g for norm values with exact powers 1 or 2.
inline bool sum_dominates(const NormValue& g, const NormValue& a, const NormValue& b) {
  if (a.is_infinite() || b.is_infinite()) return true;
  if (g.is_infinite()) return false;
  if (g.power == 1) return g.powered.value() <= a.powered.value() + b.powered.value();
  // g <= a + b  <=>  g^2 - a^2 - b^2 <= 2ab
  Rational lhs = g.powered.value() - a.powered.value() - b.powered.value();
  if (lhs <= 0) return true;
  return lhs * lhs <= 4 * a.powered.value() * b.powered.value();
}

inline bool leq_value(const NormValue& a, const NormValue& b) {
  if (b.is_infinite()) return true;
  if (a.is_infinite()) return false;
  return a.powered.value() <= b.powered.value();
}

struct AxiomTally {
  long triples = 0;
  long perturbations = 0;   // y + z checks carried out
  long skipped = 0;         // no admissible perturbation found
  long failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

/// Runs the neighbourhood-base axioms, monotonicity, subadditivity and the truncation bound
/// on `count` sampled (y, eps, x) triples.
inline AxiomTally neighbourhood_axioms(const SpacePair& pair, long count, std::uint64_t seed) {
  PairSampler s(pair, seed);
  AxiomTally t;
  for (long i = 0; i < count; ++i) {
    Element y = s.y();
    const CarrierKind k = kind_of(y);
    Element x1 = s.x(k);
    Element x2 = s.x(k);
    Rational e1 = s.eps();
    Rational e2 = s.eps();
    auto where = [&](const char* what) {
      std::ostringstream o;
      o << pair.id << " #" << i << " " << what << ": y=" << to_text(y) << " x1=" << to_text(x1)
        << " x2=" << to_text(x2) << " e1=" << to_string(e1) << " e2=" << to_string(e2);
      return o.str();
    };
    ++t.triples;

    // 0 lies in every basic neighbourhood.
    if (!in_un_neighborhood(zero_of(k), e1, x1, pair)) t.fail(where("zero"));

    NormValue g1 = gauge(y, x1, pair);
    NormValue g2 = gauge(y, x2, pair);
    Element x12 = join(x1, x2);
    NormValue g12 = gauge(y, x12, pair);

    // Truncation bound and monotonicity in x.
    if (!leq_value(g1, pair.ideal_norm(x1))) t.fail(where("truncation"));
    if (!leq_value(g1, g12) || !leq_value(g2, g12)) t.fail(where("monotone"));
    if (!sum_dominates(g12, g1, g2)) t.fail(where("subadditive"));

    // Intersection: U(min eps, x1 v x2) is inside U(e1, x1) and U(e2, x2).
    Rational emin = e1 < e2 ? e1 : e2;
    if (in_un_neighborhood(y, emin, x12, pair) &&
        !(in_un_neighborhood(y, e1, x1, pair) && in_un_neighborhood(y, e2, x2, pair))) {
      t.fail(where("intersection"));
    }

    // Translation: y in U(e1, x1) and z in U(delta, x1) give y + z in U(e1, x1).
    if (g1.below(e1)) {
      Rational delta = e1 - root_ceil(g1);
      if (delta <= 0) {
        ++t.skipped;
        continue;
      }
      Element z = s.y(k);
      bool found = false;
      for (int shrink = 0; shrink < 40 && !found; ++shrink) {
        if (in_un_neighborhood(z, delta, x1, pair)) {
          found = true;
        } else {
          z = scale(ratio(1, 2), z);
        }
      }
      if (!found) {
        ++t.skipped;
        continue;
      }
      ++t.perturbations;
      if (!in_un_neighborhood(y + z, e1, x1, pair)) t.fail(where("translation"));
    }
  }
  return t;
}

}  // namespace unlattice::oracle

#endif  // UNLATTICE_TESTS_AXIOMS_HPP
