#include "unlattice/spaces.hpp"

#include <stdexcept>

#include "unlattice/error.hpp"

namespace unlattice {

const char* to_string(UnitKind kind) {
  switch (kind) {
    case UnitKind::Strong: return "strong";
    case UnitKind::QuasiInterior: return "quasi_interior";
    case UnitKind::Weak: return "weak";
  }
  return "?";
}

namespace {

// min(2t, 1): vanishes at 0 and generates a norm-dense ideal of {f : f(0) = 0}.
PLFn vanishing_ramp() { return PLFn({Rational(0), ratio(1, 2), Rational(1)}, {Rational(0), Rational(1), Rational(1)}); }

Region band_region() { return Region({{Rational(0), ratio(1, 2)}}); }

Region complement(const Region& r) {
  std::vector<Interval> out;
  Rational cursor = 0;
  for (const auto& p : r.pieces()) {
    if (cursor < p.lo) out.push_back({cursor, p.lo});
    cursor = p.hi;
  }
  if (cursor < 1) out.push_back({cursor, Rational(1)});
  return Region(std::move(out));
}

// Fixed consistency table; a violation is a programming error in build_pair.
void validate(const SpacePair& pair) {
  auto require = [&](bool ok, const char* rule) {
    if (!ok) throw std::logic_error("pair " + pair.id + " violates flag rule: " + rule);
  };
  const auto& f = pair.flags;
  switch (pair.ideal) {
    case IdealKind::Lp:
    case IdealKind::EllP:
    case IdealKind::FiniteSumL1:
    case IdealKind::C0:
    case IdealKind::C00:
      require(f.order_continuous, "p < infinity and c0-type ideals are order continuous");
      break;
    case IdealKind::BandOver:
      require(f.order_continuous, "band of L_p is order continuous");
      require(f.order_dense == (pair.band.measure() == 1), "proper band is not order dense");
      break;
    case IdealKind::EllInf:
      require(!f.order_continuous, "l_inf is not order continuous");
      require(pair.unit && pair.unit->kind == UnitKind::Strong, "l_inf has the strong unit 1");
      break;
    case IdealKind::VanishAtZero:
    case IdealKind::ContinuousAll:
      require(!f.order_continuous, "sup-normed C spaces are not order continuous");
      break;
  }
  require(f.atomic == (pair.ambient == Ambient::SequencesRN), "exactly the R^N pairs are atomic");
  if (pair.unit) require(pair.in_ideal(pair.unit->element) && is_positive(pair.unit->element), "unit lies in X_+");
}

SpacePair make(std::string id, Ambient ambient, IdealKind ideal, NormSpec norm, PairFlags flags,
               std::optional<UnitWitness> unit, Rational p = Rational(1)) {
  SpacePair pair{std::move(id), ambient, ideal, std::move(p), Region::unit(), std::move(norm), flags, std::move(unit)};
  return pair;
}

[[noreturn]] void unsupported(std::string_view d) {
  throw Error(ErrorCode::UnsupportedPair, "unsupported pair descriptor '" + std::string(d) + "'");
}

Rational parse_exponent(std::string_view text, std::string_view descriptor) {
  try {
    Rational p = parse_rational(text);
    if (p < 1) unsupported(descriptor);
    return p;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::UnsupportedPair) throw;
    unsupported(descriptor);
  }
}

}  // namespace

bool SpacePair::accepts(CarrierKind kind) const {
  switch (ambient) {
    case Ambient::L0UnitInterval: return kind == CarrierKind::Step || kind == CarrierKind::PiecewiseLinear;
    case Ambient::SequencesRN: return kind == CarrierKind::Sequence;
    case Ambient::ContinuousUnitInterval: return kind == CarrierKind::PiecewiseLinear;
    case Ambient::DirectSumL0: return kind == CarrierKind::DirectSum;
  }
  return false;
}

bool SpacePair::in_ideal(const Element& x) const {
  if (!accepts(kind_of(x))) return false;
  // Bounded functions have finite L1, Lp and sup norms; only unit norms and
  // sequences can blow up.
  const bool may_blow_up = kind_of(x) == CarrierKind::Sequence || norm.kind == NormSpec::Kind::Unit;
  if (may_blow_up && ideal_norm(x).is_infinite()) return false;
  switch (ideal) {
    case IdealKind::C0:
    case IdealKind::C00:
    case IdealKind::EllP: return std::get<TailSeq>(x).tail_kind() == TailSeq::TailKind::Zero;
    case IdealKind::VanishAtZero: return std::get<PLFn>(x)(Rational(0)) == 0;
    case IdealKind::BandOver: return level_measure(x, Rational(0), complement(band)) == 0;
    default: return true;
  }
}

SpacePair build_pair(std::string_view descriptor) {
  auto at = descriptor.find('@');
  if (at == std::string_view::npos) unsupported(descriptor);
  std::string_view ideal = descriptor.substr(0, at);
  std::string_view ambient = descriptor.substr(at + 1);
  std::string id(descriptor);
  SpacePair pair;

  if (ambient == "L0" && ideal.starts_with("bandA(") && ideal.ends_with(")")) {
    Rational p = parse_exponent(ideal.substr(6, ideal.size() - 7), descriptor);
    Region a = band_region();
    pair = make(id, Ambient::L0UnitInterval, IdealKind::BandOver, NormSpec::lp(p), {true, false, false},
                UnitWitness{UnitKind::QuasiInterior, StepFn::indicator(a.pieces()[0].lo, a.pieces()[0].hi)}, p);
    pair.band = a;
  } else if (ambient == "L0" && ideal.size() > 1 && ideal[0] == 'L') {
    Rational p = parse_exponent(ideal.substr(1), descriptor);
    pair = make(id, Ambient::L0UnitInterval, IdealKind::Lp, NormSpec::lp(p), {true, false, true},
                UnitWitness{UnitKind::QuasiInterior, StepFn::constant(Rational(1))}, p);
  } else if (ambient == "RN" && ideal == "linf") {
    pair = make(id, Ambient::SequencesRN, IdealKind::EllInf, NormSpec::ell_inf(), {false, true, true},
                UnitWitness{UnitKind::Strong, TailSeq::ones()});
  } else if (ambient == "RN" && ideal == "c0") {
    pair = make(id, Ambient::SequencesRN, IdealKind::C0, NormSpec::ell_inf(), {true, true, true}, std::nullopt);
  } else if (ambient == "RN" && ideal == "c00") {
    pair = make(id, Ambient::SequencesRN, IdealKind::C00, NormSpec::ell_inf(), {true, true, true}, std::nullopt);
  } else if (ambient == "RN" && ideal.size() > 1 && ideal[0] == 'l') {
    Rational p = parse_exponent(ideal.substr(1), descriptor);
    pair = make(id, Ambient::SequencesRN, IdealKind::EllP, p == 1 ? NormSpec::ell1() : NormSpec::lp(p),
                {true, true, true}, std::nullopt, p);
  } else if (ambient == "C01" && ideal == "X0") {
    pair = make(id, Ambient::ContinuousUnitInterval, IdealKind::VanishAtZero, NormSpec::sup(), {false, false, true},
                UnitWitness{UnitKind::QuasiInterior, vanishing_ramp()});
  } else if (ambient == "C01" && ideal == "C") {
    pair = make(id, Ambient::ContinuousUnitInterval, IdealKind::ContinuousAll, NormSpec::sup(), {false, false, true},
                UnitWitness{UnitKind::Strong, PLFn::constant(Rational(1))});
  } else if (ambient == "gamma" && ideal == "suml1") {
    pair = make(id, Ambient::DirectSumL0, IdealKind::FiniteSumL1, NormSpec::sum_l1(), {true, false, true}, std::nullopt);
  } else {
    unsupported(descriptor);
  }
  validate(pair);
  return pair;
}

std::vector<std::string> known_pairs() {
  return {"L1@L0", "L2@L0", "bandA(1)@L0", "l1@RN", "l2@RN", "c0@RN", "c00@RN", "linf@RN", "X0@C01", "C@C01", "suml1@gamma"};
}

TestVectorSet dense_basis(const SpacePair& pair, unsigned budget) {
  if (budget == 0) throw Error(ErrorCode::BadParams, "budget must be at least 1");
  std::vector<Element> out;
  switch (pair.ideal) {
    case IdealKind::Lp: {
      unsigned depth = floor_log2(budget);
      Rational width = pow2(-static_cast<std::int64_t>(depth));
      for (unsigned i = 0; i < (1u << depth); ++i) out.push_back(StepFn::indicator(width * i, width * (i + 1)));
      break;
    }
    case IdealKind::BandOver: {
      // Dyadic blocks fine enough that `budget` of them fit inside the band.
      unsigned depth = floor_log2(budget);
      while (out.size() < budget && depth < 40) {
        out.clear();
        Rational width = pow2(-static_cast<std::int64_t>(depth));
        for (unsigned long i = 0; (width * i) < 1 && out.size() < budget; ++i) {
          Rational lo = width * i, hi = width * (i + 1);
          bool inside = false;
          for (const auto& p : pair.band.pieces()) inside = inside || (p.lo <= lo && hi <= p.hi);
          if (inside) out.push_back(StepFn::indicator(lo, hi));
        }
        if (out.size() < budget) ++depth;
      }
      break;
    }
    case IdealKind::EllP:
    case IdealKind::C0:
    case IdealKind::C00:
      for (Index i = 1; i <= budget; ++i) out.push_back(TailSeq::unit(i));
      break;
    case IdealKind::EllInf:
      out.push_back(TailSeq::ones());
      for (Index i = 1; i < budget; ++i) out.push_back(TailSeq::unit(i));
      break;
    case IdealKind::VanishAtZero:
      // Ramps vanishing on [0, 2^-k] and equal to 1 from 2^(1-k) on.
      for (unsigned k = 1; k <= budget; ++k) {
        Rational lo = pow2(-static_cast<std::int64_t>(k));
        Rational hi = pow2(1 - static_cast<std::int64_t>(k));
        std::vector<Rational> t{Rational(0), lo, hi};
        std::vector<Rational> w{Rational(0), Rational(0), Rational(1)};
        if (hi < 1) {
          t.push_back(1);
          w.push_back(1);
        }
        out.push_back(PLFn(std::move(t), std::move(w)));
      }
      break;
    case IdealKind::ContinuousAll: {
      out.push_back(PLFn::constant(Rational(1)));
      Rational width = ratio(1, static_cast<long>(budget > 1 ? budget - 1 : 1));
      for (unsigned i = 0; i + 1 < budget; ++i) out.push_back(PLFn::tent(width * i, width * (i + 1)));
      break;
    }
    case IdealKind::FiniteSumL1:
      for (unsigned c = 0; c < budget; ++c) {
        out.push_back(DirectSumElem({{static_cast<DirectSumElem::ComponentId>(c), StepFn::constant(Rational(1))}}));
      }
      break;
  }
  return {std::move(out), TestVectorProvenance::DenseIdealBasis};
}

TestVectorSet test_vectors(const SpacePair& pair, unsigned budget) {
  if (budget == 0) throw Error(ErrorCode::BadParams, "budget must be at least 1");
  if (pair.unit && pair.unit->kind != UnitKind::Weak) {
    return {{pair.unit->element}, TestVectorProvenance::UnitSingleton};
  }
  return dense_basis(pair, budget);
}

Element order_dense_witness(const SpacePair& pair, const Element& y) {
  if (!pair.accepts(kind_of(y))) throw Error(ErrorCode::KindMismatch, "element not in the ambient lattice of " + pair.id);
  if (is_zero(y)) throw Error(ErrorCode::BadParams, "order density witness needs y != 0");
  Element ay = abs_val(y);
  Element x;
  switch (pair.ambient) {
    case Ambient::L0UnitInterval: {
      if (const auto* f = std::get_if<StepFn>(&ay)) {
        // |y| on the first piece where it is positive (and inside the band, if any).
        Region allowed = pair.ideal == IdealKind::BandOver ? pair.band : Region::unit();
        StepFn g = restrict(*f, allowed);
        const auto& bp = g.breakpoints();
        const auto& v = g.values();
        std::size_t i = 0;
        while (i < v.size() && v[i] == 0) ++i;
        if (i == v.size()) {
          throw Error(ErrorCode::NotDense, "|y| lies in the disjoint complement of " + pair.id +
                                               " (order_dense=" + (pair.flags.order_dense ? "true" : "false") + ")");
        }
        x = StepFn::indicator(bp[i], bp[i + 1], v[i]);
      } else {
        // Half the peak of |y| on the first interval where |y| exceeds it.
        Rational peak = norm(ay, NormSpec::sup()).value().value();
        Region allowed = pair.ideal == IdealKind::BandOver ? pair.band : Region::unit();
        Region top = superlevel_set(ay, peak / 2);
        std::optional<Interval> piece;
        for (const auto& p : top.pieces()) {
          for (const auto& a : allowed.pieces()) {
            Rational lo = std::max(p.lo, a.lo), hi = std::min(p.hi, a.hi);
            if (!piece && lo < hi) piece = Interval{lo, hi};
          }
        }
        if (!piece) throw Error(ErrorCode::NotDense, "|y| lies in the disjoint complement of " + pair.id);
        x = StepFn::indicator(piece->lo, piece->hi, peak / 2);
        // The witness lives in the step carrier; compare through the step restriction of |y|.
        return x;
      }
      break;
    }
    case Ambient::SequencesRN: {
      const auto& s = std::get<TailSeq>(ay);
      Index n = 1;
      while (s(n) == 0) ++n;  // terminates: y != 0 and an affine tail has at most one root
      std::vector<Rational> p(n, Rational(0));
      p.back() = s(n);
      x = TailSeq::zero_tail(std::move(p));
      break;
    }
    case Ambient::ContinuousUnitInterval:
      x = pair.ideal == IdealKind::VanishAtZero ? meet(ay, vanishing_ramp()) : ay;
      break;
    case Ambient::DirectSumL0:
      x = ay;
      break;
  }
  if (is_zero(x) || !is_positive(x) || !leq(x, ay) || !pair.in_ideal(x)) {
    throw std::logic_error("order density witness construction failed for " + pair.id);
  }
  return x;
}

}  // namespace unlattice
