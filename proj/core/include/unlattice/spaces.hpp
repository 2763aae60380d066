#ifndef UNLATTICE_SPACES_HPP
#define UNLATTICE_SPACES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unlattice/element.hpp"
#include "unlattice/norm.hpp"

namespace unlattice {

enum class Ambient { L0UnitInterval, SequencesRN, ContinuousUnitInterval, DirectSumL0 };

enum class IdealKind {
  Lp,             // L_p[0,1] inside L0[0,1]
  EllP,           // l_p inside R^N
  C0,
  C00,
  EllInf,
  VanishAtZero,   // {f in C[0,1] : f(0) = 0}, sup norm
  ContinuousAll,  // C[0,1] inside itself, sup norm
  BandOver,       // L_p(A) inside L0[0,1]
  FiniteSumL1,    // finitely supported l1-sum of L1[0,1] copies
};

enum class UnitKind { Strong, QuasiInterior, Weak };
const char* to_string(UnitKind kind);

struct UnitWitness {
  UnitKind kind;
  Element element;
};

struct PairFlags {
  bool order_continuous = false;
  bool atomic = false;
  bool order_dense = false;
};

/// An ideal X of a normed lattice sitting inside an ambient vector lattice Y.
struct SpacePair {
  std::string id;
  Ambient ambient;
  IdealKind ideal;
  Rational p{1};
  Region band;  // BandOver only
  NormSpec norm;
  PairFlags flags;
  std::optional<UnitWitness> unit;

  /// Whether elements of this carrier live in the ambient lattice.
  bool accepts(CarrierKind kind) const;
  /// x belongs to the ideal X (finite norm plus the ideal's support conditions).
  bool in_ideal(const Element& x) const;
  NormValue ideal_norm(const Element& x) const { return unlattice::norm(x, norm); }
};

/// Parses descriptors such as "L1@L0", "L2@L0", "l1@RN", "linf@RN", "c0@RN",
/// "c00@RN", "X0@C01", "C@C01", "bandA(1)@L0", "suml1@gamma".
/// Throws Error(UnsupportedPair) for anything else.
SpacePair build_pair(std::string_view descriptor);

/// Descriptors accepted by build_pair, in a fixed order.
std::vector<std::string> known_pairs();

enum class TestVectorProvenance { UnitSingleton, DenseIdealBasis };

struct TestVectorSet {
  std::vector<Element> vectors;
  TestVectorProvenance provenance;
};

constexpr unsigned kDefaultBudget = 16;

/// {u} when the pair declares a strong or quasi-interior unit, otherwise the
/// first `budget` elements of a norm-dense sub-ideal basis.
TestVectorSet test_vectors(const SpacePair& pair, unsigned budget = kDefaultBudget);
/// Always the dense-ideal basis, even when a unit exists.
TestVectorSet dense_basis(const SpacePair& pair, unsigned budget = kDefaultBudget);

/// Some x in X with 0 < x <= |y|; throws Error(NotDense) when none exists.
Element order_dense_witness(const SpacePair& pair, const Element& y);

}  // namespace unlattice

#endif  // UNLATTICE_SPACES_HPP
