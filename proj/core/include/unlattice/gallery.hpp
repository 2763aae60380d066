#ifndef UNLATTICE_GALLERY_HPP
#define UNLATTICE_GALLERY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "unlattice/convergence.hpp"
#include "unlattice/family.hpp"

namespace unlattice {

struct FamilyParams {
  /// gamma_family only: finite strictly increasing index tuples, entries > gamma_k dropped.
  std::vector<std::vector<Index>> gamma = default_gamma();
  Index gamma_k = 64;

  static std::vector<std::vector<Index>> default_gamma();
};

/// Builds a gallery family by name. Throws Error(BadParams) for unknown names or bad params.
Family family(std::string_view name, const FamilyParams& params = {});

/// T_n: indicator of [i 2^-j, (i+1) 2^-j) for n = 2^j + i, 0 <= i < 2^j.
StepFn typewriter_element(Index n);
/// Tent of height 1 on [1/(n+1), 1/n].
PLFn moving_bump_element(Index n);
/// k -> T_{positions[k-1]}, with the a.e. certificates its positions allow.
Family typewriter_subsequence(std::vector<Index> positions, std::string name);

struct GalleryEntry {
  std::string name;
  std::string params;
  std::string summary;
  CarrierKind kind;
};
std::vector<GalleryEntry> gallery_entries();

struct ExpectedRow {
  std::string family;
  std::string pair;  // descriptor; for pair-free modes, the pair the check is reported under
  Mode mode;
  VerdictClass expected;
};
std::vector<ExpectedRow> expected_table();

}  // namespace unlattice

#endif  // UNLATTICE_GALLERY_HPP
