#ifndef UNLATTICE_LAWS_HPP
#define UNLATTICE_LAWS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "unlattice/convergence.hpp"
#include "unlattice/family.hpp"

namespace unlattice {

struct LawConfig {
  std::vector<std::string> families;  // empty: the law's default selection
  std::vector<std::string> pairs;     // empty: the law's default selection
  CheckConfig check;
  unsigned extraction_k = 16;  // L13
  Index gamma_k = 64;          // L14
  std::uint64_t seed = 0;
};

/// A gauge that can be recomputed from the stored data alone.
struct Counterexample {
  std::string family;
  std::string pair;
  Index index = 0;
  Element y;  // f_index
  Element x;  // test vector
  NormValue gauge;
  std::string note;
};

/// Recomputes gauge(y, x, pair) and compares it with the stored value exactly.
bool reproduces(const Counterexample& c);

struct LawCase {
  std::string key;  // "family|pair" or similar; cases are sorted by key
  bool pass = false;
  bool in_scope = true;  // false when the law's hypothesis does not hold for this case
  nlohmann::json detail;
};

struct LawReport {
  std::string id;
  LawConfig config;
  std::vector<LawCase> cases;
  bool pass = false;
  std::vector<Counterexample> counterexamples;
};

/// "L1" ... "L14".
std::vector<std::string> law_ids();
std::string law_title(std::string_view id);

/// Throws Error(UnknownLaw) for ids outside law_ids(), Error(BadParams) or
/// Error(UnsupportedPair) when the configuration names unknown families or pairs.
LawReport run_law(std::string_view id, const LawConfig& config = {});

nlohmann::json to_json(const Counterexample& c);
nlohmann::json to_json(const LawReport& r);

}  // namespace unlattice

#endif  // UNLATTICE_LAWS_HPP
