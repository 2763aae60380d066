#ifndef UNLATTICE_EXTRACTION_HPP
#define UNLATTICE_EXTRACTION_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "unlattice/convergence.hpp"
#include "unlattice/family.hpp"

namespace unlattice {

struct ExtractionOptions {
  Index index_cap = Index{1} << 20;
  long sample_points = 10000;  // t = (2i+1) / (2 * sample_points)
};

struct ExtractionResult {
  std::string family;
  std::vector<Index> indices;     // n_1 < ... < n_K
  std::vector<Rational> mu;       // mu_k = level_measure(f_{n_k}, 2^-k)
  std::vector<Rational> tail;     // tail[j-1] = sum_{k >= j} mu_k
  Rational total{0};              // sum of all mu_k
  long samples = 0;               // sampled points checked
  long sample_violations = 0;     // points outside S_k with |f_{n_k}(t)| > 2^-k
  std::vector<long> outside;      // outside[j-1] = sampled points outside the union of S_k, k >= j
};

/// Picks n_k = smallest n > n_{k-1} with mu{|f_n| > 2^-k} < 2^-k for k = 1..K.
/// Throws CertificateViolated when the measure certificate is contradicted by an
/// exact computation, HorizonExhausted when no admissible index fits under the cap.
ExtractionResult extract_ae_subsequence(const Family& fam, const RateCert& cert, unsigned k_count,
                                        const ExtractionOptions& opts = {});

/// k -> f_{n_k}; certificates of the source family carry over since n_k >= k.
Family extracted_family(const Family& fam, const ExtractionResult& result);

struct GammaEvidence {
  std::size_t component = 0;
  std::vector<Index> gamma;
  /// Component `component` read along gamma's own indices equals typewriter(1..m).
  bool matches_typewriter_prefix = false;
  Verdict own_view;  // a.e. check of that component subsequence
  /// The same indices read off the un-reindexed typewriter, i.e. typewriter(gamma_1, gamma_2, ...).
  Verdict index_view;
  bool witnesses_failure = false;
};

struct UoProbeReport {
  Verdict un_null;  // the whole family under suml1@gamma
  std::vector<GammaEvidence> per_gamma;
  bool pass = false;
};

/// Evidence that the gamma family is un-null while each gamma-subsequence fails a.e. on its component.
/// Throws BadFamily unless `fam` matches gamma_family(gamma, K) on indices 1..K.
UoProbeReport uo_subsequence_probe(const Family& fam, const std::vector<std::vector<Index>>& gamma, Index k_max,
                                   const CheckConfig& cfg = {});

nlohmann::json to_json(const ExtractionResult& r);
nlohmann::json to_json(const UoProbeReport& r);

}  // namespace unlattice

#endif  // UNLATTICE_EXTRACTION_HPP
