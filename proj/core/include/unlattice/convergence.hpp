#ifndef UNLATTICE_CONVERGENCE_HPP
#define UNLATTICE_CONVERGENCE_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "unlattice/family.hpp"
#include "unlattice/norm.hpp"
#include "unlattice/spaces.hpp"

namespace unlattice {

enum class Mode { Un, Pointwise, Measure, Ae, Uniform };
const char* to_string(Mode mode);
Mode parse_mode(std::string_view text);

enum class VerdictClass { CertifiedNull, EmpiricallyNull, Refuted, Inconclusive };
const char* to_string(VerdictClass cls);

enum class Evidence { ClosedForm, SampledIndices };
const char* to_string(Evidence evidence);

struct Refutation {
  std::optional<Element> witness;
  Rational eps;
  Evidence evidence = Evidence::SampledIndices;
  std::string description;
  std::vector<Index> indices;  // where the gauge was observed >= eps
};

struct Verdict {
  VerdictClass cls = VerdictClass::Inconclusive;
  Mode mode = Mode::Un;
  std::string family;
  std::string pair;
  Index horizon = 0;
  /// Largest quantity seen over the tail half of the sampled indices.
  NormValue worst_gauge;
  std::vector<RateCert> certificates;  // one per test vector or probe when certified
  std::optional<Refutation> refutation;
  std::optional<Index> first_in_ideal;  // uniform mode
  std::vector<std::pair<std::string, VerdictClass>> parts;  // pointwise/ae probes
  std::string note;

  bool is_null() const { return cls == VerdictClass::CertifiedNull || cls == VerdictClass::EmpiricallyNull; }
};

/// Null classes collapse; Refuted and Inconclusive stand alone.
enum class Outcome { Null, Refuted, Inconclusive };
Outcome outcome(const Verdict& v);
const char* to_string(Outcome o);

struct CheckConfig {
  Index horizon = 4096;
  std::vector<Rational> eps_grid = default_eps_grid();
  unsigned budget = kDefaultBudget;
  std::optional<std::vector<Probe>> probes;  // pointwise mode
  std::optional<Region> region;              // measure mode

  static std::vector<Rational> default_eps_grid();
};

/// 1..256, every ceil(h/256)-th index, and h itself.
std::vector<Index> sample_indices(Index horizon);

/// || |y| ^ x || in the pair's norm. Throws NotInIdeal unless x >= 0 lies in X.
NormValue gauge(const Element& y, const Element& x, const SpacePair& pair);
/// gauge(y, x) < eps.
bool in_un_neighborhood(const Element& y, const Rational& eps, const Element& x, const SpacePair& pair);
/// || |y1 - y2| ^ u ||; u must be the pair's unit witness (BadUnit otherwise).
NormValue un_metric(const Element& y1, const Element& y2, const Element& u, const SpacePair& pair);

Verdict check_un(const Family& fam, const SpacePair& pair, const CheckConfig& cfg = {});
/// check_un against an explicit list of test vectors.
Verdict check_un_with(const Family& fam, const SpacePair& pair, const std::vector<Element>& vectors,
                      const CheckConfig& cfg = {});
/// Null-ness of n -> d(f_n, 0) for the un-metric built on the pair's unit.
Verdict check_un_metric(const Family& fam, const SpacePair& pair, const CheckConfig& cfg = {});
Verdict check_pointwise(const Family& fam, const CheckConfig& cfg = {});
Verdict check_uniform_unit(const Family& fam, const Element& e, const CheckConfig& cfg = {});
Verdict check_in_measure(const Family& fam, const CheckConfig& cfg = {});
Verdict check_ae(const Family& fam, const CheckConfig& cfg = {});
/// Dispatch by mode; uniform mode uses the pair's unit witness.
Verdict check(const Family& fam, const SpacePair& pair, Mode mode, const CheckConfig& cfg = {});

/// Candidates c for which n -> f_n - c is un-null.
std::vector<Element> limit_uniqueness_probe(const SpacePair& pair, const Family& fam,
                                            const std::vector<Element>& candidates, const CheckConfig& cfg = {});

/// The bound dominates gauge^p at every sampled index for every test vector.
bool verify_certificate(const Family& fam, const RateCert& cert, const SpacePair& pair,
                        const std::vector<Index>& indices, unsigned budget = kDefaultBudget);
/// Same, against one test vector.
bool verify_certificate(const Family& fam, const RateCert& cert, const SpacePair& pair, const Element& x,
                        const std::vector<Index>& indices);
/// The bound dominates mu{|f_n| > eps} for every eps in the grid.
bool verify_measure_certificate(const Family& fam, const RateCert& cert, const std::vector<Rational>& eps_grid,
                                const std::vector<Index>& indices, const std::optional<Region>& region = std::nullopt);

nlohmann::json to_json(const RateCert& cert);
nlohmann::json to_json(const Verdict& v);
/// "p/q" for exact values; approximations keep a double and set approx.
nlohmann::json to_json(const NormValue& v);

}  // namespace unlattice

#endif  // UNLATTICE_CONVERGENCE_HPP
