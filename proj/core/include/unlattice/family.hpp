#ifndef UNLATTICE_FAMILY_HPP
#define UNLATTICE_FAMILY_HPP

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "unlattice/element.hpp"
#include "unlattice/rational.hpp"

namespace unlattice {

struct SpacePair;

/// A nonincreasing upper bound n -> B(n) on some nonnegative quantity of a
/// sequence. Under an L_p norm the bound applies to gauge^p.
class RateCert {
 public:
  enum class Kind { PowerLaw, DyadicLog, EventuallyZeroAfter, Custom, Sum };

  /// C * n^(-r), r >= 1.
  static RateCert power_law(Rational c, unsigned r);
  /// C * 2^(-floor(log2 n)).
  static RateCert dyadic_log(Rational c = Rational(1));
  /// 0 for n > L, no claim (infinity) for n <= L.
  static RateCert eventually_zero_after(Index last);
  /// Rows (eps, N): the quantity is <= eps for every n >= N.
  static RateCert custom(std::vector<std::pair<Rational, Index>> table);
  /// factor * (sum of the parts' bounds).
  static RateCert sum(std::vector<RateCert> parts, Rational factor = Rational(1));

  Kind kind() const { return kind_; }
  const Rational& constant() const { return c_; }
  unsigned exponent() const { return r_; }
  Index last() const { return last_; }
  const std::vector<std::pair<Rational, Index>>& table() const { return table_; }
  const std::vector<RateCert>& parts() const { return parts_; }

  ExtScalar bound(Index n) const;
  /// Smallest N with bound(n) < eps for every n >= N, if any.
  std::optional<Index> threshold(const Rational& eps) const;
  std::string describe() const;

  friend bool operator==(const RateCert&, const RateCert&) = default;

 private:
  Kind kind_ = Kind::EventuallyZeroAfter;
  Rational c_{0};
  unsigned r_ = 1;
  Index last_ = 0;
  std::vector<std::pair<Rational, Index>> table_;
  std::vector<RateCert> parts_;
};

/// The quantity stays at or above a floor along an infinite index pattern,
/// known from the family's definition rather than from sampling.
struct ClosedForm {
  std::optional<Element> witness;  // the test vector x (un, uniform modes)
  Rational eps;                    // gauge/level threshold
  Rational floor;                  // measure mode: mu{|f_n| > eps} >= floor
  std::function<Index(Index)> pattern;  // k = 1, 2, ... -> strictly increasing indices
  std::string description;
};

/// Where pointwise convergence is probed: a coordinate (sequences) or a point of [0,1].
using Probe = std::variant<Index, Rational>;
std::string to_string(const Probe& probe);

/// Pointwise decay off a finite exceptional set of points.
struct AeDecay {
  std::vector<Rational> null_points;
  std::function<RateCert(const Rational& t)> at_point;
  std::string description;
};

/// Values >= eps recur on `set` along t-dependent infinite index patterns.
struct AeRecurrence {
  Region set;
  Rational eps;
  std::function<Index(const Rational& t, Index k)> pattern;
  std::string description;
};

/// A sequence n -> f_n (n >= 1) with whatever certificates its definition supplies.
struct Family {
  std::string name;
  CarrierKind kind = CarrierKind::Step;
  std::function<Element(Index)> eval;
  /// Largest index the representation can materialize, if bounded.
  std::optional<Index> eval_limit;

  bool constant = false;
  bool increasing = false;
  std::optional<Element> supremum;
  std::optional<Element> upper_bound;
  /// Declared un-limit and the certified residual n -> f_n - limit, when the limit is not 0.
  std::optional<Element> limit;
  std::shared_ptr<const Family> residual;

  std::function<std::optional<RateCert>(const SpacePair&, const Element& x)> un_cert;
  std::function<std::optional<ClosedForm>(const SpacePair&)> un_refute;
  std::function<std::optional<RateCert>(const Element& e)> uniform_cert;
  std::function<std::optional<ClosedForm>(const Element& e)> uniform_refute;
  std::optional<RateCert> measure_cert;
  std::optional<ClosedForm> measure_refute;
  std::function<std::optional<RateCert>(const Probe&)> pointwise_cert;
  std::function<std::optional<ClosedForm>(const Probe&)> pointwise_refute;
  std::optional<AeDecay> ae_decay;
  std::optional<AeRecurrence> ae_recurrence;

  Element operator()(Index n) const;
  Index cap(Index horizon) const { return eval_limit ? std::min(horizon, *eval_limit) : horizon; }
};

/// n -> f_n - c. Certificates carry over only when c = 0; constancy always does.
Family shifted(const Family& fam, const Element& c);

/// n -> f_{idx(k)} along a strictly increasing index map.
Family subsequence(const Family& fam, std::function<Index(Index)> idx, std::string name);

}  // namespace unlattice

#endif  // UNLATTICE_FAMILY_HPP
