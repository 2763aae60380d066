#ifndef UNLATTICE_ELEMENT_HPP
#define UNLATTICE_ELEMENT_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <variant>
#include <vector>

#include "unlattice/rational.hpp"

namespace unlattice {

/// Half-open subinterval [lo, hi) of [0,1].
struct Interval {
  Rational lo;
  Rational hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of disjoint half-open intervals, kept sorted.
class Region {
 public:
  Region() = default;
  /// Throws Error(BadRegion) on overlap, empty/reversed pieces or pieces outside [0,1].
  explicit Region(std::vector<Interval> pieces);

  static Region unit() { return Region({{Rational(0), Rational(1)}}); }

  const std::vector<Interval>& pieces() const { return pieces_; }
  Rational measure() const;
  bool contains(const Rational& t) const;

  friend bool operator==(const Region&, const Region&) = default;

 private:
  std::vector<Interval> pieces_;
};

/// Step function on [0,1): values_[i] holds on [breakpoints_[i], breakpoints_[i+1]).
class StepFn {
 public:
  /// Zero function.
  StepFn();
  /// Canonicalizes; throws Error(BadParams) when breakpoints are malformed.
  StepFn(std::vector<Rational> breakpoints, std::vector<Rational> values);

  static StepFn constant(const Rational& c);
  /// c on [lo, hi), zero elsewhere.
  static StepFn indicator(const Rational& lo, const Rational& hi, const Rational& c = Rational(1));

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& values() const { return values_; }

  /// Value at t in [0,1]; t = 1 takes the last piece's value.
  Rational operator()(const Rational& t) const;
  bool is_zero() const { return values_.size() == 1 && values_[0] == 0; }

  friend bool operator==(const StepFn&, const StepFn&) = default;

 private:
  void canonicalize();

  std::vector<Rational> breakpoints_;
  std::vector<Rational> values_;
};

/// Continuous piecewise-linear function on [0,1] given by its nodes.
class PLFn {
 public:
  PLFn();
  PLFn(std::vector<Rational> breakpoints, std::vector<Rational> node_values);

  static PLFn constant(const Rational& c);
  /// Tent of height `peak` supported on [lo, hi] with apex at the midpoint.
  static PLFn tent(const Rational& lo, const Rational& hi, const Rational& peak = Rational(1));

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& node_values() const { return node_values_; }

  Rational operator()(const Rational& t) const;
  bool is_zero() const { return node_values_.size() == 2 && node_values_[0] == 0 && node_values_[1] == 0; }

  friend bool operator==(const PLFn&, const PLFn&) = default;

 private:
  void canonicalize();

  std::vector<Rational> breakpoints_;
  std::vector<Rational> node_values_;
};

/// Real sequence indexed from 1: an explicit prefix followed by the tail
/// n -> slope * n + intercept.
class TailSeq {
 public:
  enum class TailKind { Zero, Const, Affine };

  TailSeq() = default;
  TailSeq(std::vector<Rational> prefix, Rational slope, Rational intercept);

  static TailSeq zero_tail(std::vector<Rational> prefix) { return TailSeq(std::move(prefix), 0, 0); }
  static TailSeq const_tail(std::vector<Rational> prefix, const Rational& c) { return TailSeq(std::move(prefix), 0, c); }
  static TailSeq affine_tail(std::vector<Rational> prefix, const Rational& a, const Rational& b) {
    return TailSeq(std::move(prefix), a, b);
  }
  /// The constant one sequence.
  static TailSeq ones() { return const_tail({}, 1); }
  /// Standard unit vector e_n.
  static TailSeq unit(Index n);

  const std::vector<Rational>& prefix() const { return prefix_; }
  const Rational& slope() const { return slope_; }
  const Rational& intercept() const { return intercept_; }
  TailKind tail_kind() const;
  Index prefix_length() const { return prefix_.size(); }

  /// Coordinate n >= 1.
  Rational operator()(Index n) const;
  Rational tail_value(Index n) const { return slope_ * static_cast<unsigned long>(n) + intercept_; }
  bool is_zero() const { return prefix_.empty() && slope_ == 0 && intercept_ == 0; }

  /// Same sequence with the prefix materialized up to at least `length` entries.
  std::vector<Rational> expanded_prefix(Index length) const;

  friend bool operator==(const TailSeq&, const TailSeq&) = default;

 private:
  void canonicalize();

  std::vector<Rational> prefix_;
  Rational slope_{0};
  Rational intercept_{0};
};

/// Element of a finite direct sum of copies of L0[0,1]; absent components are zero.
class DirectSumElem {
 public:
  using ComponentId = std::int64_t;

  DirectSumElem() = default;
  explicit DirectSumElem(std::map<ComponentId, StepFn> components);

  const std::map<ComponentId, StepFn>& components() const { return components_; }
  /// Component value; zero when absent.
  StepFn component(ComponentId id) const;
  bool is_zero() const { return components_.empty(); }

  friend bool operator==(const DirectSumElem&, const DirectSumElem&) = default;

 private:
  std::map<ComponentId, StepFn> components_;
};

enum class CarrierKind { Step, PiecewiseLinear, Sequence, DirectSum };
const char* to_string(CarrierKind kind);

using Element = std::variant<StepFn, PLFn, TailSeq, DirectSumElem>;

CarrierKind kind_of(const Element& e);
bool is_zero(const Element& e);
/// Zero of the given carrier.
Element zero_of(CarrierKind kind);

enum class LatticeOp { Meet, Join, Sum, Diff };

/// Pointwise/coordinatewise operation; throws Error(KindMismatch) on mixed carriers.
Element combine(const Element& a, const Element& b, LatticeOp op);
Element meet(const Element& a, const Element& b);
Element join(const Element& a, const Element& b);
Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);

Element abs_val(const Element& a);
Element scale(const Rational& alpha, const Element& a);

/// a <= b everywhere (a.e. for step functions); throws KindMismatch on mixed carriers.
bool leq(const Element& a, const Element& b);
bool is_positive(const Element& a);  // a >= 0

/// Lebesgue measure of {t : |f(t)| > eps}, optionally intersected with a region.
Rational level_measure(const Element& f, const Rational& eps);
Rational level_measure(const Element& f, const Rational& eps, const Region& region);
/// The set {t : |f(t)| > eps} as disjoint half-open intervals (endpoints up to a null set).
Region superlevel_set(const Element& f, const Rational& eps);

/// f * indicator(region).
StepFn restrict(const StepFn& f, const Region& region);

}  // namespace unlattice

#endif  // UNLATTICE_ELEMENT_HPP
