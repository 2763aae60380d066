#ifndef UNLATTICE_NORM_HPP
#define UNLATTICE_NORM_HPP

#include <limits>
#include <memory>
#include <string>

#include "unlattice/element.hpp"
#include "unlattice/rational.hpp"

namespace unlattice {

/// Which norm to take. Lp applies to functions (L_p[0,1]) and to sequences (l_p).
struct NormSpec {
  enum class Kind { L1, Lp, Sup, Unit, Ell1, EllInf, SumL1 };

  Kind kind = Kind::L1;
  Rational p{1};
  std::shared_ptr<const Element> unit;  // only for Kind::Unit

  static NormSpec l1() { return {Kind::L1, Rational(1), nullptr}; }
  static NormSpec lp(const Rational& p);
  static NormSpec sup() { return {Kind::Sup, Rational(1), nullptr}; }
  static NormSpec ell1() { return {Kind::Ell1, Rational(1), nullptr}; }
  static NormSpec ell_inf() { return {Kind::EllInf, Rational(1), nullptr}; }
  static NormSpec sum_l1() { return {Kind::SumL1, Rational(1), nullptr}; }
  /// ||x||_e = inf{lambda > 0 : |x| <= lambda e}; e must be positive.
  static NormSpec unit_norm(Element e);

  /// Exponent under which values are compared exactly: p for integer Lp, else 1.
  unsigned power() const;
  /// False only for Lp with non-integer p.
  bool exact() const;
  std::string describe() const;
};

/// A norm value. `powered` holds ||a||^power exactly; for non-integer p only
/// `approx` is meaningful (relative tolerance 1e-12).
struct NormValue {
  ExtScalar powered;
  unsigned power = 1;
  double approx = 0.0;
  bool exact = true;

  /// ||a|| itself when power == 1.
  const ExtScalar& value() const { return powered; }
  bool is_infinite() const { return exact ? powered.is_infinite() : approx == std::numeric_limits<double>::infinity(); }
  bool is_zero() const { return exact ? powered == ExtScalar(0L) : approx == 0.0; }

  /// ||a|| < eps, compared as ||a||^power < eps^power.
  bool below(const Rational& eps) const;
  /// ||a|| >= eps.
  bool at_least(const Rational& eps) const { return !below(eps); }
};

NormValue make_norm_value(ExtScalar powered, unsigned power);

NormValue norm(const Element& a, const NormSpec& spec);

/// || |y| ^ x || for y in an ambient carrier and x >= 0; step and
/// piecewise-linear carriers may be mixed.
NormValue truncated_norm(const Element& y, const Element& x, const NormSpec& spec);

}  // namespace unlattice

#endif  // UNLATTICE_NORM_HPP
