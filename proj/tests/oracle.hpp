#ifndef UNLATTICE_TESTS_ORACLE_HPP
#define UNLATTICE_TESTS_ORACLE_HPP

// Brute-force reference computations used by the tests. Nothing here calls the
// library's segment machinery: values come from point evaluation only.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "unlattice/element.hpp"

namespace unlattice::oracle {

constexpr long kGrid = 2048;

inline Rational grid_point(long k) { return ratio(k, kGrid); }

/// Pointwise value of an element at a rational point, by direct lookup.
inline Rational step_value(const StepFn& f, const Rational& t) {
  const auto& bp = f.breakpoints();
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    if (bp[i] <= t && t < bp[i + 1]) return f.values()[i];
  }
  return f.values().back();
}

inline Rational pl_value(const PLFn& f, const Rational& t) {
  const auto& s = f.breakpoints();
  const auto& w = f.node_values();
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] <= t && t <= s[i + 1]) return w[i] + (w[i + 1] - w[i]) * (t - s[i]) / (s[i + 1] - s[i]);
  }
  return w.back();
}

inline Rational value(const Element& e, const Rational& t) {
  if (const auto* f = std::get_if<StepFn>(&e)) return step_value(*f, t);
  return pl_value(std::get<PLFn>(e), t);
}

/// Measure of {|f| > eps} for a function whose nodes all lie on the 1/kGrid
/// grid: summed cell by cell from the cell-endpoint values.
inline Rational grid_level_measure(const Element& f, const Rational& eps) {
  Rational total = 0;
  const Rational h = ratio(1, kGrid);
  bool is_step = std::holds_alternative<StepFn>(f);
  for (long k = 0; k < kGrid; ++k) {
    Rational lo = grid_point(k);
    Rational y0 = value(f, lo);
    Rational y1 = is_step ? y0 : value(f, grid_point(k + 1));
    // |y| > eps on the cell is the union of y > eps and -y > eps; each is an
    // interval of an affine function.
    for (int sign : {1, -1}) {
      Rational a = sign * y0 - eps;
      Rational b = sign * y1 - eps;
      if (a > 0 && b > 0) {
        total += h;
      } else if (a > 0 || b > 0) {
        Rational frac = a > 0 ? Rational(a / (a - b)) : Rational(b / (b - a));
        total += h * frac;
      }
    }
  }
  return total;
}

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  Rational small_rational() {
    static const long dens[] = {1, 2, 3, 4, 8};
    long num = std::uniform_int_distribution<long>(-12, 12)(rng_);
    long den = dens[std::uniform_int_distribution<int>(0, 4)(rng_)];
    return ratio(num, den);
  }

  std::vector<Rational> grid_breakpoints(int interior_max) {
    int count = std::uniform_int_distribution<int>(0, interior_max)(rng_);
    std::set<long> ks;
    while (static_cast<int>(ks.size()) < count) ks.insert(std::uniform_int_distribution<long>(1, kGrid - 1)(rng_));
    std::vector<Rational> t{Rational(0)};
    for (long k : ks) t.push_back(grid_point(k));
    t.push_back(Rational(1));
    return t;
  }

  StepFn step() {
    auto t = grid_breakpoints(6);
    std::vector<Rational> v;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) v.push_back(small_rational());
    return StepFn(std::move(t), std::move(v));
  }

  PLFn pl() {
    auto t = grid_breakpoints(5);
    std::vector<Rational> w;
    for (std::size_t i = 0; i < t.size(); ++i) w.push_back(small_rational());
    return PLFn(std::move(t), std::move(w));
  }

  TailSeq seq() {
    int len = std::uniform_int_distribution<int>(0, 6)(rng_);
    std::vector<Rational> p;
    for (int i = 0; i < len; ++i) p.push_back(small_rational());
    switch (std::uniform_int_distribution<int>(0, 2)(rng_)) {
      case 0: return TailSeq::zero_tail(std::move(p));
      case 1: return TailSeq::const_tail(std::move(p), small_rational());
      default: return TailSeq::affine_tail(std::move(p), small_rational(), small_rational());
    }
  }

  Rational positive_rational() {
    Rational r = abs(small_rational());
    return r == 0 ? ratio(1, 2) : r;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace unlattice::oracle

#endif  // UNLATTICE_TESTS_ORACLE_HPP
