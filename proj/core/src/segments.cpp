#include "segments.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "unlattice/error.hpp"

namespace unlattice::detail {

Rational Segment::at(const Rational& t) const {
  if (wa == wb) return wa;
  return wa + (wb - wa) * (t - a) / (b - a);
}

Segments to_segments(const StepFn& f) {
  Segments out;
  const auto& t = f.breakpoints();
  const auto& v = f.values();
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back({t[i], t[i + 1], v[i], v[i]});
  return out;
}

Segments to_segments(const PLFn& f) {
  Segments out;
  const auto& s = f.breakpoints();
  const auto& w = f.node_values();
  out.reserve(s.size() - 1);
  for (std::size_t i = 0; i + 1 < s.size(); ++i) out.push_back({s[i], s[i + 1], w[i], w[i + 1]});
  return out;
}

Segments to_segments(const Element& e) {
  if (const auto* f = std::get_if<StepFn>(&e)) return to_segments(*f);
  if (const auto* f = std::get_if<PLFn>(&e)) return to_segments(*f);
  throw Error(ErrorCode::KindMismatch, std::string("no [0,1] function form for carrier ") + to_string(kind_of(e)));
}

Segments refine(const Segments& s, const std::vector<Rational>& cuts) {
  Segments out;
  out.reserve(s.size() + cuts.size());
  auto c = cuts.begin();
  for (const auto& seg : s) {
    while (c != cuts.end() && *c <= seg.a) ++c;
    Rational lo = seg.a;
    Rational wlo = seg.wa;
    while (c != cuts.end() && *c < seg.b) {
      Rational wc = seg.at(*c);
      out.push_back({lo, *c, wlo, wc});
      lo = *c;
      wlo = wc;
      ++c;
    }
    out.push_back({lo, seg.b, wlo, seg.wb});
  }
  return out;
}

void align(Segments& lhs, Segments& rhs) {
  std::vector<Rational> cuts;
  cuts.reserve(lhs.size() + rhs.size());
  for (const auto& s : lhs) cuts.push_back(s.a);
  for (const auto& s : rhs) cuts.push_back(s.a);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  lhs = refine(lhs, cuts);
  rhs = refine(rhs, cuts);
}

namespace {

// Point strictly inside (a, b) where the affine piece crosses `level`, if any.
std::optional<Rational> crossing(const Segment& s, const Rational& level) {
  Rational da = s.wa - level;
  Rational db = s.wb - level;
  if ((da < 0 && db > 0) || (da > 0 && db < 0)) {
    return Rational(s.a + (s.b - s.a) * da / (da - db));
  }
  return std::nullopt;
}

}  // namespace

Segments split_at_roots(const Segments& s) {
  Segments out;
  out.reserve(s.size());
  for (const auto& seg : s) {
    if (auto r = crossing(seg, Rational(0))) {
      out.push_back({seg.a, *r, seg.wa, Rational(0)});
      out.push_back({*r, seg.b, Rational(0), seg.wb});
    } else {
      out.push_back(seg);
    }
  }
  return out;
}

Segments combine(const Segments& lhs, const Segments& rhs, LatticeOp op) {
  Segments x = lhs;
  Segments y = rhs;
  align(x, y);
  Segments out;
  out.reserve(x.size() + 4);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto& f = x[i];
    const auto& g = y[i];
    switch (op) {
      case LatticeOp::Sum:
        out.push_back({f.a, f.b, f.wa + g.wa, f.wb + g.wb});
        break;
      case LatticeOp::Diff:
        out.push_back({f.a, f.b, f.wa - g.wa, f.wb - g.wb});
        break;
      case LatticeOp::Meet:
      case LatticeOp::Join: {
        Segment diff{f.a, f.b, f.wa - g.wa, f.wb - g.wb};
        std::vector<Segment> fs{f}, gs{g};
        if (auto r = crossing(diff, Rational(0))) {
          fs = {{f.a, *r, f.wa, f.at(*r)}, {*r, f.b, f.at(*r), f.wb}};
          gs = {{g.a, *r, g.wa, g.at(*r)}, {*r, g.b, g.at(*r), g.wb}};
        }
        for (std::size_t k = 0; k < fs.size(); ++k) {
          // No strict crossing inside the piece, so one side dominates throughout.
          Rational d = (fs[k].wa - gs[k].wa) + (fs[k].wb - gs[k].wb);
          bool f_le_g = d <= 0;
          bool take_f = (op == LatticeOp::Meet) ? f_le_g : !f_le_g;
          out.push_back(take_f ? fs[k] : gs[k]);
        }
        break;
      }
    }
  }
  return out;
}

Segments absolute(const Segments& s) {
  Segments out = split_at_roots(s);
  for (auto& seg : out) {
    if (seg.wa < 0 || seg.wb < 0) {
      seg.wa = -seg.wa;
      seg.wb = -seg.wb;
    }
  }
  return out;
}

Segments scaled(const Segments& s, const Rational& alpha) {
  Segments out = s;
  for (auto& seg : out) {
    seg.wa *= alpha;
    seg.wb *= alpha;
  }
  return out;
}

StepFn to_step(const Segments& s) {
  std::vector<Rational> t;
  std::vector<Rational> v;
  t.reserve(s.size() + 1);
  v.reserve(s.size());
  for (const auto& seg : s) {
    if (seg.wa != seg.wb) throw Error(ErrorCode::KindMismatch, "non-constant piece in step function");
    t.push_back(seg.a);
    v.push_back(seg.wa);
  }
  t.push_back(s.back().b);
  return StepFn(std::move(t), std::move(v));
}

PLFn to_pl(const Segments& s) {
  std::vector<Rational> t;
  std::vector<Rational> w;
  t.reserve(s.size() + 1);
  w.reserve(s.size() + 1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0 && s[i - 1].wb != s[i].wa) throw Error(ErrorCode::KindMismatch, "discontinuous piecewise-linear result");
    t.push_back(s[i].a);
    w.push_back(s[i].wa);
  }
  t.push_back(s.back().b);
  w.push_back(s.back().wb);
  return PLFn(std::move(t), std::move(w));
}

bool nonnegative(const Segments& s) {
  return std::all_of(s.begin(), s.end(), [](const Segment& seg) { return seg.wa >= 0 && seg.wb >= 0; });
}

Rational value_at(const Segments& s, const Rational& t) {
  if (t < s.front().a || t > s.back().b) throw Error(ErrorCode::BadParams, "evaluation point outside [0,1]");
  auto it = std::upper_bound(s.begin(), s.end(), t, [](const Rational& x, const Segment& seg) { return x < seg.b; });
  if (it == s.end()) return s.back().wb;
  return it->at(t);
}

namespace {

void push_merged(std::vector<Interval>& out, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) return;
  if (!out.empty() && out.back().hi >= lo) {
    if (hi > out.back().hi) out.back().hi = hi;
    return;
  }
  out.push_back({lo, hi});
}

// Portion of [a, b) where the affine piece exceeds `level`.
std::optional<Interval> above(const Segment& s, const Rational& level) {
  if (s.wa == s.wb) {
    if (s.wa > level) return Interval{s.a, s.b};
    return std::nullopt;
  }
  Rational r = s.a + (level - s.wa) * (s.b - s.a) / (s.wb - s.wa);
  if (s.wb > s.wa) {
    Rational lo = r > s.a ? r : s.a;
    if (lo < s.b) return Interval{lo, s.b};
  } else {
    Rational hi = r < s.b ? r : s.b;
    if (s.a < hi) return Interval{s.a, hi};
  }
  return std::nullopt;
}

}  // namespace

std::vector<Interval> superlevel(const Segments& s, const Rational& eps) {
  std::vector<Interval> out;
  for (const auto& seg : split_at_roots(s)) {
    Segment pos = seg;
    if (seg.wa < 0 || seg.wb < 0) {
      pos.wa = -seg.wa;
      pos.wb = -seg.wb;
    }
    if (auto iv = above(pos, eps)) push_merged(out, iv->lo, iv->hi);
  }
  return out;
}

Rational integral_abs(const Segments& s) { return integral_abs_pow(s, 1); }

Rational integral_abs_pow(const Segments& s, unsigned p) {
  Rational flat = 0;
  Rational sloped = 0;  // divided by p + 1 once at the end
  for (const auto& seg : split_at_roots(s)) {
    Rational lo = abs(seg.wa);
    Rational hi = abs(seg.wb);
    if (lo == hi) {
      flat += seg.length() * pow(lo, p);
      continue;
    }
    // On a sign-constant piece |f| is affine from lo to hi:
    // integral of |f|^p = h * sum_{i=0}^{p} lo^i hi^(p-i) / (p+1).
    Rational acc = 0;
    for (unsigned i = 0; i <= p; ++i) acc += pow(lo, i) * pow(hi, p - i);
    sloped += seg.length() * acc;
  }
  if (sloped != 0) flat += sloped / Rational(p + 1);
  return flat;
}

double integral_abs_pow_approx(const Segments& s, double p) {
  double total = 0.0;
  for (const auto& seg : split_at_roots(s)) {
    double lo = std::abs(seg.wa.get_d());
    double hi = std::abs(seg.wb.get_d());
    double h = seg.length().get_d();
    if (lo == hi) {
      total += h * std::pow(lo, p);
    } else {
      total += h * (std::pow(hi, p + 1) - std::pow(lo, p + 1)) / ((p + 1) * (hi - lo));
    }
  }
  return total;
}

Rational sup_abs(const Segments& s) {
  Rational m = 0;
  for (const auto& seg : s) {
    Rational x = abs(seg.wa);
    Rational y = abs(seg.wb);
    if (x > m) m = x;
    if (y > m) m = y;
  }
  return m;
}

ExtScalar ratio_sup(const Segments& x, const Segments& e) {
  Segments xs = split_at_roots(x);
  Segments es = e;
  align(xs, es);
  ExtScalar best(0L);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Rational xa = abs(xs[i].wa);
    Rational xb = abs(xs[i].wb);
    const Rational& ea = es[i].wa;
    const Rational& eb = es[i].wb;
    if (ea < 0 || eb < 0) throw Error(ErrorCode::BadParams, "unit element must be positive");
    if (ea == 0 && eb == 0) {
      if (xa > 0 || xb > 0) return ExtScalar::infinity();
      continue;
    }
    // |x|/e is monotone on the piece; at an endpoint where e vanishes the
    // ratio is either unbounded or equal to the value at the other end.
    for (auto [xv, ev] : {std::pair{&xa, &ea}, std::pair{&xb, &eb}}) {
      if (*ev > 0) {
        best = max(best, ExtScalar(Rational(*xv / *ev)));
      } else if (*xv > 0) {
        return ExtScalar::infinity();
      }
    }
  }
  return best;
}

}  // namespace unlattice::detail
