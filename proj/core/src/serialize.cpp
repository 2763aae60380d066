#include "unlattice/serialize.hpp"

#include <cctype>
#include <sstream>

#include "unlattice/error.hpp"

namespace unlattice {

namespace {

std::string list(const std::vector<Rational>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(xs[i]);
  }
  return out + "]";
}

std::string step_text(const StepFn& f) { return "step " + list(f.breakpoints()) + " " + list(f.values()); }

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  std::string_view word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/' ||
                                s_[pos_] == '-' || s_[pos_] == '+' || s_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected token");
    return s_.substr(start, pos_ - start);
  }
  Rational rational() { return parse_rational(word()); }
  std::vector<Rational> rational_list() {
    expect('[');
    std::vector<Rational> out;
    if (accept(']')) return out;
    do {
      out.push_back(rational());
    } while (accept(','));
    expect(']');
    return out;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

StepFn parse_step_body(Cursor& c) {
  auto t = c.rational_list();
  auto v = c.rational_list();
  try {
    return StepFn(std::move(t), std::move(v));
  } catch (const Error& e) {
    c.fail(e.what());
  }
}

Element parse_with(Cursor& c) {
  std::string_view tag = c.word();
  if (tag == "step") return parse_step_body(c);
  if (tag == "pl") {
    auto s = c.rational_list();
    auto w = c.rational_list();
    try {
      return PLFn(std::move(s), std::move(w));
    } catch (const Error& e) {
      c.fail(e.what());
    }
  }
  if (tag == "seq") {
    auto prefix = c.rational_list();
    std::string_view tail = c.word();
    if (tail == "zero") return TailSeq::zero_tail(std::move(prefix));
    if (tail == "const") return TailSeq::const_tail(std::move(prefix), c.rational());
    if (tail == "affine") {
      Rational a = c.rational();
      Rational b = c.rational();
      return TailSeq::affine_tail(std::move(prefix), a, b);
    }
    c.fail("unknown tail kind");
  }
  if (tag == "sum") {
    c.expect('{');
    std::map<DirectSumElem::ComponentId, StepFn> comps;
    if (!c.accept('}')) {
      do {
        Rational id = c.rational();
        if (!is_integer(id)) c.fail("component id must be an integer");
        c.expect(':');
        if (c.word() != "step") c.fail("components must be step functions");
        comps.emplace(id.get_num().get_si(), parse_step_body(c));
      } while (c.accept(';'));
      c.expect('}');
    }
    return DirectSumElem(std::move(comps));
  }
  c.fail("unknown element tag");
}

}  // namespace

std::string to_text(const Element& e) {
  switch (kind_of(e)) {
    case CarrierKind::Step: return step_text(std::get<StepFn>(e));
    case CarrierKind::PiecewiseLinear: {
      const auto& f = std::get<PLFn>(e);
      return "pl " + list(f.breakpoints()) + " " + list(f.node_values());
    }
    case CarrierKind::Sequence: {
      const auto& s = std::get<TailSeq>(e);
      std::string out = "seq " + list(s.prefix());
      switch (s.tail_kind()) {
        case TailSeq::TailKind::Zero: return out + " zero";
        case TailSeq::TailKind::Const: return out + " const " + to_string(s.intercept());
        case TailSeq::TailKind::Affine: return out + " affine " + to_string(s.slope()) + " " + to_string(s.intercept());
      }
      return out;
    }
    case CarrierKind::DirectSum: {
      std::string out = "sum {";
      bool first = true;
      for (const auto& [id, f] : std::get<DirectSumElem>(e).components()) {
        if (!first) out += "; ";
        first = false;
        out += std::to_string(id) + ": " + step_text(f);
      }
      return out + "}";
    }
  }
  return {};
}

std::string to_text(const Region& r) {
  std::string out;
  for (const auto& p : r.pieces()) {
    if (!out.empty()) out += " U ";
    out += "[" + to_string(p.lo) + "," + to_string(p.hi) + ")";
  }
  return out.empty() ? "{}" : out;
}

Element parse_element(std::string_view text) {
  Cursor c(text);
  Element e = parse_with(c);
  if (!c.done()) c.fail("trailing input");
  return e;
}

Region parse_region(std::string_view text) {
  Cursor c(text);
  std::vector<Interval> pieces;
  if (c.accept('{')) {
    c.expect('}');
  } else {
    do {
      c.expect('[');
      Rational lo = c.rational();
      c.expect(',');
      Rational hi = c.rational();
      c.expect(')');
      pieces.push_back({lo, hi});
      if (c.done()) break;
    } while (c.word() == "U");
  }
  if (!c.done()) c.fail("trailing input");
  return Region(std::move(pieces));
}

}  // namespace unlattice
