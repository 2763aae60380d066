#include "unlattice/rational.hpp"

#include <cmath>
#include <limits>

#include "unlattice/error.hpp"

namespace unlattice {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::BadRegion: return "BadRegion";
    case ErrorCode::NotInIdeal: return "NotInIdeal";
    case ErrorCode::BadUnit: return "BadUnit";
    case ErrorCode::UnsupportedPair: return "UnsupportedPair";
    case ErrorCode::NotDense: return "NotDense";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::UnknownLaw: return "UnknownLaw";
    case ErrorCode::CertificateViolated: return "CertificateViolated";
    case ErrorCode::HorizonExhausted: return "HorizonExhausted";
    case ErrorCode::BadFamily: return "BadFamily";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
  }
  std::string n(num[0] == '+' ? num.substr(1) : num);
  mpz_class d{std::string(den)};
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational r(mpz_class(n), d);
  r.canonicalize();
  return r;
}

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational r(num, den);
  // coprime num and den stay coprime under powers
  return r;
}

Rational pow2(std::int64_t exponent) {
  mpz_class p;
  auto e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
  return exponent < 0 ? Rational(mpz_class(1), p) : Rational(p);
}

Rational floor_rational(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rational(q);
}

Rational ceil_rational(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rational(q);
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

unsigned floor_log2(Index n) {
  unsigned k = 0;
  while (n > 1) {
    n >>= 1;
    ++k;
  }
  return k;
}

Rational root_floor(const Rational& value, unsigned p) {
  if (value <= 0) return Rational(0);
  if (p == 1) return value;
  mpz_class num_root, den_root;
  bool num_exact = mpz_root(num_root.get_mpz_t(), value.get_num_mpz_t(), p) != 0;
  bool den_exact = mpz_root(den_root.get_mpz_t(), value.get_den_mpz_t(), p) != 0;
  if (num_exact && den_exact) {
    Rational r(num_root, den_root);
    r.canonicalize();
    return r;
  }
  // Fall back to a binary-64 estimate pulled down until it satisfies q^p <= value.
  double approx = std::pow(value.get_d(), 1.0 / p);
  Rational q(approx * (1.0 - 1e-9));
  while (q > 0 && pow(q, p) > value) q /= 2;
  return q;
}

const Rational& ExtScalar::value() const {
  if (!value_) throw std::logic_error("ExtScalar::value on infinity");
  return *value_;
}

ExtScalar& ExtScalar::operator+=(const ExtScalar& other) {
  if (!value_ || !other.value_) {
    value_.reset();
  } else {
    *value_ += *other.value_;
  }
  return *this;
}

ExtScalar operator*(const ExtScalar& a, const Rational& b) {
  if (a.is_infinite()) return b == 0 ? ExtScalar(0L) : ExtScalar::infinity();
  return ExtScalar(Rational(a.value() * b));
}

bool operator==(const ExtScalar& a, const ExtScalar& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
  return a.value() == b.value();
}

std::strong_ordering operator<=>(const ExtScalar& a, const ExtScalar& b) {
  if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
  if (a.is_infinite()) return std::strong_ordering::greater;
  if (b.is_infinite()) return std::strong_ordering::less;
  int c = cmp(a.value(), b.value());
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double ExtScalar::to_double() const {
  return value_ ? value_->get_d() : std::numeric_limits<double>::infinity();
}

ExtScalar max(const ExtScalar& a, const ExtScalar& b) { return a < b ? b : a; }
ExtScalar min(const ExtScalar& a, const ExtScalar& b) { return b < a ? b : a; }

std::string to_string(const ExtScalar& e) { return e.is_finite() ? to_string(e.value()) : "inf"; }

}  // namespace unlattice
