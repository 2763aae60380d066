#include "unlattice/family.hpp"

#include <sstream>

#include "unlattice/error.hpp"

namespace unlattice {

RateCert RateCert::power_law(Rational c, unsigned r) {
  if (c < 0 || r == 0) throw Error(ErrorCode::BadParams, "power law needs C >= 0 and r >= 1");
  RateCert cert;
  cert.kind_ = Kind::PowerLaw;
  cert.c_ = std::move(c);
  cert.r_ = r;
  return cert;
}

RateCert RateCert::dyadic_log(Rational c) {
  if (c < 0) throw Error(ErrorCode::BadParams, "dyadic bound needs C >= 0");
  RateCert cert;
  cert.kind_ = Kind::DyadicLog;
  cert.c_ = std::move(c);
  return cert;
}

RateCert RateCert::eventually_zero_after(Index last) {
  RateCert cert;
  cert.kind_ = Kind::EventuallyZeroAfter;
  cert.last_ = last;
  return cert;
}

RateCert RateCert::custom(std::vector<std::pair<Rational, Index>> table) {
  if (table.empty()) throw Error(ErrorCode::BadParams, "custom rate table is empty");
  for (const auto& [eps, n] : table) {
    if (eps < 0 || n == 0) throw Error(ErrorCode::BadParams, "custom rate rows need eps >= 0 and N >= 1");
  }
  RateCert cert;
  cert.kind_ = Kind::Custom;
  cert.table_ = std::move(table);
  return cert;
}

RateCert RateCert::sum(std::vector<RateCert> parts, Rational factor) {
  if (parts.empty() || factor < 0) throw Error(ErrorCode::BadParams, "sum certificate needs parts and factor >= 0");
  RateCert cert;
  cert.kind_ = Kind::Sum;
  cert.parts_ = std::move(parts);
  cert.c_ = std::move(factor);
  return cert;
}

ExtScalar RateCert::bound(Index n) const {
  switch (kind_) {
    case Kind::PowerLaw: {
      mpz_class nn;
      mpz_set_ui(nn.get_mpz_t(), static_cast<unsigned long>(n));
      mpz_class denom;
      mpz_pow_ui(denom.get_mpz_t(), nn.get_mpz_t(), r_);
      return Rational(c_ / Rational(denom));
    }
    case Kind::DyadicLog:
      return Rational(c_ * pow2(-static_cast<std::int64_t>(floor_log2(n))));
    case Kind::EventuallyZeroAfter:
      return n > last_ ? ExtScalar(Rational(0)) : ExtScalar::infinity();
    case Kind::Custom: {
      ExtScalar best = ExtScalar::infinity();
      for (const auto& [eps, start] : table_) {
        if (start <= n) best = min(best, ExtScalar(eps));
      }
      return best;
    }
    case Kind::Sum: {
      ExtScalar total = Rational(0);
      for (const auto& part : parts_) total += part.bound(n);
      return total * c_;
    }
  }
  return ExtScalar::infinity();
}

std::optional<Index> RateCert::threshold(const Rational& eps) const {
  constexpr Index kTop = Index{1} << 62;
  ExtScalar target(eps);
  if (!(bound(kTop) < target)) return std::nullopt;
  Index lo = 1, hi = kTop;  // bound(hi) < eps
  while (lo < hi) {
    Index mid = lo + (hi - lo) / 2;
    if (bound(mid) < target) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

std::string RateCert::describe() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::PowerLaw: out << "PowerLaw(C=" << to_string(c_) << ", r=" << r_ << ")"; break;
    case Kind::DyadicLog: out << "DyadicLog(C=" << to_string(c_) << ")"; break;
    case Kind::EventuallyZeroAfter: out << "EventuallyZeroAfter(" << last_ << ")"; break;
    case Kind::Custom:
      out << "Custom(";
      for (std::size_t i = 0; i < table_.size(); ++i) {
        out << (i ? ", " : "") << to_string(table_[i].first) << "@" << table_[i].second;
      }
      out << ")";
      break;
    case Kind::Sum:
      out << "Sum(factor=" << to_string(c_);
      for (const auto& part : parts_) out << ", " << part.describe();
      out << ")";
      break;
  }
  return out.str();
}

std::string to_string(const Probe& probe) {
  if (const auto* i = std::get_if<Index>(&probe)) return "i=" + std::to_string(*i);
  return "t=" + to_string(std::get<Rational>(probe));
}

Element Family::operator()(Index n) const {
  if (n == 0) throw Error(ErrorCode::BadParams, "family index starts at 1");
  if (eval_limit && n > *eval_limit) {
    throw Error(ErrorCode::HorizonExhausted, name + " cannot materialize index " + std::to_string(n));
  }
  return eval(n);
}

Family shifted(const Family& fam, const Element& c) {
  if (is_zero(c)) return fam;
  Family out;
  out.name = fam.name + "-shift";
  out.kind = fam.kind;
  out.eval_limit = fam.eval_limit;
  out.constant = fam.constant;
  out.eval = [base = fam.eval, c](Index n) { return base(n) - c; };
  return out;
}

Family subsequence(const Family& fam, std::function<Index(Index)> idx, std::string name) {
  Family out;
  out.name = std::move(name);
  out.kind = fam.kind;
  out.constant = fam.constant;
  out.eval = [base = fam.eval, idx](Index k) { return base(idx(k)); };
  // idx(k) >= k and every bound is nonincreasing, so null certificates carry over.
  out.un_cert = fam.un_cert;
  out.uniform_cert = fam.uniform_cert;
  out.measure_cert = fam.measure_cert;
  out.pointwise_cert = fam.pointwise_cert;
  out.upper_bound = fam.upper_bound;
  if (fam.eval_limit) {
    // Largest k whose mapped index is still materializable.
    Index k = 0;
    while (idx(k + 1) <= *fam.eval_limit) ++k;
    out.eval_limit = k;
  }
  return out;
}

}  // namespace unlattice
