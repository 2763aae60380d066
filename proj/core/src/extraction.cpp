#include "unlattice/extraction.hpp"

#include "unlattice/error.hpp"
#include "unlattice/gallery.hpp"

namespace unlattice {

ExtractionResult extract_ae_subsequence(const Family& fam, const RateCert& cert, unsigned k_count,
                                        const ExtractionOptions& opts) {
  if (fam.kind != CarrierKind::Step && fam.kind != CarrierKind::PiecewiseLinear) {
    throw Error(ErrorCode::KindMismatch, "extraction needs a step or piecewise-linear family");
  }
  if (opts.sample_points <= 0) throw Error(ErrorCode::BadParams, "sample_points must be positive");
  ExtractionResult out;
  out.family = fam.name;
  Index cap = fam.cap(opts.index_cap);
  Index prev = 0;
  std::vector<Element> picked;
  for (unsigned k = 1; k <= k_count; ++k) {
    const Rational eps = pow2(-static_cast<std::int64_t>(k));
    auto promised = cert.threshold(eps);
    if (!promised) {
      throw Error(ErrorCode::HorizonExhausted,
                  "certificate " + cert.describe() + " never drops below 2^-" + std::to_string(k));
    }
    for (Index n = prev + 1;; ++n) {
      if (n > cap) {
        throw Error(ErrorCode::HorizonExhausted, "no admissible index for k=" + std::to_string(k) + " up to " +
                                                     std::to_string(cap));
      }
      Element f = fam(n);
      Rational mu = level_measure(f, eps);
      if (ExtScalar(mu) > cert.bound(n) || (n >= *promised && mu >= eps)) {
        throw Error(ErrorCode::CertificateViolated, "mu{|f_" + std::to_string(n) + "| > 2^-" + std::to_string(k) +
                                                        "} = " + to_string(mu) + " exceeds " +
                                                        to_string(cert.bound(n)) + " from " + cert.describe());
      }
      if (mu < eps) {
        out.indices.push_back(n);
        out.mu.push_back(mu);
        picked.push_back(std::move(f));
        prev = n;
        break;
      }
    }
  }

  out.tail.assign(k_count, Rational(0));
  Rational acc = 0;
  for (std::size_t j = k_count; j-- > 0;) {
    acc += out.mu[j];
    out.tail[j] = acc;
  }
  out.total = acc;

  // Exact bookkeeping on sampled points: outside S_k the value is at most 2^-k.
  std::vector<Region> superlevel;
  for (unsigned k = 1; k <= k_count; ++k) superlevel.push_back(superlevel_set(picked[k - 1], pow2(-static_cast<std::int64_t>(k))));
  out.outside.assign(k_count, 0);
  const long p = opts.sample_points;
  for (long i = 0; i < p; ++i) {
    Rational t = ratio(2 * i + 1, 2 * p);
    unsigned last_inside = 0;  // largest k with t in S_k
    for (unsigned k = 1; k <= k_count; ++k) {
      bool inside = superlevel[k - 1].contains(t);
      Rational v = std::holds_alternative<StepFn>(picked[k - 1]) ? std::get<StepFn>(picked[k - 1])(t)
                                                                 : std::get<PLFn>(picked[k - 1])(t);
      if (inside) last_inside = k;
      if (!inside && abs(v) > pow2(-static_cast<std::int64_t>(k))) ++out.sample_violations;
    }
    for (unsigned j = last_inside + 1; j <= k_count; ++j) ++out.outside[j - 1];
    ++out.samples;
  }
  return out;
}

Family extracted_family(const Family& fam, const ExtractionResult& result) {
  auto idx = result.indices;
  Family sub = subsequence(fam, [idx](Index k) { return idx.at(k - 1); }, fam.name + "-extracted");
  sub.eval_limit = idx.size();
  return sub;
}

namespace {

Verdict capped_ae(const Family& fam, Index horizon, const CheckConfig& cfg) {
  CheckConfig local = cfg;
  local.horizon = std::max<Index>(horizon, 1);
  return check_ae(fam, local);
}

}  // namespace

UoProbeReport uo_subsequence_probe(const Family& fam, const std::vector<std::vector<Index>>& gamma, Index k_max,
                                   const CheckConfig& cfg) {
  if (fam.kind != CarrierKind::DirectSum) throw Error(ErrorCode::BadFamily, "probe needs a direct-sum family");
  FamilyParams params;
  params.gamma = gamma;
  params.gamma_k = k_max;
  Family reference = family("gamma_family", params);
  for (Index n = 1; n <= k_max; ++n) {
    if (!(fam(n) == reference(n))) {
      throw Error(ErrorCode::BadFamily, "family differs from gamma_family(gamma, K) at n=" + std::to_string(n));
    }
  }

  UoProbeReport report;
  report.un_null = check_un(fam, build_pair("suml1@gamma"), cfg);
  bool all = true;
  for (std::size_t c = 0; c < gamma.size(); ++c) {
    GammaEvidence ev;
    ev.component = c;
    for (Index n : gamma[c]) {
      if (n > k_max) break;
      ev.gamma.push_back(n);
    }
    const Index m = ev.gamma.size();
    ev.matches_typewriter_prefix = true;
    for (Index k = 1; k <= m; ++k) {
      const Element f = fam(ev.gamma[k - 1]);
      const auto& sum = std::get<DirectSumElem>(f);
      if (!(sum.component(static_cast<DirectSumElem::ComponentId>(c)) == typewriter_element(k))) {
        ev.matches_typewriter_prefix = false;
      }
    }
    std::vector<Index> prefix(m);
    for (Index k = 1; k <= m; ++k) prefix[k - 1] = k;
    ev.own_view = capped_ae(typewriter_subsequence(prefix, "component-" + std::to_string(c) + "-along-gamma"), m, cfg);
    ev.index_view = capped_ae(typewriter_subsequence(ev.gamma, "typewriter-at-gamma-" + std::to_string(c)), m, cfg);
    ev.witnesses_failure = m > 0 && ev.matches_typewriter_prefix && ev.own_view.cls == VerdictClass::Refuted;
    all = all && ev.witnesses_failure;
    report.per_gamma.push_back(std::move(ev));
  }
  report.pass = report.un_null.is_null() && all;
  return report;
}

nlohmann::json to_json(const ExtractionResult& r) {
  nlohmann::json j = {{"family", r.family}, {"indices", r.indices}, {"total", to_string(r.total)},
                      {"samples", r.samples}, {"sample_violations", r.sample_violations}, {"outside", r.outside}};
  j["mu"] = nlohmann::json::array();
  for (const auto& m : r.mu) j["mu"].push_back(to_string(m));
  j["tail"] = nlohmann::json::array();
  for (const auto& t : r.tail) j["tail"].push_back(to_string(t));
  return j;
}

nlohmann::json to_json(const UoProbeReport& r) {
  nlohmann::json j = {{"un_null", to_json(r.un_null)}, {"pass", r.pass}, {"per_gamma", nlohmann::json::array()}};
  for (const auto& ev : r.per_gamma) {
    j["per_gamma"].push_back({{"component", ev.component},
                              {"gamma", ev.gamma},
                              {"matches_typewriter_prefix", ev.matches_typewriter_prefix},
                              {"own_view", to_json(ev.own_view)},
                              {"index_view", to_json(ev.index_view)},
                              {"witnesses_failure", ev.witnesses_failure}});
  }
  return j;
}

}  // namespace unlattice
