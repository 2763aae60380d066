#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "unlattice/convergence.hpp"
#include "unlattice/error.hpp"
#include "unlattice/extraction.hpp"
#include "unlattice/gallery.hpp"
#include "unlattice/laws.hpp"

using namespace unlattice;
using json = nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct RunConfig {
  Index horizon = 4096;
  unsigned budget = kDefaultBudget;
  unsigned eps_depth = 20;  // eps grid 2^-1 ... 2^-depth
  std::uint64_t seed = 0;

  CheckConfig check() const {
    CheckConfig c;
    c.horizon = horizon;
    c.budget = budget;
    c.eps_grid.clear();
    for (unsigned k = 1; k <= eps_depth; ++k) c.eps_grid.push_back(pow2(-static_cast<std::int64_t>(k)));
    return c;
  }
};

/// Writes to `path`, or to stdout when the path is empty or "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::BadParams, "cannot write " + path);
  out << text;
}

bool is_usage(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadParams:
    case ErrorCode::UnsupportedPair:
    case ErrorCode::UnknownLaw:
    case ErrorCode::ParseError:
    case ErrorCode::KindMismatch:
    case ErrorCode::BadUnit:
      return true;
    default:
      return false;
  }
}

std::string gauge_csv(const Family& fam, const SpacePair& pair, Index n_max, unsigned budget) {
  std::ostringstream out;
  out << "n,test_vector_id,gauge_num,gauge_den,power\n";
  const auto vectors = test_vectors(pair, budget).vectors;
  const Index top = fam.cap(n_max);
  for (Index n = 1; n <= top; ++n) {
    Element f = fam(n);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      NormValue g = gauge(f, vectors[i], pair);
      out << n << ',' << i << ',';
      if (!g.exact) {
        out << g.approx << ",,0\n";
      } else if (g.powered.is_infinite()) {
        out << "inf,1," << g.power << '\n';
      } else {
        const Rational& v = g.powered.value();
        out << v.get_num().get_str() << ',' << v.get_den().get_str() << ',' << g.power << '\n';
      }
    }
  }
  return out.str();
}

/// "DyadicLog", "DyadicLog(C)", "PowerLaw(C,r)" or "EventuallyZeroAfter(L)".
RateCert parse_cert(const std::string& text) {
  auto open = text.find('(');
  std::string head = text.substr(0, open);
  std::vector<std::string> args;
  if (open != std::string::npos) {
    if (text.back() != ')') throw Error(ErrorCode::ParseError, "certificate: missing ')' in " + text);
    std::stringstream in(text.substr(open + 1, text.size() - open - 2));
    for (std::string a; std::getline(in, a, ',');) args.push_back(a);
  }
  try {
    if (head == "DyadicLog" && args.size() <= 1) {
      return args.empty() ? RateCert::dyadic_log() : RateCert::dyadic_log(parse_rational(args[0]));
    }
    if (head == "PowerLaw" && args.size() == 2) {
      return RateCert::power_law(parse_rational(args[0]), static_cast<unsigned>(std::stoul(args[1])));
    }
    if (head == "EventuallyZeroAfter" && args.size() == 1) return RateCert::eventually_zero_after(std::stoull(args[0]));
  } catch (const std::logic_error&) {
    // falls through to the parse error below
  }
  throw Error(ErrorCode::ParseError, "certificate: cannot parse " + text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact unbounded-norm convergence checks over concrete vector lattices"};
  app.require_subcommand(1);
  RunConfig rc;
  app.add_option("--horizon", rc.horizon, "largest index examined")->check(CLI::PositiveNumber);
  app.add_option("--budget", rc.budget, "test vectors taken from a dense sub-ideal basis")->check(CLI::PositiveNumber);
  app.add_option("--eps-depth", rc.eps_depth, "eps grid is 2^-1 ... 2^-depth")->check(CLI::Range(1u, 62u));
  app.add_option("--seed", rc.seed, "seed recorded in reports; UNLATTICE_SEED overrides it");

  std::string family_name, pair_name, mode_name, out_path;
  Index n_max = 8;

  auto* gauge_cmd = app.add_subcommand("gauge", "gauge table ||f_n ^ x|| for n = 1..N as CSV");
  gauge_cmd->add_option("--family", family_name)->required();
  gauge_cmd->add_option("--pair", pair_name)->required();
  gauge_cmd->add_option("--n-max", n_max)->check(CLI::PositiveNumber);
  gauge_cmd->add_option("--csv", out_path, "output file (default stdout)");

  auto* check_cmd = app.add_subcommand("check", "convergence verdict as JSON");
  check_cmd->add_option("--family", family_name)->required();
  check_cmd->add_option("--pair", pair_name)->required();
  check_cmd->add_option("--mode", mode_name)
      ->required()
      ->check(CLI::IsMember({"un", "pointwise", "measure", "ae", "uniform"}));
  check_cmd->add_option("--json", out_path, "output file (default stdout)");

  auto* laws_cmd = app.add_subcommand("laws", "law suite");
  laws_cmd->require_subcommand(1);
  auto* laws_run = laws_cmd->add_subcommand("run", "run one law or all of them");
  std::string law_id;
  std::vector<std::string> law_families, law_pairs;
  laws_run->add_option("--law", law_id);
  laws_run->add_option("--family", law_families, "restrict to these families");
  laws_run->add_option("--pair", law_pairs, "restrict to these pairs");
  laws_run->add_option("--json", out_path, "write the reports as a JSON array");

  auto* extract_cmd = app.add_subcommand("extract", "a.e.-null subsequence from an in-measure certificate");
  unsigned k_count = 8;
  long samples = 10000;
  extract_cmd->add_option("--family", family_name)->required();
  extract_cmd->add_option("--k", k_count)->required()->check(CLI::PositiveNumber);
  extract_cmd->add_option("--samples", samples)->check(CLI::PositiveNumber);
  std::string cert_text;
  extract_cmd->add_option("--cert", cert_text, "DyadicLog(C), PowerLaw(C,r) or EventuallyZeroAfter(L); default: the family's own");
  extract_cmd->add_option("--json", out_path, "output file (default stdout)");

  auto* gallery_cmd = app.add_subcommand("gallery", "gallery of named families");
  gallery_cmd->require_subcommand(1);
  auto* gallery_list = gallery_cmd->add_subcommand("list", "enumerate gallery entries");
  bool gallery_json = false;
  gallery_list->add_flag("--json", gallery_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (const char* env = std::getenv("UNLATTICE_SEED")) {
    try {
      rc.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "UNLATTICE_SEED must be a non-negative integer\n";
      return kUsage;
    }
  }

  try {
    const CheckConfig cfg = rc.check();
    if (*gauge_cmd) {
      emit(out_path, gauge_csv(family(family_name), build_pair(pair_name), n_max, rc.budget));
      return kOk;
    }
    if (*check_cmd) {
      Verdict v = check(family(family_name), build_pair(pair_name), parse_mode(mode_name), cfg);
      emit(out_path, to_json(v).dump(2) + "\n");
      return kOk;
    }
    if (*laws_run) {
      LawConfig lc;
      lc.check = cfg;
      lc.seed = rc.seed;
      lc.families = law_families;
      lc.pairs = law_pairs;
      std::vector<std::string> ids = law_id.empty() ? law_ids() : std::vector<std::string>{law_id};
      json all = json::array();
      bool pass = true;
      for (const auto& id : ids) {
        LawReport r = run_law(id, lc);
        pass = pass && r.pass;
        std::cerr << id << ' ' << (r.pass ? "PASS" : "FAIL") << ' ' << law_title(id) << '\n';
        all.push_back(to_json(r));
      }
      emit(out_path, all.dump(2) + "\n");
      return pass ? kOk : kFailure;
    }
    if (*extract_cmd) {
      Family fam = family(family_name);
      std::optional<RateCert> cert = fam.measure_cert;
      if (!cert_text.empty()) cert = parse_cert(cert_text);
      if (!cert) throw Error(ErrorCode::BadParams, family_name + " carries no in-measure certificate; pass --cert");
      ExtractionOptions opts;
      opts.sample_points = samples;
      auto r = extract_ae_subsequence(fam, *cert, k_count, opts);
      json j = to_json(r);
      j["certificate"] = to_json(*cert);
      emit(out_path, j.dump(2) + "\n");
      return kOk;
    }
    if (*gallery_list) {
      std::ostringstream out;
      if (gallery_json) {
        json arr = json::array();
        for (const auto& e : gallery_entries()) {
          arr.push_back({{"name", e.name}, {"kind", to_string(e.kind)}, {"params", e.params}, {"summary", e.summary}});
        }
        out << arr.dump(2) << '\n';
      } else {
        for (const auto& e : gallery_entries()) out << e.name << '\t' << to_string(e.kind) << '\t' << e.summary << '\n';
      }
      emit("", out.str());
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return is_usage(e.code()) ? kUsage : kFailure;
  }
  return kUsage;
}
