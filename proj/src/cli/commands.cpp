#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "convsum/arith.hpp"
#include "convsum/cli.hpp"
#include "convsum/convolution.hpp"
#include "convsum/errors.hpp"
#include "convsum/modforms.hpp"
#include "convsum/representations.hpp"
#include "convsum/serialize.hpp"

namespace convsum::cli {

namespace {

struct QuotientArgs {
  int level = 0;
  std::string exponents;
  std::string name;
  std::string json;
};

void add_quotient_options(CLI::App* cmd, QuotientArgs& q) {
  cmd->add_option("--level", q.level, "Level N");
  cmd->add_option("--exponents", q.exponents, "Exponents as delta:r pairs, e.g. 1:5,2:-1,7:5,14:-1");
  cmd->add_option("--name", q.name, "Registered quotient label (A1..A4, B1..B7, C1..C9)");
  cmd->add_option("--json", q.json, "Eta quotient as {\"level\": N, \"exponents\": {...}}");
}

EtaQuotient resolve_quotient(const QuotientArgs& q) {
  const int given = !q.name.empty() + !q.json.empty() + !q.exponents.empty();
  if (given != 1) throw InvalidArgument("give exactly one of --name, --json, or --level with --exponents");
  if (!q.name.empty()) {
    auto found = find_registered_quotient(q.name);
    if (!found) throw InvalidArgument("unknown quotient label '" + q.name + "'");
    return found->eta;
  }
  if (!q.json.empty()) {
    const Json j = Json::parse(q.json, nullptr, false);
    if (j.is_discarded()) throw InvalidArgument("--json is not valid JSON");
    return eta_from_json(j);
  }
  if (q.level < 1) throw InvalidArgument("--exponents needs --level");
  return EtaQuotient::parse(q.level, q.exponents);
}

class Session {
 public:
  explicit Session(const RunConfig& config) : config_(config) {
    if (config.cache_dir) cache_.emplace(*config.cache_dir);
  }

  const RunConfig& config() const { return config_; }

  QSeries expand(const EtaQuotient& eta, std::size_t truncation) {
    if (!cache_) return expand_eta_quotient(eta, truncation);
    const std::string params = "level=" + std::to_string(eta.level()) + ";exponents=" + eta.to_string();
    return cache_->get_or_compute("eta", params, truncation, [&] { return expand_eta_quotient(eta, truncation); });
  }

  void require_solver_truncation() const {
    if (config_.truncation < kMinSolverTruncation) {
      throw InvalidArgument("--truncation must be at least " + std::to_string(kMinSolverTruncation) +
                            " for basis construction");
    }
  }

  Basis basis(int level) {
    require_solver_truncation();
    const std::size_t t = config_.truncation;
    const std::vector<NamedEtaQuotient> cusps = select_cusp_quotients(level, config_.search_bound, t);
    std::vector<QSeries> series;
    for (const NamedEtaQuotient& q : cusps) series.push_back(expand(q.eta, t));
    return build_basis(level, cusps, std::move(series), t);
  }

 private:
  RunConfig config_;
  std::optional<SeriesCache> cache_;
};

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void write_formula_csv(std::ostream& out, const ConvolutionFormula& f) {
  const std::string prefix = std::to_string(f.alpha) + ',' + std::to_string(f.beta) + ',';
  for (const auto& [d, c] : f.sigma3_terms) out << prefix << "sigma3," << d << ',' << c.to_string() << '\n';
  for (const auto& [d, c] : f.sigma_terms) {
    out << prefix << "sigma," << d << ',' << c.first.to_string() << '\n';
    out << prefix << "n_sigma," << d << ',' << c.second.to_string() << '\n';
  }
  for (const auto& [id, c] : f.cusp_terms) out << prefix << "cusp," << id << ',' << c.to_string() << '\n';
}

void write_expansion_csv(std::ostream& out, const TargetExpansion& e) {
  const std::string prefix = std::to_string(e.alpha) + ',' + std::to_string(e.beta) + ',';
  out << prefix << "constant,0," << e.constant.to_string() << '\n';
  for (const auto& [t, x] : e.eisenstein) out << prefix << "sigma3," << t << ',' << e.sigma3_display(t).to_string() << '\n';
  for (const auto& [id, y] : e.cusp) out << prefix << "cusp," << id << ',' << y.to_string() << '\n';
}

const std::vector<std::pair<std::int64_t, std::int64_t>>& default_pairs() {
  static const std::vector<std::pair<std::int64_t, std::int64_t>> pairs = {{2, 7}, {1, 22}, {2, 11}, {1, 26}, {2, 13}};
  return pairs;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Divisor convolution sums via modular forms", "convsum"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string cache_dir;
  std::string format = "json";
  app.add_option("--truncation", config.truncation, "Working q-expansion truncation")->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", cache_dir, "Directory for cached q-expansions");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--bound", config.search_bound, "Eta exponent search bound")->check(CLI::PositiveNumber);

  QuotientArgs quotient;
  auto* expand_cmd = app.add_subcommand("expand", "Expand an eta quotient as a q-series");
  add_quotient_options(expand_cmd, quotient);
  auto* ligozat_cmd = app.add_subcommand("ligozat", "Newman-Ligozat report for an eta quotient");
  add_quotient_options(ligozat_cmd, quotient);

  int level = 0;
  int weight = 4;
  auto* search_cmd = app.add_subcommand("search", "Exhaustive eta-quotient cusp form search");
  search_cmd->add_option("--level", level, "Level N")->required();
  search_cmd->add_option("--weight", weight, "Weight (even)");

  auto* basis_cmd = app.add_subcommand("basis", "Weight-4 basis at a level");
  basis_cmd->add_option("--level", level, "Level N")->required();

  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  std::int64_t nmax = 1000;
  std::string formula_file;
  auto* derive_cmd = app.add_subcommand("derive", "Derive the closed formula for W_(alpha,beta)");
  derive_cmd->add_option("--alpha", alpha)->required();
  derive_cmd->add_option("--beta", beta)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Derive (or load) a formula and check it against brute force");
  verify_cmd->add_option("--alpha", alpha);
  verify_cmd->add_option("--beta", beta);
  verify_cmd->add_option("--formula", formula_file, "Formula JSON file to check instead of deriving");
  verify_cmd->add_option("--nmax", nmax, "Check 1 <= n <= nmax")->check(CLI::PositiveNumber);

  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t rep_nmax = 500;
  auto* rep_cmd = app.add_subcommand("rep", "Octonary representation counts, formula vs. oracle (CSV)");
  rep_cmd->add_option("--a", a)->required();
  rep_cmd->add_option("--b", b)->required();
  rep_cmd->add_option("--nmax", rep_nmax)->check(CLI::PositiveNumber);

  bool expansion = false;
  auto* table_cmd = app.add_subcommand("table", "Coefficient tables as CSV");
  table_cmd->add_option("--alpha", alpha);
  table_cmd->add_option("--beta", beta);
  table_cmd->add_flag("--expansion", expansion, "Basis expansion of the squared L-difference instead of W");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kInputError;
  }

  config.format = (format == "csv") ? OutputFormat::Csv : OutputFormat::Json;
  if (!cache_dir.empty()) config.cache_dir = cache_dir;

  try {
    Session session(config);
    const std::size_t t = config.truncation;

    if (expand_cmd->parsed()) {
      const EtaQuotient eta = resolve_quotient(quotient);
      const QSeries s = session.expand(eta, t);
      if (config.format == OutputFormat::Csv) {
        out << "n,coefficient\n";
        for (std::size_t n = 0; n <= s.truncation(); ++n) out << n << ',' << s[n].to_string() << '\n';
      } else {
        out << qseries_to_json(s).dump() << '\n';
      }
      return kSuccess;
    }

    if (ligozat_cmd->parsed()) {
      const EtaQuotient eta = resolve_quotient(quotient);
      print_json(out, ligozat_to_json(eta, check_ligozat(eta)));
      return kSuccess;
    }

    if (search_cmd->parsed()) {
      const auto found = search_eta_quotients(level, weight, config.search_bound);
      if (config.format == OutputFormat::Csv) {
        out << "index,exponents\n";
        for (std::size_t i = 0; i < found.size(); ++i) out << i + 1 << ",\"" << found[i].to_string() << "\"\n";
      } else {
        Json list = Json::array();
        for (const auto& e : found) list.push_back(eta_to_json(e));
        Json j;
        j["level"] = level;
        j["weight"] = weight;
        j["bound"] = config.search_bound;
        j["quotients"] = std::move(list);
        print_json(out, j);
      }
      return kSuccess;
    }

    if (basis_cmd->parsed()) {
      print_json(out, basis_to_json(session.basis(level)));
      return kSuccess;
    }

    if (derive_cmd->parsed()) {
      const Basis basis = session.basis(static_cast<int>(alpha * beta));
      const ConvolutionFormula f = derive_convolution_formula(alpha, beta, basis);
      if (config.format == OutputFormat::Csv) {
        out << "alpha,beta,term,key,coefficient\n";
        write_formula_csv(out, f);
      } else {
        print_json(out, formula_to_json(f));
      }
      return kSuccess;
    }

    if (verify_cmd->parsed()) {
      if (nmax > static_cast<std::int64_t>(t)) {
        throw InvalidArgument("--nmax " + std::to_string(nmax) + " exceeds --truncation " + std::to_string(t));
      }
      ConvolutionFormula f;
      Basis basis;
      if (!formula_file.empty()) {
        std::ifstream in(formula_file);
        if (!in) throw InvalidArgument("cannot read " + formula_file);
        const Json j = Json::parse(in, nullptr, false);
        if (j.is_discarded()) throw InvalidArgument(formula_file + " is not valid JSON");
        f = formula_from_json(j);
        basis = session.basis(f.level);
      } else {
        if (alpha < 1 || beta < 1) throw InvalidArgument("verify needs --alpha and --beta, or --formula");
        basis = session.basis(static_cast<int>(alpha * beta));
        f = derive_convolution_formula(alpha, beta, basis);
      }
      // Cusp series in the formula's order, matched by label.
      std::vector<QSeries> cusp;
      for (const auto& [id, c] : f.cusp_terms) {
        const auto it = std::find_if(basis.elements.begin(), basis.elements.end(),
                                     [&](const BasisElement& e) { return e.label == id; });
        if (it == basis.elements.end() || it->kind != BasisElement::Kind::Cusp) {
          throw InvalidArgument("formula refers to unknown cusp element '" + id + "'");
        }
        cusp.push_back(it->series);
      }
      const VerificationReport report = verify_formula(f, nmax, cusp);
      print_json(out, verification_to_json(report));
      return report.ok() ? kSuccess : kMismatch;
    }

    if (rep_cmd->parsed()) {
      bool all = true;
      out << "n,formula_value,oracle_value,match\n";
      for (std::int64_t n = 1; n <= rep_nmax; ++n) {
        const std::int64_t f = N_ab_formula(a, b, n);
        const std::int64_t o = N_ab_convolution(a, b, n);
        all = all && f == o;
        out << n << ',' << f << ',' << o << ',' << (f == o ? "true" : "false") << '\n';
      }
      return all ? kSuccess : kMismatch;
    }

    if (table_cmd->parsed()) {
      std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
      if (alpha > 0 || beta > 0) {
        pairs.emplace_back(alpha, beta);
      } else {
        pairs = default_pairs();
      }
      out << "alpha,beta,term,key,coefficient\n";
      for (const auto& [x, y] : pairs) {
        const Basis basis = session.basis(static_cast<int>(x * y));
        if (expansion) {
          write_expansion_csv(out, expand_target(x, y, basis));
        } else {
          write_formula_csv(out, derive_convolution_formula(x, y, basis));
        }
      }
      return kSuccess;
    }
  } catch (const Error& e) {
    err << e.name() << ": " << e.what() << '\n';
    return e.category() == ErrorCategory::Input ? kInputError : kSolverFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace convsum::cli
