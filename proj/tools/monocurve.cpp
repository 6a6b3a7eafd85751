// Command-line front end: print the ideal families and run verification suites.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "monocurve/curve.hpp"
#include "monocurve/error.hpp"
#include "monocurve/order.hpp"
#include "monocurve/scalar.hpp"
#include "monocurve/verify.hpp"

namespace {

using namespace monocurve;
namespace mv = monocurve::verify;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FieldConfig parse_field(const std::string& text) {
  if (text == "rational") return FieldConfig::rational();
  if (text == "fp") return FieldConfig::prime_field(kDefaultPrime);
  if (text.rfind("fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
        digits.size() > 9) {
      throw UsageError("bad prime in --field: " + text);
    }
    try {
      return FieldConfig::prime_field(static_cast<std::uint32_t>(std::stoul(digits)));
    } catch (const std::exception& e) {
      throw UsageError(std::string("--field: ") + e.what());
    }
  }
  throw UsageError("--field must be rational, fp or fp:<p>, got " + text);
}

/// "d:n,d:n,..." -> map d -> n.
std::map<int, int> parse_grid(const std::string& text) {
  std::map<int, int> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("bad grid entry '" + item + "'");
    try {
      grid[std::stoi(item.substr(0, colon))] = std::stoi(item.substr(colon + 1));
    } catch (const std::exception&) {
      throw UsageError("bad grid entry '" + item + "'");
    }
  }
  return grid;
}

std::map<int, int> grid_from_env(const char* var, const std::string& fallback) {
  const char* value = std::getenv(var);
  return parse_grid(value != nullptr && *value != '\0' ? value : fallback);
}

const std::string kMonomialGrid = "2:6,3:6,4:6,5:8,6:6";
const std::string kGroebnerGrid = "2:6,3:6,4:6,5:4";
constexpr int kGroebnerMaxD = 5;

bool is_groebner_suite(const std::string& s) { return s == "leading" || s == "sanity"; }

struct VerifyConfig {
  std::string suite = "all";
  std::optional<int> d;
  int m = 1;
  std::optional<int> n_max;
  int k = 0;
  bool with_f = false;
  std::string field = "rational";
  std::string format = "text";
  std::string out;
  unsigned jobs = 1;
  bool timing = true;
};

std::vector<mv::VerificationReport> run_one(const std::string& suite, int d, int n_max,
                                            const VerifyConfig& cfg,
                                            const mv::Options& opt) {
  std::vector<mv::VerificationReport> out;
  if (suite == "colon") out.push_back(mv::check_colon_identity(d, n_max, opt));
  if (suite == "regseq") out.push_back(mv::check_assoc_graded_regseq(d, n_max, opt));
  if (suite == "length") out.push_back(mv::check_length_formula(d, n_max, opt));
  if (suite == "alternating") {
    out.push_back(mv::check_alternating_lengths(d, n_max, cfg.k, opt));
  }
  if (suite == "leading") {
    out.push_back(mv::check_leading_ideal_equality(d, n_max, cfg.with_f, cfg.k, opt));
  }
  if (suite == "scounts") out.push_back(mv::check_s_counts_and_spanning(d, n_max, opt));
  if (suite == "gscolon") out.push_back(mv::check_gs_colon_chain(d, n_max, cfg.k, opt));
  if (suite == "socle") out.push_back(mv::socle_dimension_artinian_reduction(d, opt));
  if (suite == "sanity") out.push_back(mv::check_construction_sanity(d, cfg.m, n_max, opt));
  return out;
}

int cmd_verify(const VerifyConfig& cfg) {
  set_active_field(parse_field(cfg.field));
  if (cfg.format != "text" && cfg.format != "json" && cfg.format != "csv") {
    throw UsageError("--format must be text, json or csv");
  }
  const std::vector<std::string> all = {"colon",   "regseq",  "length", "alternating",
                                        "leading", "scounts", "gscolon", "socle",
                                        "sanity"};
  std::vector<std::string> suites;
  if (cfg.suite == "all") {
    suites = all;
  } else if (std::find(all.begin(), all.end(), cfg.suite) != all.end()) {
    suites = {cfg.suite};
  } else {
    throw UsageError("unknown suite " + cfg.suite);
  }
  if (cfg.d && cfg.suite != "all" && is_groebner_suite(cfg.suite) && *cfg.d > kGroebnerMaxD) {
    throw UsageError("suite " + cfg.suite + " needs Groebner bases, which are out of desk "
                     "scale for d >= 6; use d <= 5 or a monomial suite (colon, regseq, "
                     "length, alternating, scounts, gscolon, socle)");
  }
  const auto mono_grid = grid_from_env("MONOCURVE_GRID_MONOMIAL", kMonomialGrid);
  const auto gb_grid = grid_from_env("MONOCURVE_GRID_GROEBNER", kGroebnerGrid);

  mv::Options opt;
  opt.jobs = cfg.jobs;
  opt.timing = cfg.timing;
  std::vector<mv::VerificationReport> reports;
  for (const std::string& suite : suites) {
    const auto& grid = is_groebner_suite(suite) ? gb_grid : mono_grid;
    std::vector<std::pair<int, int>> cells;
    if (cfg.d) {
      if (is_groebner_suite(suite) && *cfg.d > kGroebnerMaxD) continue;
      int n_max = 0;
      if (cfg.n_max) {
        n_max = *cfg.n_max;
      } else if (auto it = grid.find(*cfg.d); it != grid.end()) {
        n_max = it->second;
      } else {
        n_max = 4;
      }
      cells.emplace_back(*cfg.d, n_max);
    } else {
      for (const auto& [d, n] : grid) cells.emplace_back(d, cfg.n_max.value_or(n));
    }
    for (const auto& [d, n_max] : cells) {
      // Suites validate k against d; on a grid, k applies only where valid.
      for (auto& r : run_one(suite, d, n_max, cfg, opt)) reports.push_back(std::move(r));
    }
  }

  std::ostringstream os;
  if (cfg.format == "json") {
    mv::Json j;
    if (reports.size() == 1) {
      j = mv::to_json(reports.front());
    } else {
      j = mv::Json::array();
      for (const auto& r : reports) j.push_back(mv::to_json(r));
    }
    os << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    bool header = true;
    for (const auto& r : reports) {
      os << mv::render_csv(r, header);
      header = false;
    }
  } else {
    for (const auto& r : reports) os << mv::render_text(r);
  }

  if (cfg.out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) throw UsageError("cannot open " + cfg.out);
    file << os.str();
  }
  const bool ok = std::all_of(reports.begin(), reports.end(),
                              [](const auto& r) { return r.all_passed(); });
  return ok ? 0 : kExitFail;
}

struct IdealConfig {
  int d = 0;
  std::string kind;
  int n = 0;
  int i = 0;
  int j = 0;
  int m = 1;
  bool full = false;
  std::vector<int> a;
  bool lines = false;
  std::string field = "rational";
};

std::string join(const std::vector<std::string>& items, bool lines) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k > 0) out += lines ? "\n" : ", ";
    out += items[k];
  }
  return out;
}

std::vector<std::string> poly_strings(const PolyIdeal& ideal) {
  std::vector<std::string> out;
  for (const Polynomial& g : ideal.gens()) out.push_back(g.to_string());
  return out;
}

std::vector<std::string> mono_strings(const MonomialIdeal& ideal) {
  std::vector<std::string> out;
  for (const Monomial& g : ideal.gens()) out.push_back(g.to_string());
  return out;
}

int cmd_ideal(const IdealConfig& cfg) {
  using namespace monocurve::curve;
  set_active_field(parse_field(cfg.field));
  const int d = cfg.d;
  std::string text;
  try {
    if (cfg.kind == "X") {
      text = build_matrix({d, cfg.m}, !cfg.full).to_string(cfg.full ? 1 : 2);
      if (!text.empty() && text.back() == '\n') text.pop_back();
    } else if (cfg.kind == "fi") {
      text = f_poly(d, cfg.i).to_string();
    } else if (cfg.kind == "calJ") {
      text = join(poly_strings(cal_J(d, cfg.i)), cfg.lines);
    } else if (cfg.kind == "calI") {
      text = join(poly_strings(cal_I(d, cfg.n)), cfg.lines);
    } else if (cfg.kind == "J") {
      text = join(mono_strings(mono_J(d, cfg.i)), cfg.lines);
    } else if (cfg.kind == "I") {
      text = join(mono_strings(mono_I(d, cfg.n)), cfg.lines);
    } else if (cfg.kind == "lambda") {
      if (cfg.j < 1 || cfg.j > d - 1) throw UsageError("--j must be in 1..d-1");
      std::vector<std::string> items;
      for (const auto& w : lambda_set(cfg.j, cfg.n)) items.push_back(w.to_string());
      text = join(items, cfg.lines);
    } else if (cfg.kind == "S") {
      std::vector<Monomial> s = s_set(d, cfg.a);
      std::sort(s.begin(), s.end(), [](const Monomial& x, const Monomial& y) {
        return grevelex_compare(x, y) > 0;
      });
      std::vector<std::string> items;
      for (const Monomial& u : s) items.push_back(u.to_string());
      text = join(items, cfg.lines);
    } else {
      throw UsageError("unknown --kind " + cfg.kind);
    }
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  std::cout << text << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ideal constructions and verification suites for monomial curves"};
  app.require_subcommand(1);

  IdealConfig icfg;
  auto* ideal = app.add_subcommand("ideal", "Print a matrix, polynomial, ideal or set");
  ideal->add_option("--d", icfg.d, "Embedding dimension d >= 2")->required();
  ideal->add_option("--kind", icfg.kind, "X, fi, calJ, calI, J, I, lambda or S")
      ->required()
      ->check(CLI::IsMember({"X", "fi", "calJ", "calI", "J", "I", "lambda", "S"}));
  ideal->add_option("--n", icfg.n, "Weight n");
  ideal->add_option("--i", icfg.i, "Index i");
  ideal->add_option("--j", icfg.j, "Length j of compositions (lambda)");
  ideal->add_option("--a", icfg.a, "Composition a_1,...,a_j (S)")->delimiter(',');
  ideal->add_option("--m", icfg.m, "Curve parameter m (X with --full)");
  ideal->add_flag("--full", icfg.full, "Print X over k[x1..xd] instead of modulo x1");
  ideal->add_flag("--lines", icfg.lines, "One generator per line");
  ideal->add_option("--field", icfg.field, "rational, fp or fp:<p>");

  VerifyConfig vcfg;
  int d_arg = 0;
  int n_arg = 0;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", vcfg.suite,
                     "colon, regseq, length, alternating, leading, scounts, gscolon, "
                     "socle, sanity or all");
  auto* d_opt = verify->add_option("--d", d_arg, "Embedding dimension (default: grid)");
  verify->add_option("--m", vcfg.m, "Curve parameter m, gcd(d, m) = 1");
  auto* n_opt = verify->add_option("--n-max", n_arg, "Largest n (default: grid)");
  verify->add_option("--k", vcfg.k, "Index k for alternating/leading/gscolon (0: all)");
  verify->add_flag("--with-f", vcfg.with_f, "leading: adjoin f_1..f_k");
  verify->add_option("--field", vcfg.field, "rational, fp or fp:<p>");
  verify->add_option("--format", vcfg.format, "text, json or csv");
  verify->add_option("--out", vcfg.out, "Write the report to a file");
  verify->add_option("--jobs", vcfg.jobs, "Worker threads (0: all cores)");
  bool no_timing = false;
  verify->add_flag("--no-timing", no_timing, "Report 0 ms so output is reproducible");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (ideal->parsed()) return cmd_ideal(icfg);
    if (d_opt->count() > 0) vcfg.d = d_arg;
    if (n_opt->count() > 0) vcfg.n_max = n_arg;
    vcfg.timing = !no_timing;
    return cmd_verify(vcfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
