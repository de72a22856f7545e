#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "narayana/errors.hpp"
#include "narayana/grammar.hpp"
#include "narayana/narayana.hpp"
#include "narayana/series.hpp"
#include "narayana/stirling.hpp"
#include "narayana/suites.hpp"
#include "narayana/tree.hpp"

namespace {

using namespace narayana;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct EnumerateArgs {
  std::string kind;
  int n = 0;
  std::string format = "text";
  bool count_only = false;
};

struct PolyArgs {
  std::string target;
  int n = 0;
  std::string sub;
  std::string route = "grammar";
};

struct VerifyArgs {
  std::string suite;
  std::optional<int> n_max;
  bool use_defaults = false;
  std::string grid = "1/2,1,2";
  std::uint64_t seed = ProbeOptions{}.seed;
  int samples = ProbeOptions{}.samples;
  double radius = ProbeOptions{}.radius;
  unsigned threads = 0;
};

struct SeriesArgs {
  std::string which;
  std::optional<int> order_pos;
  std::optional<int> order_flag;
  std::string grammar;
  std::string f;
  std::string sub;
  std::string formal = "u";
};

void require_range(const std::string& what, int n, int lo, int hi) {
  if (n < lo || n > hi)
    throw LimitExceeded(what + " needs " + std::to_string(lo) + " <= n <= " + std::to_string(hi) + ", got " +
                        std::to_string(n) + (n > hi ? "; larger sizes are outside the supported range" : ""));
}

int cmd_enumerate(const EnumerateArgs& a) {
  const bool json = a.format == "json";
  long count = 0;
  if (a.kind == "trees" || a.kind == "trees-star") {
    const bool star = a.kind == "trees-star";
    require_range("enumerate " + a.kind, a.n, star ? 0 : 1, star ? 7 : 8);
    auto emit = [&](const LabeledPlaneTree& t) {
      ++count;
      if (a.count_only) return;
      std::cout << (json ? t.to_json() : t.to_string()) << '\n';
    };
    if (star) enumerate_star(a.n, emit);
    else enumerate(a.n, emit);
  } else if (a.kind == "shapes") {
    require_range("enumerate shapes", a.n, 1, 16);
    enumerate_shapes(a.n, [&](const PlaneShape& s) {
      ++count;
      if (a.count_only) return;
      if (json) {
        nlohmann::json j{{"tree", nlohmann::json::parse(s.tree.to_json())},
                         {"leaves", s.leaves},
                         {"old_leaves", s.old_leaves}};
        std::cout << j.dump() << '\n';
      } else {
        std::cout << s.tree.to_string() << '\n';
      }
    });
  } else if (a.kind == "stirling") {
    require_range("enumerate stirling", a.n, 1, 9);
    enumerate_stirling(a.n, [&](const StirlingPermutation& p) {
      ++count;
      if (a.count_only) return;
      if (json) {
        const StirlingStats st = stats(p);
        nlohmann::json j{{"word", p.word()},       {"plateaux", st.plateaux}, {"fa", st.fa},
                         {"ascents", st.ascents}, {"descents", st.descents}};
        std::cout << j.dump() << '\n';
      } else {
        std::cout << p.to_string() << '\n';
      }
    });
  }
  if (a.count_only) std::cout << count << '\n';
  return 0;
}

int cmd_poly(const PolyArgs& a) {
  const Route route = a.route == "trees" ? Route::Trees : Route::Grammar;
  const bool trees = route == Route::Trees;
  MultiPoly p;
  if (a.target == "NA") {
    require_range("poly NA", a.n, 0, 200);
    p = narayana_a(a.n);
  } else if (a.target == "NB") {
    require_range("poly NB", a.n, 0, 200);
    p = narayana_b(a.n);
  } else if (a.target == "tildeA") {
    require_range("poly tildeA", a.n, 0, trees ? 6 : 30);
    p = tilde_a(a.n, route);
  } else if (a.target == "tildeB") {
    require_range("poly tildeB", a.n, 0, trees ? 5 : 30);
    p = tilde_b(a.n, route);
  } else if (a.target == "F") {
    require_range("poly F", a.n, 0, trees ? 6 : 8);
    p = F(a.n, route);
  } else if (a.target == "Fstar") {
    require_range("poly Fstar", a.n, 1, trees ? 5 : 7);
    p = F_star(a.n, route);
  } else if (a.target == "Q") {
    require_range("poly Q", a.n, 1, 8);
    p = q_poly(a.n);
  }
  if (!a.sub.empty()) p = substitute(p, parse_substitution(a.sub));
  std::cout << p.to_string() << '\n';
  return 0;
}

std::vector<Rational> parse_grid(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const MultiPoly value = MultiPoly::parse(item);
    if (!value.is_constant() || value.constant_term() <= 0)
      throw std::invalid_argument("grid values must be positive rationals, got '" + item + "'");
    out.push_back(value.constant_term());
  }
  if (out.empty()) throw std::invalid_argument("empty grid");
  return out;
}

int cmd_verify(const VerifyArgs& a) {
  SuiteParams params;
  if (!a.use_defaults) params.n_max = a.n_max;
  params.grid = parse_grid(a.grid);
  params.probe.seed = a.seed;
  params.probe.samples = a.samples;
  params.probe.radius = a.radius;
  params.threads = a.threads;
  if (a.samples < 1) throw std::invalid_argument("--samples must be >= 1");
  if (!(a.radius > 0)) throw std::invalid_argument("--radius must be positive");
  suite_checks(a.suite);  // rejects unknown suites before any work starts

  const auto start = std::chrono::steady_clock::now();
  int passed = 0, failed = 0;
  run_suite(a.suite, params, [&](const CheckResult& r) {
    std::cout << r.to_json() << std::endl;
    (r.pass ? passed : failed)++;
    if (!r.pass) std::cerr << "FAIL " << r.identity << " (n=" << r.n << "): " << r.witness.value_or("") << '\n';
  });
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  std::cerr << "suite " << a.suite << ": " << passed << " passed, " << failed << " failed in " << ms << " ms\n";
  return failed == 0 ? 0 : kExitFailure;
}

Grammar load_grammar(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) {
    std::ifstream in(spec);
    std::stringstream text;
    text << in.rdbuf();
    return Grammar::parse(text.str());
  }
  return named_grammar(spec);
}

int cmd_series(const SeriesArgs& a) {
  if (a.order_pos && a.order_flag && *a.order_pos != *a.order_flag)
    throw std::invalid_argument("order given twice with different values");
  const int order = a.order_flag.value_or(a.order_pos.value_or(8));
  require_range("series", order, 0, 16);
  std::optional<TruncatedSeries> series;
  if (a.which == "CA" || a.which == "CB") {
    auto [ca, cb] = series_from_closed_forms(order);
    series = a.which == "CA" ? ca : cb;
  } else {
    if (a.grammar.empty() || a.f.empty()) throw std::invalid_argument("series gen needs --grammar and --f");
    series = gen_series(load_grammar(a.grammar), MultiPoly::parse(a.f), VarId::parse(a.formal), order);
  }
  if (!a.sub.empty()) series = series->map_coeffs(parse_substitution(a.sub));
  std::cout << series->to_string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Narayana polynomials: trees, grammars, identities and stability checks"};
  app.require_subcommand(1);

  EnumerateArgs ea;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List trees, star trees, plane shapes or Stirling permutations");
  enumerate_cmd->add_option("kind", ea.kind, "trees | trees-star | shapes | stirling")
      ->required()
      ->check(CLI::IsMember({"trees", "trees-star", "shapes", "stirling"}));
  enumerate_cmd->add_option("n", ea.n, "size")->required();
  enumerate_cmd->add_option("--format", ea.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  enumerate_cmd->add_flag("--count-only", ea.count_only, "print only the number of objects");

  PolyArgs pa;
  auto* poly_cmd = app.add_subcommand("poly", "Print a polynomial in canonical form");
  poly_cmd->add_option("target", pa.target, "NA | NB | tildeA | tildeB | F | Fstar | Q")
      ->required()
      ->check(CLI::IsMember({"NA", "NB", "tildeA", "tildeB", "F", "Fstar", "Q"}));
  poly_cmd->add_option("n", pa.n, "index")->required();
  poly_cmd->add_option("--sub", pa.sub, "substitutions k=v,...");
  poly_cmd->add_option("--route", pa.route, "grammar | trees")->check(CLI::IsMember({"grammar", "trees"}));

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Run an identity suite; JSON lines on stdout");
  verify_cmd->add_option("suite", va.suite, "core | grammar | refined | stirling | stability | all")->required();
  verify_cmd->add_option("--n-max", va.n_max, "largest size per check (clamped to each check's range)");
  verify_cmd->add_flag("--default", va.use_defaults, "use each check's default size");
  verify_cmd->add_option("--grid", va.grid, "positive rationals for s and t, e.g. 1/2,1,2");
  verify_cmd->add_option("--seed", va.seed, "probe seed");
  verify_cmd->add_option("--samples", va.samples, "probe samples per polynomial");
  verify_cmd->add_option("--radius", va.radius, "probe sampling radius");
  verify_cmd->add_option("--threads", va.threads, "worker threads (0 = all cores)");

  SeriesArgs sa;
  auto* series_cmd = app.add_subcommand("series", "Expand a truncated generating function");
  series_cmd->add_option("which", sa.which, "CA | CB | gen")->required()->check(CLI::IsMember({"CA", "CB", "gen"}));
  series_cmd->add_option("position-order", sa.order_pos, "truncation order");
  series_cmd->add_option("--order", sa.order_flag, "truncation order");
  series_cmd->add_option("--grammar", sa.grammar, "G, H, DR, MMY, G_k or a grammar file");
  series_cmd->add_option("--f", sa.f, "polynomial to expand");
  series_cmd->add_option("--sub", sa.sub, "substitutions applied to coefficients");
  series_cmd->add_option("--var", sa.formal, "formal variable (default u)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const CheckResult self_check = check_edge_convention(4);
  if (!self_check.pass) {
    std::cerr << "edge-convention self-check failed: " << self_check.witness.value_or("") << '\n';
    return kExitFailure;
  }

  try {
    if (*enumerate_cmd) return cmd_enumerate(ea);
    if (*poly_cmd) return cmd_poly(pa);
    if (*verify_cmd) return cmd_verify(va);
    if (*series_cmd) return cmd_series(sa);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
