#include "dicolor/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <vector>

#include "dicolor/coloring.hpp"
#include "dicolor/dichromatic.hpp"
#include "dicolor/errors.hpp"
#include "dicolor/families.hpp"
#include "dicolor/independence.hpp"
#include "dicolor/version.hpp"

namespace dicolor::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kMaxListedViolations = 20;

struct Options {
  std::string input = "-";
  std::uint64_t seed = 0;
  std::string format;
  int dp_limit = -1;

  std::string family;
  int n = -1;
  int t = 2;
  int k = -1;
  double p = 0.5;
  int attempts = 10000;

  std::string method = "exact";

  std::vector<std::string> suites;
  bool all = false;
  int max_n = -1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A report ready to print plus the exit status it implies.
struct Result {
  Json json;
  std::string text;
  std::string dot;
  int status = kExitOk;
};

const std::vector<std::string> kSuites = {"dn-max", "allcycle", "puv", "coeff", "sn", "caro-wei"};

Digraph read_input(const Options& o, std::istream& in) {
  std::string text;
  if (o.input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream file(o.input);
    if (!file) throw UsageError("cannot open input file '" + o.input + "'");
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  return parse_edge_list(text);
}

Json header(const std::string& command, const Options& o, const Json& limits) {
  Json j;
  j["command"] = command;
  j["version"] = kVersion;
  j["seed"] = o.seed;
  j["limits"] = limits;
  return j;
}

Json vertex_list(VertexSet s) { return Json(s.vertices()); }

Json arcs_json(const Digraph& d) {
  Json arcs = Json::array();
  for (auto [u, v] : d.arcs()) arcs.push_back({u, v});
  return arcs;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

// ---------------------------------------------------------------------------

Result cmd_gen(const Options& o) {
  if (o.n < 1) throw UsageError("gen needs --n >= 1");
  Rng rng(o.seed);
  Digraph d;
  Json limits = Json::object();
  if (o.family == "transitive") {
    d = transitive_tournament(o.n);
  } else if (o.family == "sn") {
    d = s_tournament(o.n);
  } else if (o.family == "dn") {
    d = d_tournament(o.n);
  } else if (o.family == "cycle") {
    d = directed_cycle(o.n);
  } else if (o.family == "random-tournament") {
    d = random_tournament(o.n, rng);
  } else if (o.family == "random-digraph") {
    d = random_digraph(o.n, o.p, rng);
  } else {
    const int parts = o.k < 0 ? 2 : o.k;
    limits["attempts"] = o.attempts;
    limits["verification_budget"] = kDefaultVerificationBudget;
    auto found = oriented_multipartite(parts, o.n, o.t, rng, o.attempts);
    if (!found) {
      Result r;
      r.json = header("gen", o, limits);
      r.json["family"] = o.family;
      r.json["found"] = false;
      r.text = "no orientation found within " + std::to_string(o.attempts) + " attempts\n";
      r.status = kExitViolations;
      return r;
    }
    d = *found;
  }
  Result r;
  r.json = header("gen", o, limits);
  r.json["family"] = o.family;
  r.json["n"] = d.order();
  r.json["m"] = d.arc_count();
  r.json["arcs"] = arcs_json(d);
  r.text = to_edge_list(d);
  r.dot = to_dot(d);
  return r;
}

Result cmd_bounds(const Options& o, const Digraph& d) {
  Result r;
  r.json = header("bounds", o, {{"exact_alpha", kDefaultExactAlphaLimit}});
  r.json["n"] = d.order();
  r.json["m"] = d.arc_count();
  std::optional<int> alpha;
  if (d.order() <= kDefaultExactAlphaLimit) alpha = independence_number(d);
  r.json["alpha"] = alpha ? Json(*alpha) : Json(nullptr);
  r.json["caro_wei_directed"] = caro_wei_directed_bound(d);
  r.json["caro_wei_directed_exact"] = caro_wei_directed_bound_exact(d).str();
  Json list = Json::array();
  std::ostringstream text;
  text << "n " << d.order() << "  m " << d.arc_count() << "  alpha " << (alpha ? std::to_string(*alpha) : "-")
       << '\n';
  for (const auto& b : all_bounds(d)) {
    Json entry;
    entry["id"] = b.formula_id;
    entry["applicable"] = b.applicable;
    entry["value"] = b.value ? Json(*b.value) : Json(nullptr);
    if (!b.note.empty()) entry["note"] = b.note;
    list.push_back(entry);
    text << b.formula_id << "  " << (b.value ? format_double(*b.value) : "n/a (" + b.note + ")") << '\n';
  }
  r.json["bounds"] = list;
  r.text = text.str();
  return r;
}

Result cmd_alpha(const Options& o, const Digraph& d) {
  const VertexSet s = exact_max_acyclic_set(d);
  Result r;
  r.json = header("alpha", o, {{"exact_alpha", kDefaultExactAlphaLimit}});
  r.json["n"] = d.order();
  r.json["alpha"] = s.size();
  r.json["set"] = vertex_list(s);
  std::ostringstream text;
  text << "alpha " << s.size() << "\nset";
  for (int v : s.vertices()) text << ' ' << v;
  r.text = text.str() + '\n';
  std::vector<int> marks(d.order(), 0);
  for (int v : s.vertices()) marks[v] = 1;
  r.dot = to_dot(d, marks);
  return r;
}

Result coloring_result(const std::string& command, const Options& o, const Json& limits, const Digraph& d,
                       const ColoringAssignment& c, std::optional<int> bound) {
  Result r;
  r.json = header(command, o, limits);
  r.json["n"] = d.order();
  if (command == "color") r.json["method"] = o.method;
  r.json["colors_used"] = c.k;
  if (bound) r.json["bound"] = *bound;
  r.json["proper"] = is_proper_coloring(d, c);
  r.json["colors"] = c.colors;
  std::ostringstream text;
  text << "colors " << c.k;
  if (bound) text << "  bound " << *bound;
  text << "\nassignment";
  for (int x : c.colors) text << ' ' << x;
  r.text = text.str() + '\n';
  r.dot = to_dot(d, c.colors);
  return r;
}

Result cmd_chi(const Options& o, const Digraph& d) {
  const int limit = o.dp_limit < 0 ? kDefaultSubsetTableLimit : o.dp_limit;
  const ColoringAssignment c = exact_coloring(d, limit);
  Result r = coloring_result("chi", o, {{"dp_limit", limit}}, d, c, std::nullopt);
  r.json["chi"] = c.k;
  r.text = "chi " + std::to_string(c.k) + '\n' + r.text;
  return r;
}

Result cmd_color(const Options& o, const Digraph& d) {
  Json limits = {{"dp_limit", o.dp_limit < 0 ? kDefaultSubsetTableLimit : o.dp_limit},
                 {"two_color", kDefaultTwoColorLimit},
                 {"cycle_search_budget", kDefaultCycleSearchBudget}};
  try {
    if (o.method == "exact") {
      const ColoringAssignment c = exact_coloring(d, limits["dp_limit"].get<int>());
      return coloring_result("color", o, limits, d, c, c.k);
    }
    if (o.method == "dfs-mod-k") {
      if (o.k < 2) throw UsageError("--method dfs-mod-k needs --k >= 2");
      return coloring_result("color", o, limits, d, dfs_mod_k_coloring(d, o.k), o.k);
    }
    if (o.method == "greedy-girth") {
      return coloring_result("color", o, limits, d, greedy_girth_coloring(d), greedy_girth_color_bound(d));
    }
    return coloring_result("color", o, limits, d, partition_coloring(d), partition_color_bound(d));
  } catch (const PreconditionViolation& e) {
    Result r;
    r.json = header("color", o, limits);
    r.json["method"] = o.method;
    r.json["error"] = e.what();
    r.json["witness"] = e.witness();
    r.text = std::string(e.what()) + '\n';
    r.status = kExitViolations;
    return r;
  } catch (const ExternalTheoremViolation& e) {
    Result r;
    r.json = header("color", o, limits);
    r.json["method"] = o.method;
    r.json["error"] = e.what();
    r.json["part"] = vertex_list(e.part());
    r.text = std::string(e.what()) + '\n';
    r.status = kExitViolations;
    return r;
  }
}

Result cmd_poly(const Options& o, const Digraph& d) {
  const int limit = o.dp_limit < 0 ? kDefaultDichromaticLimit : o.dp_limit;
  const Polynomial p = dichromatic_polynomial(d, limit);
  Result r;
  r.json = header("poly", o, {{"dp_limit", limit}});
  r.json["n"] = d.order();
  r.json["coeffs"] = p.coefficient_strings();
  r.text = p.to_string() + '\n';
  return r;
}

VerificationReport run_suite(const std::string& suite, int max_n, std::uint64_t seed) {
  static constexpr int kKs[] = {2, 3, 4, 5};
  VerificationReport report;
  if (suite == "dn-max") {
    for (int n = 3; n <= max_n; ++n) report.merge(verify_dn_maximality(n, kKs));
  } else if (suite == "allcycle") {
    for (int n = 3; n <= max_n; ++n) report.merge(verify_allcycle_lemma(n));
  } else if (suite == "puv") {
    for (int n = 3; n <= max_n; ++n) report.merge(verify_puv_bound(n, std::span<const int>(kKs, 3)));
  } else if (suite == "coeff") {
    report = verify_coefficients(max_n, 300, seed);
  } else if (suite == "sn") {
    report = verify_closed_forms(max_n);
  } else {
    report = verify_caro_wei(max_n, seed);
  }
  report.suite = suite;
  return report;
}

int default_max_n(const std::string& suite) {
  if (suite == "dn-max" || suite == "puv") return 5;
  if (suite == "allcycle") return 6;
  if (suite == "sn") return 10;
  return 9;
}

Result cmd_verify(const Options& o) {
  std::vector<std::string> suites = o.all ? kSuites : o.suites;
  if (suites.empty()) throw UsageError("verify needs --suite or --all");
  Result r;
  r.json = header("verify", o, {{"max_n", o.max_n < 0 ? Json(nullptr) : Json(o.max_n)}});
  Json list = Json::array();
  std::ostringstream text;
  bool ok = true;
  for (const auto& suite : suites) {
    const int max_n = o.max_n < 0 ? default_max_n(suite) : o.max_n;
    const VerificationReport rep = run_suite(suite, max_n, o.seed);
    Json entry;
    entry["suite"] = suite;
    entry["max_n"] = max_n;
    entry["checked"] = rep.checked;
    entry["violation_count"] = rep.violations.size();
    Json shown = Json::array();
    for (std::size_t i = 0; i < rep.violations.size() && i < kMaxListedViolations; ++i) {
      shown.push_back(rep.violations[i]);
    }
    entry["violations"] = shown;
    entry["counters"] = rep.counters;
    list.push_back(entry);
    ok = ok && rep.ok();
    text << suite << "  max_n " << max_n << "  checked " << rep.checked << "  violations "
         << rep.violations.size() << (rep.ok() ? "  ok" : "  FAILED") << '\n';
    for (const auto& v : shown) text << "  " << v.get<std::string>() << '\n';
  }
  r.json["suites"] = list;
  r.json["ok"] = ok;
  r.text = text.str();
  r.status = ok ? kExitOk : kExitViolations;
  return r;
}

// ---------------------------------------------------------------------------

void add_common(CLI::App* sub, Options& o, bool dot, bool input) {
  sub->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  std::vector<std::string> formats = {"json", "text"};
  if (dot) formats.emplace_back("dot");
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
  if (input) sub->add_option("input", o.input, "Edge-list file, or - for standard input")->capture_default_str();
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Acyclic colourings, dichromatic polynomials and acyclic-set bounds for digraphs", "dicolor"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Generate a digraph from a named family");
  add_common(gen, o, true, false);
  gen->add_option("--family", o.family, "Digraph family")
      ->required()
      ->check(CLI::IsMember({"transitive", "sn", "dn", "cycle", "random-tournament", "random-digraph", "knn"}));
  gen->add_option("--n", o.n, "Order (side size for knn)")->required();
  gen->add_option("--t", o.t, "Subset size for knn")->capture_default_str();
  gen->add_option("--k", o.k, "Number of parts for knn (default 2)");
  gen->add_option("--p", o.p, "Arc probability for random-digraph")->capture_default_str();
  gen->add_option("--attempts", o.attempts, "Sampling attempts per knn block")->capture_default_str();

  auto* bounds = app.add_subcommand("bounds", "Lower bounds on the largest acyclic set, with exact alpha");
  add_common(bounds, o, false, true);
  auto* alpha = app.add_subcommand("alpha", "A maximum acyclic vertex set");
  add_common(alpha, o, true, true);
  auto* chi = app.add_subcommand("chi", "Exact dichromatic number with an optimal colouring");
  add_common(chi, o, true, true);
  chi->add_option("--dp-limit", o.dp_limit, "Largest order for the subset DP");
  auto* color = app.add_subcommand("color", "Colour with a chosen algorithm");
  add_common(color, o, true, true);
  color->add_option("--method", o.method, "Colouring algorithm")
      ->check(CLI::IsMember({"exact", "dfs-mod-k", "greedy-girth", "partition"}))
      ->capture_default_str();
  color->add_option("--k", o.k, "Modulus for dfs-mod-k");
  color->add_option("--dp-limit", o.dp_limit, "Largest order for the exact method");
  auto* poly = app.add_subcommand("poly", "Dichromatic polynomial coefficients");
  add_common(poly, o, false, true);
  poly->add_option("--dp-limit", o.dp_limit, "Largest order for the partition DP");
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  add_common(verify, o, false, false);
  auto* suite_opt = verify->add_option("--suite", o.suites, "Suite name (repeatable)")->check(CLI::IsMember(kSuites));
  auto* all_opt = verify->add_flag("--all", o.all, "Run every suite");
  suite_opt->excludes(all_opt);
  verify->add_option("--max-n", o.max_n, "Largest order checked (per-suite default otherwise)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Result result;
  try {
    if (gen->parsed()) {
      if (o.format.empty()) o.format = "text";
      result = cmd_gen(o);
    } else if (verify->parsed()) {
      result = cmd_verify(o);
    } else {
      const Digraph d = read_input(o, in);
      if (bounds->parsed()) result = cmd_bounds(o, d);
      if (alpha->parsed()) result = cmd_alpha(o, d);
      if (chi->parsed()) result = cmd_chi(o, d);
      if (color->parsed()) result = cmd_color(o, d);
      if (poly->parsed()) result = cmd_poly(o, d);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kExitUsage;
  }

  if (o.format.empty()) o.format = "json";
  if (o.format == "json") {
    out << result.json.dump(2) << '\n';
  } else if (o.format == "dot" && !result.dot.empty()) {
    out << result.dot;
  } else {
    out << result.text;
  }
  return result.status;
}

}  // namespace dicolor::cli
