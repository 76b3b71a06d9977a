#include "dicolor/independence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dicolor/errors.hpp"

namespace dicolor {

namespace {

using boost::multiprecision::cpp_int;

// Integer k-th root of a when it exists.
std::optional<cpp_int> exact_integer_root(const cpp_int& a, int k) {
  if (a < 0) return std::nullopt;
  if (k == 1 || a <= 1) return a;
  const double approx = std::pow(a.convert_to<double>(), 1.0 / k);
  const cpp_int guess(std::llround(approx));
  for (cpp_int r = guess > 1 ? guess - 1 : cpp_int(0); r <= guess + 1; ++r) {
    if (boost::multiprecision::pow(r, static_cast<unsigned>(k)) == a) return r;
  }
  return std::nullopt;
}

// k-th root of num/den as a rational when both parts are perfect powers.
std::optional<Rational> exact_rational_root(const cpp_int& num, const cpp_int& den, int k) {
  const Rational x(num, den);
  auto a = exact_integer_root(boost::multiprecision::numerator(x), k);
  auto b = exact_integer_root(boost::multiprecision::denominator(x), k);
  if (!a || !b) return std::nullopt;
  return Rational(*a, *b);
}

// (g-1)/g * (n^g / (t g))^{1/(g-1)}, exact when the root is rational.
double girth_formula(int n, int g, std::uint64_t t) {
  const cpp_int num = boost::multiprecision::pow(cpp_int(n), static_cast<unsigned>(g));
  const cpp_int den = cpp_int(t) * g;
  if (auto root = exact_rational_root(num, den, g - 1)) {
    return Rational(*root * (g - 1) / g).convert_to<double>();
  }
  const long double log_root =
      (g * std::log(static_cast<long double>(n)) - std::log(static_cast<long double>(t) * g)) / (g - 1);
  return static_cast<double>(static_cast<long double>(g - 1) / g * std::exp(log_root));
}

bool has_isolated_vertex(const Digraph& d) {
  for (int v = 0; v < d.order(); ++v) {
    if (d.neighbors(v).empty()) return true;
  }
  return false;
}

}  // namespace

Rational caro_wei_directed_bound_exact(const Digraph& d) {
  Rational sum = 0;
  for (const auto& deg : degree_sequence(d)) {
    sum += Rational(1, 1 + deg.out) + Rational(1, 1 + deg.in) - Rational(1, 1 + deg.underlying);
  }
  return sum;
}

double caro_wei_directed_bound(const Digraph& d) {
  double sum = 0.0;
  for (const auto& deg : degree_sequence(d)) {
    sum += 1.0 / (1 + deg.out) + 1.0 / (1 + deg.in) - 1.0 / (1 + deg.underlying);
  }
  return sum;
}

double caro_wei_undirected_bound(const Digraph& d) {
  double sum = 0.0;
  for (const auto& deg : degree_sequence(d)) sum += 1.0 / (1 + deg.underlying);
  return sum;
}

BoundReport degree_form_bound(const Digraph& d) {
  static const std::string id = "degree_form";
  if (!d.is_digon_free()) return BoundReport::inapplicable(id, "digons present");
  double sum = 0.0;
  for (const auto& deg : degree_sequence(d)) {
    const double x = deg.underlying;
    sum += (3 * x + 2) / ((x + 1) * (x + 2));
  }
  return BoundReport::holds(id, sum);
}

BoundReport density_bound(const Digraph& d) {
  static const std::string id = "density";
  if (d.order() == 0) return BoundReport::inapplicable(id, "empty digraph");
  if (has_isolated_vertex(d)) return BoundReport::inapplicable(id, "isolated vertex");
  if (!d.is_digon_free()) return BoundReport::inapplicable(id, "digons present");
  // n / (2k/3 + 1) with k = m/n, i.e. 3n^2 / (2m + 3n).
  const double n = d.order();
  const double m = d.arc_count();
  return BoundReport::holds(id, 3 * n * n / (2 * m + 3 * n));
}

BoundReport digon_free_bound(const Digraph& d) {
  static const std::string id = "digon_free";
  if (!d.is_digon_free()) return BoundReport::inapplicable(id, "digons present");
  if (d.order() == 0) return BoundReport::inapplicable(id, "empty digraph");
  int best_product = 0;
  for (const auto& deg : degree_sequence(d)) best_product = std::max(best_product, deg.out * deg.in);
  const double delta = std::sqrt(static_cast<double>(best_product));
  return BoundReport::holds(id, 3.0 * d.order() / (2.0 * delta + 3.0));
}

BoundReport girth_cycle_bound(const Digraph& d) {
  static const std::string id = "girth_cycles";
  const Girth g = girth(d);
  if (!g) return BoundReport::inapplicable(id, "acyclic digraph");
  const auto t = static_cast<std::uint64_t>(enumerate_induced_cycles(d).size());
  if (t * static_cast<std::uint64_t>(*g) < static_cast<std::uint64_t>(d.order())) {
    return BoundReport::inapplicable(id, "t*g < n");
  }
  return BoundReport::holds(id, girth_formula(d.order(), *g, t));
}

BoundReport tournament_triangle_bound(const Digraph& d) {
  static const std::string id = "tournament_triangles";
  if (!d.is_tournament()) throw DomainError("tournament_triangle_bound: input is not a tournament");
  const std::uint64_t t = count_cycles_of_length(d, 3);
  if (t == 0) return BoundReport::inapplicable(id, "no directed triangle");
  const auto n = static_cast<std::uint64_t>(d.order());
  if (3 * t < n) return BoundReport::inapplicable(id, "3t < n");
  if (auto root = exact_rational_root(cpp_int(n), cpp_int(3 * t), 2)) {
    return BoundReport::holds(id, Rational(*root * 2 * n / 3).convert_to<double>());
  }
  return BoundReport::holds(id, 2.0 / 3.0 * static_cast<double>(n) * std::sqrt(static_cast<double>(n) / (3.0 * t)));
}

std::vector<BoundReport> all_bounds(const Digraph& d) {
  std::vector<BoundReport> out;
  out.push_back(BoundReport::holds("caro_wei_directed", caro_wei_directed_bound(d)));
  out.push_back(BoundReport::holds("caro_wei_undirected", caro_wei_undirected_bound(d)));
  out.push_back(degree_form_bound(d));
  out.push_back(density_bound(d));
  out.push_back(digon_free_bound(d));
  out.push_back(girth_cycle_bound(d));
  if (d.is_tournament()) out.push_back(tournament_triangle_bound(d));
  return out;
}

// ---------------------------------------------------------------------------

VertexSet permutation_acyclic_set(const Digraph& d, std::span<const int> order) {
  const int n = d.order();
  if (static_cast<int>(order.size()) != n) throw DomainError("permutation_acyclic_set: order has wrong length");
  std::uint64_t seen = 0;
  for (int v : order) {
    if (v < 0 || v >= n || ((seen >> v) & 1U)) throw DomainError("permutation_acyclic_set: not a permutation");
    seen |= std::uint64_t{1} << v;
  }
  VertexSet chosen;
  std::uint64_t later = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    const std::uint64_t out = d.out_neighbors(v).mask;
    const std::uint64_t in = d.in_neighbors(v).mask;
    if ((out & ~later) == 0 || (in & ~later) == 0) chosen.insert(v);
    later |= std::uint64_t{1} << v;
  }
#ifndef NDEBUG
  if (!is_acyclic(d, chosen)) throw std::logic_error("permutation_acyclic_set produced a cyclic set");
#endif
  return chosen;
}

VertexSet best_of_permutations(const Digraph& d, int samples, Rng& rng) {
  if (samples < 1) throw DomainError("best_of_permutations: need at least one sample");
  std::vector<int> order(d.order());
  std::iota(order.begin(), order.end(), 0);
  VertexSet best;
  bool have = false;
  for (int i = 0; i < samples; ++i) {
    std::shuffle(order.begin(), order.end(), rng);
    const VertexSet s = permutation_acyclic_set(d, order);
    if (!have || s.size() > best.size()) {
      best = s;
      have = true;
    }
  }
  return best;
}

Rational mean_permutation_set_size(const Digraph& d) {
  constexpr int kLimit = 8;
  if (d.order() > kLimit) throw CapacityError("exhaustive permutation mean", d.order(), kLimit);
  std::vector<int> order(d.order());
  std::iota(order.begin(), order.end(), 0);
  cpp_int total = 0;
  cpp_int count = 0;
  do {
    total += permutation_acyclic_set(d, order).size();
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  return Rational(total, count);
}

VertexSet random_deletion_acyclic_set(const Digraph& d, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("random_deletion_acyclic_set: p must lie in [0, 1]");
  std::bernoulli_distribution keep(p);
  VertexSet s;
  for (int v = 0; v < d.order(); ++v) {
    if (keep(rng)) s.insert(v);
  }
  // Induced cycles of D[S] are exactly the induced cycles of D inside S.
  const auto cycles = enumerate_induced_cycles(d);
  for (;;) {
    auto hit = std::find_if(cycles.begin(), cycles.end(), [&](VertexSet c) { return (c - s).empty(); });
    if (hit == cycles.end()) break;
    s.erase(hit->lowest());
  }
  return s;
}

// ---------------------------------------------------------------------------

namespace {

// Vertices of a shortest directed cycle inside s, or empty when acyclic.
std::vector<int> shortest_cycle_in(const Digraph& d, std::uint64_t s) {
  std::vector<int> best;
  std::vector<int> parent(d.order());
  for (std::uint64_t roots = s; roots != 0; roots &= roots - 1) {
    const int root = std::countr_zero(roots);
    std::uint64_t seen = std::uint64_t{1} << root;
    std::vector<int> frontier{root};
    bool closed = false;
    for (int len = 1; !frontier.empty() && !closed && (best.empty() || len < static_cast<int>(best.size())); ++len) {
      std::vector<int> next;
      for (int u : frontier) {
        if (d.has_arc(u, root)) {
          std::vector<int> cycle;
          for (int w = u; w != root; w = parent[w]) cycle.push_back(w);
          cycle.push_back(root);
          std::reverse(cycle.begin(), cycle.end());
          best = std::move(cycle);
          closed = true;
          break;
        }
        for (std::uint64_t m = d.out_neighbors(u).mask & s & ~seen; m != 0; m &= m - 1) {
          const int w = std::countr_zero(m);
          seen |= std::uint64_t{1} << w;
          parent[w] = u;
          next.push_back(w);
        }
      }
      frontier = std::move(next);
    }
  }
  return best;
}

// Minimum feedback vertex set by branching on a shortest cycle; vertices in
// `kept` may no longer be removed.
struct FeedbackSearch {
  const Digraph& d;
  std::uint64_t best_removed;
  int best_size;

  void run(std::uint64_t alive, std::uint64_t kept, int removed_count) {
    if (removed_count >= best_size) return;
    const auto cycle = shortest_cycle_in(d, alive);
    if (cycle.empty()) {
      best_size = removed_count;
      best_removed = d.vertices().mask & ~alive;
      return;
    }
    if (removed_count + 1 >= best_size) return;
    std::uint64_t newly_kept = 0;
    for (int v : cycle) {
      if ((kept >> v) & 1U) continue;
      const std::uint64_t k = kept | newly_kept;
      if (is_acyclic(d, VertexSet(k))) run(alive & ~(std::uint64_t{1} << v), k, removed_count + 1);
      newly_kept |= std::uint64_t{1} << v;
    }
  }
};

}  // namespace

VertexSet exact_max_acyclic_set(const Digraph& d, int limit) {
  const int n = d.order();
  if (n > limit) throw CapacityError("exact maximum acyclic set", n, limit);
  if (n <= kDefaultSubsetTableLimit) {
    const AcyclicTable table(d);
    std::uint64_t best = 0;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
      if (table[s] && std::popcount(s) > std::popcount(best)) best = s;
    }
    return VertexSet(best);
  }
  FeedbackSearch search{d, d.vertices().mask, n + 1};
  search.run(d.vertices().mask, 0, 0);
  return d.vertices() - VertexSet(search.best_removed);
}

// ---------------------------------------------------------------------------

namespace {

void check_bounds_against_alpha(const Digraph& d, const std::string& label, VerificationReport& report) {
  const int alpha = independence_number(d);
  if (caro_wei_directed_bound_exact(d) > alpha) report.fail(label + ": caro_wei_directed exceeds alpha");
  for (const auto& b : all_bounds(d)) {
    if (b.applicable && *b.value > alpha + 1e-9) {
      report.fail(label + ": " + b.formula_id + " = " + std::to_string(*b.value) + " exceeds alpha " +
                  std::to_string(alpha));
    }
  }
  ++report.checked;
}

void check_mean_identity(const Digraph& d, const std::string& label, VerificationReport& report) {
  if (mean_permutation_set_size(d) != caro_wei_directed_bound_exact(d)) {
    report.fail(label + ": permutation mean differs from caro_wei_directed");
  }
  ++report.counters["mean_identity_checks"];
}

}  // namespace

VerificationReport verify_caro_wei(int max_n, std::uint64_t seed) {
  VerificationReport report;
  report.suite = "caro-wei";
  for (int n = 1; n <= std::min(max_n, 5); ++n) {
    for (const Digraph& t : enumerate_tournaments(n)) {
      const std::string label = "tournament n=" + std::to_string(n) + " code=" +
                                std::to_string(encode_tournament(t).bits);
      check_bounds_against_alpha(t, label, report);
      if (n <= 6) check_mean_identity(t, label, report);
      ++report.counters["tournaments"];
    }
  }
  Rng rng(seed);
  constexpr double kDensities[] = {0.15, 0.3, 0.5, 0.7};
  const int top = std::max(1, std::min(max_n, 9));
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + i % top;
    const Digraph d = random_digraph(n, kDensities[i % 4], rng);
    const std::string label = "random #" + std::to_string(i);
    check_bounds_against_alpha(d, label, report);
    if (n <= 6) check_mean_identity(d, label, report);
    ++report.counters["random_digraphs"];
  }
  return report;
}

}  // namespace dicolor
