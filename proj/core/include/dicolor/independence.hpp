#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dicolor/digraph.hpp"
#include "dicolor/families.hpp"
#include "dicolor/verification.hpp"

namespace dicolor {

using Rational = boost::multiprecision::cpp_rational;

/// A lower bound on the size of a largest acyclic set. `value` is present
/// exactly when the bound's hypotheses hold; `note` says why not otherwise.
struct BoundReport {
  std::string formula_id;
  bool applicable = false;
  std::optional<double> value;
  std::string note;

  static BoundReport holds(std::string id, double v) { return {std::move(id), true, v, {}}; }
  static BoundReport inapplicable(std::string id, std::string why) {
    return {std::move(id), false, std::nullopt, std::move(why)};
  }
};

// Bound formulas. Degrees d_i are underlying degrees (distinct neighbours).

/// sum_i 1/(1+d_i^+) + 1/(1+d_i^-) - 1/(1+d_i). Holds for every digraph.
double caro_wei_directed_bound(const Digraph& d);
Rational caro_wei_directed_bound_exact(const Digraph& d);

/// sum_i 1/(1+d_i), the undirected baseline.
double caro_wei_undirected_bound(const Digraph& d);

/// sum_i (3d_i+2)/((d_i+1)(d_i+2)). Needs d_i = d_i^+ + d_i^-, so it is
/// reported inapplicable when digons are present.
BoundReport degree_form_bound(const Digraph& d);

/// n/(2k/3 + 1) with k = m/n; requires no isolated vertex and no digon.
BoundReport density_bound(const Digraph& d);

/// n/(2D/3 + 1), D the largest sqrt(d^+ d^-); digon-free digraphs only.
BoundReport digon_free_bound(const Digraph& d);

/// ((g-1)/g) (n^g/(tg))^{1/(g-1)} with g the girth and t the number of
/// induced cycles; requires a cycle and tg >= n.
BoundReport girth_cycle_bound(const Digraph& d);

/// (2/3) n sqrt(n/(3t)) for a tournament with t >= 1 directed triangles and
/// 3t >= n. Throws DomainError if `d` is not a tournament.
BoundReport tournament_triangle_bound(const Digraph& d);

/// Every bound above that accepts `d`, in a fixed order; the triangle bound
/// is only included for tournaments.
std::vector<BoundReport> all_bounds(const Digraph& d);

// ---------------------------------------------------------------------------
// Acyclic-set extraction

/// Vertices whose out-neighbours all come later in `order`, or whose
/// in-neighbours all come later. The result is always acyclic.
VertexSet permutation_acyclic_set(const Digraph& d, std::span<const int> order);

/// Largest permutation_acyclic_set over `samples` uniform orders.
VertexSet best_of_permutations(const Digraph& d, int samples, Rng& rng);

/// Exact mean of |permutation_acyclic_set| over all n! orders (n <= 8).
Rational mean_permutation_set_size(const Digraph& d);

/// Keeps each vertex with probability p, then deletes the lowest vertex of
/// the lowest-mask induced cycle until none is left.
VertexSet random_deletion_acyclic_set(const Digraph& d, double p, Rng& rng);

inline constexpr int kDefaultExactAlphaLimit = 40;

/// A maximum acyclic set: subset-table scan up to 20 vertices, branching on
/// shortest cycles above that.
VertexSet exact_max_acyclic_set(const Digraph& d, int limit = kDefaultExactAlphaLimit);
inline int independence_number(const Digraph& d) { return exact_max_acyclic_set(d).size(); }

// ---------------------------------------------------------------------------

/// Bound soundness against exact alpha (tournaments up to order 5 and 500
/// seeded random digraphs up to order 9, both capped by `max_n`) and the exact
/// mean identity over all orders for n <= min(6, max_n).
VerificationReport verify_caro_wei(int max_n, std::uint64_t seed);

}  // namespace dicolor
