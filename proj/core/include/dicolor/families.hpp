#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <ranges>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dicolor/digraph.hpp"
#include "dicolor/errors.hpp"

namespace dicolor {

/// Every random routine takes its generator explicitly.
using Rng = std::mt19937_64;

// Named families. The vertex v_i of the usual 1-based description is index i-1.

/// Vertex i beats every j > i.
Digraph transitive_tournament(int n);

/// Acyclic tournament in which v_i beats v_1..v_{i-1}, with the Hamiltonian
/// path v_n, v_{n-1}, ..., v_1 reversed.
Digraph s_tournament(int n);

/// Transitive tournament with the arc between the first and last vertex
/// reversed (last -> first). For n <= 2 this is the transitive tournament;
/// see `d_tournament_is_degenerate`.
Digraph d_tournament(int n);
inline bool d_tournament_is_degenerate(int n) { return n <= 2; }

/// Arcs i -> i+1 mod n, n >= 2.
Digraph directed_cycle(int n);

Digraph random_tournament(int n, Rng& rng);
Digraph random_digraph(int n, double p, Rng& rng);

// ---------------------------------------------------------------------------
// Bipartite orientations whose every K_{t,t} carries a directed cycle.

inline constexpr std::uint64_t kDefaultVerificationBudget = 1'000'000;

/// Left side is 0..n-1, right side n..2n-1. True iff for every t-subset I of
/// the left and J of the right, I u J induces a directed cycle.
bool every_ktt_has_cycle(const Digraph& orientation, int n, int t);

/// Samples uniform orientations of K_{n,n} until one passes
/// `every_ktt_has_cycle`, or gives up after `attempts` samples.
std::optional<Digraph> search_knn_orientation(int n, int t, int attempts, Rng& rng,
                                              std::uint64_t budget = kDefaultVerificationBudget);

/// Complete k-partite digraph, parts of `part_size` consecutive vertices, each
/// bipartite block oriented by search_knn_orientation.
std::optional<Digraph> oriented_multipartite(int k, int part_size, int t, Rng& rng, int attempts,
                                             std::uint64_t budget = kDefaultVerificationBudget);

// ---------------------------------------------------------------------------
// Labelled tournaments

inline constexpr int kMaxEnumeratedTournamentOrder = 6;
inline constexpr int kMaxIsomorphismOrder = 8;

/// One orientation bit per pair (i, j), i < j, pairs in lexicographic order;
/// a set bit means i -> j.
struct TournamentCode {
  int n = 0;
  std::uint64_t bits = 0;

  static constexpr int pair_count(int n) { return n * (n - 1) / 2; }
};

Digraph decode_tournament(TournamentCode code);
TournamentCode encode_tournament(const Digraph& t);

inline std::uint64_t tournament_count(int n) { return std::uint64_t{1} << TournamentCode::pair_count(n); }

/// All 2^{n(n-1)/2} labelled tournaments in code order.
inline auto enumerate_tournaments(int n) {
  if (n < 1) throw DomainError("tournament order must be positive");
  if (n > kMaxEnumeratedTournamentOrder) {
    throw CapacityError("tournament enumeration", n, kMaxEnumeratedTournamentOrder);
  }
  return std::views::iota(std::uint64_t{0}, tournament_count(n)) |
         std::views::transform([n](std::uint64_t bits) { return decode_tournament({n, bits}); });
}

/// A vertex bijection from `a` onto `b` preserving arcs, optionally forced to
/// send each `pinned.first` to `pinned.second`. Works for any digraphs; used
/// on tournaments up to kMaxIsomorphismOrder.
std::optional<std::vector<int>> find_isomorphism(const Digraph& a, const Digraph& b,
                                                 std::span<const std::pair<int, int>> pinned = {});

/// Throws DomainError unless both inputs are tournaments.
bool tournaments_isomorphic(const Digraph& a, const Digraph& b);

/// Relabels vertex v as perm[v].
Digraph relabel(const Digraph& d, std::span<const int> perm);

}  // namespace dicolor
