#include "dicolor/families.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "dicolor/coloring.hpp"
#include "dicolor/dichromatic.hpp"
#include "dicolor/independence.hpp"
#include "support/oracles.hpp"

namespace dicolor {
namespace {

// Exhaustive reference for every_ktt_has_cycle.
bool ktt_oracle(const Digraph& d, int n, int t) {
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
    if (std::popcount(i) != t) continue;
    for (std::uint64_t j = 0; j < (std::uint64_t{1} << n); ++j) {
      if (std::popcount(j) != t) continue;
      if (!oracle::has_cycle(d, i | (j << n))) return false;
    }
  }
  return true;
}

Digraph knn_orientation(int n, std::uint64_t code) {
  Digraph d(2 * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if ((code >> (a * n + b)) & 1U) {
        d.add_arc(a, n + b);
      } else {
        d.add_arc(n + b, a);
      }
    }
  }
  return d;
}

TEST(TransitiveTournament, Examples) {
  EXPECT_EQ(transitive_tournament(2).arcs(), (std::vector<std::pair<int, int>>{{0, 1}}));
  const Digraph t4 = transitive_tournament(4);
  EXPECT_EQ(t4.arc_count(), 6);
  EXPECT_EQ(girth(t4), kInfiniteGirth);
  EXPECT_EQ(oracle::alpha(transitive_tournament(5)), 5);
  EXPECT_EQ(independence_number(transitive_tournament(5)), 5);
  EXPECT_THROW(transitive_tournament(0), DomainError);
}

TEST(STournament, Examples) {
  EXPECT_EQ(dichromatic_polynomial(s_tournament(1)), Polynomial({0, 1}));
  EXPECT_EQ(dichromatic_polynomial(s_tournament(2)), Polynomial({0, 0, 1}));
  const Digraph s3 = s_tournament(3);
  EXPECT_EQ(s3.arc_count(), 3);
  EXPECT_EQ(girth(s3), 3);
  EXPECT_EQ(dichromatic_polynomial(s3), Polynomial({0, -1, 0, 1}));
}

TEST(STournament, IsTransitiveWithHamiltonianPathReversed) {
  for (int n = 1; n <= 10; ++n) {
    const Digraph s = s_tournament(n);
    ASSERT_TRUE(s.is_tournament());
    // v_i beats v_j for j < i, except consecutive pairs, which point upward.
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < i; ++j) EXPECT_EQ(s.has_arc(i, j), j != i - 1) << n << ' ' << i << ' ' << j;
    }
    if (n >= 3) EXPECT_TRUE(is_strongly_connected(s));
  }
}

TEST(DTournament, Examples) {
  EXPECT_EQ(d_tournament(3), directed_cycle(3));
  EXPECT_TRUE(find_isomorphism(d_tournament(3), directed_cycle(3)).has_value());
  const Digraph d4 = d_tournament(4);
  EXPECT_TRUE(is_strongly_connected(d4));
  EXPECT_EQ(oracle::cyclic_triples(d4), 2U);
  EXPECT_TRUE(is_strongly_connected(d_tournament(5)));
  EXPECT_TRUE(oracle::strongly_connected(d_tournament(5)));
}

TEST(DTournament, DegenerateOrders) {
  EXPECT_TRUE(d_tournament_is_degenerate(2));
  EXPECT_FALSE(d_tournament_is_degenerate(3));
  EXPECT_EQ(d_tournament(2), transitive_tournament(2));
  EXPECT_EQ(d_tournament(1), transitive_tournament(1));
}

TEST(DTournament, DiffersFromTransitiveInOneArc) {
  for (int n = 3; n <= 12; ++n) {
    const Digraph d = d_tournament(n);
    ASSERT_TRUE(d.is_tournament());
    EXPECT_TRUE(d.has_arc(n - 1, 0));
    Digraph t = d;
    t.reverse_arc(n - 1, 0);
    EXPECT_EQ(t, transitive_tournament(n));
    EXPECT_TRUE(oracle::strongly_connected(d));
  }
}

TEST(DirectedCycle, Shape) {
  for (int n = 2; n <= 9; ++n) {
    const Digraph c = directed_cycle(n);
    EXPECT_EQ(c.arc_count(), n);
    EXPECT_EQ(oracle::girth(c), n);
    EXPECT_EQ(oracle::cycles_of_length(c, n), 1U);
  }
  EXPECT_THROW(directed_cycle(1), DomainError);
}

TEST(RandomTournament, ShapeAndDeterminism) {
  for (int n = 1; n <= 12; ++n) {
    Rng a(n);
    Rng b(n);
    const Digraph t = random_tournament(n, a);
    EXPECT_EQ(t.arc_count(), n * (n - 1) / 2);
    EXPECT_TRUE(t.is_digon_free());
    EXPECT_TRUE(t.is_tournament());
    EXPECT_EQ(random_tournament(n, b), t);
  }
}

TEST(RandomTournament, MeanTriangleCount) {
  Rng rng(42);
  double total = 0;
  for (int i = 0; i < 1000; ++i) total += static_cast<double>(oracle::cyclic_triples(random_tournament(6, rng)));
  EXPECT_NEAR(total / 1000, 5.0, 0.5);
}

TEST(RandomDigraph, Extremes) {
  Rng rng(1);
  EXPECT_EQ(random_digraph(6, 0.0, rng).arc_count(), 0);
  EXPECT_EQ(random_digraph(6, 1.0, rng).arc_count(), 30);
  EXPECT_THROW(random_digraph(3, 1.5, rng), DomainError);
  EXPECT_THROW(random_digraph(3, -0.1, rng), DomainError);
}

TEST(RandomDigraph, ArcDensityNearP) {
  Rng rng(9);
  double arcs = 0;
  for (int i = 0; i < 400; ++i) arcs += random_digraph(8, 0.3, rng).arc_count();
  EXPECT_NEAR(arcs / (400 * 56), 0.3, 0.02);
}

TEST(EveryKttHasCycle, MatchesOracleOnAllSmallOrientations) {
  // Every orientation of K_{2,2} and a sample of K_{3,3}.
  int passing = 0;
  for (std::uint64_t code = 0; code < 16; ++code) {
    const Digraph d = knn_orientation(2, code);
    const bool got = every_ktt_has_cycle(d, 2, 2);
    ASSERT_EQ(got, ktt_oracle(d, 2, 2));
    passing += got ? 1 : 0;
  }
  // The 4-cycle needs a - b - a' - b' alternation: exactly 2 of 16.
  EXPECT_EQ(passing, 2);

  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const Digraph d = knn_orientation(3, rng() & 0x1FF);
    for (int t = 1; t <= 3; ++t) ASSERT_EQ(every_ktt_has_cycle(d, 3, t), ktt_oracle(d, 3, t));
  }
}

TEST(SearchKnnOrientation, SmallCases) {
  Rng rng(5);
  const auto two = search_knn_orientation(2, 2, 1000, rng);
  ASSERT_TRUE(two.has_value());
  EXPECT_TRUE(ktt_oracle(*two, 2, 2));

  const auto four = search_knn_orientation(4, 3, 10000, rng);
  ASSERT_TRUE(four.has_value());
  EXPECT_TRUE(ktt_oracle(*four, 4, 3));
  EXPECT_EQ(four->arc_count(), 16);

  // t = 1 asks for a cycle inside a single arc, which never exists.
  EXPECT_FALSE(search_knn_orientation(3, 1, 50, rng).has_value());
  EXPECT_THROW(search_knn_orientation(2, 3, 10, rng), DomainError);
  EXPECT_THROW(search_knn_orientation(3, 0, 10, rng), DomainError);
  EXPECT_THROW(search_knn_orientation(20, 10, 1, rng), CapacityError);
}

TEST(SearchKnnOrientation, NoWitnessForPairsOnThreeOrMore) {
  // A K_{2,2} carries a cycle only when its arcs alternate, and three
  // columns cannot pairwise alternate: no orientation of K_{3,3} qualifies.
  int passing = 0;
  for (std::uint64_t code = 0; code < 512; ++code) {
    const Digraph d = knn_orientation(3, code);
    const bool got = every_ktt_has_cycle(d, 3, 2);
    ASSERT_EQ(got, ktt_oracle(d, 3, 2));
    passing += got ? 1 : 0;
  }
  EXPECT_EQ(passing, 0);
  Rng rng(6);
  EXPECT_FALSE(search_knn_orientation(4, 2, 2000, rng).has_value());
}

TEST(SearchKnnOrientation, SuccessRateNearOneEighth) {
  Rng rng(77);
  int hits = 0;
  for (int i = 0; i < 4000; ++i) hits += search_knn_orientation(2, 2, 1, rng).has_value() ? 1 : 0;
  EXPECT_NEAR(hits / 4000.0, 0.125, 0.02);
}

TEST(OrientedMultipartite, Examples) {
  Rng rng(8);
  EXPECT_EQ(oriented_multipartite(1, 4, 2, rng, 10), Digraph(4));

  const auto two = oriented_multipartite(2, 4, 3, rng, 10000);
  ASSERT_TRUE(two.has_value());
  EXPECT_TRUE(ktt_oracle(*two, 4, 3));
  EXPECT_FALSE(oriented_multipartite(2, 4, 2, rng, 200).has_value());
  EXPECT_FALSE(two->is_tournament());
  EXPECT_EQ(two->arc_count(), 16);

  const auto three = oriented_multipartite(3, 3, 3, rng, 10000);
  ASSERT_TRUE(three.has_value());
  EXPECT_EQ(three->arc_count(), 27);
  // Each pair of parts is a verified block.
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      std::vector<int> keep;
      for (int v = 0; v < 3; ++v) keep.push_back(3 * a + v);
      for (int v = 0; v < 3; ++v) keep.push_back(3 * b + v);
      VertexSet s;
      for (int v : keep) s.insert(v);
      EXPECT_TRUE(ktt_oracle(three->induced(s), 3, 3));
    }
  }
  EXPECT_GE(exact_chromatic_number(*three), 1);
  EXPECT_THROW(oriented_multipartite(0, 3, 2, rng, 1), DomainError);
  EXPECT_THROW(oriented_multipartite(9, 8, 2, rng, 1), CapacityError);
}

TEST(EnumerateTournaments, Counts) {
  auto strong = [](int n) {
    int c = 0;
    for (const Digraph& t : enumerate_tournaments(n)) c += oracle::strongly_connected(t) ? 1 : 0;
    return c;
  };
  EXPECT_EQ(std::ranges::distance(enumerate_tournaments(1)), 1);
  EXPECT_EQ(std::ranges::distance(enumerate_tournaments(3)), 8);
  EXPECT_EQ(std::ranges::distance(enumerate_tournaments(4)), 64);
  EXPECT_EQ(strong(3), 2);
  EXPECT_EQ(strong(4), 24);
  EXPECT_THROW(enumerate_tournaments(0), DomainError);
  EXPECT_THROW(enumerate_tournaments(7), CapacityError);
}

TEST(EnumerateTournaments, DistinctAndRoundTrip) {
  std::vector<Digraph> seen;
  for (const Digraph& t : enumerate_tournaments(4)) {
    ASSERT_TRUE(t.is_tournament());
    EXPECT_EQ(decode_tournament(encode_tournament(t)), t);
    EXPECT_EQ(std::count(seen.begin(), seen.end(), t), 0);
    seen.push_back(t);
  }
  EXPECT_THROW(encode_tournament(directed_cycle(4)), DomainError);
}

TEST(TournamentsIsomorphic, Examples) {
  const int perm3[] = {2, 0, 1};
  EXPECT_TRUE(tournaments_isomorphic(directed_cycle(3), relabel(directed_cycle(3), perm3)));
  EXPECT_FALSE(tournaments_isomorphic(transitive_tournament(3), directed_cycle(3)));
  const int perm4[] = {3, 1, 0, 2};
  EXPECT_TRUE(tournaments_isomorphic(d_tournament(4), relabel(d_tournament(4), perm4)));
  EXPECT_THROW(tournaments_isomorphic(directed_cycle(4), directed_cycle(4)), DomainError);
  EXPECT_FALSE(tournaments_isomorphic(transitive_tournament(3), transitive_tournament(4)));
}

TEST(FindIsomorphism, AgreesWithPermutationSearch) {
  // Brute force over all 5! relabelings of random tournaments.
  Rng rng(21);
  for (int i = 0; i < 40; ++i) {
    const Digraph a = random_tournament(5, rng);
    const Digraph b = random_tournament(5, rng);
    std::vector<int> perm(5);
    std::iota(perm.begin(), perm.end(), 0);
    bool expected = false;
    do {
      expected = expected || relabel(a, perm) == b;
    } while (!expected && std::next_permutation(perm.begin(), perm.end()));
    const auto map = find_isomorphism(a, b);
    ASSERT_EQ(map.has_value(), expected);
    if (map) EXPECT_EQ(relabel(a, *map), b);
    EXPECT_EQ(tournaments_isomorphic(a, b), expected);
  }
}

TEST(FindIsomorphism, HonoursPinnedPairs) {
  const Digraph c = directed_cycle(4);
  const std::pair<int, int> ok[] = {{0, 2}};
  const auto map = find_isomorphism(c, c, ok);
  ASSERT_TRUE(map.has_value());
  EXPECT_EQ((*map)[0], 2);
  EXPECT_EQ((*map)[1], 3);
  // Rotations only: 0 -> 2 forces 1 -> 3.
  const std::pair<int, int> bad[] = {{0, 2}, {1, 0}};
  EXPECT_FALSE(find_isomorphism(c, c, bad).has_value());
}

}  // namespace
}  // namespace dicolor
