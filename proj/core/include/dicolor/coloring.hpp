#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "dicolor/digraph.hpp"

namespace dicolor {

/// Per-vertex colour indices 0..k-1 where k is the number of colours in use.
struct ColoringAssignment {
  std::vector<int> colors;
  int k = 0;

  /// Relabels arbitrary non-negative labels onto 0..k-1, preserving order.
  static ColoringAssignment compact(std::vector<int> labels);
  VertexSet color_class(int c) const;
};

/// Per-vertex part indices 0..t-1.
struct Partition {
  std::vector<int> part;
  int t = 0;

  VertexSet members(int p) const;
};

/// Thrown when a per-part 2-colouring that the partition argument relies on
/// does not exist. Carries the offending part.
class ExternalTheoremViolation : public std::runtime_error {
 public:
  ExternalTheoremViolation(const std::string& what, VertexSet part)
      : std::runtime_error(what), part_(part) {}
  VertexSet part() const noexcept { return part_; }

 private:
  VertexSet part_;
};

/// Every colour class is acyclic. `colors` must cover every vertex.
bool is_proper_coloring(const Digraph& d, std::span<const int> colors);
inline bool is_proper_coloring(const Digraph& d, const ColoringAssignment& c) {
  return is_proper_coloring(d, c.colors);
}

/// Some monochromatic directed cycle, or empty if the colouring is proper.
std::vector<int> monochromatic_cycle(const Digraph& d, std::span<const int> colors);

/// Minimum number of acyclic blocks covering V, by DP over subsets.
int exact_chromatic_number(const Digraph& d, int limit = kDefaultSubsetTableLimit);
/// An optimal colouring realising exact_chromatic_number.
ColoringAssignment exact_coloring(const Digraph& d, int limit = kDefaultSubsetTableLimit);

inline constexpr std::uint64_t kDefaultCycleSearchBudget = 2'000'000;

/// A directed cycle whose length is 1 mod k, or empty if none exists or the
/// search spends `budget` arc extensions first.
std::vector<int> cycle_of_length_one_mod(const Digraph& d, int k,
                                         std::uint64_t budget = kDefaultCycleSearchBudget);

/// Colours each strong component by DFS-tree depth mod k. Proper whenever
/// no directed cycle has length 1 mod k. Throws PreconditionViolation with a
/// witness cycle if cycle_of_length_one_mod finds one, or if the colouring
/// comes out improper.
ColoringAssignment dfs_mod_k_coloring(const Digraph& d, int k);

/// Vertices in index order, each given the smallest colour whose class stays
/// acyclic. Uses at most floor((n-1)/(g-1)) + 1 colours.
ColoringAssignment greedy_girth_coloring(const Digraph& d);
/// floor((n-1)/(g-1)) + 1, or 1 for acyclic digraphs.
int greedy_girth_color_bound(const Digraph& d);

/// Local optimum of the number of arcs between parts. Starts from v in part
/// v mod t and applies the first strictly improving single-vertex move
/// (lowest vertex, then lowest target part) until none exists.
Partition local_search_partition(const Digraph& d, int t);
/// Arcs whose endpoints lie in different parts.
int cut_value(const Digraph& d, const Partition& p);

inline constexpr int kDefaultTwoColorLimit = 24;

/// A proper colouring of D[s] with at most two colours (entries outside s are
/// -1), or nullopt if D[s] needs three.
std::optional<ColoringAssignment> two_color_exact(const Digraph& d, VertexSet s,
                                                  int limit = kDefaultTwoColorLimit);

/// Max-cut partition into ceil((2k+1)/5) parts, k = max(D+, D-), then an
/// exact 2-colouring of every part; at most floor(4k/5) + 2 colours.
ColoringAssignment partition_coloring(const Digraph& d);
int partition_color_bound(const Digraph& d);

}  // namespace dicolor
