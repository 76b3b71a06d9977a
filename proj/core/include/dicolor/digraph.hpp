#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dicolor {

/// Largest vertex count representable with single-word masks.
inline constexpr int kMaxVertices = 63;

/// Default ceiling for routines that tabulate all 2^n subsets.
inline constexpr int kDefaultSubsetTableLimit = 20;

/// A subset of vertices stored as a bitmask; bit i is vertex i.
struct VertexSet {
  std::uint64_t mask = 0;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t m) : mask(m) {}

  static constexpr VertexSet full(int n) {
    return VertexSet(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }

  constexpr bool contains(int v) const { return (mask >> v) & 1U; }
  constexpr void insert(int v) { mask |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { mask &= ~(std::uint64_t{1} << v); }
  constexpr int size() const { return std::popcount(mask); }
  constexpr bool empty() const { return mask == 0; }
  /// Lowest vertex index; undefined on the empty set.
  constexpr int lowest() const { return std::countr_zero(mask); }

  std::vector<int> vertices() const;

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet, VertexSet) = default;
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.mask | b.mask); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.mask & b.mask); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.mask & ~b.mask); }
};

/// Out-degree, in-degree, and number of distinct neighbours of one vertex.
/// A digon contributes once to `underlying`.
struct DegreeTriple {
  int out = 0;
  int in = 0;
  int underlying = 0;
  friend bool operator==(const DegreeTriple&, const DegreeTriple&) = default;
};

/// Shortest directed cycle length; std::nullopt means the digraph is acyclic.
using Girth = std::optional<int>;
inline constexpr Girth kInfiniteGirth = std::nullopt;

/// Strict loopless digraph on vertices 0..n-1, n <= 63. Digons are allowed.
/// Out- and in-adjacency are kept as transposes of each other.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);

  /// Builds from an arc list; throws DomainError on loops, duplicates or
  /// out-of-range endpoints.
  static Digraph from_arcs(int n, std::span<const std::pair<int, int>> arcs);

  int order() const { return n_; }
  int arc_count() const;

  bool has_arc(int u, int v) const { return (out_[u] >> v) & 1U; }
  VertexSet out_neighbors(int v) const { return VertexSet(out_[v]); }
  VertexSet in_neighbors(int v) const { return VertexSet(in_[v]); }
  VertexSet neighbors(int v) const { return VertexSet(out_[v] | in_[v]); }
  VertexSet vertices() const { return VertexSet::full(n_); }

  /// Adds u->v. Throws DomainError for loops, existing arcs, or bad indices.
  void add_arc(int u, int v);
  void remove_arc(int u, int v);
  /// Flips an existing arc u->v into v->u.
  void reverse_arc(int u, int v);

  /// Arcs in (tail, head) lexicographic order.
  std::vector<std::pair<int, int>> arcs() const;

  bool is_digon_free() const;
  bool is_tournament() const;

  /// Induced subdigraph on `s`, relabelled to 0..|s|-1 in increasing order.
  Digraph induced(VertexSet s) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
};

// ---------------------------------------------------------------------------
// Serialization

/// Parses "n m" followed by m lines "u v". Lines starting with '#' and blank
/// lines are skipped. Throws ParseError naming the offending line.
Digraph parse_edge_list(std::string_view text);

/// Emits the format read by parse_edge_list, arcs in lexicographic order.
std::string to_edge_list(const Digraph& d);

/// DOT text with arcs "u -> v". When `colors` is given, nodes carry a
/// `color` label attribute.
std::string to_dot(const Digraph& d, std::span<const int> colors = {});

// ---------------------------------------------------------------------------
// Structural queries

/// True iff the subdigraph induced by `s` has no directed cycle. Peels
/// vertices with no in-neighbour inside the remaining set.
bool is_acyclic(const Digraph& d, VertexSet s);
inline bool is_acyclic(const Digraph& d) { return is_acyclic(d, d.vertices()); }

/// Some directed cycle inside `s` as a vertex sequence (each vertex has an
/// arc to the next, the last to the first), or empty if `s` is acyclic.
std::vector<int> find_cycle(const Digraph& d, VertexSet s);

/// Acyclicity of every vertex subset, filled in O(n 2^n).
class AcyclicTable {
 public:
  explicit AcyclicTable(const Digraph& d, int limit = kDefaultSubsetTableLimit);

  bool operator[](VertexSet s) const { return bits_[s.mask] != 0; }
  bool operator[](std::uint64_t mask) const { return bits_[mask] != 0; }
  int order() const { return n_; }
  std::size_t size() const { return bits_.size(); }

 private:
  int n_;
  std::vector<std::uint8_t> bits_;
};

inline AcyclicTable acyclic_subset_table(const Digraph& d, int limit = kDefaultSubsetTableLimit) {
  return AcyclicTable(d, limit);
}

/// Strongly connected components in reverse topological order of the
/// condensation (sink components first).
std::vector<VertexSet> strongly_connected_components(const Digraph& d);
bool is_strongly_connected(const Digraph& d);

Girth girth(const Digraph& d);

/// Vertex sets inducing exactly one directed cycle, sorted by mask.
std::vector<VertexSet> enumerate_induced_cycles(const Digraph& d);

/// Number of directed cycles of exactly `length` vertices.
std::uint64_t count_cycles_of_length(const Digraph& d, int length);

std::vector<DegreeTriple> degree_sequence(const Digraph& d);
int max_out_degree(const Digraph& d);
int max_in_degree(const Digraph& d);

}  // namespace dicolor
