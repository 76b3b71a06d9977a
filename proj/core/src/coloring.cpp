#include "dicolor/coloring.hpp"

#include <algorithm>
#include <map>

#include "dicolor/errors.hpp"

namespace dicolor {

ColoringAssignment ColoringAssignment::compact(std::vector<int> labels) {
  std::map<int, int> index;
  for (int c : labels) index.emplace(c, 0);
  int next = 0;
  for (auto& [label, slot] : index) slot = next++;
  for (int& c : labels) c = index[c];
  return {std::move(labels), next};
}

VertexSet ColoringAssignment::color_class(int c) const {
  VertexSet s;
  for (std::size_t v = 0; v < colors.size(); ++v) {
    if (colors[v] == c) s.insert(static_cast<int>(v));
  }
  return s;
}

VertexSet Partition::members(int p) const {
  VertexSet s;
  for (std::size_t v = 0; v < part.size(); ++v) {
    if (part[v] == p) s.insert(static_cast<int>(v));
  }
  return s;
}

namespace {

std::map<int, VertexSet> classes_of(std::span<const int> colors) {
  std::map<int, VertexSet> classes;
  for (std::size_t v = 0; v < colors.size(); ++v) classes[colors[v]].insert(static_cast<int>(v));
  return classes;
}

void require_proper(const Digraph& d, const ColoringAssignment& c, const char* who) {
  if (!is_proper_coloring(d, c)) throw std::logic_error(std::string(who) + " returned an improper colouring");
}

}  // namespace

bool is_proper_coloring(const Digraph& d, std::span<const int> colors) {
  if (static_cast<int>(colors.size()) != d.order()) throw DomainError("colouring does not cover every vertex");
  for (const auto& [color, members] : classes_of(colors)) {
    if (!is_acyclic(d, members)) return false;
  }
  return true;
}

std::vector<int> monochromatic_cycle(const Digraph& d, std::span<const int> colors) {
  for (const auto& [color, members] : classes_of(colors)) {
    auto cycle = find_cycle(d, members);
    if (!cycle.empty()) return cycle;
  }
  return {};
}

// ---------------------------------------------------------------------------

namespace {

// chi[S] for every subset S: 1 + min over acyclic blocks B holding the
// lowest vertex of S of chi[S \ B].
std::vector<std::uint8_t> chromatic_table(const Digraph& d, const AcyclicTable& acyclic) {
  const std::uint64_t count = std::uint64_t{1} << d.order();
  std::vector<std::uint8_t> chi(count, 0);
  for (std::uint64_t s = 1; s < count; ++s) {
    if (acyclic[s]) {
      chi[s] = 1;
      continue;
    }
    const std::uint64_t low = s & (~s + 1);
    const std::uint64_t rest = s ^ low;
    std::uint8_t best = 0xFF;
    for (std::uint64_t r = rest;; r = (r - 1) & rest) {
      const std::uint64_t block = r | low;
      if (acyclic[block]) best = std::min<std::uint8_t>(best, chi[s ^ block] + 1);
      if (r == 0) break;
    }
    chi[s] = best;
  }
  return chi;
}

}  // namespace

int exact_chromatic_number(const Digraph& d, int limit) {
  if (d.order() > limit) throw CapacityError("exact chromatic number", d.order(), limit);
  if (d.order() == 0) return 0;
  const AcyclicTable acyclic(d, limit);
  return chromatic_table(d, acyclic).back();
}

ColoringAssignment exact_coloring(const Digraph& d, int limit) {
  if (d.order() > limit) throw CapacityError("exact colouring", d.order(), limit);
  const AcyclicTable acyclic(d, limit);
  const auto chi = chromatic_table(d, acyclic);
  std::vector<int> colors(d.order(), 0);
  std::uint64_t s = d.vertices().mask;
  for (int color = 0; s != 0; ++color) {
    const std::uint64_t low = s & (~s + 1);
    const std::uint64_t rest = s ^ low;
    for (std::uint64_t r = rest;; r = (r - 1) & rest) {
      const std::uint64_t block = r | low;
      if (acyclic[block] && ((s ^ block) == 0 ? 0 : chi[s ^ block]) + 1 == chi[s]) {
        for (int v : VertexSet(block).vertices()) colors[v] = color;
        s ^= block;
        break;
      }
      if (r == 0) throw std::logic_error("exact_coloring: inconsistent DP table");
    }
  }
  auto result = ColoringAssignment::compact(std::move(colors));
  require_proper(d, result, "exact_coloring");
  return result;
}

// ---------------------------------------------------------------------------

namespace {

void dfs_depths(const Digraph& d, int v, std::uint64_t component, std::vector<int>& depth) {
  for (int w : (d.out_neighbors(v) & VertexSet(component)).vertices()) {
    if (depth[w] >= 0) continue;
    depth[w] = depth[v] + 1;
    dfs_depths(d, w, component, depth);
  }
}

// Simple cycles of `component`, each rooted at its lowest vertex, stopping at
// the first whose length is 1 mod k or once `budget` extensions are spent.
struct ResidueCycleSearch {
  const Digraph& d;
  int k;
  std::uint64_t budget;
  std::vector<int> path;

  bool extend(int root, VertexSet allowed, VertexSet used) {
    const int v = path.back();
    for (int w : (d.out_neighbors(v) & allowed).vertices()) {
      if (budget == 0) return false;
      --budget;
      if (w == root) {
        if (static_cast<int>(path.size()) % k == 1) return true;
        continue;
      }
      if (used.contains(w)) continue;
      path.push_back(w);
      used.insert(w);
      if (extend(root, allowed, used)) return true;
      used.erase(w);
      path.pop_back();
    }
    return false;
  }
};

}  // namespace

std::vector<int> cycle_of_length_one_mod(const Digraph& d, int k, std::uint64_t budget) {
  if (k < 2) throw DomainError("cycle_of_length_one_mod: k must be at least 2");
  ResidueCycleSearch search{d, k, budget, {}};
  for (VertexSet component : strongly_connected_components(d)) {
    if (component.size() < 2) continue;
    VertexSet allowed = component;
    for (int root : component.vertices()) {
      search.path = {root};
      if (search.extend(root, allowed, VertexSet::single(root))) return search.path;
      if (search.budget == 0) return {};
      allowed.erase(root);
    }
  }
  return {};
}

ColoringAssignment dfs_mod_k_coloring(const Digraph& d, int k) {
  if (k < 2) throw DomainError("dfs_mod_k_coloring: k must be at least 2");
  if (auto cycle = cycle_of_length_one_mod(d, k); !cycle.empty()) {
    throw PreconditionViolation("dfs_mod_k_coloring: directed cycle of length " + std::to_string(cycle.size()) +
                                    " = 1 mod " + std::to_string(k),
                                std::move(cycle));
  }
  std::vector<int> depth(d.order(), -1);
  // Arcs between strong components lie on no cycle, so each component gets
  // its own tree and depth counter.
  for (VertexSet component : strongly_connected_components(d)) {
    const int root = component.lowest();
    depth[root] = 0;
    dfs_depths(d, root, component.mask, depth);
  }
  std::vector<int> labels(d.order());
  for (int v = 0; v < d.order(); ++v) labels[v] = depth[v] % k;
  auto result = ColoringAssignment::compact(std::move(labels));
  if (auto cycle = monochromatic_cycle(d, result.colors); !cycle.empty()) {
    throw PreconditionViolation("dfs_mod_k_coloring: digraph has a directed cycle of length 1 mod " +
                                    std::to_string(k) + " (monochromatic cycle of length " +
                                    std::to_string(cycle.size()) + ")",
                                std::move(cycle));
  }
  return result;
}

ColoringAssignment greedy_girth_coloring(const Digraph& d) {
  std::vector<VertexSet> classes;
  std::vector<int> colors(d.order(), -1);
  for (int v = 0; v < d.order(); ++v) {
    std::size_t c = 0;
    while (c < classes.size() && !is_acyclic(d, classes[c] | VertexSet::single(v))) ++c;
    if (c == classes.size()) classes.emplace_back();
    classes[c].insert(v);
    colors[v] = static_cast<int>(c);
  }
  ColoringAssignment result{std::move(colors), static_cast<int>(classes.size())};
  require_proper(d, result, "greedy_girth_coloring");
  return result;
}

int greedy_girth_color_bound(const Digraph& d) {
  const Girth g = girth(d);
  if (!g) return std::min(1, d.order());
  return (d.order() - 1) / (*g - 1) + 1;
}

// ---------------------------------------------------------------------------

namespace {

int arcs_between(const Digraph& d, int v, VertexSet s) {
  return (d.out_neighbors(v) & s).size() + (d.in_neighbors(v) & s).size();
}

}  // namespace

Partition local_search_partition(const Digraph& d, int t) {
  if (t < 1) throw DomainError("local_search_partition: need at least one part");
  Partition p{std::vector<int>(d.order()), t};
  std::vector<VertexSet> members(t);
  for (int v = 0; v < d.order(); ++v) {
    p.part[v] = v % t;
    members[v % t].insert(v);
  }
  // Each move raises the cut by at least one, and the cut is at most m.
  bool moved = true;
  while (moved) {
    moved = false;
    for (int v = 0; v < d.order() && !moved; ++v) {
      const int home = p.part[v];
      const int inside = arcs_between(d, v, members[home]);
      for (int q = 0; q < t; ++q) {
        if (q == home || arcs_between(d, v, members[q]) >= inside) continue;
        members[home].erase(v);
        members[q].insert(v);
        p.part[v] = q;
        moved = true;
        break;
      }
    }
  }
  return p;
}

int cut_value(const Digraph& d, const Partition& p) {
  int cut = 0;
  for (auto [u, v] : d.arcs()) {
    if (p.part[u] != p.part[v]) ++cut;
  }
  return cut;
}

namespace {

struct TwoColorSearch {
  const Digraph& d;
  std::vector<int> order;
  VertexSet classes[2];

  bool assign(std::size_t i) {
    if (i == order.size()) return true;
    const int v = order[i];
    // The first vertex is fixed to colour 0 to break the swap symmetry.
    const int colours = i == 0 ? 1 : 2;
    for (int c = 0; c < colours; ++c) {
      classes[c].insert(v);
      if (is_acyclic(d, classes[c]) && assign(i + 1)) return true;
      classes[c].erase(v);
    }
    return false;
  }
};

}  // namespace

std::optional<ColoringAssignment> two_color_exact(const Digraph& d, VertexSet s, int limit) {
  if (s.size() > limit) throw CapacityError("exact 2-colouring", s.size(), limit);
  TwoColorSearch search{d, s.vertices(), {}};
  if (!search.assign(0)) return std::nullopt;
  ColoringAssignment result{std::vector<int>(d.order(), -1), 0};
  for (int c = 0; c < 2; ++c) {
    for (int v : search.classes[c].vertices()) result.colors[v] = c;
    if (!search.classes[c].empty()) result.k = c + 1;
  }
  return result;
}

namespace {

int max_out_in(const Digraph& d) { return std::max(max_out_degree(d), max_in_degree(d)); }

}  // namespace

int partition_color_bound(const Digraph& d) { return 4 * max_out_in(d) / 5 + 2; }

ColoringAssignment partition_coloring(const Digraph& d) {
  const int k = max_out_in(d);
  const int t = (2 * k + 1 + 4) / 5;
  const Partition p = local_search_partition(d, t);
  for (int v = 0; v < d.order(); ++v) {
    if ((d.neighbors(v) & p.members(p.part[v])).size() > 4) {
      throw std::logic_error("partition_coloring: vertex " + std::to_string(v) +
                             " has more than 4 neighbours in its part at a local optimum");
    }
  }
  std::vector<int> labels(d.order(), -1);
  for (int q = 0; q < t; ++q) {
    const VertexSet part = p.members(q);
    auto two = two_color_exact(d, part);
    if (!two) {
      throw ExternalTheoremViolation("partition_coloring: part " + std::to_string(q) + " (" +
                                         std::to_string(part.size()) + " vertices) is not 2-colourable",
                                     part);
    }
    for (int v : part.vertices()) labels[v] = 2 * q + two->colors[v];
  }
  auto result = ColoringAssignment::compact(std::move(labels));
  require_proper(d, result, "partition_coloring");
  return result;
}

}  // namespace dicolor
