#include "dicolor/families.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace dicolor {

namespace {

void require_positive(int n, const char* family) {
  if (n < 1) throw DomainError(std::string(family) + ": order must be at least 1");
}

}  // namespace

Digraph transitive_tournament(int n) {
  require_positive(n, "transitive_tournament");
  Digraph d(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) d.add_arc(i, j);
  }
  return d;
}

Digraph s_tournament(int n) {
  require_positive(n, "s_tournament");
  Digraph d(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (j == i - 1) {
        d.add_arc(j, i);
      } else {
        d.add_arc(i, j);
      }
    }
  }
  return d;
}

Digraph d_tournament(int n) {
  Digraph d = transitive_tournament(n);
  if (!d_tournament_is_degenerate(n)) d.reverse_arc(0, n - 1);
  return d;
}

Digraph directed_cycle(int n) {
  if (n < 2) throw DomainError("directed_cycle: order must be at least 2");
  Digraph d(n);
  for (int i = 0; i < n; ++i) d.add_arc(i, (i + 1) % n);
  return d;
}

Digraph random_tournament(int n, Rng& rng) {
  require_positive(n, "random_tournament");
  Digraph d(n);
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) {
        d.add_arc(i, j);
      } else {
        d.add_arc(j, i);
      }
    }
  }
  return d;
}

Digraph random_digraph(int n, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("random_digraph: p must lie in [0, 1]");
  Digraph d(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && coin(rng)) d.add_arc(u, v);
    }
  }
  return d;
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// All t-subsets of `universe`, as masks.
std::vector<std::uint64_t> subsets_of_size(std::uint64_t universe, int t) {
  std::vector<std::uint64_t> out;
  const auto verts = VertexSet(universe).vertices();
  std::vector<bool> pick(verts.size(), false);
  std::fill(pick.begin(), pick.begin() + t, true);
  do {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (pick[i]) m |= std::uint64_t{1} << verts[i];
    }
    out.push_back(m);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

void check_ktt_parameters(int n, int t, std::uint64_t budget) {
  if (n < 1 || 2 * n > kMaxVertices) throw DomainError("K_{n,n} side must lie in 1..31");
  if (t < 1 || t > n) throw DomainError("need 1 <= t <= n");
  const std::uint64_t per_side = binomial(n, t);
  if (per_side > budget || per_side * per_side > budget) {
    throw CapacityError("K_{t,t} verification pairs", static_cast<long long>(per_side * per_side),
                        static_cast<long long>(budget));
  }
}

}  // namespace

bool every_ktt_has_cycle(const Digraph& orientation, int n, int t) {
  const std::uint64_t left = (std::uint64_t{1} << n) - 1;
  const std::uint64_t right = left << n;
  const auto lefts = subsets_of_size(left, t);
  const auto rights = subsets_of_size(right, t);
  for (auto i : lefts) {
    for (auto j : rights) {
      if (is_acyclic(orientation, VertexSet(i | j))) return false;
    }
  }
  return true;
}

std::optional<Digraph> search_knn_orientation(int n, int t, int attempts, Rng& rng, std::uint64_t budget) {
  check_ktt_parameters(n, t, budget);
  std::bernoulli_distribution coin(0.5);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    Digraph d(2 * n);
    for (int x = 0; x < n; ++x) {
      for (int y = n; y < 2 * n; ++y) {
        if (coin(rng)) {
          d.add_arc(x, y);
        } else {
          d.add_arc(y, x);
        }
      }
    }
    if (every_ktt_has_cycle(d, n, t)) return d;
  }
  return std::nullopt;
}

std::optional<Digraph> oriented_multipartite(int k, int part_size, int t, Rng& rng, int attempts,
                                             std::uint64_t budget) {
  if (k < 1) throw DomainError("oriented_multipartite: need at least one part");
  if (k * part_size > kMaxVertices) {
    throw CapacityError("multipartite order", static_cast<long long>(k) * part_size, kMaxVertices);
  }
  Digraph d(k * part_size);
  if (k == 1) return d;
  check_ktt_parameters(part_size, t, budget);
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      auto block = search_knn_orientation(part_size, t, attempts, rng, budget);
      if (!block) return std::nullopt;
      // Block left side -> part a, right side -> part b.
      for (auto [u, v] : block->arcs()) {
        auto place = [&](int x) { return x < part_size ? a * part_size + x : b * part_size + (x - part_size); };
        d.add_arc(place(u), place(v));
      }
    }
  }
  return d;
}

// ---------------------------------------------------------------------------

Digraph decode_tournament(TournamentCode code) {
  Digraph d(code.n);
  int bit = 0;
  for (int i = 0; i < code.n; ++i) {
    for (int j = i + 1; j < code.n; ++j, ++bit) {
      if ((code.bits >> bit) & 1U) {
        d.add_arc(i, j);
      } else {
        d.add_arc(j, i);
      }
    }
  }
  return d;
}

TournamentCode encode_tournament(const Digraph& t) {
  if (!t.is_tournament()) throw DomainError("encode_tournament: input is not a tournament");
  TournamentCode code{t.order(), 0};
  int bit = 0;
  for (int i = 0; i < t.order(); ++i) {
    for (int j = i + 1; j < t.order(); ++j, ++bit) {
      if (t.has_arc(i, j)) code.bits |= std::uint64_t{1} << bit;
    }
  }
  return code;
}

Digraph relabel(const Digraph& d, std::span<const int> perm) {
  Digraph out(d.order());
  for (auto [u, v] : d.arcs()) out.add_arc(perm[u], perm[v]);
  return out;
}

namespace {

struct IsoSearch {
  const Digraph& a;
  const Digraph& b;
  std::vector<int> map;      // a-vertex -> b-vertex
  std::vector<int> inverse;  // b-vertex -> a-vertex
  std::vector<DegreeTriple> deg_a;
  std::vector<DegreeTriple> deg_b;

  bool consistent(int x, int y) const {
    if (deg_a[x] != deg_b[y]) return false;
    for (int w = 0; w < a.order(); ++w) {
      const int z = map[w];
      if (z < 0) continue;
      if (a.has_arc(x, w) != b.has_arc(y, z) || a.has_arc(w, x) != b.has_arc(z, y)) return false;
    }
    return true;
  }

  bool extend(int x) {
    if (x == a.order()) return true;
    if (map[x] >= 0) return extend(x + 1);
    for (int y = 0; y < b.order(); ++y) {
      if (inverse[y] >= 0 || !consistent(x, y)) continue;
      map[x] = y;
      inverse[y] = x;
      if (extend(x + 1)) return true;
      map[x] = -1;
      inverse[y] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Digraph& a, const Digraph& b,
                                                 std::span<const std::pair<int, int>> pinned) {
  if (a.order() != b.order() || a.arc_count() != b.arc_count()) return std::nullopt;
  IsoSearch search{a, b, std::vector<int>(a.order(), -1), std::vector<int>(b.order(), -1),
                   degree_sequence(a), degree_sequence(b)};
  // Degree multisets must agree before any search.
  auto key = [](const DegreeTriple& t) { return std::tuple(t.out, t.in, t.underlying); };
  std::vector<std::tuple<int, int, int>> ka;
  std::vector<std::tuple<int, int, int>> kb;
  for (const auto& t : search.deg_a) ka.push_back(key(t));
  for (const auto& t : search.deg_b) kb.push_back(key(t));
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  if (ka != kb) return std::nullopt;

  for (auto [x, y] : pinned) {
    if (search.map[x] >= 0 || search.inverse[y] >= 0 || !search.consistent(x, y)) return std::nullopt;
    search.map[x] = y;
    search.inverse[y] = x;
  }
  if (!search.extend(0)) return std::nullopt;
  return search.map;
}

bool tournaments_isomorphic(const Digraph& a, const Digraph& b) {
  if (!a.is_tournament() || !b.is_tournament()) throw DomainError("tournaments_isomorphic: inputs must be tournaments");
  if (a.order() > kMaxIsomorphismOrder || b.order() > kMaxIsomorphismOrder) {
    throw CapacityError("tournament isomorphism", std::max(a.order(), b.order()), kMaxIsomorphismOrder);
  }
  return find_isomorphism(a, b).has_value();
}

}  // namespace dicolor
