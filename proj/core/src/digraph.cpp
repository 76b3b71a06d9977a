#include "dicolor/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "dicolor/errors.hpp"

namespace dicolor {

std::vector<int> VertexSet::vertices() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t m = mask; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

Digraph::Digraph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw CapacityError("digraph order outside bitmask range", n, kMaxVertices);
  }
  out_.assign(n, 0);
  in_.assign(n, 0);
}

Digraph Digraph::from_arcs(int n, std::span<const std::pair<int, int>> arcs) {
  Digraph d(n);
  for (auto [u, v] : arcs) d.add_arc(u, v);
  return d;
}

void Digraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw DomainError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
  }
}

void Digraph::add_arc(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
  if (has_arc(u, v)) {
    throw DomainError("duplicate arc " + std::to_string(u) + "->" + std::to_string(v));
  }
  out_[u] |= std::uint64_t{1} << v;
  in_[v] |= std::uint64_t{1} << u;
}

void Digraph::remove_arc(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (!has_arc(u, v)) {
    throw DomainError("no arc " + std::to_string(u) + "->" + std::to_string(v));
  }
  out_[u] &= ~(std::uint64_t{1} << v);
  in_[v] &= ~(std::uint64_t{1} << u);
}

void Digraph::reverse_arc(int u, int v) {
  remove_arc(u, v);
  add_arc(v, u);
}

int Digraph::arc_count() const {
  int m = 0;
  for (auto row : out_) m += std::popcount(row);
  return m;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
  std::vector<std::pair<int, int>> result;
  result.reserve(arc_count());
  for (int u = 0; u < n_; ++u) {
    for (int v : out_neighbors(u).vertices()) result.emplace_back(u, v);
  }
  return result;
}

bool Digraph::is_digon_free() const {
  for (int v = 0; v < n_; ++v) {
    if ((out_[v] & in_[v]) != 0) return false;
  }
  return true;
}

bool Digraph::is_tournament() const {
  if (!is_digon_free()) return false;
  for (int v = 0; v < n_; ++v) {
    if (neighbors(v) != vertices() - VertexSet::single(v)) return false;
  }
  return true;
}

Digraph Digraph::induced(VertexSet s) const {
  const auto verts = s.vertices();
  Digraph sub(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = 0; j < verts.size(); ++j) {
      if (i != j && has_arc(verts[i], verts[j])) sub.add_arc(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return sub;
}

// ---------------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Exactly two non-negative decimal integers separated by whitespace.
bool parse_pair(std::string_view s, long long& a, long long& b) {
  auto read = [&s](long long& x) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    if (s.empty() || s.front() < '0' || s.front() > '9') return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc{}) return false;
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    return true;
  };
  if (!read(a)) return false;
  if (s.empty() || (s.front() != ' ' && s.front() != '\t')) return false;
  if (!read(b)) return false;
  return trim(s).empty();
}

}  // namespace

Digraph parse_edge_list(std::string_view text) {
  std::optional<Digraph> d;
  long long expected = 0;
  long long seen = 0;
  int line_no = 0;
  int last_line = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    last_line = line_no;

    long long a = 0;
    long long b = 0;
    if (!parse_pair(line, a, b)) throw ParseError(line_no, "expected two non-negative integers");
    if (!d) {
      if (a > kMaxVertices) throw CapacityError("digraph order outside bitmask range", a, kMaxVertices);
      if (b > a * (a - 1)) throw ParseError(line_no, "arc count exceeds n(n-1)");
      d.emplace(static_cast<int>(a));
      expected = b;
      continue;
    }
    if (seen == expected) throw ParseError(line_no, "more arcs than declared");
    if (a >= d->order() || b >= d->order()) throw ParseError(line_no, "vertex index out of range");
    if (a == b) throw ParseError(line_no, "loop arc");
    if (d->has_arc(static_cast<int>(a), static_cast<int>(b))) throw ParseError(line_no, "duplicate arc");
    d->add_arc(static_cast<int>(a), static_cast<int>(b));
    ++seen;
  }
  if (!d) throw ParseError(0, "missing header line \"n m\"");
  if (seen != expected) {
    throw ParseError(last_line, "declared " + std::to_string(expected) + " arcs, found " + std::to_string(seen));
  }
  return *d;
}

std::string to_edge_list(const Digraph& d) {
  std::ostringstream os;
  os << d.order() << ' ' << d.arc_count() << '\n';
  for (auto [u, v] : d.arcs()) os << u << ' ' << v << '\n';
  return os.str();
}

std::string to_dot(const Digraph& d, std::span<const int> colors) {
  std::ostringstream os;
  os << "digraph D {\n";
  for (int v = 0; v < d.order(); ++v) {
    os << "  " << v;
    if (!colors.empty()) os << " [label=\"" << v << ":" << colors[v] << "\", color=" << colors[v] << "]";
    os << ";\n";
  }
  for (auto [u, v] : d.arcs()) os << "  " << u << " -> " << v << ";\n";
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

// Repeatedly strips vertices with no in-neighbour in the remaining set; what
// is left is empty iff `s` is acyclic, and otherwise every remaining vertex
// has an in-neighbour among the rest.
std::uint64_t peel_sources(const Digraph& d, std::uint64_t s) {
  bool changed = true;
  while (changed && s != 0) {
    changed = false;
    for (std::uint64_t m = s; m != 0; m &= m - 1) {
      int v = std::countr_zero(m);
      if ((d.in_neighbors(v).mask & s) == 0) {
        s &= ~(std::uint64_t{1} << v);
        changed = true;
      }
    }
  }
  return s;
}

}  // namespace

bool is_acyclic(const Digraph& d, VertexSet s) { return peel_sources(d, s.mask) == 0; }

std::vector<int> find_cycle(const Digraph& d, VertexSet s) {
  const std::uint64_t core = peel_sources(d, s.mask);
  if (core == 0) return {};
  // Walk backwards along in-arcs inside the core until a vertex repeats.
  std::vector<int> position(d.order(), -1);
  std::vector<int> walk;
  int v = std::countr_zero(core);
  while (position[v] < 0) {
    position[v] = static_cast<int>(walk.size());
    walk.push_back(v);
    v = std::countr_zero(d.in_neighbors(v).mask & core);
  }
  std::vector<int> cycle(walk.begin() + position[v], walk.end());
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

AcyclicTable::AcyclicTable(const Digraph& d, int limit) : n_(d.order()) {
  if (n_ > limit) throw CapacityError("acyclic subset table", n_, limit);
  const std::uint64_t count = std::uint64_t{1} << n_;
  bits_.assign(count, 0);
  bits_[0] = 1;
  for (std::uint64_t s = 1; s < count; ++s) {
    // Any source of s can be peeled: s is acyclic iff s minus that source is.
    for (std::uint64_t m = s; m != 0; m &= m - 1) {
      int v = std::countr_zero(m);
      if ((d.in_neighbors(v).mask & s) == 0) {
        bits_[s] = bits_[s & ~(std::uint64_t{1} << v)];
        break;
      }
    }
  }
}

namespace {

struct TarjanState {
  const Digraph& d;
  std::vector<int> index;
  std::vector<int> low;
  std::vector<bool> on_stack;
  std::vector<int> stack;
  int counter = 0;
  std::vector<VertexSet> components;

  explicit TarjanState(const Digraph& g)
      : d(g), index(g.order(), -1), low(g.order(), 0), on_stack(g.order(), false) {}

  void visit(int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int w : d.out_neighbors(v).vertices()) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      VertexSet comp;
      int w = -1;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.insert(w);
      } while (w != v);
      components.push_back(comp);
    }
  }
};

}  // namespace

std::vector<VertexSet> strongly_connected_components(const Digraph& d) {
  TarjanState state(d);
  for (int v = 0; v < d.order(); ++v) {
    if (state.index[v] < 0) state.visit(v);
  }
  return std::move(state.components);
}

bool is_strongly_connected(const Digraph& d) { return strongly_connected_components(d).size() <= 1; }

Girth girth(const Digraph& d) {
  Girth best = kInfiniteGirth;
  for (int v = 0; v < d.order(); ++v) {
    // Breadth-first layers out of v; the first layer reaching v closes a cycle.
    std::uint64_t seen = std::uint64_t{1} << v;
    std::uint64_t frontier = seen;
    for (int len = 1; frontier != 0 && (!best || len < *best); ++len) {
      std::uint64_t next = 0;
      for (std::uint64_t m = frontier; m != 0; m &= m - 1) next |= d.out_neighbors(std::countr_zero(m)).mask;
      if ((next >> v) & 1U) {
        best = len;
        break;
      }
      frontier = next & ~seen;
      seen |= next;
    }
  }
  return best;
}

namespace {

bool induces_single_cycle(const Digraph& d, std::uint64_t s) {
  for (std::uint64_t m = s; m != 0; m &= m - 1) {
    int v = std::countr_zero(m);
    if (std::popcount(d.out_neighbors(v).mask & s) != 1 || std::popcount(d.in_neighbors(v).mask & s) != 1) {
      return false;
    }
  }
  // Every vertex has one successor; check the successor walk covers s.
  const int start = std::countr_zero(s);
  int v = start;
  int steps = 0;
  do {
    v = std::countr_zero(d.out_neighbors(v).mask & s);
    ++steps;
  } while (v != start);
  return steps == std::popcount(s);
}

// Extends chordless paths start -> ... -> last through vertices above `start`.
void extend_chordless(const Digraph& d, int start, std::uint64_t path, int last,
                      std::vector<VertexSet>& out) {
  const std::uint64_t above = ~((std::uint64_t{2} << start) - 1);
  const std::uint64_t interior = path & ~(std::uint64_t{1} << start) & ~(std::uint64_t{1} << last);
  for (std::uint64_t m = d.out_neighbors(last).mask & above & ~path; m != 0; m &= m - 1) {
    const int y = std::countr_zero(m);
    const std::uint64_t adj = d.neighbors(y).mask;
    if ((adj & interior) != 0) continue;
    if (last != start && d.has_arc(y, last)) continue;
    if (last != start && d.has_arc(start, y)) continue;
    const std::uint64_t next = path | (std::uint64_t{1} << y);
    if (d.has_arc(y, start)) {
      out.emplace_back(next);
    } else {
      extend_chordless(d, start, next, y, out);
    }
  }
}

}  // namespace

std::vector<VertexSet> enumerate_induced_cycles(const Digraph& d) {
  std::vector<VertexSet> cycles;
  const int n = d.order();
  if (n <= kDefaultSubsetTableLimit) {
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t s = 1; s < count; ++s) {
      if (std::popcount(s) >= 2 && induces_single_cycle(d, s)) cycles.emplace_back(s);
    }
    return cycles;
  }
  for (int s = 0; s < n; ++s) extend_chordless(d, s, std::uint64_t{1} << s, s, cycles);
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

namespace {

std::uint64_t count_closing_paths(const Digraph& d, int start, std::uint64_t used, int last, int remaining) {
  if (remaining == 0) return d.has_arc(last, start) ? 1 : 0;
  const std::uint64_t above = ~((std::uint64_t{2} << start) - 1);
  std::uint64_t total = 0;
  for (std::uint64_t m = d.out_neighbors(last).mask & above & ~used; m != 0; m &= m - 1) {
    const int y = std::countr_zero(m);
    total += count_closing_paths(d, start, used | (std::uint64_t{1} << y), y, remaining - 1);
  }
  return total;
}

}  // namespace

std::uint64_t count_cycles_of_length(const Digraph& d, int length) {
  if (length < 2 || length > d.order()) return 0;
  std::uint64_t total = 0;
  // Each cycle is counted once, rooted at its smallest vertex.
  for (int s = 0; s < d.order(); ++s) total += count_closing_paths(d, s, std::uint64_t{1} << s, s, length - 1);
  return total;
}

std::vector<DegreeTriple> degree_sequence(const Digraph& d) {
  std::vector<DegreeTriple> result(d.order());
  for (int v = 0; v < d.order(); ++v) {
    result[v] = {d.out_neighbors(v).size(), d.in_neighbors(v).size(), d.neighbors(v).size()};
  }
  return result;
}

int max_out_degree(const Digraph& d) {
  int best = 0;
  for (int v = 0; v < d.order(); ++v) best = std::max(best, d.out_neighbors(v).size());
  return best;
}

int max_in_degree(const Digraph& d) {
  int best = 0;
  for (int v = 0; v < d.order(); ++v) best = std::max(best, d.in_neighbors(v).size());
  return best;
}

}  // namespace dicolor
