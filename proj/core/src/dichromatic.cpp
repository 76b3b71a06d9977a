#include "dicolor/dichromatic.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "dicolor/errors.hpp"
#include "dicolor/families.hpp"

namespace dicolor {

namespace {

// Partition counts by number of blocks, over blocks accepted by `allowed`.
// State (S, j): ways to split S into j acyclic blocks; the block holding the
// lowest vertex of S is enumerated explicitly.
std::vector<std::uint64_t> count_partitions(const Digraph& d, int limit,
                                            const std::function<bool(std::uint64_t)>& allowed) {
  const int n = d.order();
  if (n > std::min(limit, kMaxDichromaticLimit)) {
    throw CapacityError("dichromatic polynomial", n, std::min(limit, kMaxDichromaticLimit));
  }
  const AcyclicTable acyclic(d, n);
  const std::uint64_t count = std::uint64_t{1} << n;
  const std::size_t width = static_cast<std::size_t>(n) + 1;
  std::vector<std::uint64_t> f(count * width, 0);
  f[0] = 1;
  for (std::uint64_t s = 1; s < count; ++s) {
    const std::uint64_t low = s & (~s + 1);
    const std::uint64_t rest = s ^ low;
    std::uint64_t* row = &f[s * width];
    for (std::uint64_t r = rest;; r = (r - 1) & rest) {
      const std::uint64_t block = r | low;
      if (acyclic[block] && allowed(block)) {
        const std::uint64_t* prev = &f[(s ^ block) * width];
        for (std::size_t j = 0; j + 1 < width; ++j) row[j + 1] += prev[j];
      }
      if (r == 0) break;
    }
  }
  return std::vector<std::uint64_t>(f.end() - static_cast<std::ptrdiff_t>(width), f.end());
}

Polynomial expand(const std::vector<std::uint64_t>& counts) {
  Polynomial p;
  Polynomial falling = Polynomial::constant(1);
  for (std::size_t j = 0; j < counts.size(); ++j) {
    if (counts[j] != 0) p += falling * Polynomial::constant(BigInt(counts[j]));
    falling *= Polynomial{-static_cast<long long>(j), 1};
  }
  return p;
}

}  // namespace

BlockCounts block_counts(const Digraph& d, int limit) {
  BlockCounts out;
  for (auto c : count_partitions(d, limit, [](std::uint64_t) { return true; })) out.a.emplace_back(c);
  return out;
}

Polynomial polynomial_from_block_counts(const BlockCounts& counts) {
  Polynomial p;
  for (std::size_t j = 0; j < counts.a.size(); ++j) {
    if (counts.a[j] != 0) p += Polynomial::falling_factorial(static_cast<int>(j)) * Polynomial::constant(counts.a[j]);
  }
  return p;
}

Polynomial dichromatic_polynomial(const Digraph& d, int limit) {
  return expand(count_partitions(d, limit, [](std::uint64_t) { return true; }));
}

BigInt count_colorings_bruteforce(const Digraph& d, int k) {
  constexpr int kMaxOrder = 8;
  constexpr int kMaxColors = 6;
  if (d.order() > kMaxOrder) throw CapacityError("brute-force colouring count (order)", d.order(), kMaxOrder);
  if (k > kMaxColors) throw CapacityError("brute-force colouring count (colours)", k, kMaxColors);
  if (k < 0) throw DomainError("colour count must be non-negative");
  const int n = d.order();
  if (n == 0) return 1;
  if (k == 0) return 0;
  const AcyclicTable acyclic(d, n);
  std::vector<int> colors(n, 0);
  std::uint64_t proper = 0;
  for (;;) {
    std::vector<std::uint64_t> classes(k, 0);
    for (int v = 0; v < n; ++v) classes[colors[v]] |= std::uint64_t{1} << v;
    if (std::all_of(classes.begin(), classes.end(), [&](std::uint64_t c) { return acyclic[c]; })) ++proper;
    int pos = 0;
    while (pos < n && ++colors[pos] == k) colors[pos++] = 0;
    if (pos == n) break;
  }
  return proper;
}

ConstrainedPolynomials constrained_polynomials(const Digraph& d, int u, int v, int limit) {
  if (u == v) throw DomainError("constrained counts need two distinct vertices");
  if (u < 0 || v < 0 || u >= d.order() || v >= d.order()) throw DomainError("vertex out of range");
  const std::uint64_t pair = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
  // u and v share a colour iff they share a block: every block holds both or neither.
  const auto same = expand(count_partitions(d, limit, [pair](std::uint64_t block) {
    const std::uint64_t hit = block & pair;
    return hit == 0 || hit == pair;
  }));
  const auto total = dichromatic_polynomial(d, limit);
  return {same, total - same};
}

ConstrainedCounts constrained_counts(const Digraph& d, int u, int v, int k, int limit) {
  const auto polys = constrained_polynomials(d, u, v, limit);
  return {polys.same(k), polys.diff(k)};
}

// ---------------------------------------------------------------------------

namespace {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

const Polynomial& x_poly() {
  static const Polynomial x{0, 1};
  return x;
}

const Polynomial& x_minus_one() {
  static const Polynomial p{-1, 1};
  return p;
}

}  // namespace

Polynomial sn_recurrence(int n) {
  if (n < 1) throw DomainError("S_n needs n >= 1");
  Polynomial prev = x_poly();             // f_1
  if (n == 1) return prev;
  Polynomial cur = x_poly() * x_poly();   // f_2
  for (int i = 3; i <= n; ++i) {
    Polynomial next = x_minus_one() * (cur + prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Polynomial sn_closed_form(int n) {
  if (n < 1) throw DomainError("S_n needs n >= 1");
  Polynomial sum;
  for (int i = 1; i <= n; ++i) {
    const BigInt c = binomial(i, n - i);
    if (c == 0) continue;
    sum += Polynomial::constant(c) * x_poly() * x_minus_one().pow(i - 1);
  }
  if (sum != sn_recurrence(n)) throw std::logic_error("S_n closed form disagrees with its recurrence");
  return sum;
}

Polynomial dn_closed_form(int n) {
  if (n < 3) throw DomainError("D_n closed form needs n >= 3");
  return x_poly() * x_minus_one().pow(n - 2) + Polynomial::monomial(n - 1) * x_minus_one();
}

CoefficientReport coefficient_report(const Digraph& d, int limit) {
  const Girth g = girth(d);
  if (!g) throw DomainError("coefficient_report: digraph is acyclic");
  CoefficientReport r;
  r.n = d.order();
  r.girth = *g;
  r.polynomial = dichromatic_polynomial(d, limit);
  for (int e = r.n - 1; e >= r.n - r.girth + 2; --e) r.vanishing.push_back(r.polynomial.coeff(e));
  r.cycle_coefficient = r.polynomial.coeff(r.n - r.girth + 1);
  r.cycle_count = count_cycles_of_length(d, r.girth);
  r.holds = std::all_of(r.vanishing.begin(), r.vanishing.end(), [](const BigInt& c) { return c == 0; }) &&
            r.cycle_coefficient == -BigInt(r.cycle_count);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

void check_enumeration_order(int n, int limit) {
  if (n < 1) throw DomainError("tournament order must be positive");
  if (n > limit) throw CapacityError("tournament verification order", n, limit);
}

void check_ks(std::span<const int> ks) {
  for (int k : ks) {
    if (k < 2) throw DomainError("colour counts must be at least 2");
  }
}

std::string tournament_label(const Digraph& t) {
  return "n=" + std::to_string(t.order()) + " code=" + std::to_string(encode_tournament(t).bits);
}

BigInt diff_ceiling(int n, int k) { return boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(n - 1)) * (k - 1); }

// (T, {u, v}) -> (D_n, {last, first}) in either orientation.
bool maps_onto_reversed_arc(const Digraph& t, const Digraph& dn, int u, int v) {
  const int n = t.order();
  const std::pair<int, int> forward[] = {{u, n - 1}, {v, 0}};
  const std::pair<int, int> backward[] = {{u, 0}, {v, n - 1}};
  return find_isomorphism(t, dn, forward).has_value() || find_isomorphism(t, dn, backward).has_value();
}

}  // namespace

VerificationReport verify_dn_maximality(int n, std::span<const int> ks) {
  check_enumeration_order(n, kMaxEnumeratedTournamentOrder);
  check_ks(ks);
  VerificationReport report;
  report.suite = "dn-max";
  const Digraph dn = d_tournament(n);
  const Polynomial reference = dichromatic_polynomial(dn);
  for (const Digraph& t : enumerate_tournaments(n)) {
    if (!is_strongly_connected(t)) continue;
    ++report.counters["strong_tournaments"];
    const bool is_dn = tournaments_isomorphic(t, dn);
    if (is_dn) ++report.counters["isomorphic_to_dn"];
    const Polynomial p = dichromatic_polynomial(t);
    for (int k : ks) {
      const BigInt pt = p(k);
      const BigInt pd = reference(k);
      ++report.checked;
      if (is_dn ? pt != pd : pt >= pd) {
        report.fail(tournament_label(t) + " k=" + std::to_string(k) + ": P(T)=" + pt.str() + " P(D_n)=" + pd.str() +
                    (is_dn ? " (isomorphic to D_n)" : ""));
      }
    }
  }
  return report;
}

VerificationReport verify_allcycle_lemma(int n) {
  check_enumeration_order(n, kMaxEnumeratedTournamentOrder);
  VerificationReport report;
  report.suite = "allcycle";
  const Digraph dn = d_tournament(n);
  for (const Digraph& t : enumerate_tournaments(n)) {
    if (!is_strongly_connected(t)) continue;
    ++report.counters["strong_tournaments"];
    for (auto [u, v] : t.arcs()) {
      Digraph without = t;
      without.remove_arc(u, v);
      const bool every_cycle_uses_arc = is_acyclic(without);
      const std::pair<int, int> pins[] = {{u, n - 1}, {v, 0}};
      const bool is_special_arc = n >= 3 && find_isomorphism(t, dn, pins).has_value();
      ++report.checked;
      if (every_cycle_uses_arc) ++report.counters["arcs_on_every_cycle"];
      if (every_cycle_uses_arc != is_special_arc) {
        report.fail(tournament_label(t) + " arc " + std::to_string(u) + "->" + std::to_string(v) +
                    (every_cycle_uses_arc ? ": lies on every cycle but is not D_n's reversed arc"
                                          : ": is D_n's reversed arc but misses a cycle"));
      }
    }
  }
  return report;
}

VerificationReport verify_puv_bound(int n, std::span<const int> ks) {
  constexpr int kLimit = 5;
  check_enumeration_order(n, kLimit);
  check_ks(ks);
  VerificationReport report;
  report.suite = "puv";
  const Digraph dn = d_tournament(n);
  for (const Digraph& t : enumerate_tournaments(n)) {
    if (!is_strongly_connected(t)) continue;
    ++report.counters["strong_tournaments"];
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        const Polynomial diff = constrained_polynomials(t, u, v).diff;
        const bool special = maps_onto_reversed_arc(t, dn, u, v);
        for (int k : ks) {
          const BigInt value = diff(k);
          const BigInt ceiling = diff_ceiling(n, k);
          ++report.checked;
          const std::string where = tournament_label(t) + " (u,v)=(" + std::to_string(u) + "," +
                                    std::to_string(v) + ") k=" + std::to_string(k);
          if (value > ceiling) {
            report.fail(where + ": " + value.str() + " exceeds " + ceiling.str());
          } else if ((value == ceiling) != special) {
            report.fail(where + (special ? ": D_n reversed arc below the ceiling" : ": equality off D_n"));
          }
          if (value == ceiling) ++report.counters["equality_cases"];
        }
      }
    }
  }
  return report;
}

VerificationReport verify_puv_general(int max_n, int samples, std::span<const int> ks, std::uint64_t seed) {
  check_ks(ks);
  if (max_n < 3) throw DomainError("verify_puv_general needs max_n >= 3");
  if (max_n > 8) throw CapacityError("random strongly connected digraph order", max_n, 8);
  VerificationReport report;
  report.suite = "puv-general";
  Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    const int n = 3 + i % (max_n - 2);
    Digraph d;
    do {
      d = random_digraph(n, 0.45, rng);
    } while (!is_strongly_connected(d));
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        const Polynomial diff = constrained_polynomials(d, u, v).diff;
        for (int k : ks) {
          ++report.checked;
          const BigInt value = diff(k);
          const BigInt ceiling = diff_ceiling(n, k);
          if (value > ceiling) {
            report.fail("sample " + std::to_string(i) + " (u,v)=(" + std::to_string(u) + "," + std::to_string(v) +
                        ") k=" + std::to_string(k) + ": " + value.str() + " exceeds " + ceiling.str());
          }
          if (value == ceiling) ++report.counters["equality_cases"];
        }
      }
    }
  }
  return report;
}

VerificationReport verify_closed_forms(int max_n) {
  if (max_n > kDefaultDichromaticLimit) throw CapacityError("closed form check order", max_n, kDefaultDichromaticLimit);
  VerificationReport report;
  report.suite = "sn";
  for (int n = 1; n <= max_n; ++n) {
    ++report.checked;
    if (sn_closed_form(n) != dichromatic_polynomial(s_tournament(n))) {
      report.fail("S_" + std::to_string(n) + ": closed form differs from DP");
    }
    if (n >= 3) {
      ++report.checked;
      if (dn_closed_form(n) != dichromatic_polynomial(d_tournament(n))) {
        report.fail("D_" + std::to_string(n) + ": closed form differs from DP");
      }
    }
  }
  return report;
}

VerificationReport verify_coefficients(int max_n, int samples, std::uint64_t seed) {
  VerificationReport report;
  report.suite = "coeff";
  auto check = [&report](const Digraph& d, const std::string& label) {
    ++report.checked;
    const CoefficientReport r = coefficient_report(d);
    ++report.counters["girth_" + std::to_string(r.girth)];
    if (!r.holds) {
      report.fail(label + ": girth " + std::to_string(r.girth) + ", coefficient " + r.cycle_coefficient.str() +
                  " vs " + std::to_string(r.cycle_count) + " cycles");
    }
  };
  for (int n = 1; n <= std::min(max_n, kMaxEnumeratedTournamentOrder); ++n) {
    for (const Digraph& t : enumerate_tournaments(n)) {
      if (is_acyclic(t)) {
        // Transitive: P = x^n, so the x^{n-2} coefficient is zero like the triangle count.
        ++report.checked;
        if (dichromatic_polynomial(t) != Polynomial::monomial(n)) report.fail(tournament_label(t) + ": P != x^n");
        continue;
      }
      check(t, tournament_label(t));
    }
  }
  // Girths 2..5 in turn: plant a g-cycle, then add random arcs that keep
  // every cycle at length >= g.
  Rng rng(seed);
  const int top = std::min(max_n, 9);
  for (int i = 0; i < samples && top >= 2; ++i) {
    const int g = std::min(2 + i % 4, top);
    const int n = g + static_cast<int>(rng() % static_cast<std::uint64_t>(top - g + 1));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Digraph d(n);
    for (int j = 0; j < g; ++j) d.add_arc(perm[j], perm[(j + 1) % g]);
    std::bernoulli_distribution keep(0.35);
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u == v || d.has_arc(u, v) || !keep(rng)) continue;
        d.add_arc(u, v);
        if (*girth(d) < g) d.remove_arc(u, v);
      }
    }
    check(d, "random #" + std::to_string(i));
  }
  return report;
}

}  // namespace dicolor
