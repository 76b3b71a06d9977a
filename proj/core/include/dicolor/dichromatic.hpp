#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dicolor/digraph.hpp"
#include "dicolor/polynomial.hpp"
#include "dicolor/verification.hpp"

namespace dicolor {

inline constexpr int kDefaultDichromaticLimit = 14;
/// Block counts are accumulated in 64 bits; Bell(25) still fits.
inline constexpr int kMaxDichromaticLimit = 25;

/// a[j] = number of partitions of V into exactly j non-empty acyclic blocks.
/// P(D; x) = sum_j a[j] x(x-1)...(x-j+1).
struct BlockCounts {
  std::vector<BigInt> a;
};

BlockCounts block_counts(const Digraph& d, int limit = kDefaultDichromaticLimit);
Polynomial polynomial_from_block_counts(const BlockCounts& counts);

/// The number of proper k-colourings as an exact integer polynomial in k.
Polynomial dichromatic_polynomial(const Digraph& d, int limit = kDefaultDichromaticLimit);

/// Counts proper colourings by trying all k^n assignments (n <= 8, k <= 6).
BigInt count_colorings_bruteforce(const Digraph& d, int k);

/// Colourings where u and v share a colour, and where they do not.
struct ConstrainedCounts {
  BigInt same;
  BigInt diff;
};

struct ConstrainedPolynomials {
  Polynomial same;
  Polynomial diff;
};

ConstrainedPolynomials constrained_polynomials(const Digraph& d, int u, int v,
                                               int limit = kDefaultDichromaticLimit);
ConstrainedCounts constrained_counts(const Digraph& d, int u, int v, int k,
                                     int limit = kDefaultDichromaticLimit);

// Closed forms.

/// sum_{i=1}^{n} C(i, n-i) x (x-1)^{i-1}. Throws std::logic_error if the
/// expansion ever disagrees with sn_recurrence.
Polynomial sn_closed_form(int n);
/// f_1 = x, f_2 = x^2, f_n = (x-1)(f_{n-1} + f_{n-2}).
Polynomial sn_recurrence(int n);
/// x(x-1)^{n-2} + x^{n-1}(x-1), n >= 3.
Polynomial dn_closed_form(int n);

/// Low-order coefficients of P(D; x) against the girth g: the coefficients
/// of x^{n-1}..x^{n-g+2} should vanish and that of x^{n-g+1} should be minus
/// the number of directed g-cycles.
struct CoefficientReport {
  int n = 0;
  int girth = 0;
  Polynomial polynomial;
  std::vector<BigInt> vanishing;  // x^{n-1} down to x^{n-g+2}
  BigInt cycle_coefficient;       // x^{n-g+1}
  std::uint64_t cycle_count = 0;  // directed cycles of length g
  bool holds = false;
};

/// Throws DomainError for acyclic digraphs.
CoefficientReport coefficient_report(const Digraph& d, int limit = kDefaultDichromaticLimit);

// ---------------------------------------------------------------------------
// Exhaustive checks over labelled tournaments.

/// Every strongly connected tournament T of order n has P(T;k) < P(D_n;k)
/// for each k in `ks`, with equality exactly when T is isomorphic to D_n.
VerificationReport verify_dn_maximality(int n, std::span<const int> ks);

/// For every strongly connected tournament and arc e: T - e is acyclic iff
/// (T, e) is isomorphic to (D_n, last -> first).
VerificationReport verify_allcycle_lemma(int n);

/// For every strongly connected tournament and pair u != v: the number of
/// proper k-colourings with u, v coloured differently is at most
/// k^{n-1}(k-1), with equality exactly when {u, v} maps onto the reversed
/// arc of D_n under an isomorphism.
VerificationReport verify_puv_bound(int n, std::span<const int> ks);

/// The inequality half of verify_puv_bound on random strongly connected
/// digraphs of order 3..max_n. Equality cases are tallied, not judged:
/// outside tournaments they are exactly the pairs lying on every cycle.
VerificationReport verify_puv_general(int max_n, int samples, std::span<const int> ks, std::uint64_t seed);

/// Closed forms of S_n (n = 1..max_n) and D_n (n = 3..max_n) against the DP.
VerificationReport verify_closed_forms(int max_n);

/// coefficient_report on every tournament of order <= min(max_n, 6) and on
/// `samples` seeded random digraphs of order <= min(max_n, 9) whose girths
/// cycle through 2, 3, 4, 5.
VerificationReport verify_coefficients(int max_n, int samples, std::uint64_t seed);

}  // namespace dicolor
