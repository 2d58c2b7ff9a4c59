#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "numtheory.hpp"

namespace igcensus {

using uint128 = unsigned __int128;

/// Decimal rendering; iostream has no 128-bit overloads.
std::string u128_to_string(uint128 value);

/// Prime-power values of the four multiplicative components g_1..g_4 whose
/// quarter-sum (minus a divisor-count correction) counts isomorphism
/// classes of I-graphs. index is 1-based. Throws std::invalid_argument on
/// index outside [1,4] or exponent 0.
uint64_t g_term(uint32_t index, uint64_t prime, uint32_t exponent);

/// Multiplicative extension of g_term over the factorization of n (n >= 1;
/// empty product = 1 at n = 1).
uint64_t g_value(uint32_t index, uint64_t n, const FactorSieve& sieve);

/// Number of isomorphism classes of I-graphs on 2n vertices,
///   I(n) = 1/4 sum_i g_i(n) - (2 tau(n) - 1  if n even, tau(n) if odd).
/// Requires n >= 3 (the tuple domain); throws std::invalid_argument below.
uint64_t isomorphism_class_count(uint64_t n, const FactorSieve& sieve);

/// Classes of connected I-graphs on 2n vertices,
///   I_c(n) = 1/4 (psi(n) + r(n) + s(n) + t(n)) - c(n)
/// with psi the Dedekind psi, r/s the square-root counts mod n,
/// t(n) = 2^omega(n) (+ 2^omega(n/2) when n is even), and c(n) = 1, 2, 3
/// for n odd, n = 0 mod 4, n = 2 mod 4.
uint64_t connected_class_count(uint64_t n, const FactorSieve& sieve);

/// Classes of generalised Petersen graphs on 2n vertices,
///   P(n) = 1/4 (2n - phi(n) - 2 gcd(n,2) + r(n) + s(n)).
uint64_t petersen_class_count(uint64_t n, const FactorSieve& sieve);

/// One census row: the three per-n class counts plus their running sums
/// over [3, n].
struct CensusRecord {
  uint64_t n = 0;
  uint64_t classes = 0;
  uint64_t connected_classes = 0;
  uint64_t petersen_classes = 0;
  uint64_t cum_classes = 0;
  uint64_t cum_connected = 0;
  uint64_t cum_petersen = 0;

  bool operator==(const CensusRecord&) const = default;
};

/// Streams one CensusRecord per n in [3, max_n] in increasing order.
void census_scan(uint64_t max_n, const FactorSieve& sieve,
                 const std::function<void(const CensusRecord&)>& emit);

/// CI(N), CI_c(N), CP(N): class counts summed over n in [3, N].
struct PartialSums {
  uint128 classes = 0;
  uint128 connected = 0;
  uint128 petersen = 0;
};
PartialSums partial_sums(uint64_t max_n, const FactorSieve& sieve);

/// #{x in [1, limit] : gcd(x, n) = 1} by Moebius over the squarefree
/// divisors of n.
uint64_t coprime_count_upto(uint64_t n, uint64_t limit,
                            const FactorSieve& sieve);

/// Valid tuples (n, j, k) with 1 <= j <= k <= floor(n/2) for one n:
/// all of them, those whose graph is a generalised Petersen graph
/// (gcd(n,j) = 1 or gcd(n,k) = 1), and those whose graph is connected
/// (gcd(n,j,k) = 1).
uint64_t tuples_all(uint64_t n);
uint64_t tuples_petersen(uint64_t n, const FactorSieve& sieve);
uint64_t tuples_connected(uint64_t n, const FactorSieve& sieve);

/// A(N), B(N), C(N): the same three counts summed over n in [3, N].
struct TupleCounts {
  uint128 all = 0;
  uint128 petersen = 0;
  uint128 connected = 0;
};

/// Literal triple loop over (n, j, k) with pairwise gcds. Quadratic per n,
/// so max_n is capped at 3000 (std::out_of_range above); this is the
/// oracle the fast path is validated against.
TupleCounts tuple_counts_direct(uint64_t max_n);

/// Closed forms: per-n coprime-pair counting for B and a Moebius switch
/// with tetrahedral-number prefix sums for C. O(N log N) overall,
/// 128-bit accumulation. Requires max_n <= sieve.limit().
TupleCounts tuple_counts_fast(uint64_t max_n, const FactorSieve& sieve);

}  // namespace igcensus
