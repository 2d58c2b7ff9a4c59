#include "census.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace igcensus {
namespace {

uint64_t pow_u64(uint64_t base, uint32_t exponent) {
  uint64_t result = 1;
  while (exponent--) result *= base;
  return result;
}

// Pairs 1 <= j <= k <= m.
uint64_t triangular(uint64_t m) { return m * (m + 1) / 2; }

// W(M) = sum_{y=1}^{M} triangular(floor(y/2)); y = 2q and y = 2q+1
// contribute triangular(q) each, which telescopes into a tetrahedral term.
uint128 tuple_prefix(uint64_t m) {
  uint64_t q = m / 2;
  if (q == 0) return 0;
  uint128 w = uint128{q - 1} * q * (q + 1) / 3 + triangular(q);
  if (m % 2 == 1) w += triangular(q);
  return w;
}

uint64_t quarter(uint64_t sum) {
  if (sum % 4 != 0) {
    throw std::logic_error("class-count component sum not divisible by 4");
  }
  return sum / 4;
}

void require_census_n(uint64_t n) {
  if (n < 3) throw std::invalid_argument("class counts need n >= 3");
}

}  // namespace

std::string u128_to_string(uint128 value) {
  if (value == 0) return "0";
  std::string digits;
  while (value > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<unsigned>(value % 10)));
    value /= 10;
  }
  return {digits.rbegin(), digits.rend()};
}

uint64_t g_term(uint32_t index, uint64_t prime, uint32_t exponent) {
  if (exponent == 0) throw std::invalid_argument("g_term needs exponent >= 1");
  uint64_t k = exponent;
  switch (index) {
    case 1: {
      // ((p+1) p^k - 2) / (p-1); the division is exact.
      uint64_t numerator = (prime + 1) * pow_u64(prime, exponent) - 2;
      if (numerator % (prime - 1) != 0) {
        throw std::logic_error("g_1 numerator not divisible by p-1");
      }
      return numerator / (prime - 1);
    }
    case 2:
      return prime == 2 ? 4 * k : 2 * k + 1;
    case 3:
      if (prime == 2) return k == 1 ? 2 : 4 * (k - 1);
      return 2 * k + 1;
    case 4:
      if (prime == 2) return 2;
      return prime % 4 == 1 ? 2 * k + 1 : 1;
    default:
      throw std::invalid_argument("g_term index must be 1..4");
  }
}

uint64_t g_value(uint32_t index, uint64_t n, const FactorSieve& sieve) {
  uint64_t product = 1;
  const Factorization factors = sieve.factorize(n);
  for (const PrimePower& pp : factors.parts()) {
    product *= g_term(index, pp.prime, pp.exponent);
  }
  return product;
}

uint64_t isomorphism_class_count(uint64_t n, const FactorSieve& sieve) {
  require_census_n(n);
  uint64_t sum = 0;
  for (uint32_t index = 1; index <= 4; ++index) {
    sum += g_value(index, n, sieve);
  }
  uint64_t tau = sieve.tau(n);
  uint64_t correction = n % 2 == 0 ? 2 * tau - 1 : tau;
  return quarter(sum) - correction;
}

uint64_t connected_class_count(uint64_t n, const FactorSieve& sieve) {
  require_census_n(n);
  uint64_t t = uint64_t{1} << sieve.omega(n);
  if (n % 2 == 0) t += uint64_t{1} << sieve.omega(n / 2);
  uint64_t sum = sieve.dedekind_psi(n) + sieve.sqrt_one_count(n) +
                 sieve.sqrt_minus_one_count(n) + t;
  uint64_t correction = n % 2 == 1 ? 1 : (n % 4 == 0 ? 2 : 3);
  return quarter(sum) - correction;
}

uint64_t petersen_class_count(uint64_t n, const FactorSieve& sieve) {
  require_census_n(n);
  uint64_t sum = 2 * n - sieve.euler_phi(n) - 2 * std::gcd(n, uint64_t{2}) +
                 sieve.sqrt_one_count(n) + sieve.sqrt_minus_one_count(n);
  return quarter(sum);
}

void census_scan(uint64_t max_n, const FactorSieve& sieve,
                 const std::function<void(const CensusRecord&)>& emit) {
  CensusRecord record;
  for (uint64_t n = 3; n <= max_n; ++n) {
    record.n = n;
    record.classes = isomorphism_class_count(n, sieve);
    record.connected_classes = connected_class_count(n, sieve);
    record.petersen_classes = petersen_class_count(n, sieve);
    record.cum_classes += record.classes;
    record.cum_connected += record.connected_classes;
    record.cum_petersen += record.petersen_classes;
    emit(record);
  }
}

PartialSums partial_sums(uint64_t max_n, const FactorSieve& sieve) {
  PartialSums sums;
  for (uint64_t n = 3; n <= max_n; ++n) {
    sums.classes += isomorphism_class_count(n, sieve);
    sums.connected += connected_class_count(n, sieve);
    sums.petersen += petersen_class_count(n, sieve);
  }
  return sums;
}

uint64_t coprime_count_upto(uint64_t n, uint64_t limit,
                            const FactorSieve& sieve) {
  int64_t count = 0;
  sieve.for_each_squarefree_divisor(n, [&](uint64_t d, int mu) {
    count += mu * static_cast<int64_t>(limit / d);
  });
  if (count < 0) throw std::logic_error("negative coprime count");
  return static_cast<uint64_t>(count);
}

uint64_t tuples_all(uint64_t n) { return triangular(n / 2); }

uint64_t tuples_petersen(uint64_t n, const FactorSieve& sieve) {
  // Inclusion-exclusion on {j coprime to n} and {k coprime to n} over the
  // triangle j <= k <= m: c(m+1) - c(c+1)/2 where c counts coprime values.
  uint64_t m = n / 2;
  uint64_t c = coprime_count_upto(n, m, sieve);
  return c * (m + 1) - c * (c + 1) / 2;
}

uint64_t tuples_connected(uint64_t n, const FactorSieve& sieve) {
  // Moebius over d | n: pairs with d | j and d | k form a scaled triangle.
  uint64_t m = n / 2;
  int64_t count = 0;
  sieve.for_each_squarefree_divisor(n, [&](uint64_t d, int mu) {
    count += mu * static_cast<int64_t>(triangular(m / d));
  });
  if (count < 0) throw std::logic_error("negative connected-tuple count");
  return static_cast<uint64_t>(count);
}

TupleCounts tuple_counts_direct(uint64_t max_n) {
  constexpr uint64_t kDirectCap = 3000;
  if (max_n > kDirectCap) {
    throw std::out_of_range("tuple_counts_direct capped at max_n = 3000");
  }
  TupleCounts counts;
  std::vector<uint64_t> gcd_with_n;
  for (uint64_t n = 3; n <= max_n; ++n) {
    uint64_t m = n / 2;
    gcd_with_n.assign(m + 1, 0);
    for (uint64_t x = 1; x <= m; ++x) gcd_with_n[x] = std::gcd(n, x);
    for (uint64_t k = 1; k <= m; ++k) {
      for (uint64_t j = 1; j <= k; ++j) {
        ++counts.all;
        if (gcd_with_n[j] == 1 || gcd_with_n[k] == 1) ++counts.petersen;
        if (std::gcd(gcd_with_n[j], gcd_with_n[k]) == 1) ++counts.connected;
      }
    }
  }
  return counts;
}

TupleCounts tuple_counts_fast(uint64_t max_n, const FactorSieve& sieve) {
  if (max_n > sieve.limit()) {
    throw std::out_of_range("tuple_counts_fast needs max_n <= sieve limit");
  }
  TupleCounts counts;
  if (max_n < 3) return counts;

  // A(N): prefix sum of triangles, minus the n = 2 term the census skips.
  counts.all = tuple_prefix(max_n) - 1;

  for (uint64_t n = 3; n <= max_n; ++n) {
    counts.petersen += tuples_petersen(n, sieve);
  }

  // C(N) = sum_d mu(d) sum_{y <= N/d} triangular(floor(y/2)): summing the
  // per-n Moebius identity with n = d y swaps the order of summation, and
  // floor(floor(dy/2)/d) collapses to floor(y/2). The d = 1 term drops 1
  // for the excluded n in {1, 2}.
  __int128 connected = 0;
  for (uint64_t d = 1; d <= max_n; ++d) {
    int mu = sieve.moebius(d);
    if (mu == 0) continue;
    __int128 inner = static_cast<__int128>(tuple_prefix(max_n / d));
    if (d == 1) inner -= 1;
    connected += mu * inner;
  }
  if (connected < 0) throw std::logic_error("negative connected-tuple sum");
  counts.connected = static_cast<uint128>(connected);

  return counts;
}

}  // namespace igcensus
