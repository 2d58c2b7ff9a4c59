#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "census.hpp"
#include "doctest.h"
#include "numtheory.hpp"

using namespace igcensus;

namespace {

const FactorSieve& sieve() {
  static FactorSieve s(1'000'000);
  return s;
}

}  // namespace

TEST_CASE("prime-power terms of the four multiplicative components") {
  // g_1(p^k) = ((p+1) p^k - 2) / (p - 1)
  CHECK(g_term(1, 2, 1) == 4);
  CHECK(g_term(1, 2, 3) == 22);
  CHECK(g_term(1, 3, 2) == 17);
  CHECK(g_term(1, 5, 1) == 7);
  CHECK(g_term(1, 7, 1) == 9);

  // g_2: 4k at p = 2, else 2k + 1
  CHECK(g_term(2, 2, 1) == 4);
  CHECK(g_term(2, 2, 3) == 12);
  CHECK(g_term(2, 3, 1) == 3);
  CHECK(g_term(2, 5, 2) == 5);

  // g_3: 2 at p = 2, k = 1; 4(k-1) at p = 2, k >= 2; else 2k + 1
  CHECK(g_term(3, 2, 1) == 2);
  CHECK(g_term(3, 2, 2) == 4);
  CHECK(g_term(3, 2, 4) == 12);
  CHECK(g_term(3, 7, 3) == 7);

  // g_4: 2 at p = 2; 2k + 1 if p = 1 mod 4; 1 if p = 3 mod 4
  CHECK(g_term(4, 2, 5) == 2);
  CHECK(g_term(4, 5, 2) == 5);
  CHECK(g_term(4, 13, 1) == 3);
  CHECK(g_term(4, 3, 4) == 1);
  CHECK(g_term(4, 7, 1) == 1);

  CHECK_THROWS_AS(g_term(0, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(g_term(5, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(g_term(1, 2, 0), std::invalid_argument);
}

TEST_CASE("g_2, g_3, g_4 are dominated by the divisor-count square") {
  // tau(p^k)^2 = (k+1)^2 bounds every component at every prime power.
  const uint64_t primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23};
  for (uint64_t p : primes) {
    for (uint32_t k = 1; k <= 12; ++k) {
      uint64_t bound = uint64_t(k + 1) * (k + 1);
      CHECK(g_term(2, p, k) <= bound);
      CHECK(g_term(3, p, k) <= bound);
      CHECK(g_term(4, p, k) <= bound);
    }
  }
}

TEST_CASE("g_value is multiplicative over the factorization") {
  CHECK(g_value(1, 1, sieve()) == 1);
  CHECK(g_value(1, 12, sieve()) == g_term(1, 2, 2) * g_term(1, 3, 1));
  CHECK(g_value(4, 90, sieve()) ==
        g_term(4, 2, 1) * g_term(4, 3, 2) * g_term(4, 5, 1));
}

TEST_CASE("class-count formulas reproduce the brute-force table") {
  // (total, connected, petersen) for n = 3..16 under the strict bound
  // k < n/2, confirmed by exhaustive isomorphism testing.
  const uint64_t expected[][3] = {
      {1, 1, 1},  {1, 1, 1},  {2, 2, 2},  {3, 2, 2},  {2, 2, 2},
      {4, 3, 3},  {4, 3, 3},  {6, 4, 4},  {3, 3, 3},  {11, 7, 5},
      {4, 4, 4},  {7, 5, 5},  {10, 7, 6}, {10, 6, 6},
  };
  for (uint64_t n = 3; n <= 16; ++n) {
    CHECK(isomorphism_class_count(n, sieve()) == expected[n - 3][0]);
    CHECK(connected_class_count(n, sieve()) == expected[n - 3][1]);
    CHECK(petersen_class_count(n, sieve()) == expected[n - 3][2]);
  }
  CHECK_THROWS_AS(isomorphism_class_count(2, sieve()), std::invalid_argument);
  CHECK_THROWS_AS(connected_class_count(0, sieve()), std::invalid_argument);
  CHECK_THROWS_AS(petersen_class_count(1, sieve()), std::invalid_argument);
}

TEST_CASE("class counts nest and never throw up to a million") {
  // Every quarter-sum must divide evenly (a throw here would mean the
  // divisibility reasoning behind the formulas is wrong), and the three
  // counts must nest: petersen <= connected <= total.
  for (uint64_t n = 3; n <= 10'000; ++n) {
    uint64_t total = isomorphism_class_count(n, sieve());
    uint64_t connected = connected_class_count(n, sieve());
    uint64_t petersen = petersen_class_count(n, sieve());
    CHECK(petersen <= connected);
    CHECK(connected <= total);
    CHECK(petersen >= 1);
  }
  // Integrality sweep over the full sieve range (throws abort the test).
  uint128 spot = 0;
  for (uint64_t n = 10'001; n <= 1'000'000; ++n) {
    spot += isomorphism_class_count(n, sieve());
  }
  CHECK(spot > 0);
}

TEST_CASE("per-n tuple counts agree with a literal pair loop") {
  auto brute = [](uint64_t n) {
    uint64_t all = 0, petersen = 0, connected = 0;
    for (uint64_t k = 1; 2 * k <= n; ++k) {
      for (uint64_t j = 1; j <= k; ++j) {
        ++all;
        if (std::gcd(n, j) == 1 || std::gcd(n, k) == 1) ++petersen;
        if (std::gcd(std::gcd(n, j), k) == 1) ++connected;
      }
    }
    return std::array<uint64_t, 3>{all, petersen, connected};
  };
  for (uint64_t n = 3; n <= 1200; ++n) {
    auto want = brute(n);
    CHECK(tuples_all(n) == want[0]);
    CHECK(tuples_petersen(n, sieve()) == want[1]);
    CHECK(tuples_connected(n, sieve()) == want[2]);
  }
  for (uint64_t n : {1536ULL, 1999ULL, 2000ULL}) {
    auto want = brute(n);
    CHECK(tuples_petersen(n, sieve()) == want[1]);
    CHECK(tuples_connected(n, sieve()) == want[2]);
  }
}

TEST_CASE("fast cumulative tuple counts match the direct loop") {
  for (uint64_t max_n : {4ULL, 10ULL, 100ULL, 300ULL, 1000ULL}) {
    TupleCounts direct = tuple_counts_direct(max_n);
    TupleCounts fast = tuple_counts_fast(max_n, sieve());
    CHECK(direct.all == fast.all);
    CHECK(direct.petersen == fast.petersen);
    CHECK(direct.connected == fast.connected);
  }
}

TEST_CASE("cumulative tuple counts at the frozen checkpoints") {
  const struct {
    uint64_t max_n;
    uint64_t all, petersen, connected;
  } expected[] = {
      {4, 4, 3, 3},
      {10, 54, 40, 43},
      {100, 42924, 33481, 35462},
      {1000, 41791749, 32886935, 34744670},
      {10000, 41679167499, 32823401263, 34670789618},
      {100000, 41667916674999, 32817543030053, 34663613131262},
  };
  for (const auto& row : expected) {
    TupleCounts counts = tuple_counts_fast(row.max_n, sieve());
    CHECK(counts.all == uint128{row.all});
    CHECK(counts.petersen == uint128{row.petersen});
    CHECK(counts.connected == uint128{row.connected});
    CHECK(counts.petersen <= counts.connected);
    CHECK(counts.connected <= counts.all);
  }
}

TEST_CASE("A(10^6) from the closed form equals the per-n sum") {
  TupleCounts fast = tuple_counts_fast(1'000'000, sieve());
  CHECK(u128_to_string(fast.all) == "41666791666749999");
  uint128 by_rows = 0;
  for (uint64_t n = 3; n <= 1'000'000; ++n) by_rows += tuples_all(n);
  CHECK(by_rows == fast.all);
}

TEST_CASE("partial class sums at the frozen checkpoints") {
  PartialSums s3 = partial_sums(1000, sieve());
  CHECK(s3.classes == uint128{314878});
  CHECK(s3.connected == uint128{191485});
  CHECK(s3.petersen == uint128{174765});

  PartialSums s4 = partial_sums(10'000, sieve());
  CHECK(s4.classes == uint128{31321626});
  CHECK(s4.connected == uint128{19021982});
  CHECK(s4.petersen == uint128{17412262});
}

TEST_CASE("census scan rows are cumulative and start at n = 3") {
  std::vector<CensusRecord> rows;
  census_scan(100, sieve(), [&](const CensusRecord& r) { rows.push_back(r); });
  REQUIRE(rows.size() == 98);
  CHECK(rows.front() == CensusRecord{3, 1, 1, 1, 1, 1, 1});

  uint64_t cum_classes = 0, cum_connected = 0, cum_petersen = 0;
  for (const CensusRecord& r : rows) {
    CHECK(r.classes == isomorphism_class_count(r.n, sieve()));
    CHECK(r.connected_classes == connected_class_count(r.n, sieve()));
    CHECK(r.petersen_classes == petersen_class_count(r.n, sieve()));
    cum_classes += r.classes;
    cum_connected += r.connected_classes;
    cum_petersen += r.petersen_classes;
    CHECK(r.cum_classes == cum_classes);
    CHECK(r.cum_connected == cum_connected);
    CHECK(r.cum_petersen == cum_petersen);
  }

  PartialSums sums = partial_sums(100, sieve());
  CHECK(sums.classes == uint128{rows.back().cum_classes});
  CHECK(sums.petersen == uint128{rows.back().cum_petersen});
}

TEST_CASE("coprime counting by Moebius inclusion-exclusion") {
  for (uint64_t n : {1ULL, 2ULL, 12ULL, 30ULL, 97ULL, 360ULL}) {
    for (uint64_t limit : {0ULL, 1ULL, 7ULL, 100ULL, 1000ULL}) {
      uint64_t brute = 0;
      for (uint64_t x = 1; x <= limit; ++x) brute += std::gcd(x, n) == 1;
      CHECK(coprime_count_upto(n, limit, sieve()) == brute);
    }
  }
}

TEST_CASE("128-bit decimal rendering") {
  CHECK(u128_to_string(0) == "0");
  CHECK(u128_to_string(42) == "42");
  uint128 two64 = uint128{1} << 64;
  CHECK(u128_to_string(two64) == "18446744073709551616");
  CHECK(u128_to_string(two64 - 1) == "18446744073709551615");
}

TEST_CASE("range guards on the counting entry points") {
  CHECK_THROWS_AS(tuple_counts_direct(3001), std::out_of_range);
  CHECK_THROWS_AS(tuple_counts_fast(sieve().limit() + 1, sieve()),
                  std::out_of_range);
  CHECK_NOTHROW(tuple_counts_direct(3000));
}
