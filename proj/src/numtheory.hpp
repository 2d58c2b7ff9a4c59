#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace igcensus {

struct PrimePower {
  uint64_t prime;
  uint32_t exponent;

  bool operator==(const PrimePower&) const = default;
};

/// Prime factorization as (prime, exponent) pairs with strictly
/// increasing primes. n = 1 is the empty product.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<PrimePower> parts)
      : parts_(std::move(parts)) {}

  const std::vector<PrimePower>& parts() const { return parts_; }
  uint32_t distinct_prime_count() const {  // omega(n)
    return static_cast<uint32_t>(parts_.size());
  }
  uint64_t divisor_count() const;  // tau(n)
  uint64_t value() const;          // reconstructs n

 private:
  std::vector<PrimePower> parts_;
};

/// Smallest-prime-factor table for 2..limit. Immutable after
/// construction; all queries are safe to run concurrently.
class FactorSieve {
 public:
  /// Throws std::invalid_argument for limit < 2 or limit > kMaxLimit.
  explicit FactorSieve(uint64_t limit);

  static constexpr uint64_t kMaxLimit = 100'000'000;  // 4 bytes per entry

  uint64_t limit() const { return limit_; }
  bool is_prime(uint64_t n) const;
  uint64_t smallest_prime_factor(uint64_t n) const;

  /// n in [1, limit]; throws std::out_of_range otherwise.
  Factorization factorize(uint64_t n) const;

  uint64_t euler_phi(uint64_t n) const;
  int moebius(uint64_t n) const;  // -1, 0 or 1
  uint32_t omega(uint64_t n) const;
  uint64_t tau(uint64_t n) const;

  /// Jordan totient J2(n) = n^2 * prod_{p|n} (1 - 1/p^2), exact.
  uint64_t jordan2(uint64_t n) const;
  /// Dedekind psi(n) = J2(n)/phi(n) = n * prod_{p|n} (1 + 1/p), exact.
  uint64_t dedekind_psi(uint64_t n) const;

  /// r(n) = #{x in [0,n) : x^2 = 1 (mod n)}, via the 2^omega piecewise
  /// closed form. See sqrt_one_count_scan for the brute-force oracle.
  uint64_t sqrt_one_count(uint64_t n) const;
  /// s(n) = #{x in [0,n) : x^2 = -1 (mod n)}. Zero when 4 | n or some
  /// prime p = 3 (mod 4) divides n, else 2^(number of odd primes | n).
  uint64_t sqrt_minus_one_count(uint64_t n) const;

  /// Calls fn(d, mu(d)) for every squarefree divisor d of n.
  template <typename Fn>
  void for_each_squarefree_divisor(uint64_t n, Fn&& fn) const {
    const Factorization f = factorize(n);
    const size_t count = size_t{1} << f.distinct_prime_count();
    for (size_t mask = 0; mask < count; ++mask) {
      uint64_t d = 1;
      int mu = 1;
      for (size_t bit = 0; bit < f.parts().size(); ++bit) {
        if (mask & (size_t{1} << bit)) {
          d *= f.parts()[bit].prime;
          mu = -mu;
        }
      }
      fn(d, mu);
    }
  }

 private:
  void check_range(uint64_t n) const;

  uint64_t limit_;
  std::vector<uint32_t> spf_;
};

/// O(n) scan counting solutions of x^2 = 1 (mod n); oracle for
/// FactorSieve::sqrt_one_count.
uint64_t sqrt_one_count_scan(uint64_t n);
/// O(n) scan counting solutions of x^2 = -1 (mod n).
uint64_t sqrt_minus_one_count_scan(uint64_t n);

inline uint64_t gcd3(uint64_t a, uint64_t b, uint64_t c) {
  return std::gcd(std::gcd(a, b), c);
}

}  // namespace igcensus
