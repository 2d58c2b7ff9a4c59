#include "numtheory.hpp"

#include <stdexcept>
#include <string>

namespace igcensus {

uint64_t Factorization::divisor_count() const {
  uint64_t t = 1;
  for (const auto& pp : parts_) t *= pp.exponent + 1;
  return t;
}

uint64_t Factorization::value() const {
  uint64_t n = 1;
  for (const auto& pp : parts_) {
    for (uint32_t i = 0; i < pp.exponent; ++i) n *= pp.prime;
  }
  return n;
}

FactorSieve::FactorSieve(uint64_t limit) : limit_(limit) {
  if (limit < 2) {
    throw std::invalid_argument("FactorSieve: limit must be at least 2");
  }
  if (limit > kMaxLimit) {
    throw std::invalid_argument("FactorSieve: limit " + std::to_string(limit) +
                                " exceeds memory budget of " +
                                std::to_string(kMaxLimit));
  }
  spf_.assign(limit + 1, 0);
  for (uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {  // i is prime
      spf_[i] = static_cast<uint32_t>(i);
      for (uint64_t j = i * i; j <= limit; j += i) {
        if (spf_[j] == 0) spf_[j] = static_cast<uint32_t>(i);
      }
    }
  }
}

void FactorSieve::check_range(uint64_t n) const {
  if (n < 1 || n > limit_) {
    throw std::out_of_range("FactorSieve: n = " + std::to_string(n) +
                            " outside [1, " + std::to_string(limit_) + "]");
  }
}

bool FactorSieve::is_prime(uint64_t n) const {
  check_range(n);
  return n >= 2 && spf_[n] == n;
}

uint64_t FactorSieve::smallest_prime_factor(uint64_t n) const {
  check_range(n);
  if (n < 2) {
    throw std::invalid_argument("smallest_prime_factor undefined for n = 1");
  }
  return spf_[n];
}

Factorization FactorSieve::factorize(uint64_t n) const {
  check_range(n);
  std::vector<PrimePower> parts;
  while (n > 1) {
    const uint64_t p = spf_[n];
    uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    parts.push_back({p, e});
  }
  return Factorization(std::move(parts));
}

uint64_t FactorSieve::euler_phi(uint64_t n) const {
  uint64_t r = 1;
  const Factorization f = factorize(n);
  for (const auto& pp : f.parts()) {
    r *= pp.prime - 1;
    for (uint32_t i = 1; i < pp.exponent; ++i) r *= pp.prime;
  }
  return r;
}

int FactorSieve::moebius(uint64_t n) const {
  const Factorization f = factorize(n);
  for (const auto& pp : f.parts()) {
    if (pp.exponent > 1) return 0;
  }
  return f.distinct_prime_count() % 2 == 0 ? 1 : -1;
}

uint32_t FactorSieve::omega(uint64_t n) const {
  return factorize(n).distinct_prime_count();
}

uint64_t FactorSieve::tau(uint64_t n) const {
  return factorize(n).divisor_count();
}

uint64_t FactorSieve::jordan2(uint64_t n) const {
  // Per prime part: p^(2e) * (1 - 1/p^2) = p^(2e-2) * (p^2 - 1).
  uint64_t r = 1;
  const Factorization f = factorize(n);
  for (const auto& pp : f.parts()) {
    uint64_t part = pp.prime * pp.prime - 1;
    for (uint32_t i = 1; i < pp.exponent; ++i) part *= pp.prime * pp.prime;
    r *= part;
  }
  return r;
}

uint64_t FactorSieve::dedekind_psi(uint64_t n) const {
  const uint64_t j2 = jordan2(n);
  const uint64_t phi = euler_phi(n);
  if (j2 % phi != 0) {
    throw std::logic_error("dedekind_psi: J2(n) not divisible by phi(n)");
  }
  return j2 / phi;
}

uint64_t FactorSieve::sqrt_one_count(uint64_t n) const {
  const uint32_t w = omega(n);
  if (n % 2 == 1 || n % 8 == 4) return uint64_t{1} << w;
  if (n % 4 == 2) return uint64_t{1} << (w - 1);
  return uint64_t{1} << (w + 1);  // n = 0 (mod 8)
}

uint64_t FactorSieve::sqrt_minus_one_count(uint64_t n) const {
  if (n % 4 == 0) return 0;
  uint32_t odd_primes = 0;
  const Factorization f = factorize(n);
  for (const auto& pp : f.parts()) {
    if (pp.prime == 2) continue;
    if (pp.prime % 4 == 3) return 0;
    ++odd_primes;
  }
  return uint64_t{1} << odd_primes;
}

uint64_t sqrt_one_count_scan(uint64_t n) {
  uint64_t count = 0;
  for (uint64_t x = 0; x < n; ++x) {
    if ((static_cast<unsigned __int128>(x) * x) % n == 1 % n) ++count;
  }
  return count;
}

uint64_t sqrt_minus_one_count_scan(uint64_t n) {
  uint64_t count = 0;
  const uint64_t minus_one = (n - 1) % n;
  for (uint64_t x = 0; x < n; ++x) {
    if ((static_cast<unsigned __int128>(x) * x) % n == minus_one) ++count;
  }
  return count;
}

}  // namespace igcensus
