#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "numtheory.hpp"

namespace igcensus {

/// One verification line. Exact checks set tolerance 0 and use value as a
/// mismatch count against expected 0; approximate checks compare
/// |value - expected| with tolerance. detail describes the first failing
/// case, when there is one.
struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0;
  double expected = 0;
  double tolerance = 0;
  std::string detail;
};

enum class VerifySuite {
  kBrute,      // class-count formulas vs exhaustive isomorphism classes,
               // plus BFS-vs-gcd connectivity on all tuples with n <= max_n
  kRoots,      // piecewise r(n), s(n) vs O(n) scans for n <= max_n
  kSums,       // partial-sum leading terms at N = max_n, plus the exact
               // g_1(n) phi(n) = sum gcd(n,a-1)^2 identity
  kDirichlet,  // truncated Dirichlet series vs zeta closed forms
               // (terms = max_n) and zeta cross-identities
};

/// Runs one suite. max_n is the suite's range/cutoff; brute_cap only
/// matters for kBrute, where class enumeration runs on n in [3, brute_cap]
/// and the connectivity sweep on n in [3, max_n]. The sieve must cover
/// every n the suite touches.
std::vector<CheckResult> run_suite(VerifySuite suite, uint64_t max_n,
                                   uint32_t brute_cap,
                                   const FactorSieve& sieve);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace igcensus
