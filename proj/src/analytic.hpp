#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "census.hpp"
#include "numtheory.hpp"

namespace igcensus {

/// Riemann zeta for real s > 1, by alternating-series acceleration of the
/// eta function (error falls like (3+sqrt 8)^-terms, so doubles saturate
/// around 40 terms). Throws std::invalid_argument for s <= 1.
double riemann_zeta(double s);

/// Interval guaranteed to contain a value computed with a bounded tail.
struct Bracket {
  double lower = 0;
  double upper = 0;

  double midpoint() const { return lower + (upper - lower) / 2; }
  double width() const { return upper - lower; }
  bool contains(double x) const { return lower <= x && x <= upper; }
};

/// prod_{p <= prime_limit} (1 - 2/p^2), bracketed against the infinite
/// product: the dropped factors shrink the product by at most
/// exp(-3/prime_limit), since -log(1-2/p^2) <= 3/p^2 for p >= 3 and
/// sum_{p > P} 1/p^2 <= 1/P. This is Mirsky's constant, the density of n
/// with n and n+1 both squarefree. Requires prime_limit >= 2.
Bracket mirsky_constant(uint64_t prime_limit);

/// One named constant with the short decimal it is usually quoted as.
struct NamedConstant {
  std::string name;
  double value = 0;
  std::string printed;
};

/// Every constant the density reports compare against, computed from
/// first principles (pi, zeta values, the Mirsky product).
struct ConstantSet {
  double mirsky_c = 0;  // prod (1 - 2/p^2)
  double zeta2 = 0;     // pi^2/6
  double zeta4 = 0;     // pi^4/90
  double zeta6 = 0;     // pi^6/945
  double target_tuple_petersen = 0;   // 12/pi^2 - mirsky_c, quoted for B/A
  double target_tuple_connected = 0;  // 945/pi^6 = 1/zeta6, quoted for C/A
  double target_class_petersen = 0;   // 4(pi^2-3)/(5 pi^2), quoted for CP/CI
  double target_class_connected = 0;  // 6/pi^2, quoted for CIc/CI
  double target_class_share = 0;      // 2(pi^2-3)/15, quoted for CP/CIc
  double target_class_growth = 0;     // 5/16, quoted for CI/N^2
  double feller_tornier = 0;          // (1 + mirsky_c)/2

  std::vector<NamedConstant> rows() const;
};

/// mirsky_c at the bracket midpoint of mirsky_constant(prime_limit).
ConstantSet density_targets(uint64_t prime_limit = 10'000'000);

/// Exact partial sum of one arithmetic function against its predicted
/// leading term; ratio = sum / main_term.
struct SumCheck {
  std::string name;
  double sum = 0;
  double main_term = 0;
  double ratio = 0;
};

/// The five quoted leading terms behind the class-count asymptotics:
///   sum phi(n)^2        ~ mirsky_c N^3/3   (as quoted; see the reports)
///   sum n phi(n)        ~ 2 N^3/pi^2
///   sum g_1(n)          ~ 5 N^2/4
///   sum dedekind psi(n) ~ 15 N^2/(2 pi^2)
///   sum phi(n)          ~ 3 N^2/pi^2
/// Sums are exact 128-bit integers; only the final ratio is floating.
/// Requires 3 <= max_n <= sieve.limit().
std::vector<SumCheck> asymptotic_sum_report(uint64_t max_n,
                                            const FactorSieve& sieve);

enum class DirichletSeries {
  kG1,          // sum g_1(n)/n^s = zeta(s)^2 zeta(s-1)/zeta(2s), s > 2
  kTauSquared,  // sum tau(n)^2/n^s = zeta(s)^4/zeta(2s), s > 1
};

struct TruncationCheck {
  double lhs = 0;  // truncated Dirichlet sum
  double rhs = 0;  // closed zeta expression
  double gap = 0;  // |lhs - rhs|
};

/// Compares a truncated Dirichlet sum with its closed form. Throws
/// std::invalid_argument when s is outside the convergence region or
/// terms < 1; requires terms <= sieve.limit().
TruncationCheck dirichlet_truncation_check(DirichletSeries series, double s,
                                           uint64_t terms,
                                           const FactorSieve& sieve);

/// One measured ratio against its quoted limit; residual = value - target.
struct DensityEntry {
  std::string name;
  double value = 0;
  double target = 0;
  double residual = 0;
};

/// The six tracked ratios at cutoff N: B/A, C/A from exact tuple counts
/// and CP/CI, CIc/CI, CP/CIc, CI/N^2 from class-count partial sums.
struct DensityReport {
  uint64_t n = 0;
  std::vector<DensityEntry> entries;
};

DensityReport density_report(uint64_t max_n, const FactorSieve& sieve,
                             const ConstantSet& targets);

}  // namespace igcensus
