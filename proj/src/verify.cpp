#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "analytic.hpp"
#include "census.hpp"
#include "igraph.hpp"
#include "isomorphism.hpp"

namespace igcensus {
namespace {

CheckResult exact_check(std::string name, uint64_t mismatches,
                        std::string first_failure) {
  CheckResult result;
  result.name = std::move(name);
  result.pass = mismatches == 0;
  result.value = static_cast<double>(mismatches);
  result.expected = 0;
  result.tolerance = 0;
  result.detail = std::move(first_failure);
  return result;
}

CheckResult near_check(std::string name, double value, double expected,
                       double tolerance) {
  CheckResult result;
  result.name = std::move(name);
  result.pass = std::abs(value - expected) <= tolerance;
  result.value = value;
  result.expected = expected;
  result.tolerance = tolerance;
  return result;
}

std::vector<CheckResult> brute_suite(uint64_t max_n, uint32_t brute_cap,
                                     const FactorSieve& sieve) {
  std::vector<CheckResult> results;
  for (uint32_t n = 3; n <= brute_cap; ++n) {
    ClassCounts brute =
        class_counts(enumerate_classes(n, TupleConvention::kStrict,
                                       brute_cap));
    ClassCounts formula{isomorphism_class_count(n, sieve),
                        connected_class_count(n, sieve),
                        petersen_class_count(n, sieve)};
    uint64_t mismatches = (brute.total != formula.total) +
                          (brute.connected != formula.connected) +
                          (brute.gpg != formula.gpg);
    std::string detail;
    if (mismatches != 0) {
      std::ostringstream out;
      out << "formula (" << formula.total << "," << formula.connected << ","
          << formula.gpg << ") vs brute (" << brute.total << ","
          << brute.connected << "," << brute.gpg << ")";
      detail = out.str();
    }
    results.push_back(exact_check(
        "class_counts_formula_vs_enumeration(n=" + std::to_string(n) + ")",
        mismatches, std::move(detail)));
  }

  // Connectivity: BFS component count 1 exactly when gcd(n,j,k) = 1.
  uint64_t mismatches = 0;
  std::string first;
  for (uint64_t n = 3; n <= max_n; ++n) {
    for (uint64_t k = 1; k <= n / 2; ++k) {
      for (uint64_t j = 1; j <= k; ++j) {
        IGraphSpec spec = make_spec(n, j, k);
        bool by_gcd = is_connected_tuple(spec);
        bool by_bfs = connected_components(build_igraph(spec)) == 1;
        if (by_gcd != by_bfs) {
          ++mismatches;
          if (first.empty()) {
            first = "I(" + std::to_string(n) + "," + std::to_string(j) + "," +
                    std::to_string(k) + ")";
          }
        }
      }
    }
  }
  results.push_back(
      exact_check("connected_iff_gcd3_is_1(n<=" + std::to_string(max_n) + ")",
                  mismatches, std::move(first)));
  return results;
}

std::vector<CheckResult> roots_suite(uint64_t max_n, const FactorSieve& sieve) {
  uint64_t bad_r = 0;
  uint64_t bad_s = 0;
  std::string first_r;
  std::string first_s;
  for (uint64_t n = 1; n <= max_n; ++n) {
    if (sieve.sqrt_one_count(n) != sqrt_one_count_scan(n)) {
      ++bad_r;
      if (first_r.empty()) first_r = "n=" + std::to_string(n);
    }
    if (sieve.sqrt_minus_one_count(n) != sqrt_minus_one_count_scan(n)) {
      ++bad_s;
      if (first_s.empty()) first_s = "n=" + std::to_string(n);
    }
  }
  std::string bound = "(n<=" + std::to_string(max_n) + ")";
  return {
      exact_check("roots_of_x2=1_piecewise_vs_scan" + bound, bad_r,
                  std::move(first_r)),
      exact_check("roots_of_x2=-1_piecewise_vs_scan" + bound, bad_s,
                  std::move(first_s)),
  };
}

std::vector<CheckResult> sums_suite(uint64_t max_n, const FactorSieve& sieve) {
  std::vector<CheckResult> results;
  for (const SumCheck& check : asymptotic_sum_report(max_n, sieve)) {
    results.push_back(near_check(
        check.name + "_over_main_term(N=" + std::to_string(max_n) + ")",
        check.ratio, 1.0, 0.01));
  }

  // g_1(n) phi(n) = sum over units a of gcd(n, a-1)^2, exactly.
  uint64_t identity_max = std::min<uint64_t>(max_n, 2000);
  uint64_t mismatches = 0;
  std::string first;
  for (uint64_t n = 1; n <= identity_max; ++n) {
    uint64_t unit_sum = 0;
    for (uint64_t a = 1; a <= n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      uint64_t g = std::gcd(n, a - 1);  // a = 1 gives gcd(n, 0) = n
      unit_sum += g * g;
    }
    if (unit_sum != g_value(1, n, sieve) * sieve.euler_phi(n)) {
      ++mismatches;
      if (first.empty()) first = "n=" + std::to_string(n);
    }
  }
  results.push_back(exact_check(
      "g1_times_phi_equals_gcd_square_sum(n<=" + std::to_string(identity_max) +
          ")",
      mismatches, std::move(first)));
  return results;
}

std::vector<CheckResult> dirichlet_suite(uint64_t terms,
                                         const FactorSieve& sieve) {
  constexpr double kPi = std::numbers::pi;
  TruncationCheck g1 =
      dirichlet_truncation_check(DirichletSeries::kG1, 3.0, terms, sieve);
  TruncationCheck tau2 = dirichlet_truncation_check(
      DirichletSeries::kTauSquared, 2.0, terms, sieve);
  std::string suffix = "(terms=" + std::to_string(terms) + ")";
  return {
      near_check("sum_g1/n^3_vs_zeta3^2*zeta2/zeta6" + suffix, g1.lhs, g1.rhs,
                 1e-3),
      near_check("sum_tau^2/n^2_vs_zeta2^4/zeta4" + suffix, tau2.lhs, tau2.rhs,
                 1e-2),
      near_check("zeta2^2/zeta4", riemann_zeta(2.0) * riemann_zeta(2.0) /
                                      riemann_zeta(4.0),
                 2.5, 1e-12),
      near_check("945*zeta6", 945.0 * riemann_zeta(6.0), std::pow(kPi, 6),
                 1e-9),
      near_check("zeta2_accelerated_vs_pi^2/6", riemann_zeta(2.0),
                 kPi * kPi / 6.0, 1e-12),
  };
}

}  // namespace

std::vector<CheckResult> run_suite(VerifySuite suite, uint64_t max_n,
                                   uint32_t brute_cap,
                                   const FactorSieve& sieve) {
  switch (suite) {
    case VerifySuite::kBrute:
      return brute_suite(max_n, brute_cap, sieve);
    case VerifySuite::kRoots:
      return roots_suite(max_n, sieve);
    case VerifySuite::kSums:
      return sums_suite(max_n, sieve);
    case VerifySuite::kDirichlet:
      return dirichlet_suite(max_n, sieve);
  }
  throw std::invalid_argument("unknown verify suite");
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

}  // namespace igcensus
