#include "analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace igcensus {
namespace {

constexpr double kPi = std::numbers::pi;

// Accelerated alternating sum: approximates sum_{k>=0} (-1)^k a(k) with
// error ~ (3+sqrt 8)^-terms (Cohen-Rodriguez Villegas-Zagier scheme).
template <typename Fn>
double alternating_sum(Fn a, int terms) {
  double d = std::pow(3.0 + std::sqrt(8.0), terms);
  d = (d + 1.0 / d) / 2.0;
  double b = -1.0;
  double c = -d;
  double sum = 0.0;
  for (int k = 0; k < terms; ++k) {
    c = b - c;
    sum += c * a(k);
    b *= (k + terms) * (k - terms) / ((k + 0.5) * (k + 1.0));
  }
  return sum / d;
}

double to_double(uint128 value) { return static_cast<double>(value); }

}  // namespace

double riemann_zeta(double s) {
  if (!(s > 1.0)) {
    throw std::invalid_argument("riemann_zeta needs s > 1");
  }
  // zeta(s) = eta(s) / (1 - 2^(1-s)); 48 terms saturate double precision.
  double eta =
      alternating_sum([s](int k) { return std::pow(k + 1.0, -s); }, 48);
  return eta / (1.0 - std::pow(2.0, 1.0 - s));
}

Bracket mirsky_constant(uint64_t prime_limit) {
  constexpr uint64_t kMaxLimit = 100'000'000;
  if (prime_limit < 2 || prime_limit > kMaxLimit) {
    throw std::invalid_argument("mirsky_constant needs prime_limit in [2, 1e8]");
  }
  std::vector<bool> composite(prime_limit + 1, false);
  double product = 1.0;
  for (uint64_t p = 2; p <= prime_limit; ++p) {
    if (composite[p]) continue;
    for (uint64_t q = p * p; q <= prime_limit; q += p) composite[q] = true;
    product *= 1.0 - 2.0 / (static_cast<double>(p) * static_cast<double>(p));
  }
  // Missing factors multiply by exp(sum_{p > P} log(1 - 2/p^2)), which lies
  // in [exp(-3/P), 1].
  return {product * std::exp(-3.0 / static_cast<double>(prime_limit)),
          product};
}

std::vector<NamedConstant> ConstantSet::rows() const {
  return {
      {"mirsky_C", mirsky_c, "0.3226"},
      {"zeta2", zeta2, "1.6449"},
      {"zeta4", zeta4, "1.0823"},
      {"zeta6", zeta6, "1.0173"},
      {"tuple_petersen_target", target_tuple_petersen, "0.8932"},
      {"inv_zeta6", target_tuple_connected, "0.98295"},
      {"class_petersen_target", target_class_petersen, "0.55683"},
      {"class_connected_target", target_class_connected, "0.60793"},
      {"class_share_target", target_class_share, "0.91594"},
      {"class_growth_target", target_class_growth, "0.3125"},
      {"feller_tornier", feller_tornier, "0.6613"},
  };
}

ConstantSet density_targets(uint64_t prime_limit) {
  ConstantSet set;
  set.mirsky_c = mirsky_constant(prime_limit).midpoint();
  set.zeta2 = kPi * kPi / 6.0;
  set.zeta4 = std::pow(kPi, 4) / 90.0;
  set.zeta6 = std::pow(kPi, 6) / 945.0;
  set.target_tuple_petersen = 12.0 / (kPi * kPi) - set.mirsky_c;
  set.target_tuple_connected = 945.0 / std::pow(kPi, 6);
  set.target_class_petersen = 4.0 * (kPi * kPi - 3.0) / (5.0 * kPi * kPi);
  set.target_class_connected = 6.0 / (kPi * kPi);
  set.target_class_share = 2.0 * (kPi * kPi - 3.0) / 15.0;
  set.target_class_growth = 5.0 / 16.0;
  set.feller_tornier = (1.0 + set.mirsky_c) / 2.0;
  return set;
}

std::vector<SumCheck> asymptotic_sum_report(uint64_t max_n,
                                            const FactorSieve& sieve) {
  if (max_n < 3 || max_n > sieve.limit()) {
    throw std::out_of_range("asymptotic_sum_report needs 3 <= max_n <= limit");
  }
  uint128 phi_squared = 0;
  uint128 n_phi = 0;
  uint128 g1 = 0;
  uint128 psi = 0;
  uint128 phi = 0;
  for (uint64_t n = 1; n <= max_n; ++n) {
    uint64_t ph = sieve.euler_phi(n);
    phi_squared += uint128{ph} * ph;
    n_phi += uint128{n} * ph;
    g1 += g_value(1, n, sieve);
    psi += sieve.dedekind_psi(n);
    phi += ph;
  }

  double mirsky = mirsky_constant(1'000'000).midpoint();
  double n1 = static_cast<double>(max_n);
  double n2 = n1 * n1;
  double n3 = n2 * n1;
  auto check = [](std::string name, uint128 sum, double main_term) {
    double value = to_double(sum);
    return SumCheck{std::move(name), value, main_term, value / main_term};
  };
  return {
      check("sum_phi_squared", phi_squared, mirsky * n3 / 3.0),
      check("sum_n_phi", n_phi, 2.0 * n3 / (kPi * kPi)),
      check("sum_g1", g1, 5.0 * n2 / 4.0),
      check("sum_dedekind_psi", psi, 15.0 * n2 / (2.0 * kPi * kPi)),
      check("sum_phi", phi, 3.0 * n2 / (kPi * kPi)),
  };
}

TruncationCheck dirichlet_truncation_check(DirichletSeries series, double s,
                                           uint64_t terms,
                                           const FactorSieve& sieve) {
  if (terms < 1 || terms > sieve.limit()) {
    throw std::invalid_argument("terms must be in [1, sieve limit]");
  }
  double rhs = 0;
  switch (series) {
    case DirichletSeries::kG1:
      if (!(s > 2.0)) {
        throw std::invalid_argument("g_1 series converges only for s > 2");
      }
      rhs = riemann_zeta(s) * riemann_zeta(s) * riemann_zeta(s - 1.0) /
            riemann_zeta(2.0 * s);
      break;
    case DirichletSeries::kTauSquared:
      if (!(s > 1.0)) {
        throw std::invalid_argument("tau^2 series converges only for s > 1");
      }
      rhs = std::pow(riemann_zeta(s), 4) / riemann_zeta(2.0 * s);
      break;
  }

  // Smallest terms first so the floating sum loses as little as possible.
  double lhs = 0;
  for (uint64_t n = terms; n >= 1; --n) {
    uint64_t coefficient = series == DirichletSeries::kG1
                               ? g_value(1, n, sieve)
                               : sieve.tau(n) * sieve.tau(n);
    lhs += static_cast<double>(coefficient) /
           std::pow(static_cast<double>(n), s);
  }
  return {lhs, rhs, std::abs(lhs - rhs)};
}

DensityReport density_report(uint64_t max_n, const FactorSieve& sieve,
                             const ConstantSet& targets) {
  if (max_n < 3 || max_n > sieve.limit()) {
    throw std::out_of_range("density_report needs 3 <= max_n <= sieve limit");
  }
  TupleCounts tuples = tuple_counts_fast(max_n, sieve);
  PartialSums sums = partial_sums(max_n, sieve);

  DensityReport report;
  report.n = max_n;
  auto add = [&report](std::string name, double value, double target) {
    report.entries.push_back(
        {std::move(name), value, target, value - target});
  };
  double a = to_double(tuples.all);
  double ci = to_double(sums.classes);
  double n2 = static_cast<double>(max_n) * static_cast<double>(max_n);
  add("B/A", to_double(tuples.petersen) / a, targets.target_tuple_petersen);
  add("C/A", to_double(tuples.connected) / a, targets.target_tuple_connected);
  add("CP/CI", to_double(sums.petersen) / ci, targets.target_class_petersen);
  add("CIc/CI", to_double(sums.connected) / ci,
      targets.target_class_connected);
  add("CP/CIc", to_double(sums.petersen) / to_double(sums.connected),
      targets.target_class_share);
  add("CI/N^2", ci / n2, targets.target_class_growth);
  return report;
}

}  // namespace igcensus
