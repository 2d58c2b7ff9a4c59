#include "igcensus.h"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "analytic.hpp"
#include "census.hpp"
#include "igraph.hpp"
#include "isomorphism.hpp"
#include "numtheory.hpp"
#include "verify.hpp"

namespace ig = igcensus;

struct igc_sieve {
  explicit igc_sieve(uint64_t limit) : impl(limit) {}
  ig::FactorSieve impl;
};

struct igc_graph {
  explicit igc_graph(ig::Graph g) : impl(std::move(g)) {}
  ig::Graph impl;
};

namespace {

constexpr uint64_t kDefaultPrimeLimit = 10'000'000;

// Exceptions stop at the language boundary and become status codes.
template <typename Fn>
igc_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return IGC_OK;
  } catch (const std::invalid_argument&) {
    return IGC_INVALID_ARGUMENT;
  } catch (const std::out_of_range&) {
    return IGC_OUT_OF_RANGE;
  } catch (const std::bad_alloc&) {
    return IGC_NO_MEMORY;
  } catch (...) {
    return IGC_INTERNAL;
  }
}

igc_count128 pack(ig::uint128 value) {
  return {static_cast<uint64_t>(value >> 64), static_cast<uint64_t>(value)};
}

ig::uint128 unpack(igc_count128 value) {
  return (static_cast<ig::uint128>(value.hi) << 64) | value.lo;
}

igc_status to_convention(igc_convention in, ig::TupleConvention* out) {
  switch (in) {
    case IGC_CONVENTION_STRICT:
      *out = ig::TupleConvention::kStrict;
      return IGC_OK;
    case IGC_CONVENTION_INCLUSIVE:
      *out = ig::TupleConvention::kInclusive;
      return IGC_OK;
  }
  return IGC_INVALID_ARGUMENT;
}

template <typename Fn>
igc_status sieve_query(const igc_sieve* sieve, const void* out, Fn&& fn) {
  if (sieve == nullptr || out == nullptr) return IGC_INVALID_ARGUMENT;
  return guarded(fn);
}

}  // namespace

extern "C" {

const char* igc_status_name(igc_status status) {
  switch (status) {
    case IGC_OK:
      return "IGC_OK";
    case IGC_INVALID_ARGUMENT:
      return "IGC_INVALID_ARGUMENT";
    case IGC_OUT_OF_RANGE:
      return "IGC_OUT_OF_RANGE";
    case IGC_NO_MEMORY:
      return "IGC_NO_MEMORY";
    case IGC_INTERNAL:
      return "IGC_INTERNAL";
  }
  return "IGC_UNKNOWN";
}

const char* igc_version(void) { return "0.1.0"; }

igc_status igc_sieve_create(uint64_t limit, igc_sieve** out) {
  if (out == nullptr) return IGC_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] { *out = new igc_sieve(limit); });
}

void igc_sieve_destroy(igc_sieve* sieve) { delete sieve; }

uint64_t igc_sieve_limit(const igc_sieve* sieve) {
  return sieve == nullptr ? 0 : sieve->impl.limit();
}

igc_status igc_euler_phi(const igc_sieve* sieve, uint64_t n, uint64_t* out) {
  return sieve_query(sieve, out, [&] { *out = sieve->impl.euler_phi(n); });
}

igc_status igc_moebius(const igc_sieve* sieve, uint64_t n, int32_t* out) {
  return sieve_query(sieve, out,
                     [&] { *out = static_cast<int32_t>(sieve->impl.moebius(n)); });
}

igc_status igc_divisor_count(const igc_sieve* sieve, uint64_t n,
                             uint64_t* out) {
  return sieve_query(sieve, out, [&] { *out = sieve->impl.tau(n); });
}

igc_status igc_distinct_prime_count(const igc_sieve* sieve, uint64_t n,
                                    uint32_t* out) {
  return sieve_query(sieve, out, [&] { *out = sieve->impl.omega(n); });
}

igc_status igc_jordan2(const igc_sieve* sieve, uint64_t n, uint64_t* out) {
  return sieve_query(sieve, out, [&] { *out = sieve->impl.jordan2(n); });
}

igc_status igc_dedekind_psi(const igc_sieve* sieve, uint64_t n,
                            uint64_t* out) {
  return sieve_query(sieve, out, [&] { *out = sieve->impl.dedekind_psi(n); });
}

igc_status igc_sqrt_one_count(const igc_sieve* sieve, uint64_t n,
                              uint64_t* out) {
  return sieve_query(sieve, out,
                     [&] { *out = sieve->impl.sqrt_one_count(n); });
}

igc_status igc_sqrt_minus_one_count(const igc_sieve* sieve, uint64_t n,
                                    uint64_t* out) {
  return sieve_query(sieve, out,
                     [&] { *out = sieve->impl.sqrt_minus_one_count(n); });
}

igc_status igc_g_value(const igc_sieve* sieve, uint32_t index, uint64_t n,
                       uint64_t* out) {
  return sieve_query(sieve, out,
                     [&] { *out = ig::g_value(index, n, sieve->impl); });
}

igc_status igc_tuple_is_valid(uint64_t n, uint64_t j, uint64_t k,
                              igc_convention convention, int* out) {
  if (out == nullptr) return IGC_INVALID_ARGUMENT;
  ig::TupleConvention conv;
  igc_status status = to_convention(convention, &conv);
  if (status != IGC_OK) return status;
  *out = ig::is_valid_tuple(n, j, k, conv) ? 1 : 0;
  return IGC_OK;
}

igc_status igc_tuple_classify(uint64_t n, uint64_t j, uint64_t k, int* is_gpg,
                              int* is_connected) {
  return guarded([&] {
    ig::IGraphSpec spec = ig::make_spec(n, j, k);
    if (is_gpg != nullptr) *is_gpg = ig::is_gpg_tuple(spec) ? 1 : 0;
    if (is_connected != nullptr) {
      *is_connected = ig::is_connected_tuple(spec) ? 1 : 0;
    }
  });
}

igc_status igc_graph_create(uint64_t n, uint64_t j, uint64_t k,
                            igc_graph** out) {
  if (out == nullptr) return IGC_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded(
      [&] { *out = new igc_graph(ig::build_igraph(ig::make_spec(n, j, k))); });
}

void igc_graph_destroy(igc_graph* graph) { delete graph; }

igc_status igc_graph_vertex_count(const igc_graph* graph, uint32_t* out) {
  if (graph == nullptr || out == nullptr) return IGC_INVALID_ARGUMENT;
  *out = graph->impl.vertex_count();
  return IGC_OK;
}

igc_status igc_graph_edge_count(const igc_graph* graph, uint64_t* out) {
  if (graph == nullptr || out == nullptr) return IGC_INVALID_ARGUMENT;
  *out = graph->impl.edge_count();
  return IGC_OK;
}

igc_status igc_graph_components(const igc_graph* graph, uint32_t* out) {
  if (graph == nullptr || out == nullptr) return IGC_INVALID_ARGUMENT;
  return guarded([&] { *out = ig::connected_components(graph->impl); });
}

igc_status igc_graph_render(const igc_graph* graph, igc_graph_format format,
                            char** out) {
  if (graph == nullptr || out == nullptr) return IGC_INVALID_ARGUMENT;
  if (format != IGC_FORMAT_EDGELIST && format != IGC_FORMAT_DOT) {
    return IGC_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] {
    std::string text = ig::export_graph(
        graph->impl, format == IGC_FORMAT_EDGELIST
                         ? ig::ExportFormat::kEdgeList
                         : ig::ExportFormat::kDot);
    char* buffer = new char[text.size() + 1];
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    *out = buffer;
  });
}

void igc_text_free(char* text) { delete[] text; }

igc_status igc_graph_isomorphic(const igc_graph* a, const igc_graph* b,
                                int* out) {
  if (a == nullptr || b == nullptr || out == nullptr) {
    return IGC_INVALID_ARGUMENT;
  }
  return guarded(
      [&] { *out = ig::are_isomorphic(a->impl, b->impl) ? 1 : 0; });
}

igc_status igc_isomorphism_classes(const igc_sieve* sieve, uint64_t n,
                                   uint64_t* out) {
  return sieve_query(sieve, out,
                     [&] { *out = ig::isomorphism_class_count(n, sieve->impl); });
}

igc_status igc_connected_classes(const igc_sieve* sieve, uint64_t n,
                                 uint64_t* out) {
  return sieve_query(sieve, out,
                     [&] { *out = ig::connected_class_count(n, sieve->impl); });
}

igc_status igc_petersen_classes(const igc_sieve* sieve, uint64_t n,
                                uint64_t* out) {
  return sieve_query(sieve, out,
                     [&] { *out = ig::petersen_class_count(n, sieve->impl); });
}

igc_status igc_enumerate_classes(uint64_t n, igc_convention convention,
                                 uint32_t brute_cap, igc_class_counts* out) {
  if (out == nullptr) return IGC_INVALID_ARGUMENT;
  ig::TupleConvention conv;
  igc_status status = to_convention(convention, &conv);
  if (status != IGC_OK) return status;
  return guarded([&] {
    if (n > UINT32_MAX) throw std::invalid_argument("n out of range");
    ig::ClassCounts counts = ig::class_counts(
        ig::enumerate_classes(static_cast<uint32_t>(n), conv, brute_cap));
    *out = {counts.total, counts.connected, counts.gpg};
  });
}

igc_status igc_census_scan(const igc_sieve* sieve, uint64_t max_n,
                           igc_census_callback callback, void* user) {
  if (sieve == nullptr || callback == nullptr) return IGC_INVALID_ARGUMENT;
  return guarded([&] {
    if (max_n > sieve->impl.limit()) {
      throw std::out_of_range("max_n above sieve limit");
    }
    ig::census_scan(max_n, sieve->impl, [&](const ig::CensusRecord& r) {
      igc_census_row row{r.n,           r.classes,      r.connected_classes,
                         r.petersen_classes, r.cum_classes, r.cum_connected,
                         r.cum_petersen};
      callback(&row, user);
    });
  });
}

igc_status igc_count128_to_string(igc_count128 value, char* buffer,
                                  size_t buffer_size) {
  if (buffer == nullptr || buffer_size < 40) return IGC_INVALID_ARGUMENT;
  std::string text = ig::u128_to_string(unpack(value));
  std::memcpy(buffer, text.c_str(), text.size() + 1);
  return IGC_OK;
}

double igc_count128_to_double(igc_count128 value) {
  return static_cast<double>(unpack(value));
}

igc_status igc_tuple_counts_fast(const igc_sieve* sieve, uint64_t max_n,
                                 igc_tuple_counts* out) {
  return sieve_query(sieve, out, [&] {
    ig::TupleCounts counts = ig::tuple_counts_fast(max_n, sieve->impl);
    *out = {pack(counts.all), pack(counts.petersen), pack(counts.connected)};
  });
}

igc_status igc_tuple_counts_direct(uint64_t max_n, igc_tuple_counts* out) {
  if (out == nullptr) return IGC_INVALID_ARGUMENT;
  return guarded([&] {
    ig::TupleCounts counts = ig::tuple_counts_direct(max_n);
    *out = {pack(counts.all), pack(counts.petersen), pack(counts.connected)};
  });
}

igc_status igc_partial_sums_upto(const igc_sieve* sieve, uint64_t max_n,
                                 igc_partial_sums* out) {
  return sieve_query(sieve, out, [&] {
    if (max_n > sieve->impl.limit()) {
      throw std::out_of_range("max_n above sieve limit");
    }
    ig::PartialSums sums = ig::partial_sums(max_n, sieve->impl);
    *out = {pack(sums.classes), pack(sums.connected), pack(sums.petersen)};
  });
}

igc_status igc_zeta(double s, double* out) {
  if (out == nullptr) return IGC_INVALID_ARGUMENT;
  return guarded([&] { *out = ig::riemann_zeta(s); });
}

igc_status igc_mirsky_constant(uint64_t prime_limit, igc_interval* out) {
  if (out == nullptr) return IGC_INVALID_ARGUMENT;
  return guarded([&] {
    ig::Bracket bracket = ig::mirsky_constant(prime_limit);
    *out = {bracket.lower, bracket.upper};
  });
}

igc_status igc_density_targets(uint64_t prime_limit,
                               igc_constant_callback callback, void* user) {
  if (callback == nullptr) return IGC_INVALID_ARGUMENT;
  return guarded([&] {
    ig::ConstantSet set =
        ig::density_targets(prime_limit == 0 ? kDefaultPrimeLimit : prime_limit);
    for (const ig::NamedConstant& row : set.rows()) {
      igc_constant constant{row.name.c_str(), row.value, row.printed.c_str()};
      callback(&constant, user);
    }
  });
}

igc_status igc_density_report(const igc_sieve* sieve, uint64_t max_n,
                              uint64_t prime_limit,
                              igc_density_callback callback, void* user) {
  if (sieve == nullptr || callback == nullptr) return IGC_INVALID_ARGUMENT;
  return guarded([&] {
    ig::ConstantSet targets =
        ig::density_targets(prime_limit == 0 ? kDefaultPrimeLimit : prime_limit);
    ig::DensityReport report =
        ig::density_report(max_n, sieve->impl, targets);
    for (const ig::DensityEntry& entry : report.entries) {
      igc_density_entry row{entry.name.c_str(), entry.value, entry.target,
                            entry.residual};
      callback(&row, user);
    }
  });
}

igc_status igc_verify(const igc_sieve* sieve, igc_suite suite, uint64_t max_n,
                      uint32_t brute_cap, igc_check_callback callback,
                      void* user, int* all_passed) {
  if (sieve == nullptr || callback == nullptr) return IGC_INVALID_ARGUMENT;
  ig::VerifySuite which;
  switch (suite) {
    case IGC_SUITE_BRUTE:
      which = ig::VerifySuite::kBrute;
      break;
    case IGC_SUITE_ROOTS:
      which = ig::VerifySuite::kRoots;
      break;
    case IGC_SUITE_SUMS:
      which = ig::VerifySuite::kSums;
      break;
    case IGC_SUITE_DIRICHLET:
      which = ig::VerifySuite::kDirichlet;
      break;
    default:
      return IGC_INVALID_ARGUMENT;
  }
  return guarded([&] {
    std::vector<ig::CheckResult> results =
        ig::run_suite(which, max_n, brute_cap, sieve->impl);
    for (const ig::CheckResult& r : results) {
      igc_check check{r.name.c_str(), r.pass ? 1 : 0, r.value,
                      r.expected,     r.tolerance,    r.detail.c_str()};
      callback(&check, user);
    }
    if (all_passed != nullptr) *all_passed = ig::all_passed(results) ? 1 : 0;
  });
}

}  // extern "C"
