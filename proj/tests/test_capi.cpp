// Exercises the shared library strictly through its C header, the way an
// external binding would.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "igcensus.h"

namespace {

struct SieveFixture {
  igc_sieve* sieve = nullptr;
  SieveFixture() { REQUIRE(igc_sieve_create(1'000'000, &sieve) == IGC_OK); }
  ~SieveFixture() { igc_sieve_destroy(sieve); }
};

igc_sieve* shared_sieve() {
  static SieveFixture fixture;
  return fixture.sieve;
}

}  // namespace

TEST_CASE("version and status names are stable strings") {
  CHECK(std::string(igc_version()) == "0.1.0");
  CHECK(std::string(igc_status_name(IGC_OK)) == "IGC_OK");
  CHECK(std::string(igc_status_name(IGC_INVALID_ARGUMENT)) ==
        "IGC_INVALID_ARGUMENT");
  CHECK(std::string(igc_status_name(IGC_OUT_OF_RANGE)) == "IGC_OUT_OF_RANGE");
  CHECK(igc_status_name(static_cast<igc_status>(99)) != nullptr);
}

TEST_CASE("sieve lifecycle and argument guards") {
  igc_sieve* sieve = nullptr;
  CHECK(igc_sieve_create(1, &sieve) == IGC_INVALID_ARGUMENT);
  CHECK(sieve == nullptr);
  CHECK(igc_sieve_create(100, nullptr) == IGC_INVALID_ARGUMENT);

  REQUIRE(igc_sieve_create(100, &sieve) == IGC_OK);
  CHECK(igc_sieve_limit(sieve) == 100);

  uint64_t value = 0;
  CHECK(igc_euler_phi(sieve, 101, &value) == IGC_OUT_OF_RANGE);
  CHECK(igc_euler_phi(sieve, 0, &value) == IGC_OUT_OF_RANGE);
  CHECK(igc_euler_phi(nullptr, 10, &value) == IGC_INVALID_ARGUMENT);
  igc_sieve_destroy(sieve);
  igc_sieve_destroy(nullptr);  // must be a no-op
}

TEST_CASE("arithmetic functions through the C boundary") {
  igc_sieve* sieve = shared_sieve();
  uint64_t u = 0;
  int32_t i = 0;
  uint32_t w = 0;

  CHECK(igc_euler_phi(sieve, 10, &u) == IGC_OK);
  CHECK(u == 4);
  CHECK(igc_moebius(sieve, 30, &i) == IGC_OK);
  CHECK(i == -1);
  CHECK(igc_divisor_count(sieve, 360, &u) == IGC_OK);
  CHECK(u == 24);
  CHECK(igc_distinct_prime_count(sieve, 360, &w) == IGC_OK);
  CHECK(w == 3);
  CHECK(igc_jordan2(sieve, 10, &u) == IGC_OK);
  CHECK(u == 72);
  CHECK(igc_dedekind_psi(sieve, 12, &u) == IGC_OK);
  CHECK(u == 24);
  CHECK(igc_sqrt_one_count(sieve, 24, &u) == IGC_OK);
  CHECK(u == 8);
  CHECK(igc_sqrt_minus_one_count(sieve, 13, &u) == IGC_OK);
  CHECK(u == 2);
  CHECK(igc_sqrt_minus_one_count(sieve, 12, &u) == IGC_OK);
  CHECK(u == 0);

  CHECK(igc_g_value(sieve, 1, 12, &u) == IGC_OK);
  CHECK(u == 10 * 5);  // g_1(4) g_1(3)
  CHECK(igc_g_value(sieve, 5, 12, &u) == IGC_INVALID_ARGUMENT);
  CHECK(igc_g_value(sieve, 0, 12, &u) == IGC_INVALID_ARGUMENT);
}

TEST_CASE("tuple validity and classification") {
  int valid = -1;
  CHECK(igc_tuple_is_valid(6, 1, 3, IGC_CONVENTION_STRICT, &valid) == IGC_OK);
  CHECK(valid == 0);
  CHECK(igc_tuple_is_valid(6, 1, 3, IGC_CONVENTION_INCLUSIVE, &valid) ==
        IGC_OK);
  CHECK(valid == 1);
  CHECK(igc_tuple_is_valid(6, 1, 3, static_cast<igc_convention>(7), &valid) ==
        IGC_INVALID_ARGUMENT);
  CHECK(igc_tuple_is_valid(6, 1, 3, IGC_CONVENTION_STRICT, nullptr) ==
        IGC_INVALID_ARGUMENT);

  int gpg = -1, connected = -1;
  CHECK(igc_tuple_classify(6, 2, 2, &gpg, &connected) == IGC_OK);
  CHECK(gpg == 0);
  CHECK(connected == 0);
  CHECK(igc_tuple_classify(10, 1, 3, &gpg, &connected) == IGC_OK);
  CHECK(gpg == 1);
  CHECK(connected == 1);
  CHECK(igc_tuple_classify(6, 2, 3, nullptr, &connected) == IGC_OK);
  CHECK(connected == 1);
  CHECK(igc_tuple_classify(2, 1, 1, &gpg, &connected) ==
        IGC_INVALID_ARGUMENT);
}

TEST_CASE("graph handles: build, inspect, render, compare") {
  igc_graph* petersen = nullptr;
  REQUIRE(igc_graph_create(5, 1, 2, &petersen) == IGC_OK);
  uint32_t vertices = 0, components = 0;
  uint64_t edges = 0;
  CHECK(igc_graph_vertex_count(petersen, &vertices) == IGC_OK);
  CHECK(vertices == 10);
  CHECK(igc_graph_edge_count(petersen, &edges) == IGC_OK);
  CHECK(edges == 15);
  CHECK(igc_graph_components(petersen, &components) == IGC_OK);
  CHECK(components == 1);

  char* text = nullptr;
  REQUIRE(igc_graph_render(petersen, IGC_FORMAT_EDGELIST, &text) == IGC_OK);
  CHECK(std::strncmp(text, "0 1\n", 4) == 0);
  size_t lines = 0;
  for (const char* p = text; *p; ++p) lines += *p == '\n';
  CHECK(lines == 15);
  igc_text_free(text);

  REQUIRE(igc_graph_render(petersen, IGC_FORMAT_DOT, &text) == IGC_OK);
  CHECK(std::strncmp(text, "graph {", 7) == 0);
  CHECK(std::string(text).find("a0 -- b0;") != std::string::npos);
  igc_text_free(text);
  igc_text_free(nullptr);  // must be a no-op

  int iso = -1;
  CHECK(igc_graph_isomorphic(petersen, petersen, &iso) == IGC_OK);
  CHECK(iso == 1);
  igc_graph* prism = nullptr;
  REQUIRE(igc_graph_create(5, 1, 1, &prism) == IGC_OK);
  CHECK(igc_graph_isomorphic(petersen, prism, &iso) == IGC_OK);
  CHECK(iso == 0);
  igc_graph_destroy(prism);
  igc_graph_destroy(petersen);
  igc_graph_destroy(nullptr);

  igc_graph* bad = nullptr;
  CHECK(igc_graph_create(2, 1, 1, &bad) == IGC_INVALID_ARGUMENT);
  CHECK(bad == nullptr);
  CHECK(igc_graph_create(5, 1, 2, nullptr) == IGC_INVALID_ARGUMENT);

  // The antipodal tuple is accepted (inclusive convention).
  igc_graph* antipodal = nullptr;
  CHECK(igc_graph_create(6, 1, 3, &antipodal) == IGC_OK);
  igc_graph_destroy(antipodal);
}

TEST_CASE("closed-form class counts and brute enumeration agree") {
  igc_sieve* sieve = shared_sieve();
  uint64_t total = 0, connected = 0, petersen = 0;
  CHECK(igc_isomorphism_classes(sieve, 12, &total) == IGC_OK);
  CHECK(total == 11);
  CHECK(igc_connected_classes(sieve, 12, &connected) == IGC_OK);
  CHECK(connected == 7);
  CHECK(igc_petersen_classes(sieve, 12, &petersen) == IGC_OK);
  CHECK(petersen == 5);
  CHECK(igc_isomorphism_classes(sieve, 2, &total) == IGC_INVALID_ARGUMENT);

  igc_class_counts counts = {0, 0, 0};
  CHECK(igc_enumerate_classes(12, IGC_CONVENTION_STRICT, 16, &counts) ==
        IGC_OK);
  CHECK(counts.total == 11);
  CHECK(counts.connected == 7);
  CHECK(counts.gpg == 5);
  CHECK(igc_enumerate_classes(30, IGC_CONVENTION_STRICT, 16, &counts) ==
        IGC_INVALID_ARGUMENT);
}

TEST_CASE("census scan streams cumulative rows") {
  igc_sieve* sieve = shared_sieve();
  std::vector<igc_census_row> rows;
  auto collect = [](const igc_census_row* row, void* user) {
    static_cast<std::vector<igc_census_row>*>(user)->push_back(*row);
  };
  REQUIRE(igc_census_scan(sieve, 5, collect, &rows) == IGC_OK);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].n == 3);
  CHECK(rows[0].classes == 1);
  CHECK(rows[2].cum_classes == 4);
  CHECK(rows[2].cum_connected == 4);
  CHECK(rows[2].cum_petersen == 4);

  CHECK(igc_census_scan(sieve, igc_sieve_limit(sieve) + 1, collect, &rows) ==
        IGC_OUT_OF_RANGE);
  CHECK(igc_census_scan(sieve, 5, nullptr, &rows) == IGC_INVALID_ARGUMENT);
}

TEST_CASE("128-bit counters render and convert") {
  char buffer[40];
  CHECK(igc_count128_to_string({0, 0}, buffer, sizeof buffer) == IGC_OK);
  CHECK(std::string(buffer) == "0");
  CHECK(igc_count128_to_string({1, 0}, buffer, sizeof buffer) == IGC_OK);
  CHECK(std::string(buffer) == "18446744073709551616");
  CHECK(igc_count128_to_string({0, 7}, buffer, 39) == IGC_INVALID_ARGUMENT);
  CHECK(igc_count128_to_string({0, 7}, nullptr, 40) == IGC_INVALID_ARGUMENT);
  CHECK(igc_count128_to_double({0, 4}) == 4.0);
  CHECK(igc_count128_to_double({1, 0}) == 18446744073709551616.0);
}

TEST_CASE("tuple counts through the C API") {
  igc_sieve* sieve = shared_sieve();
  igc_tuple_counts fast;
  REQUIRE(igc_tuple_counts_fast(sieve, 1000, &fast) == IGC_OK);
  CHECK(fast.all.hi == 0);
  CHECK(fast.all.lo == 41791749);
  CHECK(fast.petersen.lo == 32886935);
  CHECK(fast.connected.lo == 34744670);

  igc_tuple_counts direct;
  REQUIRE(igc_tuple_counts_direct(300, &direct) == IGC_OK);
  igc_tuple_counts fast300;
  REQUIRE(igc_tuple_counts_fast(sieve, 300, &fast300) == IGC_OK);
  CHECK(direct.all.lo == fast300.all.lo);
  CHECK(direct.petersen.lo == fast300.petersen.lo);
  CHECK(direct.connected.lo == fast300.connected.lo);

  CHECK(igc_tuple_counts_direct(3001, &direct) == IGC_OUT_OF_RANGE);
  CHECK(igc_tuple_counts_fast(sieve, igc_sieve_limit(sieve) + 1, &fast) ==
        IGC_OUT_OF_RANGE);
}

TEST_CASE("class-count partial sums through the C API") {
  igc_sieve* sieve = shared_sieve();
  igc_partial_sums sums;
  REQUIRE(igc_partial_sums_upto(sieve, 1000, &sums) == IGC_OK);
  CHECK(sums.classes.lo == 314878);
  CHECK(sums.connected.lo == 191485);
  CHECK(sums.petersen.lo == 174765);
  CHECK(sums.classes.hi == 0);
}

TEST_CASE("zeta and the squarefree-pair product") {
  double value = 0;
  REQUIRE(igc_zeta(2.0, &value) == IGC_OK);
  CHECK(value == doctest::Approx(1.6449340668482264).epsilon(1e-13));
  CHECK(igc_zeta(1.0, &value) == IGC_INVALID_ARGUMENT);
  CHECK(igc_zeta(2.0, nullptr) == IGC_INVALID_ARGUMENT);

  igc_interval interval;
  REQUIRE(igc_mirsky_constant(100'000, &interval) == IGC_OK);
  CHECK(interval.lower <= interval.upper);
  CHECK(interval.lower > 0.3226);
  CHECK(interval.upper < 0.3227);
  CHECK(igc_mirsky_constant(1, &interval) == IGC_INVALID_ARGUMENT);
}

TEST_CASE("density targets and the six-ratio report") {
  std::vector<std::pair<std::string, double>> constants;
  auto collect_constant = [](const igc_constant* c, void* user) {
    static_cast<std::vector<std::pair<std::string, double>>*>(user)
        ->emplace_back(c->name, c->value);
  };
  REQUIRE(igc_density_targets(100'000, collect_constant, &constants) ==
          IGC_OK);
  CHECK(constants.size() == 11);
  CHECK(constants[0].first == "mirsky_C");

  struct Entry {
    std::string name;
    double value, target, residual;
  };
  std::vector<Entry> entries;
  auto collect_entry = [](const igc_density_entry* e, void* user) {
    static_cast<std::vector<Entry>*>(user)->push_back(
        {e->name, e->value, e->target, e->residual});
  };
  igc_sieve* sieve = shared_sieve();
  REQUIRE(igc_density_report(sieve, 1000, 100'000, collect_entry, &entries) ==
          IGC_OK);
  REQUIRE(entries.size() == 6);
  CHECK(entries[0].name == "B/A");
  CHECK(entries[5].name == "CI/N^2");

  // Cross-check CP/CI against the partial sums fetched independently.
  igc_partial_sums sums;
  REQUIRE(igc_partial_sums_upto(sieve, 1000, &sums) == IGC_OK);
  double expected =
      igc_count128_to_double(sums.petersen) /
      igc_count128_to_double(sums.classes);
  CHECK(entries[2].value == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("verification suites run through the C API") {
  igc_sieve* sieve = shared_sieve();
  int all_passed = -1;
  size_t checks = 0;
  auto count = [](const igc_check* check, void* user) {
    (void)check;
    ++*static_cast<size_t*>(user);
  };
  REQUIRE(igc_verify(sieve, IGC_SUITE_DIRICHLET, 100'000, 0, count, &checks,
                     &all_passed) == IGC_OK);
  CHECK(checks == 5);
  CHECK(all_passed == 1);

  CHECK(igc_verify(sieve, static_cast<igc_suite>(9), 100, 0, count, &checks,
                   &all_passed) == IGC_INVALID_ARGUMENT);
}
