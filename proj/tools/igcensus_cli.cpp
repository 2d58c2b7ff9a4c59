// Command-line front end for the igcensus shared library. Everything here
// goes through the public C API in igcensus.h; no core headers.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "igcensus.h"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitSuccess = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitValidation = 2;

constexpr uint64_t kDefaultSieveLimit = 1'000'000;
const char* kSieveLimitEnvVar = "IGCENSUS_SIEVE_LIMIT";

// Fixed 10-decimal rendering keeps csv/table output byte-deterministic.
std::string fixed10(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.10f", value);
  return buffer;
}

[[noreturn]] void fail_validation(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(kExitValidation);
}

void require_status(igc_status status, const std::string& what) {
  if (status != IGC_OK) {
    fail_validation(what + " failed: " + igc_status_name(status));
  }
}

// Owns the optional --out file; stream() is that file or stdout.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) fail_validation("cannot open output file " + path);
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct SieveHandle {
  explicit SieveHandle(uint64_t limit) {
    require_status(igc_sieve_create(limit, &sieve), "sieve construction");
  }
  ~SieveHandle() { igc_sieve_destroy(sieve); }
  SieveHandle(const SieveHandle&) = delete;
  SieveHandle& operator=(const SieveHandle&) = delete;

  igc_sieve* sieve = nullptr;
};

uint64_t default_sieve_limit() {
  const char* env = std::getenv(kSieveLimitEnvVar);
  if (env == nullptr || *env == '\0') return kDefaultSieveLimit;
  char* end = nullptr;
  unsigned long long parsed = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || parsed < 2) {
    fail_validation(std::string(kSieveLimitEnvVar) + " is not a valid limit: " +
                    env);
  }
  return parsed;
}

// Shared flag values; each subcommand registers the subset it needs.
struct Options {
  uint64_t max_n = 0;
  uint64_t sieve_limit = default_sieve_limit();
  std::string convention = "inclusive";
  std::string format = "table";
  std::string out_path;
  uint32_t brute_cap = 16;
};

void check_run_config(const Options& options, bool needs_max_n) {
  if (needs_max_n && options.max_n > options.sieve_limit) {
    fail_validation("--max-n " + std::to_string(options.max_n) +
                    " exceeds --sieve-limit " +
                    std::to_string(options.sieve_limit));
  }
  if (options.brute_cap > 20) {
    fail_validation("--brute-cap must be at most 20");
  }
}

// ------------------------------------------------------------------
// census

struct CensusSink {
  std::ostream* out;
  std::string format;
  ordered_json rows = ordered_json::array();
};

void emit_census_row(const igc_census_row* row, void* user) {
  auto* sink = static_cast<CensusSink*>(user);
  if (sink->format == "csv") {
    *sink->out << row->n << ',' << row->classes << ','
               << row->connected_classes << ',' << row->petersen_classes << ','
               << row->cum_classes << ',' << row->cum_connected << ','
               << row->cum_petersen << '\n';
  } else if (sink->format == "table") {
    char line[160];
    std::snprintf(line, sizeof(line),
                  "%8" PRIu64 " %10" PRIu64 " %10" PRIu64 " %10" PRIu64
                  " %14" PRIu64 " %14" PRIu64 " %14" PRIu64,
                  row->n, row->classes, row->connected_classes,
                  row->petersen_classes, row->cum_classes, row->cum_connected,
                  row->cum_petersen);
    *sink->out << line << '\n';
  } else {
    sink->rows.push_back({{"n", row->n},
                          {"classes", row->classes},
                          {"connected_classes", row->connected_classes},
                          {"petersen_classes", row->petersen_classes},
                          {"cum_classes", row->cum_classes},
                          {"cum_connected_classes", row->cum_connected},
                          {"cum_petersen_classes", row->cum_petersen}});
  }
}

int cmd_census(const Options& options) {
  check_run_config(options, true);
  if (options.max_n < 3) fail_validation("--max-n must be at least 3");
  SieveHandle sieve(options.sieve_limit);
  OutputTarget target(options.out_path);

  CensusSink sink{&target.stream(), options.format};
  if (options.format == "csv") {
    *sink.out << "n,classes,connected_classes,petersen_classes,"
                 "cum_classes,cum_connected_classes,cum_petersen_classes\n";
  } else if (options.format == "table") {
    *sink.out << "       n    classes  connected   petersen    cum_classes "
                 " cum_connected   cum_petersen\n";
  }
  require_status(igc_census_scan(sieve.sieve, options.max_n, emit_census_row,
                                 &sink),
                 "census scan");
  if (sink.format == "json") *sink.out << sink.rows.dump(2) << '\n';
  return kExitSuccess;
}

// ------------------------------------------------------------------
// density

std::vector<uint64_t> decade_cutoffs(uint64_t max_n) {
  std::vector<uint64_t> cutoffs;
  for (uint64_t n = 1000; n <= max_n; n *= 10) cutoffs.push_back(n);
  if (cutoffs.empty() || cutoffs.back() != max_n) cutoffs.push_back(max_n);
  return cutoffs;
}

struct DensitySink {
  std::ostream* out;
  std::string format;
  std::string mode;  // "tuples" keeps B/A, C/A; "classes" keeps the rest
  uint64_t n = 0;
  ordered_json rows = ordered_json::array();
};

void emit_density_entry(const igc_density_entry* entry, void* user) {
  auto* sink = static_cast<DensitySink*>(user);
  std::string name = entry->name;
  bool tuple_ratio = name == "B/A" || name == "C/A";
  if (tuple_ratio != (sink->mode == "tuples")) return;
  if (sink->format == "csv") {
    *sink->out << sink->n << ',' << name << ',' << fixed10(entry->value) << ','
               << fixed10(entry->target) << ',' << fixed10(entry->residual)
               << '\n';
  } else if (sink->format == "table") {
    char line[160];
    std::snprintf(line, sizeof(line), "%10" PRIu64 " %-8s %.10f %.10f %+.10f",
                  sink->n, name.c_str(), entry->value, entry->target,
                  entry->residual);
    *sink->out << line << '\n';
  } else {
    sink->rows.push_back({{"N", sink->n},
                          {"ratio_name", name},
                          {"value", entry->value},
                          {"target", entry->target},
                          {"residual", entry->residual}});
  }
}

int cmd_density(const Options& options, const std::string& mode) {
  check_run_config(options, true);
  if (options.max_n < 3) fail_validation("--max-n must be at least 3");
  SieveHandle sieve(options.sieve_limit);
  OutputTarget target(options.out_path);

  DensitySink sink{&target.stream(), options.format, mode};
  if (options.format == "csv") {
    *sink.out << "N,ratio_name,value,target,residual\n";
  } else if (options.format == "table") {
    *sink.out << "         N ratio    value        target       residual\n";
  }
  for (uint64_t cutoff : decade_cutoffs(options.max_n)) {
    sink.n = cutoff;
    require_status(igc_density_report(sieve.sieve, cutoff, 0,
                                      emit_density_entry, &sink),
                   "density report");
  }
  if (sink.format == "json") *sink.out << sink.rows.dump(2) << '\n';
  return kExitSuccess;
}

// ------------------------------------------------------------------
// verify

struct VerifySink {
  std::ostream* out;
  std::string format;
  ordered_json rows = ordered_json::array();
  uint64_t passed = 0;
  uint64_t total = 0;
};

void emit_check(const igc_check* check, void* user) {
  auto* sink = static_cast<VerifySink*>(user);
  ++sink->total;
  if (check->pass) ++sink->passed;
  if (sink->format == "csv") {
    *sink->out << (check->pass ? "pass" : "FAIL") << ',' << check->name << ','
               << fixed10(check->value) << ',' << fixed10(check->expected)
               << ',' << fixed10(check->tolerance) << ',' << check->detail
               << '\n';
  } else if (sink->format == "table") {
    *sink->out << (check->pass ? "pass  " : "FAIL  ") << check->name
               << "  value=" << fixed10(check->value)
               << " expected=" << fixed10(check->expected)
               << " tolerance=" << fixed10(check->tolerance);
    if (check->detail[0] != '\0') *sink->out << "  first=" << check->detail;
    *sink->out << '\n';
  } else {
    sink->rows.push_back({{"name", check->name},
                          {"pass", check->pass != 0},
                          {"value", check->value},
                          {"expected", check->expected},
                          {"tolerance", check->tolerance},
                          {"detail", check->detail}});
  }
}

uint64_t default_verify_range(const std::string& suite) {
  if (suite == "brute") return 200;     // connectivity sweep cutoff
  if (suite == "roots") return 10'000;  // scan range
  return 100'000;                       // sums / dirichlet cutoff
}

int cmd_verify(const Options& options, const std::string& suite,
               bool max_n_given) {
  Options effective = options;
  if (!max_n_given) effective.max_n = default_verify_range(suite);
  check_run_config(effective, true);

  igc_suite which = IGC_SUITE_BRUTE;
  if (suite == "roots") which = IGC_SUITE_ROOTS;
  if (suite == "sums") which = IGC_SUITE_SUMS;
  if (suite == "dirichlet") which = IGC_SUITE_DIRICHLET;

  SieveHandle sieve(effective.sieve_limit);
  OutputTarget target(effective.out_path);
  VerifySink sink{&target.stream(), effective.format};
  if (effective.format == "csv") {
    *sink.out << "result,name,value,expected,tolerance,detail\n";
  }
  int all_passed = 0;
  require_status(igc_verify(sieve.sieve, which, effective.max_n,
                            effective.brute_cap, emit_check, &sink,
                            &all_passed),
                 "verify suite");
  if (sink.format == "json") *sink.out << sink.rows.dump(2) << '\n';

  std::cerr << "suite " << suite << ": " << sink.passed << "/" << sink.total
            << " checks passed\n";
  return all_passed ? kExitSuccess : kExitCheckFailed;
}

// ------------------------------------------------------------------
// graph

int cmd_graph(const Options& options, uint64_t n, uint64_t j, uint64_t k,
              const std::string& export_format) {
  igc_convention convention = options.convention == "strict"
                                  ? IGC_CONVENTION_STRICT
                                  : IGC_CONVENTION_INCLUSIVE;
  int valid = 0;
  require_status(igc_tuple_is_valid(n, j, k, convention, &valid),
                 "tuple validation");
  if (!valid) {
    fail_validation("invalid tuple (" + std::to_string(n) + "," +
                    std::to_string(j) + "," + std::to_string(k) +
                    ") under the " + options.convention + " convention");
  }

  igc_graph* graph = nullptr;
  require_status(igc_graph_create(n, j, k, &graph), "graph construction");
  char* text = nullptr;
  igc_status status = igc_graph_render(graph,
                                       export_format == "dot"
                                           ? IGC_FORMAT_DOT
                                           : IGC_FORMAT_EDGELIST,
                                       &text);
  int is_gpg = 0;
  int is_connected = 0;
  if (status == IGC_OK) {
    status = igc_tuple_classify(n, j, k, &is_gpg, &is_connected);
  }
  if (status != IGC_OK) {
    igc_text_free(text);
    igc_graph_destroy(graph);
    fail_validation(std::string("graph rendering failed: ") +
                    igc_status_name(status));
  }

  {
    OutputTarget target(options.out_path);
    target.stream() << text;
  }
  // Classification goes to the error stream so stdout stays pure edge data.
  std::cerr << "gpg=" << (is_gpg ? "true" : "false")
            << " connected=" << (is_connected ? "true" : "false") << "\n";

  igc_text_free(text);
  igc_graph_destroy(graph);
  return kExitSuccess;
}

// ------------------------------------------------------------------
// constants

struct ConstantSink {
  std::ostream* out;
  std::string format;
  ordered_json rows = ordered_json::array();
};

void emit_constant(const igc_constant* constant, void* user) {
  auto* sink = static_cast<ConstantSink*>(user);
  if (sink->format == "csv") {
    *sink->out << constant->name << ',' << fixed10(constant->value) << ','
               << constant->printed << '\n';
  } else if (sink->format == "table") {
    char line[160];
    std::snprintf(line, sizeof(line), "%-24s %.10f  (quoted as %s)",
                  constant->name, constant->value, constant->printed);
    *sink->out << line << '\n';
  } else {
    sink->rows.push_back({{"name", constant->name},
                          {"value", constant->value},
                          {"printed", constant->printed}});
  }
}

int cmd_constants(const Options& options) {
  OutputTarget target(options.out_path);
  ConstantSink sink{&target.stream(), options.format};
  if (options.format == "csv") *sink.out << "name,value,printed\n";
  require_status(igc_density_targets(0, emit_constant, &sink), "constants");
  if (sink.format == "json") *sink.out << sink.rows.dump(2) << '\n';
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"I-graph and generalised Petersen graph census tool"};
  app.require_subcommand(1);

  Options options;
  std::string density_mode;
  std::string verify_suite;
  std::string graph_export = "edgelist";
  uint64_t graph_n = 0;
  uint64_t graph_j = 0;
  uint64_t graph_k = 0;

  auto add_common = [&options](CLI::App* cmd, bool with_max_n) {
    cmd->add_option("--sieve-limit", options.sieve_limit,
                    "Smallest-prime-factor sieve size (env " +
                        std::string(kSieveLimitEnvVar) + " overrides this "
                        "default)")
        ->capture_default_str();
    cmd->add_option("--format", options.format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "table"}))
        ->capture_default_str();
    cmd->add_option("--out", options.out_path, "Write output to a file");
    if (with_max_n) {
      cmd->add_option("--max-n", options.max_n, "Largest n in the scan");
    }
    return cmd;
  };

  CLI::App* census =
      add_common(app.add_subcommand("census",
                                    "Per-n class counts with running sums"),
                 true);
  census->get_option("--max-n")->required();

  CLI::App* density = add_common(
      app.add_subcommand("density", "Measured ratios vs their quoted limits"),
      true);
  density->add_option("mode", density_mode, "tuples: B/A, C/A; classes: "
                                            "CP/CI, CIc/CI, CP/CIc, CI/N^2")
      ->check(CLI::IsMember({"tuples", "classes"}))
      ->required();
  density->get_option("--max-n")->required();

  CLI::App* verify = add_common(
      app.add_subcommand("verify", "Internal consistency suites"), true);
  verify->add_option("suite", verify_suite, "Which suite to run")
      ->check(CLI::IsMember({"brute", "roots", "sums", "dirichlet"}))
      ->required();
  verify->add_option("--brute-cap", options.brute_cap,
                     "Largest n for exhaustive class enumeration (<= 20)")
      ->capture_default_str();

  CLI::App* graph = app.add_subcommand("graph", "Emit one I(n,j,k) graph");
  graph->add_option("n", graph_n)->required();
  graph->add_option("j", graph_j)->required();
  graph->add_option("k", graph_k)->required();
  graph->add_option("--convention", options.convention,
                    "Tuple domain: strict (k < n/2) or inclusive (k <= n/2)")
      ->check(CLI::IsMember({"strict", "inclusive"}))
      ->capture_default_str();
  graph->add_option("--export", graph_export, "Graph text format")
      ->check(CLI::IsMember({"edgelist", "dot"}))
      ->capture_default_str();
  graph->add_option("--out", options.out_path, "Write output to a file");

  CLI::App* constants = app.add_subcommand(
      "constants", "Analytic constants behind the density targets");
  constants->add_option("--format", options.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "table"}))
      ->capture_default_str();
  constants->add_option("--out", options.out_path, "Write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  if (census->parsed()) return cmd_census(options);
  if (density->parsed()) return cmd_density(options, density_mode);
  if (verify->parsed()) {
    bool max_n_given = verify->get_option("--max-n")->count() > 0;
    return cmd_verify(options, verify_suite, max_n_given);
  }
  if (graph->parsed()) {
    return cmd_graph(options, graph_n, graph_j, graph_k, graph_export);
  }
  if (constants->parsed()) return cmd_constants(options);
  return kExitValidation;
}
