#ifndef PGSAS_BENCH_HPP
#define PGSAS_BENCH_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgsas/gsa.hpp"
#include "pgsas/strategy.hpp"
#include "pgsas/sut_model.hpp"

namespace pgsas {

/// Raised when a benchmark run produces an incomplete suite or blows its
/// time budget; the message names the run and seed.
class BenchmarkFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BenchmarkSpec {
    std::string name;
    std::string config_text;
    int expected_size = 0;  // published size this configuration is compared against
    int runs = 30;
    std::optional<gsa::Params> params_override;
    std::string group;          // "tableIII" or "tableIV"
    bool long_running = false;  // excluded from the quick suite
};

struct RunResult {
    std::uint64_t seed = 0;
    int size = 0;
    double seconds = 0.0;
    long long iterations = 0;
    /// Incremental accounting agreed with the brute-force verifier.
    bool accounting_ok = false;
};

struct BenchmarkRecord {
    BenchmarkSpec spec;
    std::vector<RunResult> runs;  // ordered by run index
    int best_size = 0;
    double mean_size = 0.0;
    double stddev_size = 0.0;
    long long bound = 0;  // covering-array lower bound
    double total_seconds = 0.0;
};

/// The built-in benchmark configurations: the fixed mixed-cardinality set
/// (SC1..SC11) and the two-valued family (P3..P15, P50), each carrying the
/// published best size for comparison.
std::vector<BenchmarkSpec> builtin_suites();

/// Subset selection: "quick" (all but long-running), "full", "tableIII",
/// "tableIV". Throws std::invalid_argument on unknown names.
std::vector<BenchmarkSpec> select_suite(const std::string& name);

/// Executes spec.runs seeded generations (seed_base, seed_base+1, ...) in
/// parallel across `jobs` workers, verifies every suite with the
/// brute-force oracle, and aggregates. Any incomplete suite or timed-out
/// run raises BenchmarkFailure.
BenchmarkRecord run_benchmark(const BenchmarkSpec& spec, const gsa::Params& base_params,
                              std::uint64_t seed_base, int jobs,
                              std::chrono::steady_clock::duration per_run_limit =
                                  std::chrono::minutes(10));

/// Sanity baseline: accepts any uniformly random case that covers at least
/// one uncovered tuple until none remain. Not a covering-array strategy,
/// just a floor to compare against.
TestSuite random_baseline(const SutConfig& config, std::uint64_t seed);

/// Aligned plain-text comparison table. Timing columns are replaced with
/// "-" when include_timing is false so output can be compared byte-wise.
std::string format_table(const std::vector<BenchmarkRecord>& records, bool include_timing);

} // namespace pgsas

#endif // PGSAS_BENCH_HPP
