#ifndef PGSAS_STRATEGY_HPP
#define PGSAS_STRATEGY_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "pgsas/gsa.hpp"
#include "pgsas/sut_model.hpp"
#include "pgsas/tuple_store.hpp"

namespace pgsas {

/// Raised when a generation run exceeds its wall-clock budget.
class StrategyTimeout : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bookkeeping for one accepted test case.
struct CycleRecord {
    int iterations_used = 0;
    int covered = 0;                   // tuples newly covered by this case
    std::size_t remaining_tuples = 0;  // uncovered tuples after acceptance
    bool used_fallback = false;
};

struct StrategyReport {
    TestSuite suite;
    std::vector<CycleRecord> cycles;
    std::size_t initial_tuple_count = 0;
    long long total_iterations = 0;
    std::uint64_t seed = 0;
    double duration_seconds = 0.0;
    int fallback_count = 0;
    int resample_count = 0;
};

struct GenerateOptions {
    /// Per-iteration convergence sink: (iteration, best, worst, g).
    std::function<void(int, int, int, double)> trace;
    /// Abort with StrategyTimeout once exceeded (checked between cycles).
    std::optional<std::chrono::steady_clock::duration> time_limit;
};

/// Tracks the best candidate seen over one search cycle: maximum weight,
/// ties broken by earliest observation.
class BestOfCycle {
public:
    void observe(const TestCase& candidate, int weight) {
        if (weight > best_weight_) {
            best_weight_ = weight;
            best_ = candidate;
        }
    }
    bool has_candidate() const { return best_weight_ >= 0; }
    int best_weight() const { return best_weight_; }
    const TestCase& best() const { return best_; }

private:
    TestCase best_;
    int best_weight_ = -1;
};

/// Builds a test case guaranteed to cover at least one uncovered tuple:
/// fixes the first uncovered tuple's two assignments and fills the other
/// parameters uniformly at random. Precondition: the list is not empty.
TestCase progress_fallback(const TupleList& itl, std::mt19937_64& rng);

/// Runs the one-test-at-a-time loop: per cycle, reset the population, search
/// up to T iterations for the candidate covering the most uncovered tuples,
/// accept it, shrink the tuple list; stops when the list is empty. Fully
/// deterministic for a given (config, params, seed).
StrategyReport generate_suite(const SutConfig& config, const gsa::Params& params,
                              std::uint64_t seed, const GenerateOptions& options = {});

} // namespace pgsas

#endif // PGSAS_STRATEGY_HPP
