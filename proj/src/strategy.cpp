#include "pgsas/strategy.hpp"

#include <cassert>

namespace pgsas {

TestCase progress_fallback(const TupleList& itl, std::mt19937_64& rng) {
    assert(!itl.empty());
    const SutConfig& config = itl.config();
    const InteractionTuple tuple = itl.first_uncovered();

    TestCase tc;
    tc.values.resize(static_cast<std::size_t>(config.parameter_count()));
    for (int d = 0; d < config.parameter_count(); ++d) {
        std::uniform_int_distribution<int> pick(0, config.cardinality(d) - 1);
        tc.values[static_cast<std::size_t>(d)] = pick(rng);
    }
    tc.values[static_cast<std::size_t>(tuple.first_param)] = tuple.first_value;
    tc.values[static_cast<std::size_t>(tuple.second_param)] = tuple.second_value;
    return tc;
}

StrategyReport generate_suite(const SutConfig& config, const gsa::Params& params,
                              std::uint64_t seed, const GenerateOptions& options) {
    params.validate();
    const auto started = std::chrono::steady_clock::now();

    StrategyReport report{TestSuite(config)};
    report.seed = seed;
    report.suite.metadata.seed = seed;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const auto rand01 = [&] { return u01(rng); };

    TupleList itl = generate_tuples(config);
    report.initial_tuple_count = itl.initial_count();

    std::vector<double> forces;
    while (!itl.empty()) {
        if (options.time_limit &&
            std::chrono::steady_clock::now() - started > *options.time_limit) {
            throw StrategyTimeout("suite generation for " + config.canonical_text() +
                                  " exceeded its time limit");
        }

        gsa::State state = gsa::init_population(config, params, rng);
        BestOfCycle tracker;
        // No candidate can cover more than one tuple per parameter pair, so
        // pairs that still hold an uncovered tuple bound the cycle's weight.
        const int weight_cap = itl.pairs_with_uncovered();
        int iterations_used = 0;

        for (int t = 0; t < params.max_iterations; ++t) {
            gsa::evaluate_population(state, [&](const TestCase& candidate) {
                const int weight = itl.weight_coverage(candidate);
                tracker.observe(candidate, weight);
                return weight;
            });
            ++iterations_used;
            if (options.trace) options.trace(state.iteration, state.best, state.worst, state.g);
            if (tracker.best_weight() >= weight_cap) break;
            // A population with best == worst skips every update, so later
            // iterations would replay the same evaluations forever.
            if (state.best == state.worst) break;

            gsa::compute_masses(state);
            gsa::compute_forces(state, params, rand01, forces);
            gsa::update_kinematics(state, forces, params, rand01);
        }

        report.total_iterations += iterations_used;
        report.resample_count += state.resample_count;

        CycleRecord record;
        record.iterations_used = iterations_used;
        TestCase accepted =
            tracker.best_weight() > 0 ? tracker.best() : progress_fallback(itl, rng);
        record.used_fallback = tracker.best_weight() <= 0;
        if (record.used_fallback) ++report.fallback_count;

        record.covered = itl.remove_covered(accepted);
        assert(record.covered >= 1);
        record.remaining_tuples = itl.uncovered_count();
        report.suite.cases.push_back(std::move(accepted));
        report.cycles.push_back(record);
    }

    report.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    report.suite.metadata.total_iterations = report.total_iterations;
    report.suite.metadata.duration_seconds = report.duration_seconds;
    return report;
}

} // namespace pgsas
