#include "pgsas/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "pgsas/tuple_store.hpp"
#include "pgsas/verifier.hpp"

namespace pgsas {

std::vector<BenchmarkSpec> builtin_suites() {
    std::vector<BenchmarkSpec> specs;
    const auto fixed = [&](std::string name, std::string config, int expected) {
        specs.push_back({std::move(name), std::move(config), expected, 30, {}, "tableIII", false});
    };
    fixed("SC1", "2^7", 6);
    fixed("SC2", "3^7", 15);
    fixed("SC3", "4^7", 26);
    fixed("SC4", "3^3", 9);
    fixed("SC5", "3^4", 9);
    fixed("SC6", "3^5", 11);
    fixed("SC7", "2^10", 8);
    fixed("SC8", "3^10", 17);
    fixed("SC9", "3^13", 20);
    fixed("SC10", "4^10", 31);
    fixed("SC11", "5^10", 48);

    const int family_sizes[] = {4, 5, 6, 6, 6, 6, 8, 8, 8, 8, 8, 9, 9};
    for (int p = 3; p <= 15; ++p) {
        specs.push_back({"P" + std::to_string(p), "2^" + std::to_string(p), family_sizes[p - 3],
                         30, {}, "tableIV", false});
    }
    specs.push_back({"P50", "2^50", 13, 30, {}, "tableIV", true});
    return specs;
}

std::vector<BenchmarkSpec> select_suite(const std::string& name) {
    std::vector<BenchmarkSpec> all = builtin_suites();
    std::vector<BenchmarkSpec> out;
    for (const auto& spec : all) {
        const bool keep = (name == "full") || (name == "quick" && !spec.long_running) ||
                          (name == spec.group);
        if (keep) out.push_back(spec);
    }
    if (out.empty()) {
        throw std::invalid_argument("unknown benchmark suite '" + name +
                                    "' (expected quick, full, tableIII or tableIV)");
    }
    return out;
}

BenchmarkRecord run_benchmark(const BenchmarkSpec& spec, const gsa::Params& base_params,
                              std::uint64_t seed_base, int jobs,
                              std::chrono::steady_clock::duration per_run_limit) {
    if (spec.runs < 1) throw std::invalid_argument("benchmark needs at least one run");
    const SutConfig config = parse_config(spec.config_text);
    const gsa::Params params = spec.params_override.value_or(base_params);
    const std::size_t expected_tuples = generate_tuples(config).initial_count();

    BenchmarkRecord record;
    record.spec = spec;
    record.bound = lower_bound(config);
    record.runs.resize(static_cast<std::size_t>(spec.runs));

    std::atomic<int> next{0};
    std::mutex failure_mutex;
    std::exception_ptr failure;
    const auto worker = [&] {
        for (;;) {
            const int k = next.fetch_add(1);
            if (k >= spec.runs) return;
            const std::uint64_t seed = seed_base + static_cast<std::uint64_t>(k);
            try {
                GenerateOptions options;
                options.time_limit = per_run_limit;
                const StrategyReport report = generate_suite(config, params, seed, options);

                const CoverageReport coverage = verify_coverage(report.suite, config);
                if (!coverage.complete) {
                    throw BenchmarkFailure(spec.name + " run " + std::to_string(k) + " (seed " +
                                           std::to_string(seed) + ") left " +
                                           std::to_string(coverage.missing.size()) +
                                           " tuples uncovered");
                }
                long long covered_sum = 0;
                for (const auto& cycle : report.cycles) covered_sum += cycle.covered;
                const bool accounting_ok =
                    coverage.covered == expected_tuples &&
                    report.initial_tuple_count == expected_tuples &&
                    covered_sum == static_cast<long long>(expected_tuples);

                record.runs[static_cast<std::size_t>(k)] = {
                    seed, static_cast<int>(report.suite.size()), report.duration_seconds,
                    report.total_iterations, accounting_ok};
            } catch (const StrategyTimeout& e) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::make_exception_ptr(BenchmarkFailure(
                        spec.name + " run " + std::to_string(k) + " (seed " +
                        std::to_string(seed) + "): " + e.what()));
                }
                return;
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    const int workers = std::clamp(jobs, 1, spec.runs);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    record.best_size = record.runs.front().size;
    double sum = 0.0;
    for (const auto& run : record.runs) {
        record.best_size = std::min(record.best_size, run.size);
        sum += run.size;
        record.total_seconds += run.seconds;
    }
    record.mean_size = sum / static_cast<double>(spec.runs);
    if (spec.runs > 1) {
        double sq = 0.0;
        for (const auto& run : record.runs) {
            const double d = run.size - record.mean_size;
            sq += d * d;
        }
        record.stddev_size = std::sqrt(sq / static_cast<double>(spec.runs - 1));
    }
    return record;
}

TestSuite random_baseline(const SutConfig& config, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    TupleList itl = generate_tuples(config);
    TestSuite suite(config);
    suite.metadata.seed = seed;

    TestCase candidate;
    candidate.values.resize(static_cast<std::size_t>(config.parameter_count()));
    while (!itl.empty()) {
        for (int d = 0; d < config.parameter_count(); ++d) {
            std::uniform_int_distribution<int> pick(0, config.cardinality(d) - 1);
            candidate.values[static_cast<std::size_t>(d)] = pick(rng);
        }
        if (itl.remove_covered(candidate) > 0) {
            suite.cases.push_back(candidate);
        }
    }
    return suite;
}

std::string format_table(const std::vector<BenchmarkRecord>& records, bool include_timing) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"name", "config", "published", "best", "mean", "stddev", "bound", "runs", "time_s"});
    for (const auto& r : records) {
        std::ostringstream mean, dev, secs;
        mean.setf(std::ios::fixed);
        mean.precision(2);
        mean << r.mean_size;
        dev.setf(std::ios::fixed);
        dev.precision(2);
        dev << r.stddev_size;
        secs.setf(std::ios::fixed);
        secs.precision(1);
        secs << r.total_seconds;
        rows.push_back({r.spec.name, r.spec.config_text, std::to_string(r.spec.expected_size),
                        std::to_string(r.best_size), mean.str(), dev.str(),
                        std::to_string(r.bound), std::to_string(r.spec.runs),
                        include_timing ? secs.str() : std::string("-")});
    }

    std::vector<std::size_t> widths(rows.front().size(), 0);
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    }
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out += row[c];
            if (c + 1 < row.size()) out.append(widths[c] - row[c].size() + 2, ' ');
        }
        out += '\n';
    }
    return out;
}

} // namespace pgsas
