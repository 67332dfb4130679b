#include "pgsas/suite_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace pgsas {

void write_suite(std::ostream& os, const TestSuite& suite) {
    for (const auto& tc : suite.cases) {
        for (std::size_t d = 0; d < tc.values.size(); ++d) {
            if (d) os << ' ';
            os << tc.values[d];
        }
        os << '\n';
    }
}

TestSuite read_suite(std::istream& is, const SutConfig& config) {
    TestSuite suite(config);
    std::string line;
    int line_number = 0;
    while (std::getline(is, line)) {
        ++line_number;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream tokens(line);
        TestCase tc;
        int value = 0;
        while (tokens >> value) tc.values.push_back(value);
        if (!tokens.eof()) {
            throw ParseError("line " + std::to_string(line_number) + ": non-integer token");
        }
        if (tc.values.empty()) continue;
        if (static_cast<int>(tc.values.size()) != config.parameter_count()) {
            throw ParseError("line " + std::to_string(line_number) + ": expected " +
                             std::to_string(config.parameter_count()) + " values, got " +
                             std::to_string(tc.values.size()));
        }
        if (!valid_for(tc, config)) {
            throw ParseError("line " + std::to_string(line_number) + ": value index out of range");
        }
        suite.cases.push_back(std::move(tc));
    }
    return suite;
}

Json params_to_json(const gsa::Params& params) {
    return Json{
        {"population", params.population_size},
        {"g0", params.g0},
        {"alpha", params.alpha},
        {"epsilon", params.epsilon},
        {"iterations", params.max_iterations},
        {"kbest", params.kbest == gsa::KbestSchedule::linear_decay ? "linear_decay"
                                                                   : "full_population"},
        {"distance", params.distance == gsa::DistanceMode::position ? "position"
                                                                    : "mass_difference"},
    };
}

namespace {

Json tuple_to_json(const InteractionTuple& t) {
    return Json::array({t.first_param, t.second_param, t.first_value, t.second_value});
}

} // namespace

Json report_to_json(const StrategyReport& report, const CoverageReport& coverage,
                    bool include_timing) {
    Json cases = Json::array();
    for (const auto& tc : report.suite.cases) cases.push_back(tc.values);

    Json cycles = Json::array();
    for (const auto& c : report.cycles) {
        cycles.push_back(Json{{"iterations", c.iterations_used},
                              {"covered", c.covered},
                              {"remaining", c.remaining_tuples},
                              {"fallback", c.used_fallback}});
    }

    Json out{
        {"schema_version", kReportSchemaVersion},
        {"kind", "strategy_report"},
        {"config", report.suite.config.canonical_text()},
        {"cardinalities", report.suite.config.cardinalities()},
        {"seed", report.seed},
        {"size", report.suite.size()},
        {"complete", coverage.complete},
        {"covered", coverage.covered},
        {"total_tuples", coverage.total},
        {"suite", std::move(cases)},
        {"cycles", std::move(cycles)},
        {"total_iterations", report.total_iterations},
        {"fallback_count", report.fallback_count},
        {"resample_count", report.resample_count},
    };
    if (include_timing) out["duration_seconds"] = report.duration_seconds;
    return out;
}

Json coverage_to_json(const SutConfig& config, const CoverageReport& coverage) {
    Json missing = Json::array();
    for (const auto& t : coverage.missing) missing.push_back(tuple_to_json(t));
    return Json{
        {"schema_version", kReportSchemaVersion},
        {"kind", "coverage_report"},
        {"config", config.canonical_text()},
        {"total", coverage.total},
        {"covered", coverage.covered},
        {"percentage", 100.0 * static_cast<double>(coverage.covered) /
                           static_cast<double>(coverage.total)},
        {"complete", coverage.complete},
        {"missing", std::move(missing)},
    };
}

Json bench_to_json(const std::vector<BenchmarkRecord>& records, const gsa::Params& base_params,
                   std::uint64_t seed_base, bool include_timing) {
    Json rows = Json::array();
    for (const auto& r : records) {
        Json sizes = Json::array();
        for (const auto& run : r.runs) sizes.push_back(run.size);
        Json row{
            {"name", r.spec.name},
            {"config", r.spec.config_text},
            {"published", r.spec.expected_size},
            {"best", r.best_size},
            {"mean", r.mean_size},
            {"stddev", r.stddev_size},
            {"lower_bound", r.bound},
            {"runs", r.spec.runs},
            {"sizes", std::move(sizes)},
        };
        if (include_timing) row["total_seconds"] = r.total_seconds;
        rows.push_back(std::move(row));
    }
    return Json{
        {"schema_version", kReportSchemaVersion},
        {"kind", "benchmark_report"},
        {"seed_base", seed_base},
        {"params", params_to_json(base_params)},
        {"rows", std::move(rows)},
    };
}

} // namespace pgsas
