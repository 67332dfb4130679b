#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "pgsas/bench.hpp"
#include "pgsas/gsa.hpp"
#include "pgsas/strategy.hpp"
#include "pgsas/suite_io.hpp"
#include "pgsas/sut_model.hpp"
#include "pgsas/tuple_store.hpp"
#include "pgsas/verifier.hpp"

namespace {

struct CommonOutput {
    std::string output = "plain";
    std::string out_file;
    bool no_timing = false;
};

void add_output_options(CLI::App* cmd, CommonOutput& out) {
    cmd->add_option("--output", out.output, "Output format")
        ->check(CLI::IsMember({"plain", "structured"}))
        ->capture_default_str();
    cmd->add_option("--out", out.out_file, "Write the artifact to FILE instead of stdout");
    cmd->add_flag("--no-timing", out.no_timing,
                  "Omit wall-clock fields so repeated runs emit identical bytes");
}

void add_param_options(CLI::App* cmd, pgsas::gsa::Params& params) {
    cmd->add_option("--population", params.population_size, "Object population size")
        ->capture_default_str();
    cmd->add_option("--iterations", params.max_iterations, "Search iterations per test case")
        ->capture_default_str();
    cmd->add_option("--g0", params.g0, "Initial gravitational constant")->capture_default_str();
    cmd->add_option("--alpha", params.alpha, "Gravitational attenuation factor")
        ->capture_default_str();
    cmd->add_option("--epsilon", params.epsilon, "Force/acceleration denominator guard")
        ->capture_default_str();
    cmd->add_option_function<std::string>(
           "--distance",
           [&params](const std::string& v) {
               params.distance = v == "position" ? pgsas::gsa::DistanceMode::position
                                                 : pgsas::gsa::DistanceMode::mass_difference;
           },
           "Force distance term: position | mass_difference")
        ->check(CLI::IsMember({"position", "mass_difference"}))
        ->default_str("position");
}

int emit(const CommonOutput& out, const std::string& text) {
    if (out.out_file.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream file(out.out_file);
    if (!file) {
        std::cerr << "error: cannot open '" << out.out_file << "' for writing\n";
        return 1;
    }
    file << text;
    return 0;
}

int run_generate(const std::string& config_text, std::uint64_t seed, int runs,
                 const pgsas::gsa::Params& params, const CommonOutput& out,
                 const std::string& trace_file) {
    const pgsas::SutConfig config = pgsas::parse_config(config_text);
    params.validate();
    if (runs < 1) throw std::invalid_argument("--runs must be at least 1");

    std::ofstream trace;
    if (!trace_file.empty()) {
        trace.open(trace_file);
        if (!trace) {
            std::cerr << "error: cannot open trace file '" << trace_file << "'\n";
            return 1;
        }
    }

    std::optional<pgsas::StrategyReport> best;
    for (int k = 0; k < runs; ++k) {
        pgsas::GenerateOptions options;
        if (trace.is_open()) {
            trace << "# seed=" << seed + static_cast<std::uint64_t>(k) << '\n';
            options.trace = [&trace](int t, int best_fit, int worst_fit, double g) {
                trace << t << ',' << best_fit << ',' << worst_fit << ',' << g << '\n';
            };
        }
        pgsas::StrategyReport report =
            pgsas::generate_suite(config, params, seed + static_cast<std::uint64_t>(k), options);
        if (!best || report.suite.size() < best->suite.size()) best = std::move(report);
    }

    const pgsas::CoverageReport coverage = pgsas::verify_coverage(best->suite, config);
    std::string text;
    if (out.output == "plain") {
        std::ostringstream os;
        pgsas::write_suite(os, best->suite);
        text = os.str();
    } else {
        text = pgsas::report_to_json(*best, coverage, !out.no_timing).dump(2) + "\n";
    }
    const int rc = emit(out, text);
    if (rc != 0) return rc;

    std::cerr << "size=" << best->suite.size() << " seed=" << best->seed << " coverage="
              << coverage.covered << "/" << coverage.total
              << (coverage.complete ? " complete" : " INCOMPLETE") << '\n';
    return coverage.complete ? 0 : 1;
}

int run_verify(const std::string& config_text, const std::string& suite_file,
               const CommonOutput& out) {
    const pgsas::SutConfig config = pgsas::parse_config(config_text);
    std::ifstream file(suite_file);
    if (!file) {
        std::cerr << "error: cannot read suite file '" << suite_file << "'\n";
        return 2;
    }
    const pgsas::TestSuite suite = pgsas::read_suite(file, config);
    const pgsas::CoverageReport coverage = pgsas::verify_coverage(suite, config);

    std::string text;
    if (out.output == "plain") {
        std::ostringstream os;
        os << "covered " << coverage.covered << "/" << coverage.total << " (" << std::fixed
           << std::setprecision(1)
           << 100.0 * static_cast<double>(coverage.covered) / static_cast<double>(coverage.total)
           << "%)" << (coverage.complete ? " complete" : " incomplete") << '\n';
        for (const auto& t : coverage.missing) {
            os << "missing " << t.first_param << ',' << t.second_param << ',' << t.first_value
               << ',' << t.second_value << '\n';
        }
        text = os.str();
    } else {
        text = pgsas::coverage_to_json(config, coverage).dump(2) + "\n";
    }
    const int rc = emit(out, text);
    if (rc != 0) return rc;
    return coverage.complete ? 0 : 1;
}

int run_bench(const std::string& suite_name, std::uint64_t seed_base, int jobs,
              std::optional<int> runs_override, const std::string& only,
              const pgsas::gsa::Params& params, double time_limit_s, const CommonOutput& out) {
    params.validate();
    std::vector<pgsas::BenchmarkSpec> specs = pgsas::select_suite(suite_name);
    if (!only.empty()) {
        std::erase_if(specs, [&](const auto& s) { return s.name != only; });
        if (specs.empty()) throw std::invalid_argument("no benchmark named '" + only + "'");
    }

    std::vector<pgsas::BenchmarkRecord> records;
    records.reserve(specs.size());
    const auto limit = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
        std::chrono::duration<double>(time_limit_s));
    for (auto& spec : specs) {
        if (runs_override) spec.runs = *runs_override;
        records.push_back(pgsas::run_benchmark(spec, params, seed_base, jobs, limit));
        const auto& r = records.back();
        std::cerr << r.spec.name << " " << r.spec.config_text << ": best=" << r.best_size
                  << " published=" << r.spec.expected_size << '\n';
    }

    std::string text = pgsas::format_table(records, !out.no_timing);
    if (out.output == "structured") {
        text = pgsas::bench_to_json(records, params, seed_base, !out.no_timing).dump(2) + "\n";
    }
    return emit(out, text);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pgsas: pairwise covering-array generation with a gravitational search"};
    app.require_subcommand(1);

    pgsas::gsa::Params gen_params;
    std::string gen_config;
    std::uint64_t gen_seed = 0;
    int gen_runs = 1;
    std::string gen_trace;
    CommonOutput gen_out;
    CLI::App* generate = app.add_subcommand("generate", "Generate a pairwise test suite");
    generate->add_option("--config", gen_config, "Configuration, e.g. \"3^4 2^2\"")->required();
    generate->add_option("--seed", gen_seed, "Base seed; run k uses seed+k")
        ->envname("PGSAS_SEED")
        ->capture_default_str();
    generate->add_option("--runs", gen_runs, "Seeded runs; the smallest suite wins")
        ->capture_default_str();
    generate->add_option("--trace", gen_trace, "Append per-iteration t,best,worst,G lines to FILE");
    add_param_options(generate, gen_params);
    add_output_options(generate, gen_out);

    std::string ver_config;
    std::string ver_suite;
    CommonOutput ver_out;
    CLI::App* verify = app.add_subcommand("verify", "Check a suite file for full pairwise coverage");
    verify->add_option("--config", ver_config, "Configuration the suite targets")->required();
    verify->add_option("--suite", ver_suite, "Suite file, one case per line")->required();
    add_output_options(verify, ver_out);

    pgsas::gsa::Params bench_params;
    std::string bench_suite = "quick";
    std::uint64_t bench_seed_base = 42;
    int bench_jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::optional<int> bench_runs;
    std::string bench_only;
    double bench_time_limit = 600.0;
    CommonOutput bench_out;
    CLI::App* bench = app.add_subcommand("bench", "Run the built-in benchmark configurations");
    bench->add_option("--suite", bench_suite, "quick | full | tableIII | tableIV")
        ->check(CLI::IsMember({"quick", "full", "tableIII", "tableIV"}))
        ->capture_default_str();
    bench->add_option("--seed-base", bench_seed_base, "First seed; run k uses seed-base+k")
        ->envname("PGSAS_SEED")
        ->capture_default_str();
    bench->add_option("--jobs", bench_jobs, "Parallel runs")->capture_default_str();
    bench->add_option("--runs", bench_runs, "Override the per-benchmark run count (default 30)");
    bench->add_option("--only", bench_only, "Run a single named benchmark, e.g. SC5");
    bench->add_option("--time-limit", bench_time_limit, "Per-run wall-clock cap in seconds")
        ->capture_default_str();
    add_param_options(bench, bench_params);
    add_output_options(bench, bench_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*generate) {
            return run_generate(gen_config, gen_seed, gen_runs, gen_params, gen_out, gen_trace);
        }
        if (*verify) {
            return run_verify(ver_config, ver_suite, ver_out);
        }
        return run_bench(bench_suite, bench_seed_base, bench_jobs, bench_runs, bench_only,
                         bench_params, bench_time_limit, bench_out);
    } catch (const pgsas::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
