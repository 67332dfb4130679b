#ifndef PGSAS_SUITE_IO_HPP
#define PGSAS_SUITE_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "pgsas/bench.hpp"
#include "pgsas/strategy.hpp"
#include "pgsas/sut_model.hpp"
#include "pgsas/verifier.hpp"

namespace pgsas {

inline constexpr int kReportSchemaVersion = 1;

/// Plain suite format: one case per line, 0-based value indices separated
/// by whitespace; `#` starts a comment, blank lines are ignored.
void write_suite(std::ostream& os, const TestSuite& suite);

/// Parses the plain suite format. Throws ParseError with the 1-based line
/// number on wrong arity, out-of-range indices, or junk tokens.
TestSuite read_suite(std::istream& is, const SutConfig& config);

using Json = nlohmann::ordered_json;

Json params_to_json(const gsa::Params& params);
Json report_to_json(const StrategyReport& report, const CoverageReport& coverage,
                    bool include_timing);
Json coverage_to_json(const SutConfig& config, const CoverageReport& coverage);
Json bench_to_json(const std::vector<BenchmarkRecord>& records, const gsa::Params& base_params,
                   std::uint64_t seed_base, bool include_timing);

} // namespace pgsas

#endif // PGSAS_SUITE_IO_HPP
