#ifndef PGSAS_TUPLE_STORE_HPP
#define PGSAS_TUPLE_STORE_HPP

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <utility>
#include <vector>

#include "pgsas/sut_model.hpp"

namespace pgsas {

/// One pairwise coverage obligation: a value assignment to two distinct
/// parameters, kept with the lower parameter index first.
struct InteractionTuple {
    int first_param = 0;
    int first_value = 0;
    int second_param = 0;
    int second_value = 0;

    auto operator<=>(const InteractionTuple&) const = default;
};

/// All C(p,2) unordered parameter pairs in lexicographic order.
std::vector<std::pair<int, int>> generate_parameter_pairs(const SutConfig& config);

/// The interaction tuple list: the not-yet-covered pairwise obligations.
///
/// Storage is one presence flag per tuple, flattened per parameter pair, so
/// evaluating a candidate costs one lookup per pair rather than a scan of
/// the remaining tuples. Mutation is single-writer; reads never mutate.
class TupleList {
public:
    explicit TupleList(SutConfig config);

    const SutConfig& config() const { return config_; }
    std::size_t initial_count() const { return initial_; }
    std::size_t uncovered_count() const { return uncovered_; }
    bool empty() const { return uncovered_ == 0; }

    /// Number of parameter pairs that still have at least one uncovered
    /// tuple. Upper bound on any candidate's weight.
    int pairs_with_uncovered() const { return pairs_nonempty_; }

    /// Number of uncovered tuples the candidate projects onto. Pure.
    int weight_coverage(const TestCase& candidate) const;

    /// Removes the tuples the candidate projects onto; returns how many
    /// were removed (the weight immediately before removal).
    int remove_covered(const TestCase& candidate);

    bool contains(const InteractionTuple& t) const;

    /// First uncovered tuple in (param, param, value, value) order.
    /// Precondition: not empty.
    InteractionTuple first_uncovered() const;

    /// Remaining tuples in canonical order.
    std::vector<InteractionTuple> uncovered_tuples() const;

    /// Writes one `i,j,a,b` line per uncovered tuple, canonical order.
    void dump(std::ostream& os) const;

private:
    std::size_t slot(std::size_t pair_idx, int a, int b) const;

    SutConfig config_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<std::size_t> offsets_;    // per-pair base index into present_
    std::vector<char> present_;
    std::vector<int> per_pair_uncovered_;
    std::size_t initial_ = 0;
    std::size_t uncovered_ = 0;
    int pairs_nonempty_ = 0;
};

/// Builds the full tuple universe for the configuration.
TupleList generate_tuples(const SutConfig& config);

} // namespace pgsas

#endif // PGSAS_TUPLE_STORE_HPP
