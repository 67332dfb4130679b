#include "pgsas/tuple_store.hpp"

#include <cassert>
#include <ostream>

namespace pgsas {

std::vector<std::pair<int, int>> generate_parameter_pairs(const SutConfig& config) {
    const int p = config.parameter_count();
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(p) * (p - 1) / 2);
    for (int i = 0; i < p; ++i) {
        for (int j = i + 1; j < p; ++j) {
            pairs.emplace_back(i, j);
        }
    }
    return pairs;
}

TupleList::TupleList(SutConfig config)
    : config_(std::move(config)), pairs_(generate_parameter_pairs(config_)) {
    offsets_.reserve(pairs_.size());
    per_pair_uncovered_.reserve(pairs_.size());
    std::size_t total = 0;
    for (const auto& [i, j] : pairs_) {
        offsets_.push_back(total);
        const int count = config_.cardinality(i) * config_.cardinality(j);
        per_pair_uncovered_.push_back(count);
        total += static_cast<std::size_t>(count);
    }
    present_.assign(total, 1);
    initial_ = uncovered_ = total;
    pairs_nonempty_ = static_cast<int>(pairs_.size());
}

std::size_t TupleList::slot(std::size_t pair_idx, int a, int b) const {
    const int vj = config_.cardinality(pairs_[pair_idx].second);
    return offsets_[pair_idx] + static_cast<std::size_t>(a) * vj + b;
}

int TupleList::weight_coverage(const TestCase& candidate) const {
    assert(valid_for(candidate, config_));
    int weight = 0;
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
        const auto& [i, j] = pairs_[k];
        weight += present_[slot(k, candidate.values[i], candidate.values[j])];
    }
    return weight;
}

int TupleList::remove_covered(const TestCase& candidate) {
    assert(valid_for(candidate, config_));
    int removed = 0;
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
        const auto& [i, j] = pairs_[k];
        char& flag = present_[slot(k, candidate.values[i], candidate.values[j])];
        if (flag) {
            flag = 0;
            ++removed;
            if (--per_pair_uncovered_[k] == 0) --pairs_nonempty_;
        }
    }
    uncovered_ -= static_cast<std::size_t>(removed);
    return removed;
}

bool TupleList::contains(const InteractionTuple& t) const {
    assert(t.first_param < t.second_param);
    // pair index of (i,j) in lexicographic order over i<j
    const int p = config_.parameter_count();
    const int i = t.first_param;
    const int j = t.second_param;
    const std::size_t k = static_cast<std::size_t>(i) * (2 * p - i - 1) / 2 + (j - i - 1);
    return present_[slot(k, t.first_value, t.second_value)] != 0;
}

InteractionTuple TupleList::first_uncovered() const {
    assert(!empty());
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
        if (per_pair_uncovered_[k] == 0) continue;
        const auto& [i, j] = pairs_[k];
        const int vj = config_.cardinality(j);
        for (int a = 0; a < config_.cardinality(i); ++a) {
            for (int b = 0; b < vj; ++b) {
                if (present_[slot(k, a, b)]) return {i, a, j, b};
            }
        }
    }
    assert(false && "uncovered count out of sync with presence flags");
    return {};
}

std::vector<InteractionTuple> TupleList::uncovered_tuples() const {
    std::vector<InteractionTuple> out;
    out.reserve(uncovered_);
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
        const auto& [i, j] = pairs_[k];
        for (int a = 0; a < config_.cardinality(i); ++a) {
            for (int b = 0; b < config_.cardinality(j); ++b) {
                if (present_[slot(k, a, b)]) out.push_back({i, a, j, b});
            }
        }
    }
    return out;
}

void TupleList::dump(std::ostream& os) const {
    for (const auto& t : uncovered_tuples()) {
        os << t.first_param << ',' << t.second_param << ',' << t.first_value << ','
           << t.second_value << '\n';
    }
}

TupleList generate_tuples(const SutConfig& config) { return TupleList(config); }

} // namespace pgsas
