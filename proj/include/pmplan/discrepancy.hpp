#ifndef PMPLAN_DISCREPANCY_HPP
#define PMPLAN_DISCREPANCY_HPP

#include <algorithm>
#include <memory>
#include <numeric>
#include <span>
#include <vector>

#include "pmplan/evaluator.hpp"

namespace pmplan {

/// Preference order over a sibling set: result[i] is the rank (0 = most
/// preferred) of sibling i.
class Ranker {
public:
    virtual ~Ranker() = default;
    virtual std::string name() const = 0;
    virtual std::vector<std::size_t> rank(std::span<const BlackBoxState> siblings) = 0;
};

/// Ranks values ascending; equal values keep generation order.
inline std::vector<std::size_t> ranks_from_values(std::span<const Value> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<std::size_t> rank(values.size());
    for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
    return rank;
}

/// Policy view of a heuristic: prefer successors with lower value.
class HeuristicRanker : public Ranker {
public:
    explicit HeuristicRanker(std::shared_ptr<Evaluator> e) : e_(std::move(e)) {}
    std::string name() const override { return "rank(" + e_->name() + ")"; }
    std::vector<std::size_t> rank(std::span<const BlackBoxState> siblings) override {
        values_.resize(siblings.size());
        for (std::size_t i = 0; i < siblings.size(); ++i) values_[i] = e_->evaluate(siblings[i]);
        return ranks_from_values(values_);
    }

private:
    std::shared_ptr<Evaluator> e_;
    std::vector<Value> values_;
};

inline std::shared_ptr<Ranker> heuristic_ranker(std::shared_ptr<Evaluator> e) {
    return std::make_shared<HeuristicRanker>(std::move(e));
}

/// Path-dependent value: root 0, child = parent + rank among its siblings.
class DiscrepancyEvaluator : public Evaluator {
public:
    explicit DiscrepancyEvaluator(std::shared_ptr<Ranker> r) : ranker_(std::move(r)) {}

    std::string name() const override { return "discrepancy(" + ranker_->name() + ")"; }
    bool path_dependent() const override { return true; }
    Value evaluate(const BlackBoxState&) override { return 0; }
    Value evaluate_root(const BlackBoxState&) override { return 0; }
    void evaluate_siblings(Value parent_value, std::span<const BlackBoxState> siblings,
                           std::span<Value> out) override {
        auto ranks = ranker_->rank(siblings);
        for (std::size_t i = 0; i < siblings.size(); ++i)
            out[i] = parent_value + static_cast<Value>(ranks[i]);
    }

private:
    std::shared_ptr<Ranker> ranker_;
};

inline std::shared_ptr<Evaluator> discrepancy_evaluator(std::shared_ptr<Ranker> r) {
    return std::make_shared<DiscrepancyEvaluator>(std::move(r));
}

} // namespace pmplan

#endif // PMPLAN_DISCREPANCY_HPP
