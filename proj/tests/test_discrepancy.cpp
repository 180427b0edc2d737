#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "json.hpp"
#include "pmplan/discrepancy.hpp"
#include "pmplan/search.hpp"
#include "support/oracles.hpp"

using namespace pmplan;

namespace {

class FixedValues : public Evaluator {
public:
    explicit FixedValues(std::vector<Value> v) : v_(std::move(v)) {}
    std::string name() const override { return "fixed"; }
    Value evaluate(const BlackBoxState& s) override { return v_.at(s.payload().at(0)); }

private:
    std::vector<Value> v_;
};

std::vector<BlackBoxState> states(std::size_t n) {
    std::vector<BlackBoxState> out;
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(std::vector<std::uint64_t>{i});
    return out;
}

} // namespace

TEST(Ranking, ValuesToRanks) {
    std::vector<Value> v{5, 3, 7};
    EXPECT_EQ(ranks_from_values(v), (std::vector<std::size_t>{1, 0, 2}));
    std::vector<Value> eq{4, 4, 4};
    EXPECT_EQ(ranks_from_values(eq), (std::vector<std::size_t>{0, 1, 2}));
    std::vector<Value> one{9};
    EXPECT_EQ(ranks_from_values(one), (std::vector<std::size_t>{0}));
}

TEST(Ranking, HeuristicRankerUsesEvaluator) {
    auto r = heuristic_ranker(std::make_shared<FixedValues>(std::vector<Value>{5, 3, 7}));
    auto s = states(3);
    EXPECT_EQ(r->rank(s), (std::vector<std::size_t>{1, 0, 2}));
}

TEST(RankingProperty, ScalingLeavesRanksUnchanged) {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 200; ++i) {
        std::vector<Value> v(1 + rng() % 8);
        for (auto& x : v) x = static_cast<Value>(rng() % 6);
        const Value k = 1 + static_cast<Value>(rng() % 50);
        std::vector<Value> scaled = v;
        for (auto& x : scaled) x *= k;
        auto s = states(v.size());
        auto a = heuristic_ranker(std::make_shared<FixedValues>(v))->rank(s);
        auto b = heuristic_ranker(std::make_shared<FixedValues>(scaled))->rank(s);
        EXPECT_EQ(a, b);
    }
}

TEST(Discrepancy, Values) {
    auto d = discrepancy_evaluator(heuristic_ranker(std::make_shared<FixedValues>(std::vector<Value>{5, 3, 7})));
    auto s = states(3);
    EXPECT_TRUE(d->path_dependent());
    EXPECT_EQ(d->evaluate_root(s[0]), 0);
    std::vector<Value> out(3);
    d->evaluate_siblings(4, s, out);
    EXPECT_EQ(out, (std::vector<Value>{5, 4, 6}));  // best child keeps the parent's 4
    d->evaluate_siblings(0, s, out);
    EXPECT_EQ(out[2], 2);  // third-ranked child of the root
}

TEST(Discrepancy, ReverseRankerBinaryTreeDepthThree) {
    // full binary tree of depth 3; goal is the first-generated leaf, which
    // the reverse ranker ranks 1 at every level
    auto tree = std::make_shared<oracle::Tree>();
    tree->children.emplace_back();
    tree->parent.push_back(-1);
    std::vector<int> level{0};
    for (int d = 0; d < 3; ++d) {
        std::vector<int> next;
        for (int n : level)
            for (int k = 0; k < 2; ++k) {
                int c = static_cast<int>(tree->children.size());
                tree->children.emplace_back();
                tree->parent.push_back(n);
                tree->children[n].push_back(c);
                next.push_back(c);
            }
        level = next;
    }
    tree->goal = level.front();
    std::ostringstream trace;
    SearchOptions opt;
    opt.trace = &trace;
    auto res = run_with_discrepancy(oracle::tree_task(tree), std::make_shared<oracle::ReverseRanker>(), opt);
    ASSERT_EQ(res.outcome, Outcome::solved);
    std::string line, last;
    std::istringstream in(trace.str());
    while (std::getline(in, line)) last = line;
    auto j = nlohmann::json::parse(last);
    EXPECT_EQ(j.at("event"), "solved");
    EXPECT_EQ(j.at("values").at(0).get<Value>(), 3);
}

TEST(DiscrepancyProperty, PerfectRankerExpandsPlanLength) {
    std::mt19937_64 rng(52);
    for (int i = 0; i < 100; ++i) {
        auto tree = std::make_shared<const oracle::Tree>(oracle::random_tree(rng));
        auto res = run_with_discrepancy(oracle::tree_task(tree), std::make_shared<oracle::PerfectTreeRanker>(tree));
        ASSERT_EQ(res.outcome, Outcome::solved);
        EXPECT_EQ(res.expansions, static_cast<std::size_t>(tree->depth(tree->goal)));
        EXPECT_EQ(res.cost, tree->depth(tree->goal));
    }
}

TEST(DiscrepancyProperty, RootZeroAndNonDecreasing) {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 100; ++i) {
        auto tree = std::make_shared<const oracle::Tree>(oracle::random_tree(rng));
        oracle::Recording rec(discrepancy_evaluator(std::make_shared<oracle::RandomRanker>(rng())));
        auto res = gbfs(oracle::tree_task(tree), rec);
        EXPECT_EQ(res.outcome, Outcome::solved);
        EXPECT_EQ(rec.root, 0);
        for (const auto& [parent, kids] : rec.batches) {
            std::vector<Value> offsets;
            for (Value v : kids) {
                EXPECT_GE(v, parent);
                offsets.push_back(v - parent);
            }
            std::sort(offsets.begin(), offsets.end());
            for (std::size_t k = 0; k < offsets.size(); ++k) EXPECT_EQ(offsets[k], static_cast<Value>(k));
        }
    }
}
