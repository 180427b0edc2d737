#ifndef PMPLAN_TESTS_ORACLES_HPP
#define PMPLAN_TESTS_ORACLES_HPP

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls into the heuristic code it checks.

#include <cstdint>
#include <deque>
#include <limits>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pmplan/blackbox.hpp"
#include "pmplan/discrepancy.hpp"
#include "pmplan/strips.hpp"

namespace oracle {

using pmplan::ActionId;
using pmplan::FactIndex;
using pmplan::FactSet;
using pmplan::StripsAction;
using pmplan::StripsTask;

inline constexpr long long kInf = std::numeric_limits<long long>::max();

/// Facts as a plain bitmask (|F| <= 32).
inline std::uint32_t mask_of(const std::vector<FactIndex>& v) {
    std::uint32_t m = 0;
    for (auto f : v) m |= 1u << f;
    return m;
}

inline std::uint32_t mask_of(const FactSet& s) { return mask_of(s.indices()); }

/// Optimal delete-relaxation plan length by breadth-first search over relaxed
/// states; kInf when the goal is relaxed-unreachable.
inline long long h_plus(const StripsTask& t, const FactSet& s) {
    const std::uint32_t goal = mask_of(t.goal());
    std::vector<std::pair<std::uint32_t, std::uint32_t>> acts;  // pre, add
    for (const auto& a : t.actions()) acts.emplace_back(mask_of(a.pre), mask_of(a.add));
    std::unordered_map<std::uint32_t, long long> dist;
    std::deque<std::uint32_t> q;
    const std::uint32_t start = mask_of(s);
    dist[start] = 0;
    q.push_back(start);
    while (!q.empty()) {
        auto cur = q.front();
        q.pop_front();
        if ((cur & goal) == goal) return dist[cur];
        for (auto [pre, add] : acts) {
            if ((cur & pre) != pre) continue;
            auto next = cur | add;
            if (dist.emplace(next, dist[cur] + 1).second) q.push_back(next);
        }
    }
    return kInf;
}

/// h_add by plain fixpoint iteration (no priority queue).
inline std::vector<long long> h_add_costs(const StripsTask& t, const FactSet& s) {
    std::vector<long long> cost(t.num_facts(), kInf);
    for (auto f : s.indices()) cost[f] = 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& a : t.actions()) {
            long long c = 1;
            for (auto p : a.pre) {
                if (cost[p] == kInf) {
                    c = kInf;
                    break;
                }
                c += cost[p];
            }
            if (c == kInf) continue;
            for (auto f : a.add)
                if (c < cost[f]) {
                    cost[f] = c;
                    changed = true;
                }
        }
    }
    return cost;
}

inline long long h_add_goal_sum(const StripsTask& t, const FactSet& s) {
    auto cost = h_add_costs(t, s);
    long long sum = 0;
    for (auto g : t.goal()) {
        if (cost[g] == kInf) return kInf;
        sum += cost[g];
    }
    return sum;
}

inline bool relaxed_reachable(const StripsTask& t, const FactSet& s) {
    std::uint32_t reach = mask_of(s);
    for (bool grew = true; grew;) {
        grew = false;
        for (const auto& a : t.actions()) {
            auto pre = mask_of(a.pre), add = mask_of(a.add);
            if ((reach & pre) == pre && (reach | add) != reach) {
                reach |= add;
                grew = true;
            }
        }
    }
    auto goal = mask_of(t.goal());
    return (reach & goal) == goal;
}

/// Random small STRIPS task: |F| in [1, max_facts], |A| in [1, max_actions].
inline StripsTask random_task(std::mt19937_64& rng, int max_facts = 12, int max_actions = 10) {
    std::uniform_int_distribution<int> nf(1, max_facts), na(1, max_actions);
    const int n = nf(rng), m = na(rng);
    std::bernoulli_distribution pre_p(0.2), add_p(0.25), del_p(0.15), init_p(0.3), goal_p(0.3);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("f" + std::to_string(i));
    std::vector<StripsAction> acts;
    for (int j = 0; j < m; ++j) {
        StripsAction a;
        a.id = static_cast<ActionId>(j);
        a.name = "a" + std::to_string(j);
        for (int i = 0; i < n; ++i) {
            if (pre_p(rng)) a.pre.push_back(static_cast<FactIndex>(i));
            if (add_p(rng)) a.add.push_back(static_cast<FactIndex>(i));
            if (del_p(rng)) a.del.push_back(static_cast<FactIndex>(i));
        }
        acts.push_back(std::move(a));
    }
    std::vector<FactIndex> init, goal;
    for (int i = 0; i < n; ++i) {
        if (init_p(rng)) init.push_back(static_cast<FactIndex>(i));
        if (goal_p(rng)) goal.push_back(static_cast<FactIndex>(i));
    }
    return StripsTask(std::move(names), std::move(acts), init, goal);
}

inline FactSet random_state(std::mt19937_64& rng, std::size_t n) {
    FactSet s(n);
    std::bernoulli_distribution p(0.4);
    for (std::size_t i = 0; i < n; ++i)
        if (p(rng)) s.insert(static_cast<FactIndex>(i));
    return s;
}

/// Chain f0 -> f1 -> ... -> f<len>: action i needs f_i, adds f_{i+1}, deletes f_i.
inline StripsTask chain_task(int len) {
    std::vector<std::string> names;
    for (int i = 0; i <= len; ++i) names.push_back("f" + std::to_string(i));
    std::vector<StripsAction> acts;
    for (int i = 0; i < len; ++i) {
        StripsAction a;
        a.id = static_cast<ActionId>(i);
        a.name = "a" + std::to_string(i);
        a.pre = {static_cast<FactIndex>(i)};
        a.add = {static_cast<FactIndex>(i + 1)};
        a.del = {static_cast<FactIndex>(i)};
        acts.push_back(std::move(a));
    }
    return StripsTask(std::move(names), std::move(acts), {0}, {static_cast<FactIndex>(len)});
}

/// All states reachable from init by explicit forward search (mask-based).
inline std::set<std::uint32_t> reachable_masks(const StripsTask& t) {
    std::set<std::uint32_t> seen{mask_of(t.init())};
    std::deque<std::uint32_t> q{mask_of(t.init())};
    while (!q.empty()) {
        auto s = q.front();
        q.pop_front();
        for (const auto& a : t.actions()) {
            auto pre = mask_of(a.pre);
            if ((s & pre) != pre) continue;
            auto next = (s & ~mask_of(a.del)) | mask_of(a.add);
            if (seen.insert(next).second) q.push_back(next);
        }
    }
    return seen;
}

// ---------------------------------------------------------------- trees

/// Random rooted tree as a black-box task: states are node ids, the goal is
/// one leaf. parent[0] = -1.
struct Tree {
    std::vector<std::vector<int>> children;
    std::vector<int> parent;
    int goal = 0;

    int depth(int n) const {
        int d = 0;
        for (; parent[n] >= 0; n = parent[n]) ++d;
        return d;
    }
    bool on_goal_path(int n) const {
        for (int m = goal; m >= 0; m = parent[m])
            if (m == n) return true;
        return false;
    }
};

inline Tree random_tree(std::mt19937_64& rng, int max_depth = 5, int max_branch = 4) {
    Tree t;
    t.children.emplace_back();
    t.parent.push_back(-1);
    std::uniform_int_distribution<int> branch(1, max_branch);
    std::vector<std::pair<int, int>> frontier{{0, 0}};
    while (!frontier.empty()) {
        auto [n, d] = frontier.back();
        frontier.pop_back();
        if (d >= max_depth) continue;
        const int k = d == 0 ? std::max(2, branch(rng)) : branch(rng) - (rng() % 3 == 0 ? 1 : 0);
        for (int i = 0; i < k; ++i) {
            int c = static_cast<int>(t.children.size());
            t.children.emplace_back();
            t.parent.push_back(n);
            t.children[n].push_back(c);
            frontier.emplace_back(c, d + 1);
        }
    }
    std::vector<int> leaves;
    for (int n = 1; n < static_cast<int>(t.children.size()); ++n)
        if (t.children[n].empty()) leaves.push_back(n);
    t.goal = leaves[rng() % leaves.size()];
    return t;
}

inline pmplan::BlackBoxState tree_state(int n) { return pmplan::BlackBoxState({static_cast<std::uint64_t>(n)}); }
inline int tree_node(const pmplan::BlackBoxState& s) { return static_cast<int>(s.payload().at(0)); }

inline pmplan::BlackBoxTask tree_task(std::shared_ptr<const Tree> t) {
    return pmplan::BlackBoxTask(
        tree_state(0),
        [t](const pmplan::BlackBoxState& s) {
            std::vector<pmplan::Successor> out;
            for (int c : t->children[tree_node(s)]) out.push_back({"to" + std::to_string(c), tree_state(c)});
            return out;
        },
        [t](const pmplan::BlackBoxState& s) { return tree_node(s) == t->goal; });
}

/// Ranks the sibling on the goal path first; others keep generation order.
class PerfectTreeRanker : public pmplan::Ranker {
public:
    explicit PerfectTreeRanker(std::shared_ptr<const Tree> t) : t_(std::move(t)) {}
    std::string name() const override { return "perfect"; }
    std::vector<std::size_t> rank(std::span<const pmplan::BlackBoxState> sib) override {
        std::vector<std::size_t> r(sib.size());
        std::size_t next = 1;
        for (std::size_t i = 0; i < sib.size(); ++i) r[i] = t_->on_goal_path(tree_node(sib[i])) ? 0 : next++;
        // no sibling on the path: shift down so ranks start at 0
        bool any = false;
        for (auto x : r) any = any || x == 0;
        if (!any)
            for (auto& x : r) --x;
        return r;
    }

private:
    std::shared_ptr<const Tree> t_;
};

/// Uniformly shuffled ranks, seeded.
class RandomRanker : public pmplan::Ranker {
public:
    explicit RandomRanker(std::uint64_t seed) : rng_(seed) {}
    std::string name() const override { return "random"; }
    std::vector<std::size_t> rank(std::span<const pmplan::BlackBoxState> sib) override {
        std::vector<std::size_t> r(sib.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = i;
        std::shuffle(r.begin(), r.end(), rng_);
        return r;
    }

private:
    std::mt19937_64 rng_;
};

/// Reverse generation order: the last sibling is preferred.
class ReverseRanker : public pmplan::Ranker {
public:
    std::string name() const override { return "reverse"; }
    std::vector<std::size_t> rank(std::span<const pmplan::BlackBoxState> sib) override {
        std::vector<std::size_t> r(sib.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = r.size() - 1 - i;
        return r;
    }
};

/// Pass-through evaluator that records the root value and every sibling
/// batch as (parent value, child values).
class Recording : public pmplan::Evaluator {
public:
    explicit Recording(std::shared_ptr<pmplan::Evaluator> inner) : inner_(std::move(inner)) {}
    std::string name() const override { return inner_->name(); }
    bool path_dependent() const override { return true; }
    pmplan::Value evaluate(const pmplan::BlackBoxState& s) override { return inner_->evaluate(s); }
    pmplan::Value evaluate_root(const pmplan::BlackBoxState& s) override { return root = inner_->evaluate_root(s); }
    void evaluate_siblings(pmplan::Value parent, std::span<const pmplan::BlackBoxState> sib,
                           std::span<pmplan::Value> out) override {
        inner_->evaluate_siblings(parent, sib, out);
        batches.push_back({parent, std::vector<pmplan::Value>(out.begin(), out.end())});
    }
    pmplan::Value root = -1;
    std::vector<std::pair<pmplan::Value, std::vector<pmplan::Value>>> batches;

private:
    std::shared_ptr<pmplan::Evaluator> inner_;
};

} // namespace oracle

#endif // PMPLAN_TESTS_ORACLES_HPP
