#ifndef PMPLAN_FF_HPP
#define PMPLAN_FF_HPP

#include <memory>
#include <queue>
#include <utility>
#include <vector>

#include "pmplan/evaluator.hpp"
#include "pmplan/strips.hpp"

namespace pmplan {

inline constexpr int kNoSupporter = -1;

/// Delete-relaxed additive costs from one state.
struct RelaxedExploration {
    std::vector<Value> cost;    // per fact; kDeadEnd when unreachable
    std::vector<int> supporter; // per fact; kNoSupporter for facts of the state
};

enum class Scratch {
    shared,   // buffers live in the evaluator: one caller at a time
    per_call  // fresh buffers per evaluate(): reentrant
};

/// FF: h_add fixpoint, then a relaxed plan collected backwards through best
/// supporters (lowest h_add, then lowest action id). Value = number of
/// distinct actions in it (unit costs).
class FFHeuristic : public StripsEvaluator {
public:
    explicit FFHeuristic(std::shared_ptr<const StripsTask> task, Scratch mode = Scratch::shared)
        : task_(std::move(task)), mode_(mode) {
        const auto& acts = task_->actions();
        precondition_of_.resize(task_->num_facts());
        for (const auto& a : acts)
            for (FactIndex f : a.pre) precondition_of_[f].push_back(a.id);
        for (const auto& a : acts)
            if (a.pre.empty()) no_pre_.push_back(a.id);
    }

    std::string name() const override { return "ff"; }

    Value evaluate(const FactSet& s) override {
        if (mode_ == Scratch::per_call) {
            Buffers local;
            return compute(s, local);
        }
        return compute(s, buffers_);
    }

    /// h_add costs and best supporters for s.
    RelaxedExploration explore(const FactSet& s) const {
        Buffers b;
        run_exploration(s, b);
        return {std::move(b.cost), std::move(b.supporter)};
    }

    /// Σ over goal facts of h_add, or kDeadEnd.
    Value hadd_goal_sum(const FactSet& s) const {
        auto ex = explore(s);
        Value sum = 0;
        for (FactIndex g : task_->goal()) {
            if (is_dead_end(ex.cost[g])) return kDeadEnd;
            sum += ex.cost[g];
        }
        return sum;
    }

    /// Action ids of the relaxed plan for s (ascending), empty for dead ends.
    std::vector<ActionId> relaxed_plan(const FactSet& s) const {
        Buffers b;
        if (is_dead_end(compute(s, b))) return {};
        std::vector<ActionId> out;
        for (std::size_t a = 0; a < b.in_plan.size(); ++a)
            if (b.in_plan[a]) out.push_back(static_cast<ActionId>(a));
        return out;
    }

    const StripsTask& task() const { return *task_; }

private:
    struct Buffers {
        std::vector<Value> cost;
        std::vector<int> supporter;
        std::vector<std::uint32_t> unsatisfied;
        std::vector<Value> action_cost;
        std::vector<char> marked;
        std::vector<char> in_plan;
        std::vector<FactIndex> stack;
    };

    void run_exploration(const FactSet& s, Buffers& b) const {
        const auto n = task_->num_facts();
        const auto& acts = task_->actions();
        b.cost.assign(n, kDeadEnd);
        b.supporter.assign(n, kNoSupporter);
        b.unsatisfied.resize(acts.size());
        b.action_cost.assign(acts.size(), 1);
        for (const auto& a : acts) b.unsatisfied[a.id] = static_cast<std::uint32_t>(a.pre.size());

        using Entry = std::pair<Value, FactIndex>;
        std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
        s.for_each([&](FactIndex f) {
            b.cost[f] = 0;
            queue.emplace(0, f);
        });
        auto fire = [&](ActionId a) {
            const Value c = b.action_cost[a];
            for (FactIndex f : acts[a].add) {
                if (c < b.cost[f]) {
                    b.cost[f] = c;
                    b.supporter[f] = static_cast<int>(a);
                    queue.emplace(c, f);
                } else if (c == b.cost[f] && b.supporter[f] != kNoSupporter &&
                           static_cast<int>(a) < b.supporter[f]) {
                    b.supporter[f] = static_cast<int>(a);
                }
            }
        };
        for (ActionId a : no_pre_) fire(a);
        while (!queue.empty()) {
            auto [c, f] = queue.top();
            queue.pop();
            if (c > b.cost[f]) continue;
            for (ActionId a : precondition_of_[f]) {
                b.action_cost[a] += c;
                if (--b.unsatisfied[a] == 0) fire(a);
            }
        }
    }

    Value compute(const FactSet& s, Buffers& b) const {
        run_exploration(s, b);
        const auto& goal = task_->goal();
        for (FactIndex g : goal)
            if (is_dead_end(b.cost[g])) return kDeadEnd;
        b.marked.assign(task_->num_facts(), 0);
        b.in_plan.assign(task_->num_actions(), 0);
        b.stack.assign(goal.begin(), goal.end());
        Value h = 0;
        while (!b.stack.empty()) {
            FactIndex f = b.stack.back();
            b.stack.pop_back();
            if (b.marked[f]) continue;
            b.marked[f] = 1;
            int a = b.supporter[f];
            if (a == kNoSupporter) continue;  // true in s
            if (!b.in_plan[a]) {
                b.in_plan[a] = 1;
                h += task_->action(static_cast<ActionId>(a)).cost;
            }
            for (FactIndex p : task_->action(static_cast<ActionId>(a)).pre)
                if (!b.marked[p]) b.stack.push_back(p);
        }
        return h;
    }

    std::shared_ptr<const StripsTask> task_;
    Scratch mode_;
    std::vector<std::vector<ActionId>> precondition_of_;
    std::vector<ActionId> no_pre_;
    Buffers buffers_;
};

/// |goal \ s|
class GoalCountHeuristic : public StripsEvaluator {
public:
    explicit GoalCountHeuristic(std::shared_ptr<const StripsTask> task) : task_(std::move(task)) {}
    std::string name() const override { return "goal-count"; }
    Value evaluate(const FactSet& s) override {
        Value n = 0;
        for (FactIndex g : task_->goal())
            if (!s.contains(g)) ++n;
        return n;
    }

private:
    std::shared_ptr<const StripsTask> task_;
};

inline Value ff_heuristic(std::shared_ptr<const StripsTask> task, const FactSet& s) {
    FFHeuristic h(std::move(task), Scratch::per_call);
    return h.evaluate(s);
}

inline Value goal_count(const StripsTask& task, const FactSet& s) {
    Value n = 0;
    for (FactIndex g : task.goal())
        if (!s.contains(g)) ++n;
    return n;
}

} // namespace pmplan

#endif // PMPLAN_FF_HPP
