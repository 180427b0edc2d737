#ifndef PMPLAN_STRIPS_HPP
#define PMPLAN_STRIPS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pmplan/fact_set.hpp"

namespace pmplan {

using ActionId = std::uint32_t;

struct StripsAction {
    ActionId id = 0;
    std::string name;
    std::vector<FactIndex> pre;   // sorted, unique
    std::vector<FactIndex> add;
    std::vector<FactIndex> del;
    int cost = 1;
};

class PreconditionViolated : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Ground STRIPS task. Immutable once built; construction checks that every
/// referenced fact exists and that action ids are dense.
class StripsTask {
public:
    StripsTask() = default;
    StripsTask(std::vector<std::string> fact_names, std::vector<StripsAction> actions,
               const std::vector<FactIndex>& init, const std::vector<FactIndex>& goal)
        : fact_names_(std::move(fact_names)), actions_(std::move(actions)) {
        const auto n = fact_names_.size();
        for (FactIndex i = 0; i < n; ++i) {
            if (!index_.emplace(fact_names_[i], i).second)
                throw std::invalid_argument("StripsTask: duplicate fact name " + fact_names_[i]);
        }
        auto normalize = [n](std::vector<FactIndex>& v, const std::string& what) {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
            if (!v.empty() && v.back() >= n)
                throw std::invalid_argument("StripsTask: " + what + " references unknown fact");
        };
        for (std::size_t i = 0; i < actions_.size(); ++i) {
            auto& a = actions_[i];
            if (a.id != i) throw std::invalid_argument("StripsTask: action ids must be dense");
            if (a.cost != 1) throw std::invalid_argument("StripsTask: only unit costs are supported");
            normalize(a.pre, a.name);
            normalize(a.add, a.name);
            normalize(a.del, a.name);
        }
        auto init_v = init;
        auto goal_v = goal;
        normalize(init_v, "init");
        normalize(goal_v, "goal");
        init_ = FactSet(n, init_v);
        goal_ = std::move(goal_v);
    }

    std::size_t num_facts() const { return fact_names_.size(); }
    std::size_t num_actions() const { return actions_.size(); }
    const std::vector<std::string>& fact_names() const { return fact_names_; }
    const std::string& fact_name(FactIndex f) const { return fact_names_.at(f); }
    std::optional<FactIndex> find_fact(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    FactIndex fact(const std::string& name) const {
        auto f = find_fact(name);
        if (!f) throw std::out_of_range("StripsTask: unknown fact " + name);
        return *f;
    }
    const std::vector<StripsAction>& actions() const { return actions_; }
    const StripsAction& action(ActionId a) const { return actions_.at(a); }
    const FactSet& init() const { return init_; }
    const std::vector<FactIndex>& goal() const { return goal_; }

    FactSet make_state(std::initializer_list<FactIndex> facts) const {
        return FactSet(num_facts(), facts);
    }
    FactSet make_state(const std::vector<FactIndex>& facts) const {
        return FactSet(num_facts(), facts);
    }

    friend bool operator==(const StripsTask& a, const StripsTask& b) {
        if (a.fact_names_ != b.fact_names_ || a.init_ != b.init_ || a.goal_ != b.goal_ ||
            a.actions_.size() != b.actions_.size())
            return false;
        for (std::size_t i = 0; i < a.actions_.size(); ++i) {
            const auto& x = a.actions_[i];
            const auto& y = b.actions_[i];
            if (x.name != y.name || x.pre != y.pre || x.add != y.add || x.del != y.del ||
                x.cost != y.cost)
                return false;
        }
        return true;
    }

private:
    std::vector<std::string> fact_names_;
    std::unordered_map<std::string, FactIndex> index_;
    std::vector<StripsAction> actions_;
    FactSet init_;
    std::vector<FactIndex> goal_;
};

inline bool applicable(const StripsAction& a, const FactSet& s) {
    return std::all_of(a.pre.begin(), a.pre.end(), [&](FactIndex f) { return s.contains(f); });
}

/// (s \ del) ∪ add. Throws PreconditionViolated when a is not applicable.
inline FactSet apply(const StripsAction& a, const FactSet& s) {
    if (!applicable(a, s))
        throw PreconditionViolated("apply: action " + a.name + " is not applicable");
    FactSet next = s;
    for (FactIndex f : a.del) next.erase(f);
    for (FactIndex f : a.add) next.insert(f);
    return next;
}

inline bool is_goal(const StripsTask& task, const FactSet& s) {
    return std::all_of(task.goal().begin(), task.goal().end(),
                       [&](FactIndex f) { return s.contains(f); });
}

/// Applicable actions with their successor states, by ascending action id.
inline std::vector<std::pair<ActionId, FactSet>> successors(const StripsTask& task,
                                                             const FactSet& s) {
    std::vector<std::pair<ActionId, FactSet>> out;
    for (const auto& a : task.actions()) {
        if (applicable(a, s)) out.emplace_back(a.id, apply(a, s));
    }
    return out;
}

enum class PlanStatus { valid, inapplicable_step, goal_not_reached };

struct PlanValidation {
    PlanStatus status = PlanStatus::valid;
    int cost = 0;
    std::size_t failed_step = 0;  // meaningful for inapplicable_step

    bool ok() const { return status == PlanStatus::valid; }
};

inline PlanValidation validate_plan(const StripsTask& task, const std::vector<ActionId>& plan) {
    FactSet s = task.init();
    int cost = 0;
    for (std::size_t i = 0; i < plan.size(); ++i) {
        if (plan[i] >= task.num_actions() || !applicable(task.action(plan[i]), s))
            return {PlanStatus::inapplicable_step, cost, i};
        s = apply(task.action(plan[i]), s);
        cost += task.action(plan[i]).cost;
    }
    if (!is_goal(task, s)) return {PlanStatus::goal_not_reached, cost, plan.size()};
    return {PlanStatus::valid, cost, 0};
}

/// Resolves action names to ids; unknown names map to an out-of-range id so
/// validation reports them as inapplicable.
inline std::vector<ActionId> plan_from_labels(const StripsTask& task,
                                              const std::vector<std::string>& labels) {
    std::unordered_map<std::string, ActionId> by_name;
    for (const auto& a : task.actions()) by_name.emplace(a.name, a.id);
    std::vector<ActionId> plan;
    plan.reserve(labels.size());
    for (const auto& l : labels) {
        auto it = by_name.find(l);
        plan.push_back(it == by_name.end() ? static_cast<ActionId>(task.num_actions()) : it->second);
    }
    return plan;
}

inline std::string describe(const StripsTask& task, const FactSet& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](FactIndex f) {
        if (!first) out += ", ";
        out += task.fact_name(f);
        first = false;
    });
    return out + "}";
}

/// Splits "pred(a,b)" into predicate and arguments.
inline std::pair<std::string, std::vector<std::string>> split_fact_name(const std::string& name) {
    auto open = name.find('(');
    if (open == std::string::npos || name.back() != ')') return {name, {}};
    std::vector<std::string> args;
    std::string cur;
    for (std::size_t i = open + 1; i + 1 < name.size(); ++i) {
        if (name[i] == ',') {
            args.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(name[i]);
        }
    }
    if (open + 2 < name.size()) args.push_back(cur);
    return {name.substr(0, open), args};
}

} // namespace pmplan

#endif // PMPLAN_STRIPS_HPP
