#ifndef PMPLAN_BLACKBOX_HPP
#define PMPLAN_BLACKBOX_HPP

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pmplan/blackbox_state.hpp"
#include "pmplan/evaluator.hpp"
#include "pmplan/strips.hpp"

namespace pmplan {

struct Successor {
    std::string label;
    BlackBoxState state;
};

/// A planning task reachable only through succ and goal.
class BlackBoxTask {
public:
    using SuccFn = std::function<std::vector<Successor>(const BlackBoxState&)>;
    using GoalFn = std::function<bool(const BlackBoxState&)>;

    BlackBoxTask(BlackBoxState init, SuccFn succ, GoalFn goal)
        : init_(std::move(init)), succ_(std::move(succ)), goal_(std::move(goal)) {}

    const BlackBoxState& init() const { return init_; }
    std::vector<Successor> succ(const BlackBoxState& s) const { return succ_(s); }
    bool goal(const BlackBoxState& s) const { return goal_(s); }

private:
    BlackBoxState init_;
    SuccFn succ_;
    GoalFn goal_;
};

// Codec used by the STRIPS-backed simulator: the payload is the fact bit
// vector. Only simulator-side code (σ mappings) should call these.
inline BlackBoxState encode_strips_state(const FactSet& s) {
    return BlackBoxState(std::vector<std::uint64_t>(s.words().begin(), s.words().end()));
}

inline FactSet decode_strips_state(const BlackBoxState& s, std::size_t num_facts) {
    return FactSet::from_words(num_facts, s.payload());
}

inline BlackBoxTask wrap_strips_as_blackbox(std::shared_ptr<const StripsTask> task) {
    auto succ = [task](const BlackBoxState& bs) {
        FactSet s = decode_strips_state(bs, task->num_facts());
        std::vector<Successor> out;
        for (const auto& a : task->actions()) {
            if (!applicable(a, s)) continue;
            FactSet next = s;
            for (FactIndex f : a.del) next.erase(f);
            for (FactIndex f : a.add) next.insert(f);
            out.push_back({a.name, encode_strips_state(next)});
        }
        return out;
    };
    auto goal = [task](const BlackBoxState& bs) {
        return is_goal(*task, decode_strips_state(bs, task->num_facts()));
    };
    return BlackBoxTask(encode_strips_state(task->init()), std::move(succ), std::move(goal));
}

class MappingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// σ: black-box state -> fact set of the partial task.
class StateMapping {
public:
    using Fn = std::function<FactSet(const BlackBoxState&)>;

    StateMapping() = default;
    StateMapping(std::size_t partial_facts, Fn fn) : partial_facts_(partial_facts), fn_(std::move(fn)) {}

    FactSet operator()(const BlackBoxState& s) const {
        FactSet out = fn_(s);
        if (out.size() != partial_facts_)
            throw MappingError("state mapping produced a fact set over " + std::to_string(out.size()) +
                               " facts, partial task has " + std::to_string(partial_facts_));
        return out;
    }
    std::size_t partial_facts() const { return partial_facts_; }

private:
    std::size_t partial_facts_ = 0;
    Fn fn_;
};

struct PartialModel {
    std::string name;
    std::shared_ptr<const StripsTask> task;
    StateMapping sigma;
};

/// Identity partial model: the black box is the wrapped full task itself.
inline PartialModel full_model(std::shared_ptr<const StripsTask> task) {
    const std::size_t n = task->num_facts();
    return {"full", task, StateMapping(n, [n](const BlackBoxState& s) { return decode_strips_state(s, n); })};
}

/// h_B(s) = h_D(σ(s)); dead ends pass through unchanged.
class LiftedEvaluator : public Evaluator {
public:
    LiftedEvaluator(std::shared_ptr<StripsEvaluator> inner, PartialModel pm)
        : inner_(std::move(inner)), pm_(std::move(pm)) {}

    std::string name() const override { return inner_->name() + "@" + pm_.name; }
    Value evaluate(const BlackBoxState& s) override { return inner_->evaluate(pm_.sigma(s)); }

    const PartialModel& model() const { return pm_; }

private:
    std::shared_ptr<StripsEvaluator> inner_;
    PartialModel pm_;
};

inline std::shared_ptr<Evaluator> lift_heuristic(std::shared_ptr<StripsEvaluator> h, PartialModel pm) {
    return std::make_shared<LiftedEvaluator>(std::move(h), std::move(pm));
}

} // namespace pmplan

#endif // PMPLAN_BLACKBOX_HPP
