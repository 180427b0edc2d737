#ifndef PMPLAN_EVALUATOR_HPP
#define PMPLAN_EVALUATOR_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <string>

#include "pmplan/blackbox_state.hpp"
#include "pmplan/fact_set.hpp"

namespace pmplan {

/// Heuristic value: non-negative integer, or kDeadEnd.
using Value = std::int64_t;
inline constexpr Value kDeadEnd = std::numeric_limits<Value>::max();

inline bool is_dead_end(Value v) { return v == kDeadEnd; }

/// Heuristic over states of one STRIPS task.
class StripsEvaluator {
public:
    virtual ~StripsEvaluator() = default;
    virtual std::string name() const = 0;
    virtual Value evaluate(const FactSet& s) = 0;
};

/// Node evaluator used by search. State evaluators implement evaluate();
/// path-dependent ones override evaluate_siblings() and report
/// path_dependent() so the search hands them every generated successor of an
/// expanded node, duplicates included.
class Evaluator {
public:
    virtual ~Evaluator() = default;
    virtual std::string name() const = 0;
    virtual Value evaluate(const BlackBoxState& s) = 0;

    virtual bool path_dependent() const { return false; }
    virtual Value evaluate_root(const BlackBoxState& s) { return evaluate(s); }
    virtual void evaluate_siblings(Value /*parent_value*/, std::span<const BlackBoxState> siblings,
                                   std::span<Value> out) {
        for (std::size_t i = 0; i < siblings.size(); ++i) out[i] = evaluate(siblings[i]);
    }
};

} // namespace pmplan

#endif // PMPLAN_EVALUATOR_HPP
