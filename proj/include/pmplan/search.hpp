#ifndef PMPLAN_SEARCH_HPP
#define PMPLAN_SEARCH_HPP

// Expansion-bounded greedy best-first search: single queue, two queues in
// strict alternation, and a single queue with secondary tie-breaking.
// Duplicates are detected on generation (the first value a state receives is
// the one it keeps); nodes are never reopened; the goal test happens when a
// node is popped.

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "pmplan/blackbox.hpp"
#include "pmplan/discrepancy.hpp"
#include "pmplan/evaluator.hpp"

namespace pmplan {

inline constexpr std::size_t kDefaultBudget = 10000;

enum class Outcome { solved, budget_exhausted, space_exhausted };

inline const char* to_string(Outcome o) {
    switch (o) {
    case Outcome::solved: return "solved";
    case Outcome::budget_exhausted: return "budget-exhausted";
    case Outcome::space_exhausted: return "space-exhausted";
    }
    return "?";
}

inline Outcome outcome_from_string(const std::string& s) {
    if (s == "solved") return Outcome::solved;
    if (s == "budget-exhausted") return Outcome::budget_exhausted;
    if (s == "space-exhausted") return Outcome::space_exhausted;
    throw std::invalid_argument("unknown outcome " + s);
}

struct SearchResult {
    Outcome outcome = Outcome::space_exhausted;
    std::vector<std::string> plan;
    int cost = 0;
    std::size_t expansions = 0;
    std::size_t generated = 0;
    std::size_t evaluations = 0;
};

struct SearchOptions {
    std::size_t budget = kDefaultBudget;
    std::ostream* trace = nullptr;  // JSON lines when set
    /// Called with the queue index (0 or 1) each time a double-queue search
    /// takes a node from a queue. Test hook.
    std::function<void(int)> on_poll;
};

namespace detail {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoParent = static_cast<NodeId>(-1);

struct Node {
    BlackBoxState state;
    NodeId parent = kNoParent;
    std::uint32_t succ_index = 0;  // position among the parent's successors
    std::uint32_t g = 0;
    std::array<Value, 2> values{0, 0};
    bool expanded = false;
};

enum class Mode { single, alternate, tiebreak };

class Engine {
public:
    Engine(const BlackBoxTask& task, std::vector<Evaluator*> evals, Mode mode, const SearchOptions& opt)
        : task_(task), evals_(std::move(evals)), mode_(mode), opt_(opt) {}

    SearchResult run() {
        Node root;
        root.state = task_.init();
        for (std::size_t i = 0; i < evals_.size(); ++i) {
            root.values[i] = evals_[i]->evaluate_root(root.state);
            ++result_.evaluations;
        }
        add_node(std::move(root));

        std::size_t turn = 0;
        for (;;) {
            std::optional<NodeId> next;
            if (mode_ == Mode::alternate) {
                int q = static_cast<int>(turn % 2);
                next = pop(q);
                if (!next) {
                    q = 1 - q;
                    next = pop(q);
                }
                if (next && opt_.on_poll) opt_.on_poll(q);
                ++turn;
            } else {
                next = pop(0);
            }
            if (!next) {
                result_.outcome = Outcome::space_exhausted;
                return finish();
            }
            const NodeId id = *next;
            if (task_.goal(nodes_[id].state)) {
                result_.outcome = Outcome::solved;
                extract_plan(id);
                trace_event("solved", id);
                return finish();
            }
            if (result_.expansions >= opt_.budget) {
                result_.outcome = Outcome::budget_exhausted;
                return finish();
            }
            expand(id);
        }
    }

private:
    bool find(const BlackBoxState& s) const {
        auto [lo, hi] = seen_.equal_range(s.hash());
        for (auto it = lo; it != hi; ++it)
            if (nodes_[it->second].state == s) return true;
        return false;
    }

    // (primary, secondary, seq, node) — min-heap
    using Key = std::tuple<Value, Value, std::uint64_t, NodeId>;
    using Heap = std::priority_queue<Key, std::vector<Key>, std::greater<>>;

    std::optional<NodeId> pop(int q) {
        auto& heap = queues_[static_cast<std::size_t>(q)];
        while (!heap.empty()) {
            NodeId id = std::get<3>(heap.top());
            heap.pop();
            if (!nodes_[id].expanded) return id;
        }
        return std::nullopt;
    }

    void add_node(Node n) {
        const NodeId id = static_cast<NodeId>(nodes_.size());
        seen_.emplace(n.state.hash(), id);
        nodes_.push_back(std::move(n));
        const Node& node = nodes_[id];
        const std::uint64_t seq = seq_++;
        switch (mode_) {
        case Mode::single:
            if (!is_dead_end(node.values[0])) queues_[0].emplace(node.values[0], 0, seq, id);
            break;
        case Mode::tiebreak:
            if (!is_dead_end(node.values[0])) queues_[0].emplace(node.values[0], node.values[1], seq, id);
            break;
        case Mode::alternate:
            for (std::size_t q = 0; q < 2; ++q)
                if (!is_dead_end(node.values[q])) queues_[q].emplace(node.values[q], 0, seq, id);
            break;
        }
        if (id != 0) trace_event("generate", id);
    }

    void expand(NodeId id) {
        nodes_[id].expanded = true;
        ++result_.expansions;
        trace_event("expand", id);
        auto succs = task_.succ(nodes_[id].state);
        result_.generated += succs.size();

        std::vector<BlackBoxState> states;
        states.reserve(succs.size());
        for (auto& s : succs) states.push_back(std::move(s.state));
        std::vector<char> fresh(states.size(), 0);
        for (std::size_t i = 0; i < states.size(); ++i) {
            if (find(states[i])) continue;
            bool dup = false;  // a later sibling may repeat an earlier one
            for (std::size_t j = 0; j < i && !dup; ++j) dup = fresh[j] && states[j] == states[i];
            fresh[i] = !dup;
        }

        std::vector<std::array<Value, 2>> values(states.size(), {0, 0});
        std::vector<Value> buffer(states.size());
        for (std::size_t e = 0; e < evals_.size(); ++e) {
            Evaluator* ev = evals_[e];
            if (ev->path_dependent()) {
                ev->evaluate_siblings(nodes_[id].values[e], states, buffer);
                result_.evaluations += states.size();
                for (std::size_t i = 0; i < states.size(); ++i) values[i][e] = buffer[i];
            } else {
                for (std::size_t i = 0; i < states.size(); ++i) {
                    if (!fresh[i]) continue;
                    values[i][e] = ev->evaluate(states[i]);
                    ++result_.evaluations;
                }
            }
        }
        const std::uint32_t g = nodes_[id].g + 1;
        for (std::size_t i = 0; i < states.size(); ++i) {
            if (!fresh[i]) continue;
            Node n;
            n.state = std::move(states[i]);
            n.parent = id;
            n.succ_index = static_cast<std::uint32_t>(i);
            n.g = g;
            n.values = values[i];
            add_node(std::move(n));
        }
    }

    void extract_plan(NodeId id) {
        std::vector<NodeId> chain;
        for (NodeId n = id; nodes_[n].parent != kNoParent; n = nodes_[n].parent) chain.push_back(n);
        std::vector<std::string> plan;
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            const Node& n = nodes_[*it];
            auto succs = task_.succ(nodes_[n.parent].state);
            plan.push_back(succs.at(n.succ_index).label);
        }
        result_.plan = std::move(plan);
        result_.cost = static_cast<int>(nodes_[id].g);
    }

    void trace_event(const char* event, NodeId id) {
        if (!opt_.trace) return;
        nlohmann::json j;
        j["event"] = event;
        j["state"] = nodes_[id].state.hash();
        auto& vals = j["values"] = nlohmann::json::array();
        for (std::size_t e = 0; e < evals_.size(); ++e) {
            Value v = nodes_[id].values[e];
            if (is_dead_end(v)) vals.push_back(nullptr);
            else vals.push_back(v);
        }
        j["counter"] = result_.expansions;
        *opt_.trace << j.dump() << '\n';
    }

    SearchResult finish() { return std::move(result_); }

    const BlackBoxTask& task_;
    std::vector<Evaluator*> evals_;
    Mode mode_;
    const SearchOptions& opt_;
    std::vector<Node> nodes_;
    std::unordered_multimap<std::uint64_t, NodeId> seen_;  // state hash -> node
    std::array<Heap, 2> queues_;
    std::uint64_t seq_ = 0;
    SearchResult result_;
};

} // namespace detail

inline SearchResult gbfs(const BlackBoxTask& task, Evaluator& e, const SearchOptions& opt = {}) {
    return detail::Engine(task, {&e}, detail::Mode::single, opt).run();
}

inline SearchResult double_queue(const BlackBoxTask& task, Evaluator& e1, Evaluator& e2,
                                 const SearchOptions& opt = {}) {
    return detail::Engine(task, {&e1, &e2}, detail::Mode::alternate, opt).run();
}

inline SearchResult tiebreak_gbfs(const BlackBoxTask& task, Evaluator& primary, Evaluator& secondary,
                                  const SearchOptions& opt = {}) {
    return detail::Engine(task, {&primary, &secondary}, detail::Mode::tiebreak, opt).run();
}

/// How a discrepancy (policy) evaluator is combined with a second evaluator.
struct Combine {
    enum class Kind { none, double_queue, tiebreak_policy_primary, tiebreak_policy_secondary };
    Kind kind = Kind::none;
    Evaluator* other = nullptr;
};

inline SearchResult run_with_discrepancy(const BlackBoxTask& task, std::shared_ptr<Ranker> ranker,
                                         const SearchOptions& opt = {}, Combine combine = {}) {
    DiscrepancyEvaluator d(std::move(ranker));
    if (combine.kind != Combine::Kind::none && !combine.other)
        throw std::invalid_argument("run_with_discrepancy: combination needs a second evaluator");
    switch (combine.kind) {
    case Combine::Kind::none: return gbfs(task, d, opt);
    case Combine::Kind::double_queue: return double_queue(task, d, *combine.other, opt);
    case Combine::Kind::tiebreak_policy_primary: return tiebreak_gbfs(task, d, *combine.other, opt);
    case Combine::Kind::tiebreak_policy_secondary: return tiebreak_gbfs(task, *combine.other, d, opt);
    }
    return {};
}

} // namespace pmplan

#endif // PMPLAN_SEARCH_HPP
