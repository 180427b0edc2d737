#ifndef PMPLAN_SURROGATE_HPP
#define PMPLAN_SURROGATE_HPP

// Regression stand-in for a learned heuristic. Features are aggregate counts
// keyed by predicate and argument types, so a model fitted on one set of
// instances applies to instances of any size in the same domain.

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"
#include "pmplan/evaluator.hpp"
#include "pmplan/strips.hpp"

namespace pmplan {

struct SurrogateModel {
    std::vector<std::string> features;
    std::vector<double> weights;
};

struct TrainingSample {
    std::vector<double> features;
    double target = 0.0;
};

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr double kRidgeDamping = 1e-6;

/// Least squares with ridge damping via the normal equations.
inline SurrogateModel train_surrogate(std::vector<std::string> feature_names,
                                      const std::vector<TrainingSample>& samples) {
    if (samples.empty()) throw std::invalid_argument("train_surrogate: no samples");
    const auto d = static_cast<Eigen::Index>(feature_names.size());
    Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(d, d);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(d);
    for (const auto& s : samples) {
        if (static_cast<Eigen::Index>(s.features.size()) != d)
            throw DimensionMismatch("train_surrogate: sample has " + std::to_string(s.features.size()) +
                                    " features, expected " + std::to_string(d));
        Eigen::Map<const Eigen::VectorXd> x(s.features.data(), d);
        gram.noalias() += x * x.transpose();
        rhs.noalias() += s.target * x;
    }
    gram.diagonal().array() += kRidgeDamping;
    Eigen::VectorXd w = gram.ldlt().solve(rhs);
    SurrogateModel m{std::move(feature_names), std::vector<double>(w.data(), w.data() + d)};
    for (double v : m.weights)
        if (!std::isfinite(v)) throw std::runtime_error("train_surrogate: non-finite weight");
    return m;
}

/// Integer evaluator value: round(max(0, prediction) * 1000).
inline Value surrogate_value(double prediction) {
    return static_cast<Value>(std::llround(std::max(0.0, prediction) * 1000.0));
}

inline nlohmann::json surrogate_to_json(const SurrogateModel& m) {
    return {{"features", m.features}, {"weights", m.weights}};
}

inline SurrogateModel surrogate_from_json(const nlohmann::json& j) {
    SurrogateModel m{j.at("features").get<std::vector<std::string>>(),
                     j.at("weights").get<std::vector<double>>()};
    if (m.features.size() != m.weights.size())
        throw DimensionMismatch("surrogate model: features and weights differ in length");
    return m;
}

/// Per-instance feature extraction over the full model's facts.
///   bias, unsat-goals, applicable-actions,
///   true:<pred>[types]      count of true fluent facts in the group
///   unsat:<pred>[types]     count of unsatisfied goal facts in the group
class FeatureExtractor {
public:
    FeatureExtractor(std::shared_ptr<const StripsTask> task,
                     const std::map<std::string, std::string>& object_types)
        : task_(std::move(task)) {
        const auto n = task_->num_facts();
        std::vector<char> fluent(n, 0);
        for (const auto& a : task_->actions()) {
            for (FactIndex f : a.add) fluent[f] = 1;
            for (FactIndex f : a.del) fluent[f] = 1;
        }
        std::vector<std::string> group_of(n);
        std::map<std::string, int> groups;
        for (FactIndex f = 0; f < n; ++f) {
            auto [pred, args] = split_fact_name(task_->fact_name(f));
            std::string key = pred + "[";
            for (std::size_t i = 0; i < args.size(); ++i) {
                auto it = object_types.find(args[i]);
                key += (i ? "," : "") + (it == object_types.end() ? std::string("object") : it->second);
            }
            key += "]";
            group_of[f] = key;
            groups.emplace(key, 0);
        }
        names_ = {"bias", "unsat-goals", "applicable-actions"};
        for (auto& [k, idx] : groups) {
            idx = static_cast<int>(names_.size());
            names_.push_back("true:" + k);
        }
        const int unsat_base = static_cast<int>(names_.size());
        for (const auto& [k, idx] : groups) names_.push_back("unsat:" + k);
        true_slot_.assign(n, -1);
        for (FactIndex f = 0; f < n; ++f)
            if (fluent[f]) true_slot_[f] = groups.at(group_of[f]);
        for (FactIndex g : task_->goal())
            goal_slot_.emplace_back(g, unsat_base + (groups.at(group_of[g]) - 3));
    }

    const std::vector<std::string>& names() const { return names_; }

    std::vector<double> extract(const FactSet& s) const {
        std::vector<double> x(names_.size(), 0.0);
        x[0] = 1.0;
        s.for_each([&](FactIndex f) {
            if (true_slot_[f] >= 0) x[static_cast<std::size_t>(true_slot_[f])] += 1.0;
        });
        for (const auto& [g, slot] : goal_slot_) {
            if (!s.contains(g)) {
                x[1] += 1.0;
                x[static_cast<std::size_t>(slot)] += 1.0;
            }
        }
        double applicable_count = 0;
        for (const auto& a : task_->actions())
            if (applicable(a, s)) applicable_count += 1.0;
        x[2] = applicable_count;
        return x;
    }

    /// Same as extract() but aligned to an external feature list; unknown
    /// names contribute 0.
    std::vector<double> extract_aligned(const FactSet& s, const std::vector<std::string>& to) const {
        auto local = extract(s);
        std::map<std::string, double> by_name;
        for (std::size_t i = 0; i < names_.size(); ++i) by_name[names_[i]] = local[i];
        std::vector<double> out(to.size(), 0.0);
        for (std::size_t i = 0; i < to.size(); ++i) {
            auto it = by_name.find(to[i]);
            if (it != by_name.end()) out[i] = it->second;
        }
        return out;
    }

private:
    std::shared_ptr<const StripsTask> task_;
    std::vector<std::string> names_;
    std::vector<int> true_slot_;
    std::vector<std::pair<FactIndex, int>> goal_slot_;
};

/// Model prediction on one instance, integerised.
class SurrogateHeuristic : public StripsEvaluator {
public:
    SurrogateHeuristic(SurrogateModel model, std::shared_ptr<const FeatureExtractor> fx,
                       std::string label = "surrogate")
        : model_(std::move(model)), fx_(std::move(fx)), label_(std::move(label)) {
        std::map<std::string, double> w;
        for (std::size_t i = 0; i < model_.features.size(); ++i) w[model_.features[i]] = model_.weights[i];
        aligned_.assign(fx_->names().size(), 0.0);
        for (std::size_t i = 0; i < aligned_.size(); ++i) {
            auto it = w.find(fx_->names()[i]);
            if (it != w.end()) aligned_[i] = it->second;
        }
    }

    std::string name() const override { return label_; }

    double predict(const FactSet& s) const {
        auto x = fx_->extract(s);
        double y = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) y += aligned_[i] * x[i];
        return y;
    }

    Value evaluate(const FactSet& s) override { return surrogate_value(predict(s)); }

private:
    SurrogateModel model_;
    std::shared_ptr<const FeatureExtractor> fx_;
    std::string label_;
    std::vector<double> aligned_;
};

inline Value surrogate_evaluate(const SurrogateHeuristic& m, const FactSet& s) {
    return surrogate_value(m.predict(s));
}

} // namespace pmplan

#endif // PMPLAN_SURROGATE_HPP
