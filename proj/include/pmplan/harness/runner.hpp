#ifndef PMPLAN_HARNESS_RUNNER_HPP
#define PMPLAN_HARNESS_RUNNER_HPP

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "pmplan/blackbox.hpp"
#include "pmplan/discrepancy.hpp"
#include "pmplan/domains/generators.hpp"
#include "pmplan/domains/instance_io.hpp"
#include "pmplan/domains/partial_models.hpp"
#include "pmplan/ff.hpp"
#include "pmplan/harness/config.hpp"
#include "pmplan/search.hpp"
#include "pmplan/surrogate.hpp"

namespace pmplan::harness {

namespace fs = std::filesystem;

struct RunRecord {
    std::string instance;
    std::string config;
    Outcome outcome = Outcome::space_exhausted;
    std::size_t expansions = 0;
    std::size_t evaluations = 0;
    int cost = -1;  // -1 unless solved
    double wall_ms = 0.0;  // informational; not part of records.csv
    std::vector<std::string> plan;

    bool solved() const { return outcome == Outcome::solved; }
};

// ---------------------------------------------------------------- CSV

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::vector<std::string> csv_split(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(std::move(cur));
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(std::move(cur));
    return out;
}

inline constexpr const char* kRecordsHeader = "instance,config,outcome,expansions,evaluations,cost";

inline std::string record_line(const RunRecord& r) {
    return csv_field(r.instance) + "," + csv_field(r.config) + "," + to_string(r.outcome) + "," +
           std::to_string(r.expansions) + "," + std::to_string(r.evaluations) + "," + std::to_string(r.cost);
}

inline std::string records_csv(const std::vector<RunRecord>& records) {
    std::string out = std::string(kRecordsHeader) + "\n";
    for (const auto& r : records) out += record_line(r) + "\n";
    return out;
}

inline std::vector<RunRecord> parse_records(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || csv_split(line) != csv_split(kRecordsHeader))
        throw std::runtime_error("records: missing header '" + std::string(kRecordsHeader) + "'");
    std::vector<RunRecord> out;
    int n = 1;
    while (std::getline(in, line)) {
        ++n;
        if (line.empty() || line == "\r") continue;
        auto f = csv_split(line);
        if (f.size() != 6) throw std::runtime_error("records line " + std::to_string(n) + ": expected 6 fields");
        RunRecord r;
        try {
            r.instance = f[0];
            r.config = f[1];
            r.outcome = outcome_from_string(f[2]);
            r.expansions = std::stoull(f[3]);
            r.evaluations = std::stoull(f[4]);
            r.cost = std::stoi(f[5]);
        } catch (const std::exception& e) {
            throw std::runtime_error("records line " + std::to_string(n) + ": " + e.what());
        }
        out.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------------- training

/// (state features, remaining plan length) along full-model FF plans.
struct TrainingSet {
    std::vector<std::string> features;
    std::vector<TrainingSample> samples;
    int instances = 0;
};

inline TrainingSet collect_training_set(const std::vector<domains::DomainInstance>& insts) {
    struct Raw {
        std::shared_ptr<FeatureExtractor> fx;
        std::vector<FactSet> states;
    };
    std::vector<Raw> raws;
    std::set<std::string> names;
    for (const auto& inst : insts) {
        auto bb = wrap_strips_as_blackbox(inst.task);
        auto ff = lift_heuristic(std::make_shared<FFHeuristic>(inst.task), full_model(inst.task));
        SearchOptions opt;
        opt.budget = domains::kProbeBudget;
        auto res = gbfs(bb, *ff, opt);
        if (res.outcome != Outcome::solved) continue;
        Raw raw{std::make_shared<FeatureExtractor>(inst.task, inst.object_types()), {}};
        FactSet s = inst.task->init();
        raw.states.push_back(s);
        for (ActionId a : plan_from_labels(*inst.task, res.plan)) {
            s = apply(inst.task->action(a), s);
            raw.states.push_back(s);
        }
        names.insert(raw.fx->names().begin(), raw.fx->names().end());
        raws.push_back(std::move(raw));
    }
    TrainingSet ts;
    // keep the fixed leading features in front
    for (const char* lead : {"bias", "unsat-goals", "applicable-actions"}) {
        ts.features.push_back(lead);
        names.erase(lead);
    }
    ts.features.insert(ts.features.end(), names.begin(), names.end());
    for (const auto& raw : raws) {
        const double len = static_cast<double>(raw.states.size() - 1);
        for (std::size_t i = 0; i < raw.states.size(); ++i)
            ts.samples.push_back({raw.fx->extract_aligned(raw.states[i], ts.features), len - static_cast<double>(i)});
    }
    ts.instances = static_cast<int>(raws.size());
    return ts;
}

inline SurrogateModel train_on_dataset(const std::string& domain, const std::string& dataset, std::uint64_t seed,
                                       int count) {
    auto insts = domains::generate(domains::preset(domain, dataset, seed, count));
    auto ts = collect_training_set(insts);
    return train_surrogate(ts.features, ts.samples);
}

// ---------------------------------------------------------------- evaluators

/// Constant zero: breadth-first order under the search's FIFO tie-breaking.
class BlindEvaluator : public Evaluator {
public:
    std::string name() const override { return "blind"; }
    Value evaluate(const BlackBoxState&) override { return 0; }
};

class InstanceContext {
public:
    InstanceContext(const domains::DomainInstance& inst, const ExperimentConfig& cfg,
                    const std::map<std::string, SurrogateModel>& models)
        : inst_(inst), cfg_(cfg), models_(models) {}

    const PartialModel& partial(const std::string& kind) {
        auto it = partials_.find(kind);
        if (it != partials_.end()) return it->second;
        domains::PartialModelOptions opt;
        opt.workshop_until_processed = cfg_.workshop_until_processed;
        return partials_.emplace(kind, domains::make_partial_model(inst_, kind, opt)).first->second;
    }

    std::shared_ptr<Evaluator> heuristic(const Source& src) {
        switch (src.kind) {
        case Source::Kind::none: return std::make_shared<BlindEvaluator>();
        case Source::Kind::ff_full:
            return lift_heuristic(std::make_shared<FFHeuristic>(inst_.task), full_model(inst_.task));
        case Source::Kind::goal_count:
            return lift_heuristic(std::make_shared<GoalCountHeuristic>(inst_.task), full_model(inst_.task));
        case Source::Kind::ff_partial: {
            const auto& pm = partial(src.arg);
            return lift_heuristic(std::make_shared<FFHeuristic>(pm.task), pm);
        }
        case Source::Kind::surrogate: {
            if (!src.ff_kind.empty()) {
                const auto& pm = partial(src.ff_kind);
                return lift_heuristic(std::make_shared<FFHeuristic>(pm.task), pm);
            }
            auto it = models_.find(src.arg);
            if (it == models_.end()) throw std::logic_error("surrogate for " + src.arg + " was not trained");
            if (!fx_) fx_ = std::make_shared<FeatureExtractor>(inst_.task, inst_.object_types());
            return lift_heuristic(std::make_shared<SurrogateHeuristic>(it->second, fx_, src.to_string()),
                                  full_model(inst_.task));
        }
        }
        throw std::logic_error("unhandled source");
    }

    std::shared_ptr<Evaluator> evaluator(const Guidance& g) {
        auto h = heuristic(g.source);
        if (g.role == Role::policy) return discrepancy_evaluator(heuristic_ranker(h));
        return h;
    }

private:
    const domains::DomainInstance& inst_;
    const ExperimentConfig& cfg_;
    const std::map<std::string, SurrogateModel>& models_;
    std::map<std::string, PartialModel> partials_;
    std::shared_ptr<const FeatureExtractor> fx_;
};

/// `none` sources drop out: a two-source run with one `none` is plain GBFS
/// on the other source, and GBFS on `none` alone is blind search.
inline SearchResult execute(const RunSpec& run, const BlackBoxTask& bb, InstanceContext& ctx, std::size_t budget) {
    std::vector<Guidance> active;
    for (const auto& g : run.guidance)
        if (g.source.kind != Source::Kind::none) active.push_back(g);
    SearchOptions opt;
    opt.budget = budget;
    if (active.empty()) {
        BlindEvaluator blind;
        return gbfs(bb, blind, opt);
    }
    if (active.size() == 1) {
        auto e = ctx.evaluator(active[0]);
        return gbfs(bb, *e, opt);
    }
    auto a = ctx.evaluator(active[0]);
    auto b = ctx.evaluator(active[1]);
    if (run.algorithm == Algorithm::tiebreak) return tiebreak_gbfs(bb, *a, *b, opt);
    return double_queue(bb, *a, *b, opt);
}

inline RunRecord run_one(const domains::DomainInstance& inst, const RunSpec& run, const ExperimentConfig& cfg,
                         const std::map<std::string, SurrogateModel>& models) {
    const auto t0 = std::chrono::steady_clock::now();
    InstanceContext ctx(inst, cfg, models);
    auto bb = wrap_strips_as_blackbox(inst.task);
    auto res = execute(run, bb, ctx, cfg.budget);
    RunRecord r;
    r.instance = inst.id;
    r.config = run.id;
    r.outcome = res.outcome;
    r.expansions = res.expansions;
    r.evaluations = res.evaluations;
    if (res.outcome == Outcome::solved) {
        auto v = validate_plan(*inst.task, plan_from_labels(*inst.task, res.plan));
        if (!v.ok()) throw std::logic_error("plan for " + inst.id + " under " + run.id + " does not validate");
        r.cost = v.cost;
        r.plan = std::move(res.plan);
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline std::string safe_name(const std::string& s) {
    std::string out;
    for (char c : s) out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.') ? c : '_';
    return out;
}

inline fs::path plan_path(const fs::path& out_dir, const std::string& config, const std::string& instance) {
    return out_dir / "plans" / safe_name(config) / (instance + ".plan");
}

inline std::vector<domains::DomainInstance> suite_instances(const ExperimentConfig& cfg) {
    if (cfg.instances_dir.empty()) return domains::generate(cfg.instances);
    const fs::path dir = fs::path(cfg.instances_dir) / cfg.instances.domain / cfg.instances.dataset;
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".pddl") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<domains::DomainInstance> out;
    for (const auto& f : files) out.push_back(domains::load_instance(f));
    if (out.empty()) throw std::runtime_error("no instances in " + dir.string());
    return out;
}

/// Training datasets referenced by regression surrogate sources.
inline std::set<std::string> surrogate_datasets(const ExperimentConfig& cfg) {
    std::set<std::string> out;
    for (const auto& r : cfg.runs)
        for (const auto& g : r.guidance)
            if (g.source.kind == Source::Kind::surrogate && g.source.ff_kind.empty()) out.insert(g.source.arg);
    return out;
}

struct ExperimentOutput {
    std::vector<RunRecord> records;
    std::map<std::string, SurrogateModel> models;
};

/// Runs every (instance, run) pair. Records come out in instance-major,
/// run-minor order whatever the worker count. With `out_dir` set, records,
/// timings, plans and trained models are written there, records as soon as
/// all earlier ones are done.
inline ExperimentOutput run_experiment(const ExperimentConfig& cfg, const std::optional<fs::path>& out_dir = {},
                                       std::ostream* log = nullptr) {
    // validate partial-model kinds before any work
    const auto kinds = domains::partial_kinds(cfg.instances.domain);
    for (const auto& r : cfg.runs)
        for (const auto& g : r.guidance) {
            const auto& s = g.source;
            const std::string kind = s.kind == Source::Kind::ff_partial ? s.arg : s.ff_kind;
            if ((s.kind == Source::Kind::ff_partial || !s.ff_kind.empty()) &&
                std::find(kinds.begin(), kinds.end(), kind) == kinds.end())
                throw ConfigError(0, "run '" + r.id + "': partial model '" + kind + "' does not apply to " +
                                         cfg.instances.domain);
        }

    ExperimentOutput out;
    for (const auto& ds : surrogate_datasets(cfg)) {
        if (log) *log << "training surrogate on " << cfg.instances.domain << "/" << ds << "\n";
        out.models.emplace(ds, train_on_dataset(cfg.instances.domain, ds, cfg.train_seed, cfg.train_count));
    }
    const auto insts = suite_instances(cfg);
    if (log) *log << "suite: " << insts.size() << " instances x " << cfg.runs.size() << " runs\n";

    std::ofstream records_file, timings_file;
    if (out_dir) {
        fs::create_directories(*out_dir);
        for (const auto& [ds, m] : out.models)
            domains::write_file(*out_dir / "models" / (safe_name(ds) + ".json"), surrogate_to_json(m).dump(1) + "\n");
        records_file.open(*out_dir / "records.csv", std::ios::binary);
        timings_file.open(*out_dir / "timings.csv", std::ios::binary);
        records_file << kRecordsHeader << "\n";
        timings_file << "instance,config,wall_ms\n";
    }
    auto emit = [&](const RunRecord& r) {
        if (!out_dir) return;
        records_file << record_line(r) << "\n" << std::flush;
        timings_file << csv_field(r.instance) << "," << csv_field(r.config) << "," << r.wall_ms << "\n";
        if (r.solved()) {
            std::string text;
            for (const auto& l : r.plan) text += l + "\n";
            domains::write_file(plan_path(*out_dir, r.config, r.instance), text);
        }
    };

    const std::size_t n_runs = cfg.runs.size();
    const std::size_t total = insts.size() * n_runs;
    std::vector<std::optional<RunRecord>> slots(total);
    auto job = [&](std::size_t k) { return run_one(insts[k / n_runs], cfg.runs[k % n_runs], cfg, out.models); };

    if (cfg.workers <= 1) {
        for (std::size_t k = 0; k < total; ++k) {
            slots[k] = job(k);
            emit(*slots[k]);
            if (log) *log << slots[k]->instance << " " << slots[k]->config << " " << to_string(slots[k]->outcome) << "\n";
        }
    } else {
        std::mutex mu;
        std::condition_variable cv;
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        auto worker = [&] {
            for (;;) {
                const std::size_t k = next.fetch_add(1);
                if (k >= total) return;
                std::optional<RunRecord> r;
                try {
                    r = job(k);
                } catch (...) {
                    std::lock_guard lock(mu);
                    if (!failure) failure = std::current_exception();
                    next = total;
                    cv.notify_all();
                    return;
                }
                std::lock_guard lock(mu);
                slots[k] = std::move(r);
                cv.notify_all();
            }
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < cfg.workers; ++i) pool.emplace_back(worker);
        // single consumer: emit in order as the prefix completes
        std::size_t written = 0;
        {
            std::unique_lock lock(mu);
            while (written < total) {
                cv.wait(lock, [&] { return failure || slots[written].has_value(); });
                if (failure) break;
                while (written < total && slots[written]) emit(*slots[written++]);
            }
        }
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }
    for (auto& s : slots) out.records.push_back(std::move(*s));
    return out;
}

} // namespace pmplan::harness

#endif // PMPLAN_HARNESS_RUNNER_HPP
