#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pmplan/domains/generators.hpp"
#include "pmplan/domains/instance_io.hpp"
#include "pmplan/harness/config.hpp"
#include "pmplan/harness/reports.hpp"
#include "pmplan/harness/runner.hpp"
#include "pmplan/task_io.hpp"

namespace fs = std::filesystem;
using namespace pmplan;
using namespace pmplan::harness;

namespace {

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

void write_or_print(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") std::cout << text;
    else domains::write_file(path, text);
}

std::vector<RunRecord> load_records(const std::string& path) {
    return parse_records(domains::read_file(path));
}

int cmd_generate(const std::string& domain, const std::string& dataset, std::uint64_t seed, int count,
                 const std::string& out, const std::vector<std::string>& ranges) {
    auto p = domains::preset(domain, dataset, seed, count);
    for (const auto& r : ranges) {
        auto eq = r.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("--range expects key=lo-hi, got " + r);
        const std::string key = r.substr(0, eq);
        if (!p.ranges.count(key)) throw std::invalid_argument("no range '" + key + "' for " + domain);
        p.ranges[key] = parse_range(r.substr(eq + 1), 0);
    }
    auto insts = domains::generate(p);
    domains::write_domain_file(out, domain);
    for (const auto& inst : insts) std::cout << domains::write_instance(out, inst).string() << "\n";
    return 0;
}

struct SolveArgs {
    std::string instance;
    std::string task;
    std::string algo = "gbfs";
    std::vector<std::string> evals;
    std::size_t budget = kDefaultBudget;
    std::string trace;
    std::string plan_out;
    std::string model;
    bool workshop_until_processed = false;
};

int cmd_solve(const SolveArgs& a) {
    if (a.instance.empty() == a.task.empty()) throw std::invalid_argument("give exactly one of --instance or --task");
    RunSpec run{"solve", parse_algorithm(a.algo), {}};
    for (const auto& e : a.evals) run.guidance.push_back(parse_guidance(e));
    if (run.guidance.empty()) run.guidance.push_back(parse_guidance("ff-full"));
    const std::size_t want = run.algorithm == Algorithm::gbfs ? 1 : 2;
    if (run.guidance.size() != want)
        throw std::invalid_argument(std::string(to_string(run.algorithm)) + " needs " + std::to_string(want) + " --eval");

    domains::DomainInstance inst;
    if (!a.instance.empty()) {
        inst = domains::load_instance(a.instance);
    } else {
        inst.id = fs::path(a.task).stem().string();
        inst.task = std::make_shared<const StripsTask>(load_task(domains::read_file(a.task)));
        inst.annotation = {{"objects", nlohmann::json::object()}};
        for (const auto& g : run.guidance) {
            auto k = g.source.kind;
            if (k == Source::Kind::ff_partial || (k == Source::Kind::surrogate && !g.source.ff_kind.empty()))
                throw std::invalid_argument("partial models need --instance (a generated problem with its sidecar)");
        }
    }
    ExperimentConfig cfg;
    cfg.budget = a.budget;
    cfg.workshop_until_processed = a.workshop_until_processed;
    std::map<std::string, SurrogateModel> models;
    for (const auto& g : run.guidance)
        if (g.source.kind == Source::Kind::surrogate && g.source.ff_kind.empty()) {
            if (a.model.empty()) throw std::invalid_argument("regression surrogate needs --model <json>");
            models[g.source.arg] = surrogate_from_json(nlohmann::json::parse(domains::read_file(a.model)));
        }

    InstanceContext ctx(inst, cfg, models);
    auto bb = wrap_strips_as_blackbox(inst.task);
    std::ofstream trace_file;
    SearchOptions opt;
    opt.budget = a.budget;
    if (!a.trace.empty()) {
        trace_file.open(a.trace);
        opt.trace = &trace_file;
    }
    std::vector<std::shared_ptr<Evaluator>> evs;
    for (const auto& g : run.guidance) evs.push_back(ctx.evaluator(g));
    SearchResult res;
    if (evs.size() == 1) res = gbfs(bb, *evs[0], opt);
    else if (run.algorithm == Algorithm::tiebreak) res = tiebreak_gbfs(bb, *evs[0], *evs[1], opt);
    else res = double_queue(bb, *evs[0], *evs[1], opt);

    std::cerr << "outcome " << to_string(res.outcome) << "\nexpansions " << res.expansions << "\nevaluations "
              << res.evaluations << "\n";
    if (res.outcome != Outcome::solved) return 1;
    auto v = validate_plan(*inst.task, plan_from_labels(*inst.task, res.plan));
    std::cerr << "cost " << res.cost << (v.ok() ? "" : " (INVALID)") << "\n";
    std::string text;
    for (const auto& l : res.plan) text += l + "\n";
    write_or_print(a.plan_out, text);
    return v.ok() ? 0 : 2;
}

int cmd_experiment(const std::string& config, const std::string& out, int workers, bool quiet) {
    auto cfg = parse_config(domains::read_file(config));
    if (workers > 0) cfg.workers = workers;
    auto result = run_experiment(cfg, fs::path(out), quiet ? nullptr : &std::cerr);
    auto table = coverage_table(result.records);
    domains::write_file(fs::path(out) / "coverage.md", to_markdown(table));
    domains::write_file(fs::path(out) / "coverage.csv", to_csv(table));
    std::cout << to_markdown(table);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Planning with partial STRIPS models of black-box tasks"};
    app.require_subcommand(1);

    std::string domain, dataset = "test", out;
    std::uint64_t seed = 1;
    int count = 1;
    std::vector<std::string> ranges;
    auto* gen = app.add_subcommand("generate", "Generate benchmark instances (PDDL + JSON sidecar)");
    gen->add_option("--domain", domain, "logistics | grid | woodworking")->required();
    gen->add_option("--dataset", dataset, "test | hgn | biased variant");
    gen->add_option("--seed", seed);
    gen->add_option("--count", count);
    gen->add_option("--out", out, "output root")->required();
    gen->add_option("--range", ranges, "override a size range, key=lo-hi");

    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "Solve one task");
    solve->add_option("--instance", sa.instance, "generated problem (.pddl with .json sidecar)");
    solve->add_option("--task", sa.task, "STRIPS task JSON");
    solve->add_option("--algo", sa.algo, "gbfs | double-queue | tiebreak");
    solve->add_option("--eval", sa.evals, "[role:]source, repeat for two-source algorithms");
    solve->add_option("--budget", sa.budget);
    solve->add_option("--trace", sa.trace, "write a JSON-lines search trace");
    solve->add_option("--plan-out", sa.plan_out, "plan file (default stdout)");
    solve->add_option("--model", sa.model, "surrogate model JSON");
    solve->add_flag("--workshop-until-processed", sa.workshop_until_processed);

    std::string config;
    int workers = 0;
    bool quiet = false;
    auto* exp = app.add_subcommand("experiment", "Run a batch experiment");
    exp->add_option("--config", config)->required();
    exp->add_option("--out", out)->required();
    exp->add_option("--workers", workers, "override the config's worker count");
    exp->add_flag("--quiet", quiet);

    std::string records, tag, compare, table_out;
    bool as_csv = false;
    auto* tab = app.add_subcommand("table", "Coverage table from records");
    tab->add_option("--records", records)->required();
    tab->add_option("--tag", tag, "config id tag to tabulate");
    tab->add_option("--compare", compare, "base:alt tags, emit the alternative-algorithm comparison");
    tab->add_flag("--csv", as_csv);
    tab->add_option("--out", table_out);

    std::string cfg_a, cfg_b;
    std::size_t budget = kDefaultBudget;
    auto* sc = app.add_subcommand("scatter", "Paired expansions of two configs");
    sc->add_option("--records", records)->required();
    sc->add_option("--a", cfg_a)->required();
    sc->add_option("--b", cfg_b)->required();
    sc->add_option("--budget", budget);
    sc->add_option("--out", table_out);

    std::string configs;
    auto* cum = app.add_subcommand("cumulative", "Cumulative coverage by expansions");
    cum->add_option("--records", records)->required();
    cum->add_option("--configs", configs, "comma-separated config ids")->required();
    cum->add_option("--budget", budget);
    cum->add_option("--out", table_out);

    std::string baseline, others;
    auto* costs = app.add_subcommand("costs", "Plan-cost comparison against a baseline");
    costs->add_option("--records", records)->required();
    costs->add_option("--baseline", baseline)->required();
    costs->add_option("--others", others, "comma-separated config ids")->required();
    costs->add_option("--out", table_out);

    CLI11_PARSE(app, argc, argv);
    try {
        if (*gen) return cmd_generate(domain, dataset, seed, count, out, ranges);
        if (*solve) return cmd_solve(sa);
        if (*exp) return cmd_experiment(config, out, workers, quiet);
        if (*tab) {
            auto recs = load_records(records);
            if (!compare.empty()) {
                auto colon = compare.find(':');
                if (colon == std::string::npos) throw std::invalid_argument("--compare expects base:alt");
                auto t = comparison_table(recs, compare.substr(0, colon), compare.substr(colon + 1));
                write_or_print(table_out, as_csv ? to_csv(t) : to_markdown(t));
            } else {
                auto t = coverage_table(recs, tag);
                write_or_print(table_out, as_csv ? to_csv(t) : to_markdown(t));
                for (const auto& w : t.warnings) std::cerr << "warning: " << w << "\n";
            }
            return 0;
        }
        if (*sc) {
            write_or_print(table_out, scatter_csv(scatter_data(load_records(records), cfg_a, cfg_b, budget)));
            return 0;
        }
        if (*cum) {
            write_or_print(table_out, to_csv(cumulative_coverage(load_records(records), split_list(configs), budget)));
            return 0;
        }
        if (*costs) {
            write_or_print(table_out, to_csv(cost_comparison(load_records(records), baseline, split_list(others))));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
