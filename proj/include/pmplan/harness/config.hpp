#ifndef PMPLAN_HARNESS_CONFIG_HPP
#define PMPLAN_HARNESS_CONFIG_HPP

// Experiment configuration: a key=value text file.
//
//   domain = grid
//   dataset = test
//   seed = 1
//   count = 50
//   budget = 10000
//   train.dataset = hgn        # default for surrogate sources
//   run.keys = gbfs heuristic:ff-partial(keys)
//   run.dq:hgn+ff-keys = double-queue heuristic:surrogate(hgn) heuristic:ff-partial(keys)
//
// Sources: none, ff-full, goal-count, ff-partial(<kind>), surrogate(<dataset>)
// and surrogate(<dataset>,ff:<kind>), the latter being FF on a partial model
// standing in for a model trained on <dataset>. Bare "surrogate" uses
// train.dataset.

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmplan/domains/generators.hpp"
#include "pmplan/search.hpp"

namespace pmplan::harness {

class ConfigError : public std::invalid_argument {
public:
    ConfigError(int line, const std::string& msg)
        : std::invalid_argument(line > 0 ? "config line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

enum class Algorithm { gbfs, double_queue, tiebreak };
enum class Role { heuristic, policy };

struct Source {
    enum class Kind { none, ff_full, goal_count, ff_partial, surrogate };
    Kind kind = Kind::none;
    std::string arg;       // partial kind or training dataset
    std::string ff_kind;   // surrogate realised as FF on this partial model

    std::string to_string() const {
        switch (kind) {
        case Kind::none: return "none";
        case Kind::ff_full: return "ff-full";
        case Kind::goal_count: return "goal-count";
        case Kind::ff_partial: return "ff-partial(" + arg + ")";
        case Kind::surrogate: return "surrogate(" + arg + (ff_kind.empty() ? "" : ",ff:" + ff_kind) + ")";
        }
        return "?";
    }
};

struct Guidance {
    Role role = Role::heuristic;
    Source source;
};

struct RunSpec {
    std::string id;
    Algorithm algorithm = Algorithm::gbfs;
    std::vector<Guidance> guidance;  // tiebreak: primary first
};

struct ExperimentConfig {
    domains::GeneratorParams instances;  // test suite
    std::string instances_dir;           // load instead of generating when set
    std::size_t budget = kDefaultBudget;
    std::string train_dataset = "hgn";
    std::uint64_t train_seed = 1000;
    int train_count = 100;
    bool workshop_until_processed = false;
    int workers = 1;
    std::vector<RunSpec> runs;
};

inline const char* to_string(Algorithm a) {
    switch (a) {
    case Algorithm::gbfs: return "gbfs";
    case Algorithm::double_queue: return "double-queue";
    case Algorithm::tiebreak: return "tiebreak";
    }
    return "?";
}

inline Algorithm parse_algorithm(const std::string& s, int line = 0) {
    if (s == "gbfs") return Algorithm::gbfs;
    if (s == "double-queue" || s == "dq") return Algorithm::double_queue;
    if (s == "tiebreak" || s == "tb") return Algorithm::tiebreak;
    throw ConfigError(line, "unknown algorithm '" + s + "'");
}

inline Source parse_source(const std::string& s, int line = 0) {
    Source src;
    if (s == "none") return src;
    if (s == "ff-full") {
        src.kind = Source::Kind::ff_full;
        return src;
    }
    if (s == "goal-count") {
        src.kind = Source::Kind::goal_count;
        return src;
    }
    if (s == "surrogate") {  // dataset filled in from train.dataset
        src.kind = Source::Kind::surrogate;
        return src;
    }
    auto open = s.find('(');
    if (open == std::string::npos || s.back() != ')' || open + 2 > s.size() - 1)
        throw ConfigError(line, "malformed source '" + s + "'");
    const std::string head = s.substr(0, open);
    std::string inner = s.substr(open + 1, s.size() - open - 2);
    if (head == "ff-partial") {
        src.kind = Source::Kind::ff_partial;
        src.arg = inner;
    } else if (head == "surrogate") {
        src.kind = Source::Kind::surrogate;
        auto comma = inner.find(',');
        if (comma != std::string::npos) {
            std::string opt = inner.substr(comma + 1);
            inner = inner.substr(0, comma);
            if (opt.rfind("ff:", 0) != 0 || opt.size() == 3)
                throw ConfigError(line, "surrogate option must be ff:<kind>, got '" + opt + "'");
            src.ff_kind = opt.substr(3);
        }
        src.arg = inner;
    } else {
        throw ConfigError(line, "unknown source '" + head + "'");
    }
    if (src.arg.empty()) throw ConfigError(line, "empty argument in '" + s + "'");
    return src;
}

/// "role:source"; a bare source means the heuristic role.
inline Guidance parse_guidance(const std::string& s, int line = 0) {
    Guidance g;
    std::string rest = s;
    auto colon = s.find(':');
    if (colon != std::string::npos) {
        const std::string role = s.substr(0, colon);
        if (role == "heuristic" || role == "h") {
            rest = s.substr(colon + 1);
        } else if (role == "policy" || role == "p") {
            g.role = Role::policy;
            rest = s.substr(colon + 1);
        } else if (role.find('(') == std::string::npos) {
            throw ConfigError(line, "unknown role '" + role + "'");
        }
    }
    g.source = parse_source(rest, line);
    return g;
}

inline RunSpec parse_run(const std::string& id, const std::string& value, int line = 0) {
    std::istringstream in(value);
    std::string algo;
    if (!(in >> algo)) throw ConfigError(line, "run '" + id + "' is empty");
    RunSpec r{id, parse_algorithm(algo, line), {}};
    std::string tok;
    while (in >> tok) r.guidance.push_back(parse_guidance(tok, line));
    const std::size_t want = r.algorithm == Algorithm::gbfs ? 1 : 2;
    if (r.guidance.size() != want)
        throw ConfigError(line, std::string(to_string(r.algorithm)) + " needs exactly " + std::to_string(want) +
                                    " guidance source(s), run '" + id + "' has " + std::to_string(r.guidance.size()));
    return r;
}

inline domains::Range parse_range(const std::string& s, int line) {
    auto dash = s.find('-', 1);
    try {
        if (dash == std::string::npos) {
            int v = std::stoi(s);
            return {v, v};
        }
        return {std::stoi(s.substr(0, dash)), std::stoi(s.substr(dash + 1))};
    } catch (const std::exception&) {
        throw ConfigError(line, "bad range '" + s + "'");
    }
}

inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig cfg;
    std::map<std::string, std::string> kv;
    std::vector<std::pair<std::string, std::pair<std::string, int>>> runs;
    std::map<std::string, domains::Range> range_overrides;
    std::optional<std::pair<double, double>> wood_factor;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(line_no, "expected key = value");
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(line_no, "empty key");
        if (key.rfind("run.", 0) == 0) {
            const std::string id = key.substr(4);
            if (id.empty()) throw ConfigError(line_no, "empty run id");
            for (const auto& [other, _] : runs)
                if (other == id) throw ConfigError(line_no, "duplicate run id '" + id + "'");
            runs.push_back({id, {value, line_no}});
            continue;
        }
        if (key.rfind("range.", 0) == 0) {
            range_overrides[key.substr(6)] = parse_range(value, line_no);
            continue;
        }
        if (key == "wood_factor") {
            auto dash = value.find('-');
            try {
                double lo = std::stod(value.substr(0, dash));
                double hi = dash == std::string::npos ? lo : std::stod(value.substr(dash + 1));
                wood_factor = {lo, hi};
            } catch (const std::exception&) {
                throw ConfigError(line_no, "bad wood_factor '" + value + "'");
            }
            continue;
        }
        static const char* known[] = {"domain", "dataset", "seed", "count", "budget", "instances",
                                      "train.dataset", "train.seed", "train.count", "workers",
                                      "workshop_until_processed"};
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw ConfigError(line_no, "unknown key '" + key + "'");
        if (kv.count(key)) throw ConfigError(line_no, "duplicate key '" + key + "'");
        kv[key] = value;
    }
    auto get = [&](const std::string& k, const std::string& def) {
        auto it = kv.find(k);
        return it == kv.end() ? def : it->second;
    };
    auto num = [&](const std::string& k, long long def) -> long long {
        auto it = kv.find(k);
        if (it == kv.end()) return def;
        try {
            std::size_t used = 0;
            long long v = std::stoll(it->second, &used);
            if (used != it->second.size()) throw std::invalid_argument(k);
            return v;
        } catch (const std::exception&) {
            throw ConfigError(0, "key '" + k + "' needs an integer, got '" + it->second + "'");
        }
    };
    const std::string domain = get("domain", "");
    if (domain.empty()) throw ConfigError(0, "missing key 'domain'");
    const std::string dataset = get("dataset", "test");
    const long long seed = num("seed", 1), count = num("count", 50), budget = num("budget", kDefaultBudget);
    if (count < 1) throw ConfigError(0, "count must be at least 1");
    if (budget < 1) throw ConfigError(0, "budget must be at least 1");
    try {
        cfg.instances = domains::preset(domain, dataset, static_cast<std::uint64_t>(seed), static_cast<int>(count));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(0, e.what());
    }
    for (const auto& [k, r] : range_overrides) {
        if (!cfg.instances.ranges.count(k)) throw ConfigError(0, "no range '" + k + "' for domain " + domain);
        cfg.instances.ranges[k] = r;
    }
    if (wood_factor) {
        cfg.instances.wood_factor_lo = wood_factor->first;
        cfg.instances.wood_factor_hi = wood_factor->second;
    }
    cfg.instances_dir = get("instances", "");
    cfg.budget = static_cast<std::size_t>(budget);
    cfg.train_dataset = get("train.dataset", "hgn");
    cfg.train_seed = static_cast<std::uint64_t>(num("train.seed", 1000));
    cfg.train_count = static_cast<int>(num("train.count", 100));
    if (cfg.train_count < 1) throw ConfigError(0, "train.count must be at least 1");
    cfg.workers = static_cast<int>(num("workers", 1));
    if (cfg.workers < 1) throw ConfigError(0, "workers must be at least 1");
    const std::string wup = get("workshop_until_processed", "false");
    if (wup != "true" && wup != "false") throw ConfigError(0, "workshop_until_processed must be true or false");
    cfg.workshop_until_processed = wup == "true";
    for (const auto& [id, v] : runs) {
        cfg.runs.push_back(parse_run(id, v.first, v.second));
        for (auto& g : cfg.runs.back().guidance)
            if (g.source.kind == Source::Kind::surrogate && g.source.arg.empty()) g.source.arg = cfg.train_dataset;
    }
    if (cfg.runs.empty()) throw ConfigError(0, "no run.<id> entries");
    return cfg;
}

} // namespace pmplan::harness

#endif // PMPLAN_HARNESS_CONFIG_HPP
