#ifndef PMPLAN_HARNESS_REPORTS_HPP
#define PMPLAN_HARNESS_REPORTS_HPP

// Tables and plot-ready CSV from run records.
//
// Coverage tables read the grid position from the config id:
//   [<tag>:]<row>+<col>
// where <row> names the learned guidance (or "none") and <col> the STRIPS
// model (or "none"). Cells with a "none" side and no tag are shared by every
// tag, so one set of single-source runs serves several combination tables.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pmplan/harness/runner.hpp"

namespace pmplan::harness {

struct GridPos {
    std::string tag;
    std::string row;
    std::string col;
};

inline std::optional<GridPos> parse_grid_id(const std::string& id) {
    GridPos p;
    std::string rest = id;
    auto colon = rest.find(':');
    // a colon inside parentheses belongs to a source, not a tag
    auto paren = rest.find('(');
    if (colon != std::string::npos && (paren == std::string::npos || colon < paren)) {
        p.tag = rest.substr(0, colon);
        rest = rest.substr(colon + 1);
    }
    auto plus = rest.find('+');
    if (plus == std::string::npos || plus == 0 || plus + 1 == rest.size()) return std::nullopt;
    p.row = rest.substr(0, plus);
    p.col = rest.substr(plus + 1);
    return p;
}

struct CoverageCell {
    int solved = 0;
    int runs = 0;
    bool beats_both = false;     // combination above its row-alone and column-alone cells
    bool below_learned = false;  // combination below its row-alone cell
};

struct CoverageTable {
    std::string tag;
    std::vector<std::string> rows;
    std::vector<std::string> cols;
    std::map<std::pair<std::string, std::string>, CoverageCell> cells;
    std::vector<std::string> warnings;

    const CoverageCell* cell(const std::string& r, const std::string& c) const {
        auto it = cells.find({r, c});
        return it == cells.end() ? nullptr : &it->second;
    }
};

inline bool is_full_column(const std::string& c) { return c == "ff-full" || c == "full" || c == "ff"; }

inline CoverageTable coverage_table(const std::vector<RunRecord>& records, const std::string& tag = "") {
    CoverageTable t;
    t.tag = tag;
    std::vector<std::string> rows, cols;
    auto note = [](std::vector<std::string>& v, const std::string& x) {
        if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
    };
    for (const auto& r : records) {
        auto pos = parse_grid_id(r.config);
        if (!pos) continue;
        const bool shared = pos->tag.empty() && (pos->row == "none" || pos->col == "none");
        if (pos->tag != tag && !shared) continue;
        note(rows, pos->row);
        note(cols, pos->col);
        auto& c = t.cells[{pos->row, pos->col}];
        ++c.runs;
        if (r.solved()) ++c.solved;
    }
    // rows: learned variants in order of appearance, "none" last;
    // columns: "none" first, full model last
    for (const auto& r : rows)
        if (r != "none") t.rows.push_back(r);
    if (std::count(rows.begin(), rows.end(), "none")) t.rows.push_back("none");
    if (std::count(cols.begin(), cols.end(), "none")) t.cols.push_back("none");
    for (const auto& c : cols)
        if (c != "none" && !is_full_column(c)) t.cols.push_back(c);
    for (const auto& c : cols)
        if (is_full_column(c)) t.cols.push_back(c);

    if (t.cells.empty()) t.warnings.push_back("incomplete grid: no records");
    for (const auto& r : t.rows)
        for (const auto& c : t.cols) {
            if (r == "none" && c == "none") continue;
            if (!t.cell(r, c)) t.warnings.push_back("incomplete grid: missing cell " + r + " x " + c);
        }
    std::set<int> run_counts;
    for (const auto& [k, c] : t.cells) run_counts.insert(c.runs);
    if (run_counts.size() > 1) t.warnings.push_back("cells cover different numbers of instances");

    for (auto& [k, c] : t.cells) {
        const auto& [r, col] = k;
        if (r == "none" || col == "none") continue;
        const CoverageCell* alone_row = t.cell(r, "none");
        const CoverageCell* alone_col = t.cell("none", col);
        if (alone_row && alone_col) c.beats_both = c.solved > alone_row->solved && c.solved > alone_col->solved;
        if (alone_row) c.below_learned = c.solved < alone_row->solved;
    }
    return t;
}

inline std::string to_markdown(const CoverageTable& t) {
    std::string out = "|" + std::string(t.tag.empty() ? "" : " " + t.tag + " ") + "|";
    for (const auto& c : t.cols) out += " " + c + " |";
    out += "\n|---|";
    for (std::size_t i = 0; i < t.cols.size(); ++i) out += "---:|";
    out += "\n";
    for (const auto& r : t.rows) {
        out += "| " + r + " |";
        for (const auto& c : t.cols) {
            const CoverageCell* cell = t.cell(r, c);
            std::string v;
            if (cell) {
                v = std::to_string(cell->solved);
                if (cell->beats_both) v = "**" + v + "**";
                if (cell->below_learned) v += " (-)";
            }
            out += " " + v + " |";
        }
        out += "\n";
    }
    if (!t.rows.empty()) out += "\n**n** = beats both single sources; (-) = below the learned source alone\n";
    for (const auto& w : t.warnings) out += "\nwarning: " + w;
    if (!t.warnings.empty()) out += "\n";
    return out;
}

inline std::string to_csv(const CoverageTable& t) {
    std::string out = "row,col,solved,runs,beats_both,below_learned\n";
    for (const auto& r : t.rows)
        for (const auto& c : t.cols) {
            const CoverageCell* cell = t.cell(r, c);
            if (!cell) continue;
            out += csv_field(r) + "," + csv_field(c) + "," + std::to_string(cell->solved) + "," +
                   std::to_string(cell->runs) + "," + (cell->beats_both ? "1" : "0") + "," +
                   (cell->below_learned ? "1" : "0") + "\n";
        }
    return out;
}

/// Alternative-algorithm comparison: each combination cell shows the base
/// coverage with "+N" when the alternative solves N more.
struct ComparisonCell {
    int base = 0;
    int alternative = 0;
    int gain = 0;               // max(0, alternative - base)
    bool new_win = false;       // alternative beats both single sources, base does not
};

struct ComparisonTable {
    std::vector<std::string> rows;
    std::vector<std::string> cols;
    std::map<std::pair<std::string, std::string>, ComparisonCell> cells;
    CoverageTable base;
    CoverageTable alternative;
};

inline ComparisonTable comparison_table(const std::vector<RunRecord>& records, const std::string& base_tag,
                                        const std::string& alt_tag) {
    ComparisonTable t;
    t.base = coverage_table(records, base_tag);
    t.alternative = coverage_table(records, alt_tag);
    t.rows = t.base.rows;
    t.cols = t.base.cols;
    for (const auto& [k, b] : t.base.cells) {
        const auto& [r, c] = k;
        const CoverageCell* a = t.alternative.cell(r, c);
        ComparisonCell cc;
        cc.base = b.solved;
        cc.alternative = a ? a->solved : b.solved;
        if (r != "none" && c != "none" && a) {
            cc.gain = std::max(0, a->solved - b.solved);
            cc.new_win = a->beats_both && !b.beats_both;
        }
        t.cells[k] = cc;
    }
    return t;
}

inline std::string to_markdown(const ComparisonTable& t) {
    std::string out = "| |";
    for (const auto& c : t.cols) out += " " + c + " |";
    out += "\n|---|";
    for (std::size_t i = 0; i < t.cols.size(); ++i) out += "---:|";
    out += "\n";
    for (const auto& r : t.rows) {
        out += "| " + r + " |";
        for (const auto& c : t.cols) {
            auto it = t.cells.find({r, c});
            std::string v;
            if (it != t.cells.end()) {
                v = std::to_string(it->second.base);
                if (it->second.gain > 0) {
                    std::string g = "+" + std::to_string(it->second.gain);
                    v += it->second.new_win ? "**" + g + "**" : g;
                }
            }
            out += " " + v + " |";
        }
        out += "\n";
    }
    return out;
}

inline std::string to_csv(const ComparisonTable& t) {
    std::string out = "row,col,base,alternative,gain,new_win\n";
    for (const auto& [k, c] : t.cells)
        out += csv_field(k.first) + "," + csv_field(k.second) + "," + std::to_string(c.base) + "," +
               std::to_string(c.alternative) + "," + std::to_string(c.gain) + "," + (c.new_win ? "1" : "0") + "\n";
    return out;
}

inline std::map<std::string, const RunRecord*> by_instance(const std::vector<RunRecord>& records,
                                                           const std::string& config) {
    std::map<std::string, const RunRecord*> out;
    for (const auto& r : records)
        if (r.config == config) out[r.instance] = &r;
    return out;
}

class MissingConfig : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ScatterPoint {
    std::string instance;
    std::size_t a = 0;
    std::size_t b = 0;
};

/// Paired expansions per instance; unsolved runs sit at budget + 1.
inline std::vector<ScatterPoint> scatter_data(const std::vector<RunRecord>& records, const std::string& config_a,
                                              const std::string& config_b, std::size_t budget = kDefaultBudget) {
    auto a = by_instance(records, config_a), b = by_instance(records, config_b);
    if (a.empty()) throw MissingConfig("no records for config '" + config_a + "'");
    if (b.empty()) throw MissingConfig("no records for config '" + config_b + "'");
    auto x = [budget](const RunRecord* r) { return r->solved() ? r->expansions : budget + 1; };
    std::vector<ScatterPoint> out;
    for (const auto& [inst, ra] : a) {
        auto it = b.find(inst);
        if (it == b.end()) continue;
        out.push_back({inst, x(ra), x(it->second)});
    }
    return out;
}

inline std::string scatter_csv(const std::vector<ScatterPoint>& pts) {
    std::string out = "instance,expansions_a,expansions_b\n";
    for (const auto& p : pts) out += csv_field(p.instance) + "," + std::to_string(p.a) + "," + std::to_string(p.b) + "\n";
    return out;
}

/// Step curves: solved[i][j] = runs of configs[j] solved within bounds[i]
/// expansions. Bounds are 0, every distinct solving expansion count, and the
/// budget.
struct CumulativeCoverage {
    std::vector<std::string> configs;
    std::vector<std::size_t> bounds;
    std::vector<std::vector<int>> solved;
};

inline CumulativeCoverage cumulative_coverage(const std::vector<RunRecord>& records,
                                              const std::vector<std::string>& configs,
                                              std::size_t budget = kDefaultBudget) {
    CumulativeCoverage c;
    c.configs = configs;
    std::set<std::size_t> bounds{0, budget};
    for (const auto& r : records)
        if (r.solved() && std::find(configs.begin(), configs.end(), r.config) != configs.end())
            bounds.insert(std::min(r.expansions, budget));
    c.bounds.assign(bounds.begin(), bounds.end());
    for (std::size_t bound : c.bounds) {
        std::vector<int> row;
        for (const auto& cfg : configs) {
            int n = 0;
            for (const auto& r : records)
                if (r.config == cfg && r.solved() && r.expansions <= bound) ++n;
            row.push_back(n);
        }
        c.solved.push_back(std::move(row));
    }
    return c;
}

inline std::string to_csv(const CumulativeCoverage& c) {
    std::string out = "expansions";
    for (const auto& cfg : c.configs) out += "," + csv_field(cfg);
    out += "\n";
    for (std::size_t i = 0; i < c.bounds.size(); ++i) {
        out += std::to_string(c.bounds[i]);
        for (int v : c.solved[i]) out += "," + std::to_string(v);
        out += "\n";
    }
    return out;
}

/// Plan-cost comparison against a baseline. Instances where neither side
/// solved are excluded; when only one side solved, that side is credited
/// with the better plan.
struct CostComparison {
    std::string baseline;
    std::string other;
    int other_better = 0;   // other strictly cheaper, or only other solved
    int baseline_better = 0;
    int equal = 0;
    int only_other = 0;     // included in other_better
    int only_baseline = 0;  // included in baseline_better
};

inline std::vector<CostComparison> cost_comparison(const std::vector<RunRecord>& records, const std::string& baseline,
                                                   const std::vector<std::string>& others) {
    auto base = by_instance(records, baseline);
    if (base.empty()) throw MissingConfig("no records for config '" + baseline + "'");
    std::vector<CostComparison> out;
    for (const auto& o : others) {
        auto other = by_instance(records, o);
        if (other.empty()) throw MissingConfig("no records for config '" + o + "'");
        CostComparison c{baseline, o};
        for (const auto& [inst, rb] : base) {
            auto it = other.find(inst);
            if (it == other.end()) continue;
            const RunRecord* ro = it->second;
            if (!rb->solved() && !ro->solved()) continue;
            if (rb->solved() && !ro->solved()) {
                ++c.baseline_better;
                ++c.only_baseline;
            } else if (!rb->solved()) {
                ++c.other_better;
                ++c.only_other;
            } else if (ro->cost < rb->cost) {
                ++c.other_better;
            } else if (rb->cost < ro->cost) {
                ++c.baseline_better;
            } else {
                ++c.equal;
            }
        }
        out.push_back(c);
    }
    return out;
}

inline std::string to_csv(const std::vector<CostComparison>& cs) {
    std::string out =
        "# unsolved on both sides: excluded; solved on one side only: counted as better for that side\n"
        "baseline,other,other_better,baseline_better,equal,only_other,only_baseline\n";
    for (const auto& c : cs)
        out += csv_field(c.baseline) + "," + csv_field(c.other) + "," + std::to_string(c.other_better) + "," +
               std::to_string(c.baseline_better) + "," + std::to_string(c.equal) + "," + std::to_string(c.only_other) +
               "," + std::to_string(c.only_baseline) + "\n";
    return out;
}

} // namespace pmplan::harness

#endif // PMPLAN_HARNESS_REPORTS_HPP
