#ifndef PMPLAN_DOMAINS_GENERATORS_HPP
#define PMPLAN_DOMAINS_GENERATORS_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pmplan/blackbox.hpp"
#include "pmplan/domains/instance.hpp"
#include "pmplan/domains/pddl_sources.hpp"
#include "pmplan/ff.hpp"
#include "pmplan/pddl/pddl.hpp"
#include "pmplan/search.hpp"

namespace pmplan::domains {

inline constexpr std::size_t kProbeBudget = 100000;
inline constexpr int kMaxAttempts = 200;

/// Dataset presets. "test" follows the evaluation sizes, "hgn" the default
/// training sizes; the other names are the biased training variants.
inline GeneratorParams preset(const std::string& domain, const std::string& dataset,
                              std::uint64_t seed = 1, int count = 1) {
    GeneratorParams p;
    p.domain = domain;
    p.dataset = dataset;
    p.seed = seed;
    p.count = count;
    if (domain == "logistics") {
        if (dataset == "test") {
            p.ranges = {{"packages", {3, 4}}, {"cities", {5, 7}}, {"airplanes", {4, 5}}, {"locations", {4, 6}}};
        } else if (dataset == "hgn" || dataset == "hgn-one") {
            p.ranges = {{"packages", {2, 4}}, {"cities", {2, 5}}, {"airplanes", {2, 4}}, {"locations", {2, 5}}};
        } else {
            throw std::invalid_argument("unknown logistics dataset '" + dataset + "'");
        }
    } else if (domain == "grid") {
        if (dataset == "test") {
            p.ranges = {{"width", {7, 8}}, {"height", {6, 6}}, {"locks", {2, 3}}, {"keys", {2, 4}}, {"shapes", {1, 3}}};
        } else if (dataset == "hgn") {
            p.ranges = {{"width", {4, 6}}, {"height", {4, 6}}, {"locks", {1, 2}}, {"keys", {1, 3}}, {"shapes", {1, 3}}};
        } else if (dataset == "hgn-onelock") {
            p.ranges = {{"width", {4, 6}}, {"height", {4, 6}}, {"locks", {1, 1}}, {"keys", {1, 3}}, {"shapes", {1, 3}}};
        } else if (dataset == "hgn-gridsize") {
            p.ranges = {{"width", {2, 2}}, {"height", {1, 1}}, {"locks", {1, 1}}, {"keys", {1, 3}}, {"shapes", {1, 3}}};
        } else {
            throw std::invalid_argument("unknown grid dataset '" + dataset + "'");
        }
    } else if (domain == "woodworking") {
        if (dataset == "test") {
            p.ranges = {{"parts", {2, 3}}, {"locations", {3, 8}}, {"colours", {2, 3}}};
        } else if (dataset == "hgn" || dataset == "hgn-move") {
            p.ranges = {{"parts", {1, 2}}, {"locations", {2, 6}}, {"colours", {2, 3}}};
        } else if (dataset == "hgn-oneloc") {
            p.ranges = {{"parts", {1, 2}}, {"locations", {1, 1}}, {"colours", {2, 3}}};
        } else {
            throw std::invalid_argument("unknown woodworking dataset '" + dataset + "'");
        }
    } else {
        throw std::invalid_argument("unknown domain '" + domain + "'");
    }
    return p;
}

namespace detail {

struct Draft {
    pddl::LiftedProblem problem;
    nlohmann::json annotation;
};

inline void add_object(Draft& d, const std::string& name, const std::string& type) {
    d.problem.objects.push_back({name, type});
    d.annotation["objects"][name] = type;
}

inline Draft draft_logistics(const GeneratorParams& p, Rng& rng, const std::string& name) {
    Draft d;
    d.problem.name = name;
    d.problem.domain_name = "logistics";
    auto& ann = d.annotation;
    ann["domain"] = "logistics";
    const bool same_city = p.dataset == "hgn-one";
    const int n_cities = rng.uniform(p.range("cities"));
    const int n_planes = rng.uniform(p.range("airplanes"));
    const int n_packages = rng.uniform(p.range("packages"));

    std::vector<std::string> cities, airports, places;
    std::vector<std::vector<std::string>> city_places;
    for (int c = 0; c < n_cities; ++c) cities.push_back("city" + std::to_string(c));
    for (const auto& c : cities) add_object(d, c, "city");
    for (int c = 0; c < n_cities; ++c) {
        const int n_loc = rng.uniform(p.range("locations"));
        std::vector<std::string> here;
        std::string apt = "apt" + std::to_string(c);
        add_object(d, apt, "airport");
        airports.push_back(apt);
        here.push_back(apt);
        for (int l = 1; l < n_loc; ++l) {
            std::string loc = "loc" + std::to_string(c) + "-" + std::to_string(l);
            add_object(d, loc, "location");
            here.push_back(loc);
        }
        for (const auto& pl : here) {
            ann["city_of"][pl] = cities[c];
            places.push_back(pl);
        }
        ann["airport_of"][cities[c]] = apt;
        city_places.push_back(std::move(here));
    }
    for (int c = 0; c < n_cities; ++c) {
        std::string t = "truck" + std::to_string(c);
        add_object(d, t, "truck");
        ann["trucks"].push_back(t);
        ann["truck_city"][t] = cities[c];
    }
    for (int a = 0; a < n_planes; ++a) {
        std::string pl = "plane" + std::to_string(a);
        add_object(d, pl, "airplane");
        ann["airplanes"].push_back(pl);
    }
    for (int k = 0; k < n_packages; ++k) {
        std::string pk = "pkg" + std::to_string(k);
        add_object(d, pk, "package");
        ann["packages"].push_back(pk);
    }
    ann["cities"] = cities;
    ann["places"] = places;
    ann["airports"] = airports;

    auto& init = d.problem.init;
    for (int c = 0; c < n_cities; ++c)
        for (const auto& pl : city_places[c]) init.push_back(atom("in-city", {pl, cities[c]}));
    for (int c = 0; c < n_cities; ++c)
        init.push_back(atom("at", {"truck" + std::to_string(c), rng.pick(city_places[c])}));
    for (int a = 0; a < n_planes; ++a) init.push_back(atom("at", {"plane" + std::to_string(a), rng.pick(airports)}));
    const int home = rng.uniform(0, n_cities - 1);
    for (int k = 0; k < n_packages; ++k) {
        const auto& pool = same_city ? city_places[home] : places;
        std::string pk = "pkg" + std::to_string(k);
        std::string from = rng.pick(pool);
        std::string to = from;
        if (pool.size() > 1)
            while (to == from) to = rng.pick(pool);
        init.push_back(atom("at", {pk, from}));
        d.problem.goal.push_back(atom("at", {pk, to}));
        ann["goal"][pk] = to;
    }
    return d;
}

inline std::string cell_name(int x, int y) { return "node" + std::to_string(x) + "-" + std::to_string(y); }

inline Draft draft_grid(const GeneratorParams& p, Rng& rng, const std::string& name) {
    Draft d;
    d.problem.name = name;
    d.problem.domain_name = "grid";
    auto& ann = d.annotation;
    ann["domain"] = "grid";
    const bool two_cell = p.dataset == "hgn-gridsize";
    const int w = rng.uniform(p.range("width"));
    const int h = rng.uniform(p.range("height"));
    const int n_cells = w * h;
    const int n_keys = rng.uniform(p.range("keys"));
    const int n_locks = std::min(rng.uniform(p.range("locks")), n_cells - 1);
    const int n_shapes = std::min(rng.uniform(p.range("shapes")), n_keys);
    ann["width"] = w;
    ann["height"] = h;

    std::vector<std::string> cells;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) cells.push_back(cell_name(x, y));
    for (const auto& c : cells) add_object(d, c, "place");
    std::vector<std::string> keys, shapes;
    for (int k = 0; k < n_keys; ++k) keys.push_back("key" + std::to_string(k));
    for (int s = 0; s < n_shapes; ++s) shapes.push_back("shape" + std::to_string(s));
    for (const auto& k : keys) add_object(d, k, "key");
    for (const auto& s : shapes) add_object(d, s, "shape");
    ann["cells"] = cells;
    ann["keys"] = keys;

    std::vector<std::string> key_shape;
    for (int k = 0; k < n_keys; ++k) key_shape.push_back(rng.pick(shapes));

    std::string robot;
    std::set<std::string> locked;
    if (two_cell) {
        robot = cells[0];
        locked.insert(cells[1]);
    } else {
        std::vector<std::string> order = cells;
        rng.shuffle(order);
        robot = order[0];
        for (int i = 0; i < n_locks; ++i) locked.insert(order[static_cast<std::size_t>(i + 1)]);
    }
    std::vector<std::string> open_cells;
    for (const auto& c : cells)
        if (!locked.count(c)) open_cells.push_back(c);

    auto& init = d.problem.init;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const auto here = cell_name(x, y);
            if (x + 1 < w) init.push_back(atom("conn", {here, cell_name(x + 1, y)}));
            if (x > 0) init.push_back(atom("conn", {here, cell_name(x - 1, y)}));
            if (y + 1 < h) init.push_back(atom("conn", {here, cell_name(x, y + 1)}));
            if (y > 0) init.push_back(atom("conn", {here, cell_name(x, y - 1)}));
        }
    }
    for (int k = 0; k < n_keys; ++k) init.push_back(atom("key-shape", {keys[k], key_shape[k]}));
    // every lock shape is carried by at least one key
    for (const auto& c : cells) {
        if (locked.count(c)) {
            std::string s = rng.pick(key_shape);
            init.push_back(atom("lock-shape", {c, s}));
            init.push_back(atom("locked", {c}));
            ann["locks"][c] = s;
        } else {
            init.push_back(atom("open", {c}));
        }
    }
    std::vector<std::string> key_at;
    for (int k = 0; k < n_keys; ++k) {
        key_at.push_back(two_cell ? robot : rng.pick(open_cells));
        init.push_back(atom("at", {keys[k], key_at.back()}));
        ann["key_shape"][keys[k]] = key_shape[k];
    }
    init.push_back(atom("at-robot", {robot}));
    init.push_back(atom("arm-empty", {}));
    ann["robot"] = robot;

    std::vector<int> goal_keys(static_cast<std::size_t>(n_keys));
    for (int k = 0; k < n_keys; ++k) goal_keys[k] = k;
    rng.shuffle(goal_keys);
    const int n_goals = two_cell ? 1 : rng.uniform(1, n_keys);
    goal_keys.resize(static_cast<std::size_t>(n_goals));
    std::sort(goal_keys.begin(), goal_keys.end());
    for (int k : goal_keys) {
        std::string target = two_cell ? cells[1] : key_at[k];
        while (target == key_at[k]) target = rng.pick(cells);
        d.problem.goal.push_back(atom("at", {keys[k], target}));
        ann["targets"][keys[k]] = target;
    }
    return d;
}

inline Draft draft_woodworking(const GeneratorParams& p, Rng& rng, const std::string& name) {
    Draft d;
    d.problem.name = name;
    d.problem.domain_name = "woodworking-pd";
    auto& ann = d.annotation;
    ann["domain"] = "woodworking";
    const bool move_only = p.dataset == "hgn-move";
    const int n_parts = rng.uniform(p.range("parts"));
    const int n_locs = rng.uniform(p.range("locations"));
    const int n_colours = rng.uniform(p.range("colours"));
    const double wood_factor = rng.uniform_real(p.wood_factor_lo, p.wood_factor_hi);
    const int units = std::max(n_parts, static_cast<int>(std::lround(n_parts * wood_factor)));
    const int n_boards = rng.uniform(1, n_parts);

    std::vector<std::string> locs, parts, boards, colours, sizes;
    for (int l = 0; l < n_locs; ++l) locs.push_back("loc" + std::to_string(l));
    for (int i = 0; i < n_parts; ++i) parts.push_back("part" + std::to_string(i));
    for (int i = 0; i < n_boards; ++i) boards.push_back("board" + std::to_string(i));
    for (int i = 0; i < n_colours; ++i) colours.push_back("colour" + std::to_string(i));
    // split the supply into n_boards positive board sizes
    std::vector<int> board_units(static_cast<std::size_t>(n_boards), 1);
    for (int u = n_boards; u < units; ++u) ++board_units[static_cast<std::size_t>(rng.uniform(0, n_boards - 1))];
    const int max_size = *std::max_element(board_units.begin(), board_units.end());
    for (int s = 0; s <= max_size; ++s) sizes.push_back("s" + std::to_string(s));

    for (const auto& l : locs) add_object(d, l, "location");
    add_object(d, "truck0", "truck");
    for (const auto& c : colours) add_object(d, c, "colour");
    for (const auto& s : sizes) add_object(d, s, "size");
    for (const auto& b : boards) add_object(d, b, "board");
    for (const auto& pt : parts) add_object(d, pt, "part");

    const std::string workshop = locs[0];
    ann["locations"] = locs;
    ann["workshop"] = workshop;
    ann["truck"] = "truck0";
    ann["parts"] = parts;
    ann["boards"] = boards;
    ann["colours"] = colours;
    ann["wood_factor"] = wood_factor;

    // connected road map: random spanning tree plus a few extra roads
    std::set<std::pair<int, int>> roads;
    for (int l = 1; l < n_locs; ++l) {
        int other = rng.uniform(0, l - 1);
        roads.insert({other, l});
    }
    const int extra = n_locs / 2;
    for (int e = 0; e < extra && n_locs > 2; ++e) {
        int a = rng.uniform(0, n_locs - 1), b = rng.uniform(0, n_locs - 1);
        if (a != b) roads.insert({std::min(a, b), std::max(a, b)});
    }
    auto& init = d.problem.init;
    for (const auto& [a, b] : roads) {
        init.push_back(atom("road", {locs[a], locs[b]}));
        init.push_back(atom("road", {locs[b], locs[a]}));
        ann["roads"].push_back({locs[a], locs[b]});
    }
    init.push_back(atom("workshop", {workshop}));
    init.push_back(atom("truck-at", {"truck0", rng.pick(locs)}));
    for (int s = 0; s < max_size; ++s) init.push_back(atom("size-next", {sizes[s], sizes[s + 1]}));
    for (const auto& c : colours) init.push_back(atom("spray-colour", {c}));

    std::vector<std::string> away(locs.begin() + 1, locs.end());
    if (away.empty()) away.push_back(workshop);
    for (int b = 0; b < n_boards; ++b) {
        init.push_back(atom("at", {boards[b], rng.pick(away)}));
        init.push_back(atom("board-size", {boards[b], sizes[board_units[b]]}));
        ann["board_size"][boards[b]] = board_units[b];
    }
    for (const auto& pt : parts) {
        std::string dest;
        if (move_only) {
            std::string from = rng.pick(locs);
            init.push_back(atom("available", {pt}));
            init.push_back(atom("at", {pt, from}));
            init.push_back(atom("rough", {pt}));
            init.push_back(atom("untreated", {pt}));
            init.push_back(atom("colourless", {pt}));
            dest = from;
            while (dest == from && locs.size() > 1) dest = rng.pick(locs);
            ann["goal_attributes"][pt] = nlohmann::json::object();
        } else {
            init.push_back(atom("unused", {pt}));
            dest = rng.pick(away);
            nlohmann::json attrs = nlohmann::json::object();
            while (attrs.empty()) {
                if (rng.coin()) attrs["surface"] = "smooth";
                if (rng.coin()) attrs["treatment"] = "varnished";
                if (rng.coin()) attrs["colour"] = rng.pick(colours);
            }
            if (attrs.contains("surface")) d.problem.goal.push_back(atom("smooth", {pt}));
            if (attrs.contains("treatment")) d.problem.goal.push_back(atom("varnished", {pt}));
            if (attrs.contains("colour")) d.problem.goal.push_back(atom("coloured", {pt, attrs["colour"]}));
            ann["goal_attributes"][pt] = attrs;
        }
        d.problem.goal.push_back(atom("at", {pt, dest}));
        ann["goal_location"][pt] = dest;
    }
    return d;
}

inline bool probe_solvable(const std::shared_ptr<const StripsTask>& task) {
    auto bb = wrap_strips_as_blackbox(task);
    auto ff = lift_heuristic(std::make_shared<FFHeuristic>(task), full_model(task));
    SearchOptions opt;
    opt.budget = kProbeBudget;
    return gbfs(bb, *ff, opt).outcome == Outcome::solved;
}

using DraftFn = std::function<Draft(const GeneratorParams&, Rng&, const std::string&)>;

inline std::vector<DomainInstance> generate(const GeneratorParams& p, const DraftFn& draft) {
    const auto domain = pddl::parse_domain(domain_pddl(p.domain));
    std::vector<DomainInstance> out;
    for (int i = 0; i < p.count; ++i) {
        const std::string id = std::to_string(p.seed) + "-" + std::to_string(i);
        bool done = false;
        for (int attempt = 0; attempt < kMaxAttempts && !done; ++attempt) {
            Rng rng(derive_seed(p.seed, static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(attempt)));
            Draft dr = draft(p, rng, p.domain + "-" + p.dataset + "-" + id);
            auto task = std::make_shared<const StripsTask>(pddl::ground(domain, dr.problem));
            if (!probe_solvable(task)) continue;
            dr.annotation["attempt"] = attempt;
            out.push_back({id, p.domain, p.dataset, std::move(dr.problem), std::move(task), std::move(dr.annotation)});
            done = true;
        }
        if (!done) throw InfeasibleRange("no solvable instance found for " + id);
    }
    return out;
}

} // namespace detail

inline std::vector<DomainInstance> gen_logistics(const GeneratorParams& p) {
    check_params(p, {{"packages", 1}, {"cities", 1}, {"airplanes", 1}, {"locations", 1}});
    return detail::generate(p, detail::draft_logistics);
}

inline std::vector<DomainInstance> gen_grid(const GeneratorParams& p) {
    check_params(p, {{"width", 1}, {"height", 1}, {"locks", 0}, {"keys", 1}, {"shapes", 1}});
    Range w = p.range("width"), h = p.range("height");
    if (w.hi * h.hi < 2) throw InfeasibleRange("grid needs at least two cells");
    return detail::generate(p, detail::draft_grid);
}

inline std::vector<DomainInstance> gen_woodworking_pd(const GeneratorParams& p) {
    check_params(p, {{"parts", 1}, {"locations", 1}, {"colours", 1}});
    if (p.wood_factor_lo < 1.0 || p.wood_factor_lo > p.wood_factor_hi)
        throw InfeasibleRange("wood factor range must satisfy 1 <= lo <= hi");
    return detail::generate(p, detail::draft_woodworking);
}

inline std::vector<DomainInstance> generate(const GeneratorParams& p) {
    if (p.domain == "logistics") return gen_logistics(p);
    if (p.domain == "grid") return gen_grid(p);
    if (p.domain == "woodworking") return gen_woodworking_pd(p);
    throw std::invalid_argument("unknown domain '" + p.domain + "'");
}

} // namespace pmplan::domains

#endif // PMPLAN_DOMAINS_GENERATORS_HPP
