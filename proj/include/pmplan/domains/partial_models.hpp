#ifndef PMPLAN_DOMAINS_PARTIAL_MODELS_HPP
#define PMPLAN_DOMAINS_PARTIAL_MODELS_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pmplan/blackbox.hpp"
#include "pmplan/domains/instance.hpp"
#include "pmplan/pddl/pddl.hpp"
#include "pmplan/strips.hpp"

namespace pmplan::domains {

class KindMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct PartialModelOptions {
    // Woodworking logistics model: place every part that is not yet fully
    // processed at the workshop, instead of only the parts not yet cut.
    bool workshop_until_processed = false;
};

inline std::vector<std::string> partial_kinds(const std::string& domain) {
    if (domain == "logistics") return {"air", "truck"};
    if (domain == "grid") return {"robot", "keys"};
    if (domain == "woodworking") return {"wood", "logistics"};
    throw std::invalid_argument("unknown domain '" + domain + "'");
}

/// Incremental construction of a small STRIPS task by fact name.
class TaskBuilder {
public:
    FactIndex fact(const std::string& name) {
        auto [it, fresh] = index_.emplace(name, static_cast<FactIndex>(names_.size()));
        if (fresh) names_.push_back(name);
        return it->second;
    }
    std::optional<FactIndex> find(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    void action(const std::string& name, std::vector<FactIndex> pre, std::vector<FactIndex> add,
                std::vector<FactIndex> del) {
        StripsAction a;
        a.id = static_cast<ActionId>(actions_.size());
        a.name = name;
        a.pre = std::move(pre);
        a.add = std::move(add);
        a.del = std::move(del);
        actions_.push_back(std::move(a));
    }
    void goal(FactIndex f) { goal_.push_back(f); }
    std::size_t num_facts() const { return names_.size(); }

    StripsTask build(const FactSet& init) const { return StripsTask(names_, actions_, init.indices(), goal_); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, FactIndex> index_;
    std::vector<StripsAction> actions_;
    std::vector<FactIndex> goal_;
};

namespace detail {

inline std::string nm(const std::string& pred, const std::vector<std::string>& args) {
    return pddl::atom_name(pred, args);
}

/// σ as a per-fact copy table (full fact -> partial facts) plus an optional
/// pass that sees the whole decoded state.
struct SigmaSpec {
    std::vector<std::vector<FactIndex>> copy;
    std::function<void(const FactSet& full, FactSet& out)> extra;
};

class SigmaSpecBuilder {
public:
    SigmaSpecBuilder(const StripsTask& full, TaskBuilder& partial) : full_(full), partial_(partial) {
        spec_.copy.resize(full.num_facts());
    }
    /// Full fact `from` true => partial fact `to` true. Silently ignores full
    /// facts that do not exist.
    void copy(const std::string& from, const std::string& to) {
        auto f = full_.find_fact(from);
        if (!f) return;
        spec_.copy[*f].push_back(partial_.fact(to));
    }
    void copy_same(const std::string& name) { copy(name, name); }
    SigmaSpec take() { return std::move(spec_); }

private:
    const StripsTask& full_;
    TaskBuilder& partial_;
    SigmaSpec spec_;
};

inline PartialModel finish(const std::string& kind, const DomainInstance& inst, const TaskBuilder& b,
                           SigmaSpec spec) {
    const std::size_t full_n = inst.task->num_facts();
    const std::size_t part_n = b.num_facts();
    auto shared = std::make_shared<const SigmaSpec>(std::move(spec));
    StateMapping sigma(part_n, [shared, full_n, part_n](const BlackBoxState& bs) {
        FactSet full = decode_strips_state(bs, full_n);
        FactSet out(part_n);
        full.for_each([&](FactIndex f) {
            for (FactIndex t : shared->copy[f]) out.insert(t);
        });
        if (shared->extra) shared->extra(full, out);
        return out;
    });
    FactSet init = sigma(encode_strips_state(inst.task->init()));
    return {kind, std::make_shared<const StripsTask>(b.build(init)), std::move(sigma)};
}

inline std::vector<std::string> strings(const nlohmann::json& j) { return j.get<std::vector<std::string>>(); }

inline PartialModel air_model(const DomainInstance& inst) {
    const auto& ann = inst.annotation;
    const auto& full = *inst.task;
    const auto packages = strings(ann.at("packages"));
    const auto planes = strings(ann.at("airplanes"));
    const auto trucks = strings(ann.at("trucks"));
    const auto cities = strings(ann.at("cities"));
    const auto places = strings(ann.at("places"));
    auto city_of = [&](const std::string& place) { return ann.at("city_of").at(place).get<std::string>(); };

    TaskBuilder b;
    std::vector<std::string> movers = packages;
    movers.insert(movers.end(), planes.begin(), planes.end());
    for (const auto& x : movers)
        for (const auto& c : cities) b.fact(nm("at-city", {x, c}));
    for (const auto& p : packages)
        for (const auto& a : planes) b.fact(nm("in-plane", {p, a}));

    for (const auto& a : planes)
        for (const auto& c1 : cities)
            for (const auto& c2 : cities) {
                if (c1 == c2) continue;
                auto from = b.fact(nm("at-city", {a, c1})), to = b.fact(nm("at-city", {a, c2}));
                b.action(nm("fly", {a, c1, c2}), {from}, {to}, {from});
            }
    for (const auto& p : packages)
        for (const auto& a : planes)
            for (const auto& c : cities) {
                auto pc = b.fact(nm("at-city", {p, c})), ac = b.fact(nm("at-city", {a, c}));
                auto in = b.fact(nm("in-plane", {p, a}));
                b.action(nm("load", {p, a, c}), {pc, ac}, {in}, {pc});
                b.action(nm("unload", {p, a, c}), {in, ac}, {pc}, {in});
            }
    for (const auto& p : packages)
        b.goal(b.fact(nm("at-city", {p, city_of(ann.at("goal").at(p).get<std::string>())})));

    SigmaSpecBuilder sb(full, b);
    for (const auto& x : movers)
        for (const auto& l : places) sb.copy(nm("at", {x, l}), nm("at-city", {x, city_of(l)}));
    for (const auto& p : packages)
        for (const auto& a : planes) sb.copy(nm("in", {p, a}), nm("in-plane", {p, a}));
    SigmaSpec spec = sb.take();

    // a package inside a truck is in the truck's current city
    struct TruckRule {
        std::vector<std::pair<FactIndex, FactIndex>> located;  // at(t,l) -> city slot index
        std::vector<std::pair<FactIndex, std::vector<FactIndex>>> carried;  // in(p,t) -> at-city(p, c) per city
    };
    std::vector<TruckRule> rules;
    for (const auto& t : trucks) {
        TruckRule r;
        for (const auto& l : places) {
            auto f = full.find_fact(nm("at", {t, l}));
            if (!f) continue;
            FactIndex slot = 0;
            for (std::size_t c = 0; c < cities.size(); ++c)
                if (cities[c] == city_of(l)) slot = static_cast<FactIndex>(c);
            r.located.emplace_back(*f, slot);
        }
        for (const auto& p : packages) {
            auto f = full.find_fact(nm("in", {p, t}));
            if (!f) continue;
            std::vector<FactIndex> per_city;
            for (const auto& c : cities) per_city.push_back(*b.find(nm("at-city", {p, c})));
            r.carried.emplace_back(*f, std::move(per_city));
        }
        rules.push_back(std::move(r));
    }
    spec.extra = [rules](const FactSet& s, FactSet& out) {
        for (const auto& r : rules) {
            std::optional<FactIndex> slot;
            for (const auto& [f, c] : r.located)
                if (s.contains(f)) slot = c;
            if (!slot) continue;
            for (const auto& [f, per_city] : r.carried)
                if (s.contains(f)) out.insert(per_city[*slot]);
        }
    };
    return finish("air", inst, b, std::move(spec));
}

// Intra-city trucking with planes abstracted to an airport-to-airport airlift.
inline PartialModel truck_model(const DomainInstance& inst) {
    const auto& ann = inst.annotation;
    const auto& full = *inst.task;
    const auto packages = strings(ann.at("packages"));
    const auto planes = strings(ann.at("airplanes"));
    const auto trucks = strings(ann.at("trucks"));
    const auto places = strings(ann.at("places"));
    const auto airports = strings(ann.at("airports"));
    auto city_of = [&](const std::string& place) { return ann.at("city_of").at(place).get<std::string>(); };
    auto truck_city = [&](const std::string& t) { return ann.at("truck_city").at(t).get<std::string>(); };

    TaskBuilder b;
    for (const auto& p : packages)
        for (const auto& l : places) b.fact(nm("at", {p, l}));
    for (const auto& t : trucks)
        for (const auto& l : places)
            if (city_of(l) == truck_city(t)) b.fact(nm("at", {t, l}));
    for (const auto& p : packages)
        for (const auto& t : trucks) b.fact(nm("in-truck", {p, t}));

    for (const auto& t : trucks)
        for (const auto& l1 : places)
            for (const auto& l2 : places) {
                if (l1 == l2 || city_of(l1) != truck_city(t) || city_of(l2) != truck_city(t)) continue;
                auto from = b.fact(nm("at", {t, l1})), to = b.fact(nm("at", {t, l2}));
                b.action(nm("drive", {t, l1, l2}), {from}, {to}, {from});
            }
    for (const auto& p : packages)
        for (const auto& t : trucks)
            for (const auto& l : places) {
                if (city_of(l) != truck_city(t)) continue;
                auto pl = b.fact(nm("at", {p, l})), tl = b.fact(nm("at", {t, l}));
                auto in = b.fact(nm("in-truck", {p, t}));
                b.action(nm("load", {p, t, l}), {pl, tl}, {in}, {pl});
                b.action(nm("unload", {p, t, l}), {in, tl}, {pl}, {in});
            }
    for (const auto& p : packages)
        for (const auto& a1 : airports)
            for (const auto& a2 : airports) {
                if (a1 == a2) continue;
                auto from = b.fact(nm("at", {p, a1})), to = b.fact(nm("at", {p, a2}));
                b.action(nm("airlift", {p, a1, a2}), {from}, {to}, {from});
            }
    for (const auto& p : packages) b.goal(b.fact(nm("at", {p, ann.at("goal").at(p).get<std::string>()})));

    SigmaSpecBuilder sb(full, b);
    for (const auto& p : packages)
        for (const auto& l : places) sb.copy_same(nm("at", {p, l}));
    for (const auto& t : trucks)
        for (const auto& l : places)
            if (city_of(l) == truck_city(t)) sb.copy_same(nm("at", {t, l}));
    for (const auto& p : packages)
        for (const auto& t : trucks) sb.copy(nm("in", {p, t}), nm("in-truck", {p, t}));
    SigmaSpec spec = sb.take();

    // a package inside a plane is wherever the plane is
    struct PlaneRule {
        std::vector<std::pair<FactIndex, std::size_t>> located;  // at(a,l) -> place slot
        std::vector<std::pair<FactIndex, std::vector<FactIndex>>> carried;
    };
    std::vector<PlaneRule> rules;
    for (const auto& a : planes) {
        PlaneRule r;
        for (std::size_t li = 0; li < places.size(); ++li)
            if (auto f = full.find_fact(nm("at", {a, places[li]}))) r.located.emplace_back(*f, li);
        for (const auto& p : packages) {
            auto f = full.find_fact(nm("in", {p, a}));
            if (!f) continue;
            std::vector<FactIndex> per_place;
            for (const auto& l : places) per_place.push_back(*b.find(nm("at", {p, l})));
            r.carried.emplace_back(*f, std::move(per_place));
        }
        rules.push_back(std::move(r));
    }
    spec.extra = [rules](const FactSet& s, FactSet& out) {
        for (const auto& r : rules) {
            std::optional<std::size_t> slot;
            for (const auto& [f, li] : r.located)
                if (s.contains(f)) slot = li;
            if (!slot) continue;
            for (const auto& [f, per_place] : r.carried)
                if (s.contains(f)) out.insert(per_place[*slot]);
        }
    };
    return finish("truck", inst, b, std::move(spec));
}

struct GridLayout {
    int width = 0;
    int height = 0;
    std::vector<std::pair<std::string, std::string>> arcs;
};

inline GridLayout grid_layout(const nlohmann::json& ann) {
    GridLayout g{ann.at("width").get<int>(), ann.at("height").get<int>(), {}};
    auto cell = [](int x, int y) { return "node" + std::to_string(x) + "-" + std::to_string(y); };
    for (int y = 0; y < g.height; ++y)
        for (int x = 0; x < g.width; ++x) {
            if (x + 1 < g.width) g.arcs.emplace_back(cell(x, y), cell(x + 1, y));
            if (x > 0) g.arcs.emplace_back(cell(x, y), cell(x - 1, y));
            if (y + 1 < g.height) g.arcs.emplace_back(cell(x, y), cell(x, y + 1));
            if (y > 0) g.arcs.emplace_back(cell(x, y), cell(x, y - 1));
        }
    return g;
}

inline PartialModel robot_model(const DomainInstance& inst) {
    const auto& ann = inst.annotation;
    const auto cells = strings(ann.at("cells"));
    const auto layout = grid_layout(ann);
    std::set<std::string> locked;
    if (ann.contains("locks"))
        for (const auto& [c, shape] : ann.at("locks").items()) locked.insert(c);
    std::map<std::string, std::string> targets;
    if (ann.contains("targets")) targets = ann.at("targets").get<std::map<std::string, std::string>>();

    TaskBuilder b;
    for (const auto& c : cells) b.fact(nm("robot-at", {c}));
    for (const auto& c : cells) b.fact(nm("open", {c}));
    for (const auto& c : locked) b.fact(nm("locked", {c}));
    for (const auto& [k, t] : targets) b.fact(nm("delivered", {k}));

    for (const auto& [c1, c2] : layout.arcs) {
        auto from = b.fact(nm("robot-at", {c1})), to = b.fact(nm("robot-at", {c2}));
        b.action(nm("move", {c1, c2}), {from, b.fact(nm("open", {c2}))}, {to}, {from});
    }
    for (const auto& [c1, c2] : layout.arcs) {
        if (!locked.count(c2)) continue;
        auto lk = b.fact(nm("locked", {c2}));
        b.action(nm("unlock", {c1, c2}), {b.fact(nm("robot-at", {c1})), lk}, {b.fact(nm("open", {c2}))}, {lk});
    }
    for (const auto& [k, t] : targets)
        b.action(nm("deliver", {k, t}), {b.fact(nm("robot-at", {t}))}, {b.fact(nm("delivered", {k}))}, {});
    for (const auto& [k, t] : targets) b.goal(b.fact(nm("delivered", {k})));

    SigmaSpecBuilder sb(*inst.task, b);
    for (const auto& c : cells) {
        sb.copy(nm("at-robot", {c}), nm("robot-at", {c}));
        sb.copy_same(nm("open", {c}));
    }
    for (const auto& c : locked) sb.copy_same(nm("locked", {c}));
    for (const auto& [k, t] : targets) sb.copy(nm("at", {k, t}), nm("delivered", {k}));
    return finish("robot", inst, b, sb.take());
}

inline PartialModel keys_model(const DomainInstance& inst) {
    const auto& ann = inst.annotation;
    const auto cells = strings(ann.at("cells"));
    const auto keys = strings(ann.at("keys"));
    std::map<std::string, std::string> targets;
    if (ann.contains("targets")) targets = ann.at("targets").get<std::map<std::string, std::string>>();

    TaskBuilder b;
    for (const auto& k : keys)
        for (const auto& c : cells) b.fact(nm("at", {k, c}));
    for (const auto& k : keys) b.fact(nm("holding", {k}));

    for (const auto& k : keys)
        for (const auto& c : cells) {
            auto at = b.fact(nm("at", {k, c})), hold = b.fact(nm("holding", {k}));
            b.action(nm("pickup", {k, c}), {at}, {hold}, {at});
            b.action(nm("putdown", {k, c}), {hold}, {at}, {hold});
        }
    // mirrors pickup-and-loose so each real step is at most one model step
    for (const auto& knew : keys)
        for (const auto& kold : keys) {
            if (knew == kold) continue;
            for (const auto& c : cells) {
                auto new_at = b.fact(nm("at", {knew, c})), old_at = b.fact(nm("at", {kold, c}));
                auto new_hold = b.fact(nm("holding", {knew})), old_hold = b.fact(nm("holding", {kold}));
                b.action(nm("swap", {c, knew, kold}), {new_at, old_hold}, {new_hold, old_at}, {new_at, old_hold});
            }
        }
    for (const auto& [k, t] : targets) b.goal(b.fact(nm("at", {k, t})));

    SigmaSpecBuilder sb(*inst.task, b);
    for (const auto& k : keys) {
        for (const auto& c : cells) sb.copy_same(nm("at", {k, c}));
        sb.copy_same(nm("holding", {k}));
    }
    return finish("keys", inst, b, sb.take());
}

inline PartialModel wood_model(const DomainInstance& inst) {
    const auto& ann = inst.annotation;
    const auto parts = strings(ann.at("parts"));
    const auto boards = strings(ann.at("boards"));
    const auto colours = strings(ann.at("colours"));
    auto size = [](int s) { return "s" + std::to_string(s); };

    TaskBuilder b;
    for (const auto& p : parts) {
        for (const char* pred : {"unused", "available", "rough", "smooth", "untreated", "varnished", "colourless"})
            b.fact(nm(pred, {p}));
        for (const auto& c : colours) b.fact(nm("coloured", {p, c}));
    }
    for (const auto& bd : boards) {
        const int n = ann.at("board_size").at(bd).get<int>();
        for (int s = 0; s <= n; ++s) b.fact(nm("board-size", {bd, size(s)}));
    }

    for (const auto& bd : boards) {
        const int n = ann.at("board_size").at(bd).get<int>();
        for (const auto& p : parts)
            for (int s = 1; s <= n; ++s) {
                auto before = b.fact(nm("board-size", {bd, size(s)})), after = b.fact(nm("board-size", {bd, size(s - 1)}));
                auto unused = b.fact(nm("unused", {p}));
                b.action(nm("cut", {bd, p, size(s - 1), size(s)}), {unused, before},
                         {b.fact(nm("available", {p})), b.fact(nm("rough", {p})), b.fact(nm("untreated", {p})),
                          b.fact(nm("colourless", {p})), after},
                         {unused, before});
            }
    }
    for (const auto& p : parts) {
        auto rough = b.fact(nm("rough", {p})), smooth = b.fact(nm("smooth", {p}));
        auto untreated = b.fact(nm("untreated", {p})), colourless = b.fact(nm("colourless", {p}));
        b.action(nm("grind", {p}), {rough}, {smooth}, {rough});
        b.action(nm("varnish", {p}), {smooth, untreated}, {b.fact(nm("varnished", {p}))}, {untreated});
        for (const auto& c : colours)
            b.action(nm("spray", {p, c}), {colourless}, {b.fact(nm("coloured", {p, c}))}, {colourless});
    }
    for (const auto& p : parts) {
        const auto& attrs = ann.at("goal_attributes").at(p);
        if (attrs.contains("surface")) b.goal(b.fact(nm("smooth", {p})));
        if (attrs.contains("treatment")) b.goal(b.fact(nm("varnished", {p})));
        if (attrs.contains("colour")) b.goal(b.fact(nm("coloured", {p, attrs.at("colour").get<std::string>()})));
    }

    SigmaSpecBuilder sb(*inst.task, b);
    for (const auto& p : parts) {
        for (const char* pred : {"unused", "available", "rough", "smooth", "untreated", "varnished", "colourless"})
            sb.copy_same(nm(pred, {p}));
        for (const auto& c : colours) sb.copy_same(nm("coloured", {p, c}));
    }
    for (const auto& bd : boards) {
        const int n = ann.at("board_size").at(bd).get<int>();
        for (int s = 0; s <= n; ++s) sb.copy_same(nm("board-size", {bd, size(s)}));
    }
    return finish("wood", inst, b, sb.take());
}

inline PartialModel transport_model(const DomainInstance& inst, const PartialModelOptions& opt) {
    const auto& ann = inst.annotation;
    const auto& full = *inst.task;
    const auto parts = strings(ann.at("parts"));
    const auto boards = strings(ann.at("boards"));
    const auto locs = strings(ann.at("locations"));
    const auto workshop = ann.at("workshop").get<std::string>();
    const auto truck = ann.at("truck").get<std::string>();
    std::vector<std::string> objects = parts;
    objects.insert(objects.end(), boards.begin(), boards.end());

    TaskBuilder b;
    for (const auto& o : objects)
        for (const auto& l : locs) b.fact(nm("at", {o, l}));
    for (const auto& o : objects) b.fact(nm("in-truck", {o}));
    for (const auto& l : locs) b.fact(nm("truck-at", {l}));

    if (ann.contains("roads"))
        for (const auto& road : ann.at("roads")) {
            const auto a = road.at(0).get<std::string>(), c = road.at(1).get<std::string>();
            for (const auto& [from, to] : {std::pair{a, c}, std::pair{c, a}}) {
                auto f = b.fact(nm("truck-at", {from})), t = b.fact(nm("truck-at", {to}));
                b.action(nm("move", {from, to}), {f}, {t}, {f});
            }
        }
    for (const auto& o : objects)
        for (const auto& l : locs) {
            auto at = b.fact(nm("at", {o, l})), tr = b.fact(nm("truck-at", {l})), in = b.fact(nm("in-truck", {o}));
            b.action(nm("pickup", {o, l}), {at, tr}, {in}, {at});
            b.action(nm("drop", {o, l}), {in, tr}, {at}, {in});
        }
    for (const auto& p : parts) b.goal(b.fact(nm("at", {p, ann.at("goal_location").at(p).get<std::string>()})));

    SigmaSpecBuilder sb(full, b);
    for (const auto& o : objects) {
        for (const auto& l : locs) sb.copy_same(nm("at", {o, l}));
        sb.copy(nm("in-truck", {o, truck}), nm("in-truck", {o}));
    }
    for (const auto& l : locs) sb.copy(nm("truck-at", {truck, l}), nm("truck-at", {l}));
    SigmaSpec spec = sb.take();

    // parts held back at the workshop: not yet cut, or (optionally) missing
    // some goal attribute
    struct PartRule {
        FactIndex unused;
        std::vector<FactIndex> required;  // goal attribute facts in the full task
        std::vector<FactIndex> drop;      // partial facts locating the part
        FactIndex at_workshop;
    };
    std::vector<PartRule> rules;
    for (const auto& p : parts) {
        PartRule r{full.fact(nm("unused", {p})), {}, {}, *b.find(nm("at", {p, workshop}))};
        const auto& attrs = ann.at("goal_attributes").at(p);
        if (attrs.contains("surface")) r.required.push_back(full.fact(nm("smooth", {p})));
        if (attrs.contains("treatment")) r.required.push_back(full.fact(nm("varnished", {p})));
        if (attrs.contains("colour"))
            r.required.push_back(full.fact(nm("coloured", {p, attrs.at("colour").get<std::string>()})));
        for (const auto& l : locs) r.drop.push_back(*b.find(nm("at", {p, l})));
        r.drop.push_back(*b.find(nm("in-truck", {p})));
        rules.push_back(std::move(r));
    }
    const bool until_processed = opt.workshop_until_processed;
    spec.extra = [rules, until_processed](const FactSet& s, FactSet& out) {
        for (const auto& r : rules) {
            bool held = s.contains(r.unused);
            if (until_processed)
                for (FactIndex f : r.required) held = held || !s.contains(f);
            if (!held) continue;
            for (FactIndex f : r.drop) out.erase(f);
            out.insert(r.at_workshop);
        }
    };
    return finish("logistics", inst, b, std::move(spec));
}

} // namespace detail

/// Partial model of a generated instance. Kinds: air, truck (Logistics);
/// robot, keys (Grid); wood, logistics (Woodworking-PD).
inline PartialModel make_partial_model(const DomainInstance& inst, const std::string& kind,
                                       const PartialModelOptions& opt = {}) {
    if (kind == "full") return full_model(inst.task);
    auto kinds = partial_kinds(inst.domain);
    if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end())
        throw KindMismatch("partial model '" + kind + "' does not apply to domain " + inst.domain);
    if (kind == "air") return detail::air_model(inst);
    if (kind == "truck") return detail::truck_model(inst);
    if (kind == "robot") return detail::robot_model(inst);
    if (kind == "keys") return detail::keys_model(inst);
    if (kind == "wood") return detail::wood_model(inst);
    return detail::transport_model(inst, opt);
}

} // namespace pmplan::domains

#endif // PMPLAN_DOMAINS_PARTIAL_MODELS_HPP
