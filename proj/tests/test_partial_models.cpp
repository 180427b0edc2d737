#include <gtest/gtest.h>

#include <deque>
#include <map>

#include "pmplan/domains/generators.hpp"
#include "pmplan/domains/partial_models.hpp"
#include "pmplan/ff.hpp"
#include "pmplan/search.hpp"
#include "support/oracles.hpp"

using namespace pmplan;
using namespace pmplan::domains;

namespace {

// grounds a hand-written problem with its annotation
DomainInstance hand_instance(const std::string& domain, nlohmann::json ann, std::vector<pddl::Atom> init,
                             std::vector<pddl::Atom> goal) {
    pddl::LiftedProblem p;
    p.name = "hand";
    p.domain_name = domain == "woodworking" ? "woodworking-pd" : domain;
    for (const auto& [o, t] : ann.at("objects").items()) p.objects.push_back({o, t.get<std::string>()});
    p.init = std::move(init);
    p.goal = std::move(goal);
    ann["domain"] = domain;
    DomainInstance inst;
    inst.id = "hand";
    inst.domain = domain;
    inst.dataset = "hand";
    inst.task = std::make_shared<const StripsTask>(pddl::ground(pddl::parse_domain(domain_pddl(domain)), p));
    inst.problem = std::move(p);
    inst.annotation = std::move(ann);
    return inst;
}

FactSet project(const PartialModel& pm, const FactSet& s) { return pm.sigma(encode_strips_state(s)); }

Value ff_on_model(const PartialModel& pm, const FactSet& full_state) {
    return ff_heuristic(pm.task, project(pm, full_state));
}

// two cities, one airport each, one plane; the package starts at apt0 next
// to the plane and must reach apt1
DomainInstance two_city_logistics() {
    nlohmann::json ann;
    ann["objects"] = {{"city0", "city"},  {"city1", "city"},     {"apt0", "airport"},   {"apt1", "airport"},
                      {"truck0", "truck"}, {"truck1", "truck"}, {"plane0", "airplane"}, {"pkg0", "package"}};
    ann["cities"] = {"city0", "city1"};
    ann["places"] = {"apt0", "apt1"};
    ann["airports"] = {"apt0", "apt1"};
    ann["city_of"] = {{"apt0", "city0"}, {"apt1", "city1"}};
    ann["airport_of"] = {{"city0", "apt0"}, {"city1", "apt1"}};
    ann["trucks"] = {"truck0", "truck1"};
    ann["truck_city"] = {{"truck0", "city0"}, {"truck1", "city1"}};
    ann["airplanes"] = {"plane0"};
    ann["packages"] = {"pkg0"};
    ann["goal"] = {{"pkg0", "apt1"}};
    return hand_instance("logistics", ann,
                         {atom("in-city", {"apt0", "city0"}), atom("in-city", {"apt1", "city1"}),
                          atom("at", {"truck0", "apt0"}), atom("at", {"truck1", "apt1"}),
                          atom("at", {"plane0", "apt0"}), atom("at", {"pkg0", "apt0"})},
                         {atom("at", {"pkg0", "apt1"})});
}

// 2x1 grid: robot and key0 on node0-0, key0 must reach node1-0
DomainInstance two_cell_grid(bool locked) {
    nlohmann::json ann;
    ann["objects"] = {{"node0-0", "place"}, {"node1-0", "place"}, {"key0", "key"}, {"shape0", "shape"}};
    ann["width"] = 2;
    ann["height"] = 1;
    ann["cells"] = {"node0-0", "node1-0"};
    ann["keys"] = {"key0"};
    ann["key_shape"] = {{"key0", "shape0"}};
    ann["robot"] = "node0-0";
    ann["targets"] = {{"key0", "node1-0"}};
    std::vector<pddl::Atom> init{atom("conn", {"node0-0", "node1-0"}), atom("conn", {"node1-0", "node0-0"}),
                                 atom("key-shape", {"key0", "shape0"}), atom("open", {"node0-0"}),
                                 atom("at", {"key0", "node0-0"}),       atom("at-robot", {"node0-0"}),
                                 atom("arm-empty", {})};
    if (locked) {
        ann["locks"] = {{"node1-0", "shape0"}};
        init.push_back(atom("locked", {"node1-0"}));
        init.push_back(atom("lock-shape", {"node1-0", "shape0"}));
    } else {
        ann["locks"] = nlohmann::json::object();
        init.push_back(atom("open", {"node1-0"}));
    }
    return hand_instance("grid", ann, init, {atom("at", {"key0", "node1-0"})});
}

struct StateGraph {
    std::vector<FactSet> states;
    std::vector<std::vector<std::size_t>> succ;
    bool complete = true;
};

StateGraph explore(const StripsTask& t, std::size_t cap = 10000) {
    StateGraph g;
    std::map<std::vector<FactIndex>, std::size_t> index;
    auto intern = [&](const FactSet& s) {
        auto [it, fresh] = index.emplace(s.indices(), g.states.size());
        if (fresh) {
            g.states.push_back(s);
            g.succ.emplace_back();
        }
        return it->second;
    };
    intern(t.init());
    for (std::size_t i = 0; i < g.states.size(); ++i) {
        if (g.states.size() > cap) {
            g.complete = false;
            break;
        }
        for (const auto& [a, next] : successors(t, g.states[i])) {
            auto j = intern(next);
            g.succ[i].push_back(j);
        }
    }
    return g;
}

// every real transition maps to no partial step or to one partial step
void expect_zero_or_one_step(const PartialModel& pm, const StateGraph& g) {
    for (std::size_t i = 0; i < g.states.size(); ++i) {
        const FactSet from = project(pm, g.states[i]);
        std::vector<FactSet> options{from};
        for (const auto& [a, next] : successors(*pm.task, from)) options.push_back(next);
        for (std::size_t j : g.succ[i]) {
            const FactSet to = project(pm, g.states[j]);
            EXPECT_NE(std::find(options.begin(), options.end(), to), options.end())
                << pm.name << ": " << describe(*pm.task, from) << " -> " << describe(*pm.task, to);
        }
    }
}

std::vector<bool> goal_reachable(const StripsTask& t, const StateGraph& g) {
    std::vector<bool> ok(g.states.size(), false);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < g.states.size(); ++i) {
            if (ok[i]) continue;
            bool r = is_goal(t, g.states[i]);
            for (std::size_t j : g.succ[i]) r = r || ok[j];
            if (r) ok[i] = changed = true;
        }
    }
    return ok;
}

} // namespace

TEST(PartialModels, ProjectedInitIsModelInit) {
    for (const char* d : {"logistics", "grid", "woodworking"})
        for (const auto& inst : generate(preset(d, "test", 21, 2)))
            for (const auto& kind : partial_kinds(d)) {
                auto pm = make_partial_model(inst, kind);
                EXPECT_EQ(pm.name, kind);
                EXPECT_EQ(project(pm, inst.task->init()), pm.task->init()) << d << " " << kind;
                EXPECT_FALSE(is_dead_end(ff_heuristic(pm.task, pm.task->init()))) << d << " " << kind;
            }
}

TEST(PartialModels, GoalStatesProjectToGoalStates) {
    for (const char* d : {"logistics", "grid", "woodworking"})
        for (const auto& inst : generate(preset(d, "hgn", 22, 3))) {
            auto ff = lift_heuristic(std::make_shared<FFHeuristic>(inst.task), full_model(inst.task));
            auto r = gbfs(wrap_strips_as_blackbox(inst.task), *ff);
            ASSERT_EQ(r.outcome, Outcome::solved);
            FactSet s = inst.task->init();
            for (auto a : plan_from_labels(*inst.task, r.plan)) s = apply(inst.task->action(a), s);
            ASSERT_TRUE(is_goal(*inst.task, s));
            for (const auto& kind : partial_kinds(d)) {
                auto pm = make_partial_model(inst, kind);
                EXPECT_EQ(ff_on_model(pm, s), 0) << d << " " << kind;
            }
        }
}

TEST(PartialModels, KindMismatch) {
    auto grid = generate(preset("grid", "test", 1, 1));
    EXPECT_THROW(make_partial_model(grid[0], "air"), KindMismatch);
    EXPECT_THROW(make_partial_model(grid[0], "wood"), KindMismatch);
    auto wood = generate(preset("woodworking", "test", 1, 1));
    EXPECT_THROW(make_partial_model(wood[0], "robot"), KindMismatch);
    EXPECT_THROW(make_partial_model(wood[0], "nonsense"), KindMismatch);
    EXPECT_NO_THROW(make_partial_model(wood[0], "full"));
}

TEST(AirModel, HandInstance) {
    auto inst = two_city_logistics();
    auto pm = make_partial_model(inst, "air");
    // load, fly, unload
    EXPECT_EQ(ff_on_model(pm, inst.task->init()), 3);
    EXPECT_EQ(oracle::h_plus(*pm.task, pm.task->init()), 3);
    // package already at apt1
    FactSet solved = inst.task->init();
    solved.erase(inst.task->fact("at(pkg0,apt0)"));
    solved.insert(inst.task->fact("at(pkg0,apt1)"));
    EXPECT_EQ(ff_on_model(pm, solved), 0);
    // package inside truck0 counts as in city0
    FactSet carried = inst.task->init();
    carried.erase(inst.task->fact("at(pkg0,apt0)"));
    carried.insert(inst.task->fact("in(pkg0,truck0)"));
    EXPECT_TRUE(project(pm, carried).contains(pm.task->fact("at-city(pkg0,city0)")));
    EXPECT_EQ(ff_on_model(pm, carried), 3);
}

TEST(RobotModel, HandGrid) {
    auto open = two_cell_grid(false);
    auto pm = make_partial_model(open, "robot");
    EXPECT_EQ(ff_on_model(pm, open.task->init()), 2);  // move, deliver
    EXPECT_EQ(oracle::h_plus(*pm.task, pm.task->init()), 2);

    auto locked = two_cell_grid(true);
    auto pl = make_partial_model(locked, "robot");
    EXPECT_EQ(ff_on_model(pl, locked.task->init()), 3);  // unlock, move, deliver
    EXPECT_EQ(oracle::h_plus(*pl.task, pl.task->init()), 3);
}

TEST(KeysModel, GoalKeysAtTargets) {
    auto inst = two_cell_grid(false);
    auto pm = make_partial_model(inst, "keys");
    EXPECT_EQ(ff_on_model(pm, inst.task->init()), 2);  // pickup, putdown
    FactSet done = inst.task->init();
    done.erase(inst.task->fact("at(key0,node0-0)"));
    done.insert(inst.task->fact("at(key0,node1-0)"));
    EXPECT_EQ(ff_on_model(pm, done), 0);
}

TEST(KeysModel, RealStepsAreAtMostOneModelStep) {
    int checked = 0;
    for (const auto& inst : generate(preset("grid", "hgn-gridsize", 23, 6))) {
        auto g = explore(*inst.task);
        if (!g.complete) continue;
        expect_zero_or_one_step(make_partial_model(inst, "keys"), g);
        ++checked;
    }
    auto p = preset("grid", "hgn", 24, 4);
    p.ranges["width"] = {2, 3};
    p.ranges["height"] = {2, 2};
    for (const auto& inst : generate(p)) {
        auto g = explore(*inst.task);
        if (!g.complete) continue;
        expect_zero_or_one_step(make_partial_model(inst, "keys"), g);
        ++checked;
    }
    EXPECT_GE(checked, 6);
}

TEST(KeysModel, DeadEndsAreRealDeadEnds) {
    auto p = preset("grid", "hgn", 25, 6);
    p.ranges["width"] = {2, 3};
    p.ranges["height"] = {2, 2};
    int checked = 0;
    for (const auto& inst : generate(p)) {
        auto g = explore(*inst.task);
        if (!g.complete) continue;
        auto pm = make_partial_model(inst, "keys");
        auto reach = goal_reachable(*inst.task, g);
        for (std::size_t i = 0; i < g.states.size(); ++i)
            if (is_dead_end(ff_on_model(pm, g.states[i]))) EXPECT_FALSE(reach[i]);
        ++checked;
    }
    EXPECT_GE(checked, 3);
}

TEST(WoodModel, RealStepsAreAtMostOneModelStep) {
    int checked = 0;
    for (const char* dataset : {"hgn-oneloc", "hgn"}) {
        auto p = preset("woodworking", dataset, 26, 4);
        p.ranges["parts"] = {1, 1};
        p.ranges["locations"] = {1, 2};
        for (const auto& inst : generate(p)) {
            auto g = explore(*inst.task);
            if (!g.complete) continue;
            expect_zero_or_one_step(make_partial_model(inst, "wood"), g);
            ++checked;
        }
    }
    EXPECT_GE(checked, 4);
}

TEST(AirModel, RealStepsAreAtMostOneModelStep) {
    auto inst = two_city_logistics();
    auto g = explore(*inst.task);
    ASSERT_TRUE(g.complete);
    expect_zero_or_one_step(make_partial_model(inst, "air"), g);
}

TEST(AirModel, TiebreakWithFullFFSolvesWhereAirAloneFails) {
    auto p = preset("logistics", "hgn", 5, 3);
    p.ranges["cities"] = {2, 2};
    const auto inst = generate(p).at(2);
    auto bb = wrap_strips_as_blackbox(inst.task);
    auto pm = make_partial_model(inst, "air");

    auto air = lift_heuristic(std::make_shared<FFHeuristic>(pm.task), pm);
    SearchOptions wide;
    wide.budget = 20000;
    EXPECT_EQ(gbfs(bb, *air, wide).outcome, Outcome::budget_exhausted);

    auto air2 = lift_heuristic(std::make_shared<FFHeuristic>(pm.task), pm);
    auto full = lift_heuristic(std::make_shared<FFHeuristic>(inst.task), full_model(inst.task));
    SearchOptions narrow;
    narrow.budget = 200;
    auto r = tiebreak_gbfs(bb, *air2, *full, narrow);
    ASSERT_EQ(r.outcome, Outcome::solved);
    EXPECT_TRUE(validate_plan(*inst.task, plan_from_labels(*inst.task, r.plan)).ok());
}

TEST(TransportModel, WorkshopOption) {
    const auto inst = generate(preset("woodworking", "test", 27, 1)).at(0);
    const auto& t = *inst.task;
    const auto& ann = inst.annotation;
    const std::string part = ann.at("parts").at(0);
    const std::string workshop = ann.at("workshop");
    std::string away;
    for (const auto& l : ann.at("locations"))
        if (l != workshop) away = l;
    ASSERT_FALSE(away.empty());
    ASSERT_FALSE(ann.at("goal_attributes").at(part).empty());

    // cut but unfinished, sitting away from the workshop
    FactSet s = t.init();
    s.erase(t.fact("unused(" + part + ")"));
    for (const char* f : {"available", "rough", "untreated", "colourless"}) s.insert(t.fact(std::string(f) + "(" + part + ")"));
    s.insert(t.fact("at(" + part + "," + away + ")"));

    auto plain = make_partial_model(inst, "logistics");
    auto held = make_partial_model(inst, "logistics", {true});
    const auto at_away = "at(" + part + "," + away + ")", at_shop = "at(" + part + "," + workshop + ")";
    EXPECT_TRUE(project(plain, s).contains(plain.task->fact(at_away)));
    EXPECT_FALSE(project(plain, s).contains(plain.task->fact(at_shop)));
    EXPECT_TRUE(project(held, s).contains(held.task->fact(at_shop)));
    EXPECT_FALSE(project(held, s).contains(held.task->fact(at_away)));
    // uncut parts sit at the workshop under both settings
    for (const auto* pm : {&plain, &held}) {
        auto init = project(*pm, t.init());
        EXPECT_TRUE(init.contains(pm->task->fact(at_shop)));
    }
}
