#ifndef PMPLAN_TASK_IO_HPP
#define PMPLAN_TASK_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "pmplan/strips.hpp"

namespace pmplan {

// Grounded-task dump:
//   {facts:[names], actions:[{name,pre,add,del}], init:[indices], goal:[indices]}

inline nlohmann::json task_to_json(const StripsTask& task) {
    nlohmann::json j;
    j["facts"] = task.fact_names();
    auto& acts = j["actions"] = nlohmann::json::array();
    for (const auto& a : task.actions()) {
        acts.push_back({{"name", a.name}, {"pre", a.pre}, {"add", a.add}, {"del", a.del}});
    }
    j["init"] = task.init().indices();
    j["goal"] = task.goal();
    return j;
}

inline StripsTask task_from_json(const nlohmann::json& j) {
    auto facts = j.at("facts").get<std::vector<std::string>>();
    std::vector<StripsAction> actions;
    ActionId id = 0;
    for (const auto& a : j.at("actions")) {
        StripsAction act;
        act.id = id++;
        act.name = a.at("name").get<std::string>();
        act.pre = a.at("pre").get<std::vector<FactIndex>>();
        act.add = a.at("add").get<std::vector<FactIndex>>();
        act.del = a.at("del").get<std::vector<FactIndex>>();
        actions.push_back(std::move(act));
    }
    return StripsTask(std::move(facts), std::move(actions),
                      j.at("init").get<std::vector<FactIndex>>(),
                      j.at("goal").get<std::vector<FactIndex>>());
}

inline std::string dump_task(const StripsTask& task, int indent = -1) {
    return task_to_json(task).dump(indent);
}

inline StripsTask load_task(const std::string& text) {
    return task_from_json(nlohmann::json::parse(text));
}

} // namespace pmplan

#endif // PMPLAN_TASK_IO_HPP
