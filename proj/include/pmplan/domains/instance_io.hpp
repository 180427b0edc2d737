#ifndef PMPLAN_DOMAINS_INSTANCE_IO_HPP
#define PMPLAN_DOMAINS_INSTANCE_IO_HPP

// On-disk layout: <root>/<domain>/<dataset>/<id>.pddl with the annotation in
// <id>.json next to it.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "pmplan/domains/instance.hpp"
#include "pmplan/domains/pddl_sources.hpp"
#include "pmplan/pddl/pddl.hpp"

namespace pmplan::domains {

namespace fs = std::filesystem;

inline std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const fs::path& p, const std::string& text) {
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << text;
}

inline fs::path instance_path(const fs::path& root, const std::string& domain, const std::string& dataset,
                              const std::string& id) {
    return root / domain / dataset / (id + ".pddl");
}

inline fs::path sidecar_path(const fs::path& pddl) {
    fs::path p = pddl;
    return p.replace_extension(".json");
}

/// Writes the problem file and its sidecar; returns the problem path.
inline fs::path write_instance(const fs::path& root, const DomainInstance& inst) {
    const auto path = instance_path(root, inst.domain, inst.dataset, inst.id);
    write_file(path, pddl::to_pddl(inst.problem));
    nlohmann::json side = inst.annotation;
    side["id"] = inst.id;
    side["domain"] = inst.domain;
    side["dataset"] = inst.dataset;
    write_file(sidecar_path(path), side.dump(1) + "\n");
    return path;
}

/// Domain file next to the instances, so external planners can read them.
inline fs::path write_domain_file(const fs::path& root, const std::string& domain) {
    const auto path = root / domain / "domain.pddl";
    write_file(path, std::string(domain_pddl(domain)));
    return path;
}

inline DomainInstance load_instance(const fs::path& pddl_path) {
    auto side = nlohmann::json::parse(read_file(sidecar_path(pddl_path)));
    DomainInstance inst;
    inst.id = side.at("id").get<std::string>();
    inst.domain = side.at("domain").get<std::string>();
    inst.dataset = side.at("dataset").get<std::string>();
    const auto domain = pddl::parse_domain(domain_pddl(inst.domain));
    inst.problem = pddl::parse_problem(read_file(pddl_path), domain);
    inst.task = std::make_shared<const StripsTask>(pddl::ground(domain, inst.problem));
    inst.annotation = std::move(side);
    return inst;
}

} // namespace pmplan::domains

#endif // PMPLAN_DOMAINS_INSTANCE_IO_HPP
