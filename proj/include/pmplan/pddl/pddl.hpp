#ifndef PMPLAN_PDDL_PDDL_HPP
#define PMPLAN_PDDL_PDDL_HPP

// Typed STRIPS subset of PDDL: :strips and :typing, conjunctive positive
// preconditions and goals, add/delete effects. Anything else is rejected
// with ErrorKind::unsupported naming the construct.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "pmplan/pddl/sexpr.hpp"
#include "pmplan/strips.hpp"

namespace pmplan::pddl {

struct TypedName {
    std::string name;
    std::string type = "object";
};

/// Predicate applied to variables ("?x") or constants.
struct Atom {
    std::string predicate;
    std::vector<std::string> args;
    int line = 0;
    int column = 0;
};

struct Predicate {
    std::string name;
    std::vector<TypedName> params;
};

struct ActionSchema {
    std::string name;
    std::vector<TypedName> params;
    std::vector<Atom> pre;
    std::vector<Atom> add;
    std::vector<Atom> del;
};

struct LiftedDomain {
    std::string name;
    std::vector<std::string> requirements;
    std::vector<std::string> types;             // declaration order, "object" first
    std::map<std::string, std::string> parent;  // type -> supertype; "object" has none
    std::vector<TypedName> constants;
    std::vector<Predicate> predicates;
    std::vector<ActionSchema> actions;

    bool has_type(const std::string& t) const { return t == "object" || parent.count(t) > 0; }

    bool is_subtype(std::string t, const std::string& of) const {
        for (int guard = 0; guard <= static_cast<int>(parent.size()) + 1; ++guard) {
            if (t == of) return true;
            auto it = parent.find(t);
            if (it == parent.end()) return false;
            t = it->second;
        }
        return false;
    }

    const Predicate* find_predicate(const std::string& p) const {
        for (const auto& pr : predicates)
            if (pr.name == p) return &pr;
        return nullptr;
    }
};

struct LiftedProblem {
    std::string name;
    std::string domain_name;
    std::vector<TypedName> objects;
    std::vector<Atom> init;
    std::vector<Atom> goal;
};

namespace detail {

inline std::vector<TypedName> parse_typed_list(const std::vector<SExpr>& items, std::size_t from,
                                               bool variables) {
    std::vector<TypedName> out;
    std::size_t group_start = 0;
    for (std::size_t i = from; i < items.size(); ++i) {
        const auto& it = items[i];
        if (it.is_list) {
            if (!it.items.empty() && it.items[0].is_atom("either"))
                it.fail(ErrorKind::unsupported, "'either' types");
            it.fail(ErrorKind::syntax, "unexpected list in typed list");
        }
        if (it.atom == "-") {
            if (i + 1 >= items.size()) it.fail(ErrorKind::syntax, "missing type after '-'");
            const auto& t = items[i + 1];
            if (t.is_list && !t.items.empty() && t.items[0].is_atom("either"))
                t.fail(ErrorKind::unsupported, "'either' types");
            const auto& tname = t.expect_atom("type name");
            if (group_start == out.size()) it.fail(ErrorKind::syntax, "type without names");
            for (std::size_t k = group_start; k < out.size(); ++k) out[k].type = tname;
            group_start = out.size();
            ++i;
            continue;
        }
        bool is_var = !it.atom.empty() && it.atom[0] == '?';
        if (is_var != variables)
            it.fail(ErrorKind::syntax, variables ? "expected variable" : "unexpected variable");
        out.push_back({it.atom, "object"});
    }
    return out;
}

inline Atom parse_atom(const SExpr& e) {
    const auto& items = e.expect_list("atom");
    if (items.empty()) e.fail(ErrorKind::syntax, "empty atom");
    const auto& head = items[0].expect_atom("predicate name");
    static const std::set<std::string> unsupported = {"not", "or", "imply", "exists", "forall",
                                                      "when", "=", "increase", "decrease",
                                                      "assign", "scale-up", "scale-down",
                                                      "preference"};
    if (unsupported.count(head))
        e.fail(ErrorKind::unsupported, "'" + head + "' in formula");
    if (head == "and") e.fail(ErrorKind::syntax, "nested 'and'");
    Atom a;
    a.predicate = head;
    a.line = e.line;
    a.column = e.column;
    for (std::size_t i = 1; i < items.size(); ++i) {
        if (items[i].is_list) items[i].fail(ErrorKind::unsupported, "function terms");
        a.args.push_back(items[i].atom);
    }
    return a;
}

/// (and a b ...) | a | ()  — positive atoms only.
inline std::vector<Atom> parse_conjunction(const SExpr& e) {
    const auto& items = e.expect_list("condition");
    if (items.empty()) return {};
    if (items[0].is_atom("and")) {
        std::vector<Atom> out;
        for (std::size_t i = 1; i < items.size(); ++i) {
            const auto& sub = items[i].expect_list("condition");
            if (!sub.empty() && sub[0].is_atom("and")) {
                auto nested = parse_conjunction(items[i]);
                out.insert(out.end(), nested.begin(), nested.end());
            } else {
                out.push_back(parse_atom(items[i]));
            }
        }
        return out;
    }
    return {parse_atom(e)};
}

inline void parse_effect(const SExpr& e, std::vector<Atom>& add, std::vector<Atom>& del) {
    const auto& items = e.expect_list("effect");
    if (items.empty()) return;
    if (items[0].is_atom("and")) {
        for (std::size_t i = 1; i < items.size(); ++i) parse_effect(items[i], add, del);
        return;
    }
    if (items[0].is_atom("not")) {
        if (items.size() != 2) e.fail(ErrorKind::syntax, "'not' takes one argument");
        del.push_back(parse_atom(items[1]));
        return;
    }
    add.push_back(parse_atom(e));
}

inline void check_atom(const LiftedDomain& d, const Atom& a,
                       const std::map<std::string, std::string>& scope, bool allow_variables) {
    const Predicate* p = d.find_predicate(a.predicate);
    if (!p) throw ParseError(ErrorKind::type, a.line, a.column, "undeclared predicate '" + a.predicate + "'");
    if (p->params.size() != a.args.size())
        throw ParseError(ErrorKind::type, a.line, a.column,
                         "predicate '" + a.predicate + "' expects " + std::to_string(p->params.size()) +
                             " arguments");
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        const auto& arg = a.args[i];
        if (!allow_variables && !arg.empty() && arg[0] == '?')
            throw ParseError(ErrorKind::type, a.line, a.column, "variable '" + arg + "' in ground atom");
        auto it = scope.find(arg);
        if (it == scope.end())
            throw ParseError(ErrorKind::type, a.line, a.column, "unknown term '" + arg + "'");
        if (!d.is_subtype(it->second, p->params[i].type))
            throw ParseError(ErrorKind::type, a.line, a.column,
                             "'" + arg + "' of type " + it->second + " does not match " +
                                 p->params[i].type + " in '" + a.predicate + "'");
    }
}

inline void expect_define(const SExpr& root, const char* kind, std::string& name) {
    const auto& items = root.expect_list("define");
    if (items.size() < 2 || !items[0].is_atom("define")) root.fail(ErrorKind::syntax, "expected (define ...)");
    const auto& head = items[1].expect_list("definition header");
    if (head.size() != 2 || !head[0].is_atom(kind))
        items[1].fail(ErrorKind::syntax, std::string("expected (") + kind + " <name>)");
    name = head[1].expect_atom("name");
}

} // namespace detail

inline LiftedDomain parse_domain(std::string_view text) {
    using namespace detail;
    SExpr root = read_sexpr(text);
    LiftedDomain d;
    expect_define(root, "domain", d.name);
    d.types.push_back("object");
    const auto& items = root.items;
    std::vector<const SExpr*> action_exprs;
    for (std::size_t i = 2; i < items.size(); ++i) {
        const auto& sec = items[i].expect_list("domain section");
        if (sec.empty()) items[i].fail(ErrorKind::syntax, "empty section");
        const auto& key = sec[0].expect_atom("section keyword");
        if (key == ":requirements") {
            for (std::size_t k = 1; k < sec.size(); ++k) {
                const auto& r = sec[k].expect_atom("requirement");
                if (r != ":strips" && r != ":typing")
                    sec[k].fail(ErrorKind::unsupported, "requirement " + r);
                d.requirements.push_back(r);
            }
        } else if (key == ":types") {
            for (const auto& t : parse_typed_list(sec, 1, false)) {
                if (t.name == "object") continue;
                if (d.parent.count(t.name))
                    items[i].fail(ErrorKind::type, "type " + t.name + " declared twice");
                d.parent[t.name] = t.type;
                d.types.push_back(t.name);
            }
        } else if (key == ":constants") {
            d.constants = parse_typed_list(sec, 1, false);
        } else if (key == ":predicates") {
            for (std::size_t k = 1; k < sec.size(); ++k) {
                const auto& p = sec[k].expect_list("predicate declaration");
                if (p.empty()) sec[k].fail(ErrorKind::syntax, "empty predicate declaration");
                Predicate pred{p[0].expect_atom("predicate name"), parse_typed_list(p, 1, true)};
                if (d.find_predicate(pred.name))
                    sec[k].fail(ErrorKind::type, "predicate " + pred.name + " declared twice");
                d.predicates.push_back(std::move(pred));
            }
        } else if (key == ":action") {
            action_exprs.push_back(&items[i]);
        } else {
            items[i].fail(ErrorKind::unsupported, "section " + key);
        }
    }
    // types must resolve and be acyclic
    for (const auto& [t, p] : d.parent) {
        if (!d.has_type(p)) throw ParseError(ErrorKind::type, root.line, root.column, "undeclared type " + p);
        if (d.is_subtype(p, t)) throw ParseError(ErrorKind::type, root.line, root.column, "cyclic type " + t);
    }
    std::map<std::string, std::string> const_scope;
    for (const auto& c : d.constants) {
        if (!d.has_type(c.type)) root.fail(ErrorKind::type, "undeclared type " + c.type);
        const_scope[c.name] = c.type;
    }
    for (const auto& p : d.predicates)
        for (const auto& prm : p.params)
            if (!d.has_type(prm.type)) root.fail(ErrorKind::type, "undeclared type " + prm.type);

    for (const SExpr* ae : action_exprs) {
        const auto& a = ae->items;
        if (a.size() < 2) ae->fail(ErrorKind::syntax, "action without name");
        ActionSchema schema;
        schema.name = a[1].expect_atom("action name");
        for (std::size_t k = 2; k < a.size(); k += 2) {
            const auto& kw = a[k].expect_atom("action keyword");
            if (k + 1 >= a.size()) a[k].fail(ErrorKind::syntax, "missing value for " + kw);
            const auto& val = a[k + 1];
            if (kw == ":parameters") {
                schema.params = parse_typed_list(val.expect_list("parameters"), 0, true);
            } else if (kw == ":precondition") {
                schema.pre = parse_conjunction(val);
            } else if (kw == ":effect") {
                parse_effect(val, schema.add, schema.del);
            } else {
                a[k].fail(ErrorKind::unsupported, "action keyword " + kw);
            }
        }
        auto scope = const_scope;
        for (const auto& prm : schema.params) {
            if (!d.has_type(prm.type)) ae->fail(ErrorKind::type, "undeclared type " + prm.type);
            scope[prm.name] = prm.type;
        }
        for (const auto* list : {&schema.pre, &schema.add, &schema.del})
            for (const auto& atom : *list) check_atom(d, atom, scope, true);
        d.actions.push_back(std::move(schema));
    }
    return d;
}

inline LiftedProblem parse_problem(std::string_view text, const LiftedDomain& domain) {
    using namespace detail;
    SExpr root = read_sexpr(text);
    LiftedProblem p;
    expect_define(root, "problem", p.name);
    bool have_goal = false;
    for (std::size_t i = 2; i < root.items.size(); ++i) {
        const auto& sec = root.items[i].expect_list("problem section");
        if (sec.empty()) root.items[i].fail(ErrorKind::syntax, "empty section");
        const auto& key = sec[0].expect_atom("section keyword");
        if (key == ":domain") {
            if (sec.size() != 2) root.items[i].fail(ErrorKind::syntax, "(:domain <name>)");
            p.domain_name = sec[1].expect_atom("domain name");
            if (p.domain_name != domain.name)
                sec[1].fail(ErrorKind::domain_mismatch,
                            "problem is for domain '" + p.domain_name + "', not '" + domain.name + "'");
        } else if (key == ":objects") {
            p.objects = parse_typed_list(sec, 1, false);
        } else if (key == ":init") {
            for (std::size_t k = 1; k < sec.size(); ++k) p.init.push_back(parse_atom(sec[k]));
        } else if (key == ":goal") {
            if (sec.size() != 2) root.items[i].fail(ErrorKind::syntax, "(:goal <formula>)");
            p.goal = parse_conjunction(sec[1]);
            have_goal = true;
        } else if (key == ":requirements") {
            for (std::size_t k = 1; k < sec.size(); ++k) {
                const auto& r = sec[k].expect_atom("requirement");
                if (r != ":strips" && r != ":typing") sec[k].fail(ErrorKind::unsupported, "requirement " + r);
            }
        } else {
            root.items[i].fail(ErrorKind::unsupported, "section " + key);
        }
    }
    if (p.domain_name.empty()) root.fail(ErrorKind::syntax, "missing (:domain ...)");
    if (!have_goal) root.fail(ErrorKind::syntax, "missing (:goal ...)");
    std::map<std::string, std::string> scope;
    for (const auto& c : domain.constants) scope[c.name] = c.type;
    for (const auto& o : p.objects) {
        if (!domain.has_type(o.type)) root.fail(ErrorKind::type, "object " + o.name + " has undeclared type " + o.type);
        if (!scope.emplace(o.name, o.type).second) root.fail(ErrorKind::type, "object " + o.name + " declared twice");
    }
    for (const auto& a : p.init) check_atom(domain, a, scope, false);
    for (const auto& a : p.goal) check_atom(domain, a, scope, false);
    return p;
}

inline std::string atom_name(const std::string& predicate, const std::vector<std::string>& args) {
    std::string s = predicate + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) s += ",";
        s += args[i];
    }
    return s + ")";
}

/// Enumerates type-consistent facts and actions. Ids follow enumeration
/// order: predicates (resp. schemas) in declaration order, argument tuples
/// lexicographic over object declaration order. Actions whose precondition
/// contains a fact that is neither initially true nor added by any grounded
/// action are dropped.
inline StripsTask ground(const LiftedDomain& domain, const LiftedProblem& problem) {
    std::vector<TypedName> objects = domain.constants;
    objects.insert(objects.end(), problem.objects.begin(), problem.objects.end());
    std::unordered_map<std::string, int> object_index;
    for (std::size_t i = 0; i < objects.size(); ++i) object_index[objects[i].name] = static_cast<int>(i);

    std::map<std::string, std::vector<int>> extension;
    auto ext = [&](const std::string& type) -> const std::vector<int>& {
        auto it = extension.find(type);
        if (it != extension.end()) return it->second;
        std::vector<int> members;
        for (std::size_t i = 0; i < objects.size(); ++i)
            if (domain.is_subtype(objects[i].type, type)) members.push_back(static_cast<int>(i));
        return extension.emplace(type, std::move(members)).first->second;
    };

    // Fact layout: per predicate an offset and mixed-radix strides over the
    // positions of objects inside each parameter's type extension.
    struct PredLayout {
        FactIndex offset = 0;
        std::vector<std::size_t> stride;
        std::vector<std::vector<int>> position;  // param -> object index -> pos or -1
    };
    std::unordered_map<std::string, PredLayout> layout;
    std::vector<std::string> fact_names;
    for (const auto& pred : domain.predicates) {
        PredLayout L;
        L.offset = static_cast<FactIndex>(fact_names.size());
        std::size_t total = 1;
        std::vector<const std::vector<int>*> exts;
        for (const auto& prm : pred.params) {
            const auto& e = ext(prm.type);
            exts.push_back(&e);
            std::vector<int> pos(objects.size(), -1);
            for (std::size_t k = 0; k < e.size(); ++k) pos[e[k]] = static_cast<int>(k);
            L.position.push_back(std::move(pos));
            total *= e.size();
        }
        L.stride.assign(pred.params.size(), 1);
        for (std::size_t k = pred.params.size(); k-- > 1;) L.stride[k - 1] = L.stride[k] * exts[k]->size();
        std::vector<std::size_t> idx(pred.params.size(), 0);
        for (std::size_t n = 0; n < total; ++n) {
            std::vector<std::string> args;
            std::size_t rem = n;
            for (std::size_t k = 0; k < pred.params.size(); ++k) {
                args.push_back(objects[(*exts[k])[rem / L.stride[k]]].name);
                rem %= L.stride[k];
            }
            fact_names.push_back(atom_name(pred.name, args));
        }
        layout.emplace(pred.name, std::move(L));
    }
    auto fact_of = [&](const std::string& pred, const std::vector<int>& objs) -> std::optional<FactIndex> {
        const auto& L = layout.at(pred);
        std::size_t id = L.offset;
        for (std::size_t k = 0; k < objs.size(); ++k) {
            int pos = L.position[k][objs[k]];
            if (pos < 0) return std::nullopt;
            id += static_cast<std::size_t>(pos) * L.stride[k];
        }
        return static_cast<FactIndex>(id);
    };
    auto ground_atom = [&](const Atom& a) {
        std::vector<int> objs;
        for (const auto& arg : a.args) objs.push_back(object_index.at(arg));
        auto f = fact_of(a.predicate, objs);
        if (!f) throw ParseError(ErrorKind::type, a.line, a.column, "ill-typed atom " + a.predicate);
        return *f;
    };

    std::vector<FactIndex> init, goal;
    for (const auto& a : problem.init) init.push_back(ground_atom(a));
    for (const auto& a : problem.goal) goal.push_back(ground_atom(a));
    FactSet init_set(fact_names.size(), init);

    std::set<std::string> fluent_predicates;
    for (const auto& s : domain.actions)
        for (const auto& a : s.add) fluent_predicates.insert(a.predicate);

    std::vector<StripsAction> actions;
    for (const auto& schema : domain.actions) {
        const std::size_t arity = schema.params.size();
        std::map<std::string, int> var_pos;
        for (std::size_t k = 0; k < arity; ++k) var_pos[schema.params[k].name] = static_cast<int>(k);
        // Each atom is resolved against the binding; a term is either a
        // parameter position or a fixed object index.
        struct Term { bool is_var; int value; };
        struct CompiledAtom { std::string pred; std::vector<Term> terms; int depth = -1; bool is_static = false; };
        auto compile = [&](const Atom& a) {
            CompiledAtom c{a.predicate, {}, -1, fluent_predicates.count(a.predicate) == 0};
            for (const auto& arg : a.args) {
                auto it = var_pos.find(arg);
                if (it != var_pos.end()) {
                    c.terms.push_back({true, it->second});
                    c.depth = std::max(c.depth, it->second);
                } else {
                    c.terms.push_back({false, object_index.at(arg)});
                }
            }
            return c;
        };
        std::vector<CompiledAtom> pre, add, del;
        for (const auto& a : schema.pre) pre.push_back(compile(a));
        for (const auto& a : schema.add) add.push_back(compile(a));
        for (const auto& a : schema.del) del.push_back(compile(a));
        std::vector<std::vector<const CompiledAtom*>> checks_at(arity + 1);
        for (const auto& c : pre)
            if (c.is_static) checks_at[static_cast<std::size_t>(c.depth + 1)].push_back(&c);

        std::vector<int> binding(arity, -1);
        auto resolve = [&](const CompiledAtom& c) {
            std::vector<int> objs;
            for (const auto& t : c.terms) objs.push_back(t.is_var ? binding[t.value] : t.value);
            return fact_of(c.pred, objs);
        };
        auto static_ok = [&](std::size_t depth) {
            for (const auto* c : checks_at[depth]) {
                auto f = resolve(*c);
                if (!f || !init_set.contains(*f)) return false;
            }
            return true;
        };
        auto emit = [&]() {
            StripsAction act;
            act.id = static_cast<ActionId>(actions.size());
            std::vector<std::string> names;
            for (int o : binding) names.push_back(objects[o].name);
            act.name = atom_name(schema.name, names);
            auto fill = [&](const std::vector<CompiledAtom>& src, std::vector<FactIndex>& dst) {
                for (const auto& c : src) {
                    auto f = resolve(c);
                    if (!f) return false;
                    dst.push_back(*f);
                }
                return true;
            };
            if (!fill(pre, act.pre) || !fill(add, act.add) || !fill(del, act.del)) return;
            actions.push_back(std::move(act));
        };
        if (!static_ok(0)) continue;
        // iterative DFS over parameter positions
        std::vector<std::size_t> cursor(arity, 0);
        std::vector<const std::vector<int>*> exts;
        for (const auto& prm : schema.params) exts.push_back(&ext(prm.type));
        if (arity == 0) {
            emit();
            continue;
        }
        std::size_t depth = 0;
        while (true) {
            if (cursor[depth] >= exts[depth]->size()) {
                if (depth == 0) break;
                cursor[depth] = 0;
                --depth;
                ++cursor[depth];
                continue;
            }
            binding[depth] = (*exts[depth])[cursor[depth]];
            if (!static_ok(depth + 1)) {
                ++cursor[depth];
                continue;
            }
            if (depth + 1 == arity) {
                emit();
                ++cursor[depth];
            } else {
                ++depth;
            }
        }
    }

    // Drop actions with statically false preconditions.
    FactSet reachable_somehow = init_set;
    for (const auto& a : actions)
        for (FactIndex f : a.add) reachable_somehow.insert(f);
    std::vector<StripsAction> kept;
    for (auto& a : actions) {
        bool ok = std::all_of(a.pre.begin(), a.pre.end(),
                              [&](FactIndex f) { return reachable_somehow.contains(f); });
        if (!ok) continue;
        a.id = static_cast<ActionId>(kept.size());
        kept.push_back(std::move(a));
    }
    return StripsTask(std::move(fact_names), std::move(kept), init, goal);
}

namespace detail {
inline void write_typed(std::ostream& os, const std::vector<TypedName>& xs) {
    // group consecutive names sharing a type
    for (std::size_t i = 0; i < xs.size();) {
        std::size_t j = i;
        os << "   ";
        while (j < xs.size() && xs[j].type == xs[i].type) os << ' ' << xs[j++].name;
        os << " - " << xs[i].type << '\n';
        i = j;
    }
}
inline void write_atom(std::ostream& os, const Atom& a) {
    os << '(' << a.predicate;
    for (const auto& x : a.args) os << ' ' << x;
    os << ')';
}
} // namespace detail

inline std::string to_pddl(const LiftedProblem& p) {
    std::ostringstream os;
    os << "(define (problem " << p.name << ")\n  (:domain " << p.domain_name << ")\n  (:objects\n";
    detail::write_typed(os, p.objects);
    os << "  )\n  (:init\n";
    for (const auto& a : p.init) {
        os << "    ";
        detail::write_atom(os, a);
        os << '\n';
    }
    os << "  )\n  (:goal (and";
    for (const auto& a : p.goal) {
        os << "\n    ";
        detail::write_atom(os, a);
    }
    os << "))\n)\n";
    return os.str();
}

inline StripsTask ground_text(std::string_view domain_text, std::string_view problem_text) {
    auto d = parse_domain(domain_text);
    auto p = parse_problem(problem_text, d);
    return ground(d, p);
}

} // namespace pmplan::pddl

#endif // PMPLAN_PDDL_PDDL_HPP
