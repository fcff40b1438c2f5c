#include "pedvis/pedigree.hpp"

#include "pedvis/errors.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_map>

namespace pedvis {

bool Person::diagnosed_with(int disease_index) const {
    return std::any_of(diagnoses.begin(), diagnoses.end(),
                       [&](const DiagnosisRecord& d) { return d.disease_index == disease_index; });
}

std::vector<std::string> CoupleUnit::members() const {
    std::vector<std::string> out;
    if (father) out.push_back(*father);
    if (mother) out.push_back(*mother);
    return out;
}

Role CoupleUnit::role_of(std::string_view person_id) const {
    if (is_single()) return Role::Single;
    if (father && *father == person_id) return Role::Father;
    return Role::Mother;
}

const Person& PedigreeGraph::person(std::string_view id) const {
    auto it = persons.find(std::string(id));
    if (it == persons.end()) throw UnknownPerson("unknown person '" + std::string(id) + "'");
    return it->second;
}

const CoupleUnit& PedigreeGraph::unit(std::string_view id) const {
    auto it = units.find(std::string(id));
    if (it == units.end()) throw UnknownUnit("unknown unit '" + std::string(id) + "'");
    return it->second;
}

int PedigreeGraph::max_generation() const {
    int g = -1;
    for (const auto& [id, u] : units) g = std::max(g, u.generation);
    return g;
}

std::string unit_id_for(std::vector<std::string> member_ids) {
    std::sort(member_ids.begin(), member_ids.end());
    std::string id;
    for (const auto& m : member_ids) {
        if (!id.empty()) id += '+';
        id += m;
    }
    return id;
}

namespace {

using ParentKey = std::pair<std::string, std::string>;  // (father, mother); "" when absent

ParentKey parent_key(const Person& p) {
    return {p.father_id.value_or(""), p.mother_id.value_or("")};
}

void check_inputs(const std::vector<Person>& persons) {
    std::set<std::string> seen;
    for (const auto& p : persons) {
        if (p.person_id.empty()) throw InvalidInput("empty person_id");
        if (p.family_id != persons.front().family_id)
            throw InvalidInput("persons from several families: '" + persons.front().family_id + "' and '" +
                               p.family_id + "'");
        if (!seen.insert(p.person_id).second) throw DuplicatePerson("duplicate person '" + p.person_id + "'");
    }
    for (const auto& p : persons) {
        for (const auto* parent : {&p.father_id, &p.mother_id}) {
            if (!*parent) continue;
            if (**parent == p.person_id) throw CycleError("person '" + p.person_id + "' is their own parent");
            if (!seen.count(**parent))
                throw DanglingReference("person '" + p.person_id + "' references missing parent '" + **parent + "'");
        }
    }
}

// Kahn's algorithm over parent -> child edges; returns persons with parents
// ahead of their children.
std::vector<std::string> ancestry_order(const std::map<std::string, Person>& persons) {
    std::unordered_map<std::string, int> pending;
    std::unordered_map<std::string, std::vector<std::string>> kids;
    for (const auto& [id, p] : persons) {
        int n = 0;
        for (const auto* parent : {&p.father_id, &p.mother_id}) {
            if (*parent) {
                kids[**parent].push_back(id);
                ++n;
            }
        }
        pending[id] = n;
    }
    std::queue<std::string> ready;
    for (const auto& [id, p] : persons)
        if (pending[id] == 0) ready.push(id);
    std::vector<std::string> order;
    order.reserve(persons.size());
    while (!ready.empty()) {
        std::string id = ready.front();
        ready.pop();
        order.push_back(id);
        for (const auto& k : kids[id])
            if (--pending[k] == 0) ready.push(k);
    }
    if (order.size() != persons.size()) {
        for (const auto& [id, n] : persons)
            if (pending[id] > 0) throw CycleError("ancestry cycle through person '" + id + "'");
    }
    return order;
}

}  // namespace

PedigreeGraph build_graph(const std::vector<Person>& input) {
    PedigreeGraph g;
    if (input.empty()) return g;
    check_inputs(input);
    g.family_id = input.front().family_id;
    for (const auto& p : input) g.persons.emplace(p.person_id, p);

    const auto order = ancestry_order(g.persons);
    std::unordered_map<std::string, std::size_t> rank;
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

    // Co-parenthood units.
    std::map<ParentKey, std::string> unit_of_pair;
    std::map<ParentKey, std::vector<std::string>> pair_children;
    for (const auto& [id, p] : g.persons)
        if (p.has_parents()) pair_children[parent_key(p)].push_back(id);

    auto add_unit = [&](CoupleUnit u) {
        for (const auto& m : u.members()) g.units_of_person[m].push_back(u.unit_id);
        auto id = u.unit_id;
        if (!g.units.emplace(id, std::move(u)).second)
            throw InvalidInput("unit id collision on '" + id + "'");
    };

    for (auto& [key, kids] : pair_children) {
        CoupleUnit u;
        if (!key.first.empty()) u.father = key.first;
        if (!key.second.empty()) u.mother = key.second;
        u.unit_id = unit_id_for(u.members());
        u.children = kids;  // map iteration already ascending
        unit_of_pair[key] = u.unit_id;
        for (const auto& c : kids) g.parent_edges[c] = u.unit_id;
        add_unit(std::move(u));
    }
    for (const auto& [id, p] : g.persons) {
        if (g.units_of_person.count(id)) continue;
        CoupleUnit u;
        u.unit_id = id;
        if (p.sex == Sex::Female)
            u.mother = id;
        else
            u.father = id;
        add_unit(std::move(u));
    }
    for (auto& [pid, list] : g.units_of_person) std::sort(list.begin(), list.end());

    // Generations: a unit depends on the parent units of its members, whose
    // members all precede it in ancestry order.
    std::vector<std::pair<std::size_t, std::string>> unit_order;
    for (const auto& [uid, u] : g.units) {
        std::size_t r = 0;
        for (const auto& m : u.members()) r = std::max(r, rank[m]);
        unit_order.emplace_back(r, uid);
    }
    std::sort(unit_order.begin(), unit_order.end());

    std::unordered_map<std::string, std::string> linking_child;  // unit -> member hanging it below its parent
    for (const auto& [r, uid] : unit_order) {
        CoupleUnit& u = g.units.at(uid);
        int best = -1;
        for (const auto& m : u.members()) {  // father first, so ties keep the father's side
            const Person& p = g.persons.at(m);
            if (!p.has_parents()) continue;
            const std::string& pu = unit_of_pair.at(parent_key(p));
            int depth = g.units.at(pu).generation + 1;
            if (depth > best) {
                best = depth;
                u.parent_unit = pu;
                linking_child[uid] = m;
            }
        }
        u.generation = std::max(best, 0);
    }

    for (const auto& [uid, u] : g.units) {
        if (u.parent_unit)
            g.units.at(*u.parent_unit).child_units.push_back(uid);
        else
            g.founder_units.push_back(uid);
    }
    for (auto& [uid, u] : g.units) {
        std::sort(u.child_units.begin(), u.child_units.end(), [&](const std::string& a, const std::string& b) {
            return std::tie(linking_child[a], a) < std::tie(linking_child[b], b);
        });
    }

    for (const auto& [pid, p] : g.persons) {
        for (const auto* parent : {&p.father_id, &p.mother_id})
            if (*parent) g.children_of[**parent].push_back(pid);
    }
    for (auto& [pid, kids] : g.children_of) {
        std::sort(kids.begin(), kids.end());
        kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
    }

    // Warnings.
    std::set<std::pair<std::string, std::string>> mismatched;
    for (const auto& [pid, p] : g.persons) {
        if (p.father_id && g.persons.at(*p.father_id).sex == Sex::Female) mismatched.emplace(*p.father_id, "father");
        if (p.mother_id && g.persons.at(*p.mother_id).sex == Sex::Male) mismatched.emplace(*p.mother_id, "mother");
    }
    for (const auto& [pid, role] : mismatched) {
        g.warnings.push_back({"SEX_ROLE_MISMATCH", pid,
                              "person '" + pid + "' is referenced as " + role + " but coded " +
                                  std::string(to_string(g.persons.at(pid).sex))});
    }
    for (const auto& [pid, p] : g.persons) {
        std::set<int> depths;
        for (const auto& uid : g.units_of_person.at(pid)) depths.insert(g.units.at(uid).generation);
        if (p.has_parents()) depths.insert(g.units.at(g.parent_edges.at(pid)).generation + 1);
        if (depths.size() > 1) {
            g.warnings.push_back({"GENERATION_CONFLICT", pid,
                                  "person '" + pid + "' reachable at generations " + std::to_string(*depths.begin()) +
                                      ".." + std::to_string(*depths.rbegin()) + "; using " +
                                      std::to_string(*depths.rbegin())});
        }
    }
    std::sort(g.warnings.begin(), g.warnings.end(), [](const GraphWarning& a, const GraphWarning& b) {
        return std::tie(a.person_id, a.code) < std::tie(b.person_id, b.code);
    });
    return g;
}

int generation_of(const PedigreeGraph& graph, std::string_view person_id) {
    auto it = graph.units_of_person.find(std::string(person_id));
    if (it == graph.units_of_person.end())
        throw UnknownPerson("unknown person '" + std::string(person_id) + "'");
    int g = 0;
    for (const auto& uid : it->second) g = std::max(g, graph.units.at(uid).generation);
    return g;
}

std::vector<std::string> members_of_generation(const PedigreeGraph& graph, int generation) {
    std::vector<std::string> out;
    if (generation < 0) return out;
    for (const auto& [pid, p] : graph.persons)
        if (generation_of(graph, pid) == generation) out.push_back(pid);
    return out;
}

std::string_view to_string(Sex sex) {
    switch (sex) {
        case Sex::Male: return "M";
        case Sex::Female: return "F";
        case Sex::Unknown: return "U";
    }
    return "U";
}

std::string_view to_string(VitalStatus status) {
    switch (status) {
        case VitalStatus::Alive: return "alive";
        case VitalStatus::Deceased: return "deceased";
        case VitalStatus::Suicide: return "suicide";
    }
    return "alive";
}

std::string_view to_string(Role role) {
    switch (role) {
        case Role::Father: return "father";
        case Role::Mother: return "mother";
        case Role::Single: return "single";
    }
    return "single";
}

}  // namespace pedvis
