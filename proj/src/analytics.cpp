#include "pedvis/analytics.hpp"

#include "pedvis/errors.hpp"

#include <algorithm>

namespace pedvis {

std::set<std::string> ancestors_inclusive(const PedigreeGraph& graph, std::string_view person_id) {
    std::set<std::string> out{graph.person(person_id).person_id};
    std::vector<const Person*> frontier{&graph.person(person_id)};
    while (!frontier.empty()) {
        const Person* p = frontier.back();
        frontier.pop_back();
        for (const auto* parent : {&p->father_id, &p->mother_id})
            if (*parent && out.insert(**parent).second) frontier.push_back(&graph.persons.at(**parent));
    }
    return out;
}

std::set<std::string> lowest_common_ancestors(const PedigreeGraph& graph, std::string_view a, std::string_view b) {
    const auto from_a = ancestors_inclusive(graph, a);
    const auto from_b = ancestors_inclusive(graph, b);
    std::set<std::string> common;
    std::set_intersection(from_a.begin(), from_a.end(), from_b.begin(), from_b.end(),
                          std::inserter(common, common.end()));
    // Every node on a path from c down to a common ancestor is itself a
    // common ancestor, so c is lowest iff none of its children is common.
    std::set<std::string> lowest;
    for (const auto& c : common) {
        auto kids = graph.children_of.find(c);
        const bool has_common_child =
            kids != graph.children_of.end() &&
            std::any_of(kids->second.begin(), kids->second.end(), [&](const std::string& k) { return common.count(k) > 0; });
        if (!has_common_child) lowest.insert(c);
    }
    return lowest;
}

std::vector<LineageChain> suicide_lineages(const PedigreeGraph& graph) {
    auto is_victim = [&](const std::string& id) { return graph.persons.at(id).vital_status == VitalStatus::Suicide; };
    auto victim_children = [&](const std::string& id) {
        std::vector<std::string> out;
        auto it = graph.children_of.find(id);
        if (it != graph.children_of.end())
            std::copy_if(it->second.begin(), it->second.end(), std::back_inserter(out), is_victim);
        return out;
    };
    auto has_victim_parent = [&](const Person& p) {
        return (p.father_id && is_victim(*p.father_id)) || (p.mother_id && is_victim(*p.mother_id));
    };

    std::vector<LineageChain> chains;
    for (const auto& [pid, p] : graph.persons) {
        if (p.vital_status != VitalStatus::Suicide || has_victim_parent(p)) continue;
        // Depth-first enumeration of every root-to-sink path in the victim subgraph.
        std::vector<std::string> path{pid};
        std::vector<std::vector<std::string>> pending{victim_children(pid)};
        while (!pending.empty()) {
            if (pending.back().empty()) {
                if (path.size() >= 2 && victim_children(path.back()).empty()) chains.push_back({path, {}});
                pending.pop_back();
                path.pop_back();
                continue;
            }
            // Take children in ascending order.
            std::string next = pending.back().front();
            pending.back().erase(pending.back().begin());
            path.push_back(next);
            pending.push_back(victim_children(next));
        }
    }
    for (auto& chain : chains) {
        const auto& first = graph.persons.at(chain.persons.front()).diagnoses;
        for (const auto& d : first) {
            bool everyone = std::all_of(chain.persons.begin(), chain.persons.end(), [&](const std::string& id) {
                return graph.persons.at(id).diagnosed_with(d.disease_index);
            });
            if (everyone) chain.shared_diagnoses.insert(d.disease_index);
        }
    }
    std::sort(chains.begin(), chains.end(),
              [](const LineageChain& x, const LineageChain& y) { return x.persons < y.persons; });
    return chains;
}

CooccurrenceMatrix diagnosis_cooccurrence(const Dataset& ds, Scope scope) {
    CooccurrenceMatrix m(ds.disease_count());
    for (const auto& [fid, g] : ds.families) {
        for (const auto& [pid, p] : g.persons) {
            if (scope == Scope::SuicideVictims && p.vital_status != VitalStatus::Suicide) continue;
            for (const auto& a : p.diagnoses)
                for (const auto& b : p.diagnoses) m.add(a.disease_index, b.disease_index);
        }
    }
    return m;
}

std::vector<IsolatedBurdenFinding> isolated_burden(const PedigreeGraph& graph, int min_diagnoses) {
    if (min_diagnoses < 1) throw InvalidInput("min_diagnoses must be at least 1");

    std::map<int, std::vector<const Person*>> by_generation;
    for (const auto& [pid, p] : graph.persons) by_generation[generation_of(graph, pid)].push_back(&p);

    auto alive_share = [](std::size_t alive, std::size_t total) {
        return total == 0 ? 1.0 : static_cast<double>(alive) / static_cast<double>(total);
    };

    std::vector<IsolatedBurdenFinding> out;
    for (const auto& [pid, p] : graph.persons) {
        if (p.vital_status != VitalStatus::Suicide) continue;
        const int count = static_cast<int>(p.diagnoses.size());
        if (count < min_diagnoses) continue;

        IsolatedBurdenFinding f;
        f.person_id = pid;
        f.diagnosis_count = count;
        f.generation = generation_of(graph, pid);

        std::size_t alive = 0, total = 0;
        for (const Person* peer : by_generation[f.generation]) {
            if (peer->person_id == pid) continue;
            ++total;
            alive += peer->vital_status == VitalStatus::Alive;
        }
        f.peer_alive_fraction = alive_share(alive, total);

        alive = total = 0;
        for (int g = f.generation - 1; g >= std::max(0, f.generation - 2); --g) {
            auto it = by_generation.find(g);
            if (it == by_generation.end()) continue;
            for (const Person* q : it->second) {
                ++total;
                alive += q->vital_status == VitalStatus::Alive;
            }
        }
        f.context_alive_fraction = alive_share(alive, total);
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), [](const IsolatedBurdenFinding& a, const IsolatedBurdenFinding& b) {
        if (a.diagnosis_count != b.diagnosis_count) return a.diagnosis_count > b.diagnosis_count;
        return a.person_id < b.person_id;
    });
    return out;
}

std::string_view to_string(Scope scope) { return scope == Scope::SuicideVictims ? "suicide" : "all"; }

}  // namespace pedvis
