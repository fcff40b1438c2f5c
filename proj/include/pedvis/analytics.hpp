#pragma once

#include "pedvis/ingest.hpp"
#include "pedvis/pedigree.hpp"

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pedvis {

/// Direct parent->child chain of suicide victims, ancestor first.
struct LineageChain {
    std::vector<std::string> persons;
    std::set<int> shared_diagnoses;  // diagnosed in every member

    friend bool operator==(const LineageChain&, const LineageChain&) = default;
};

struct IsolatedBurdenFinding {
    std::string person_id;
    int diagnosis_count = 0;
    int generation = 0;
    double peer_alive_fraction = 1.0;     // same generation, person excluded
    double context_alive_fraction = 1.0;  // generations g-1 and g-2, pooled

    friend bool operator==(const IsolatedBurdenFinding&, const IsolatedBurdenFinding&) = default;
};

enum class Scope { SuicideVictims, All };

/// Symmetric D x D count matrix; diagonal holds per-disease counts.
class CooccurrenceMatrix {
public:
    explicit CooccurrenceMatrix(int size) : size_(size), counts_(static_cast<std::size_t>(size) * size, 0) {}

    int size() const { return size_; }
    int at(int i, int j) const { return counts_[index(i, j)]; }
    void add(int i, int j) { ++counts_[index(i, j)]; }

    friend bool operator==(const CooccurrenceMatrix&, const CooccurrenceMatrix&) = default;

private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * size_ + j; }

    int size_;
    std::vector<int> counts_;
};

inline constexpr int kDefaultMinDiagnoses = 5;

/// Reflexive-transitive closure over mother/father edges. Throws UnknownPerson.
std::set<std::string> ancestors_inclusive(const PedigreeGraph& graph, std::string_view person_id);

/// Common ancestors of `a` and `b` none of whose strict descendants is also
/// a common ancestor. Pedigrees are DAGs, so there may be several (full
/// siblings yield both parents). Throws UnknownPerson.
std::set<std::string> lowest_common_ancestors(const PedigreeGraph& graph, std::string_view a, std::string_view b);

/// Every maximal chain (length >= 2) of suicide victims linked by direct
/// parent->child edges, ordered by person list.
std::vector<LineageChain> suicide_lineages(const PedigreeGraph& graph);

CooccurrenceMatrix diagnosis_cooccurrence(const Dataset& ds, Scope scope);

/// Suicide victims with at least `min_diagnoses` diagnoses, with the share of
/// living relatives in their own and the two preceding generations. An empty
/// comparison group reports 1.0. Sorted by diagnosis count descending, then
/// person_id.
std::vector<IsolatedBurdenFinding> isolated_burden(const PedigreeGraph& graph, int min_diagnoses = kDefaultMinDiagnoses);

std::string_view to_string(Scope scope);

}  // namespace pedvis
