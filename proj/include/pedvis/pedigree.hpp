#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pedvis {

enum class Sex { Male, Female, Unknown };
enum class VitalStatus { Alive, Deceased, Suicide };

/// Slot a person occupies inside a couple unit. Drives the glyph shape.
enum class Role { Father, Mother, Single };

struct DiagnosisRecord {
    int disease_index = 0;
    int age_at_diagnosis = 0;

    friend bool operator==(const DiagnosisRecord&, const DiagnosisRecord&) = default;
};

struct Person {
    std::string person_id;
    std::string family_id;
    Sex sex = Sex::Unknown;
    std::optional<std::string> mother_id;
    std::optional<std::string> father_id;
    int age_years = 0;  // current age if alive, age at death otherwise
    VitalStatus vital_status = VitalStatus::Alive;
    std::vector<DiagnosisRecord> diagnoses;  // sorted by disease_index

    bool has_parents() const { return mother_id.has_value() || father_id.has_value(); }
    bool diagnosed_with(int disease_index) const;

    friend bool operator==(const Person&, const Person&) = default;
};

/// A father/mother pair derived from co-parenthood, or a single person.
/// `children` are the persons whose parent pair is exactly this unit;
/// `child_units` are the tree edges used for layout (one parent per unit,
/// so each family renders as a forest).
struct CoupleUnit {
    std::string unit_id;
    std::optional<std::string> father;
    std::optional<std::string> mother;
    std::vector<std::string> children;     // person_id ascending
    std::vector<std::string> child_units;  // ordered by linking child person_id, then unit_id
    std::optional<std::string> parent_unit;
    int generation = 0;

    bool is_single() const { return children.empty() && (father.has_value() != mother.has_value()); }
    std::vector<std::string> members() const;
    Role role_of(std::string_view person_id) const;

    friend bool operator==(const CoupleUnit&, const CoupleUnit&) = default;
};

struct GraphWarning {
    std::string code;  // SEX_ROLE_MISMATCH, GENERATION_CONFLICT
    std::string person_id;
    std::string message;

    friend bool operator==(const GraphWarning&, const GraphWarning&) = default;
};

/// One family. Immutable once built; every container is ordered so two
/// graphs built from the same rows in any order compare equal.
struct PedigreeGraph {
    std::string family_id;
    std::map<std::string, Person> persons;
    std::map<std::string, CoupleUnit> units;
    std::vector<std::string> founder_units;                // unit_id ascending
    std::map<std::string, std::string> parent_edges;       // child person -> parent unit
    std::map<std::string, std::vector<std::string>> units_of_person;  // person -> units (partner/single)
    std::map<std::string, std::vector<std::string>> children_of;      // person -> children, ascending
    std::vector<GraphWarning> warnings;

    const Person& person(std::string_view id) const;
    const CoupleUnit& unit(std::string_view id) const;
    bool contains(std::string_view person_id) const { return persons.find(std::string(person_id)) != persons.end(); }
    int max_generation() const;

    friend bool operator==(const PedigreeGraph&, const PedigreeGraph&) = default;
};

/// Derives couple units, tree edges and generations for one family.
///
/// Units come from distinct (father, mother) pairs appearing on at least one
/// child. Persons that parent nobody become single-member units. A unit whose
/// partners both have in-data parents hangs below the deeper parent unit (the
/// father's on a tie), so every unit's generation is its tree parent's plus
/// one. A person placed at more than one depth gets the maximum and a
/// GENERATION_CONFLICT warning.
///
/// Throws DuplicatePerson, DanglingReference, CycleError, and InvalidInput
/// when the rows span several families.
PedigreeGraph build_graph(const std::vector<Person>& persons);

int generation_of(const PedigreeGraph& graph, std::string_view person_id);

std::vector<std::string> members_of_generation(const PedigreeGraph& graph, int generation);

std::string unit_id_for(std::vector<std::string> member_ids);

std::string_view to_string(Sex sex);
std::string_view to_string(VitalStatus status);
std::string_view to_string(Role role);

}  // namespace pedvis
