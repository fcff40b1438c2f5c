#pragma once

#include "pedvis/pedigree.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pedvis {

inline constexpr int kExpectedDiseaseCount = 16;

inline constexpr std::array<std::string_view, 7> kFixedColumns = {
    "PersonID", "FamilyID", "Sex", "MotherID", "FatherID", "Age", "VitalStatus"};

/// One finding from ingestion. `row` is the 1-based line number in the
/// input (the header is line 1); 0 when the issue is not tied to a row.
struct Issue {
    int row = 0;
    std::string code;
    std::string message;

    friend bool operator==(const Issue&, const Issue&) = default;
};

struct ValidationReport {
    std::vector<Issue> errors;
    std::vector<Issue> warnings;
    std::size_t persons = 0;
    std::size_t families = 0;
    std::size_t diagnoses = 0;

    bool ok() const { return errors.empty(); }
};

struct Dataset {
    std::map<std::string, PedigreeGraph> families;
    std::vector<std::string> disease_names;
    std::vector<Issue> warnings;

    int disease_count() const { return static_cast<int>(disease_names.size()); }
    const PedigreeGraph& family(std::string_view id) const;
    std::size_t person_count() const;
    std::size_t diagnosis_count() const;

    /// Structural equality: families and disease list. Warnings carry row
    /// numbers and are excluded.
    friend bool operator==(const Dataset& a, const Dataset& b) {
        return a.families == b.families && a.disease_names == b.disease_names;
    }
};

struct ParseResult {
    std::optional<Dataset> dataset;  // present iff report.ok()
    ValidationReport report;
};

/// Parses the canonical CSV: the seven fixed columns then one column per
/// disease, each cell blank or an integer age at diagnosis. Row problems are
/// collected into the report; a malformed header throws SchemaError.
ParseResult parse_dataset(std::string_view text);

/// Emits the canonical CSV, rows ordered by (family_id, person_id), LF line
/// endings, no quoting.
std::string serialize_dataset(const Dataset& ds);

/// Builds a dataset directly from person records (no row numbers). Used by
/// fixtures and generators; throws on the same conditions as build_graph.
Dataset make_dataset(const std::vector<Person>& persons, std::vector<std::string> disease_names);

bool is_valid_id(std::string_view id);

}  // namespace pedvis
