#include "pedvis/ingest.hpp"

#include "pedvis/errors.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace pedvis {

const PedigreeGraph& Dataset::family(std::string_view id) const {
    auto it = families.find(std::string(id));
    if (it == families.end()) throw UnknownFamily("unknown family '" + std::string(id) + "'");
    return it->second;
}

std::size_t Dataset::person_count() const {
    std::size_t n = 0;
    for (const auto& [id, g] : families) n += g.persons.size();
    return n;
}

std::size_t Dataset::diagnosis_count() const {
    std::size_t n = 0;
    for (const auto& [id, g] : families)
        for (const auto& [pid, p] : g.persons) n += p.diagnoses.size();
    return n;
}

bool is_valid_id(std::string_view id) {
    if (id.empty()) return false;
    return std::all_of(id.begin(), id.end(), [](char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' ||
               c == '+' || c == '-';
    });
}

namespace {

struct Line {
    int number;
    std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
    if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
    std::vector<Line> lines;
    int number = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back({++number, line});
    }
    return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto comma = line.find(',', start);
        out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::optional<long> parse_int(std::string_view s) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

struct RowError {
    std::string code;
    std::string message;
};

// Parses one data row; returns the first problem found, if any.
std::optional<RowError> parse_row(const std::vector<std::string_view>& f, int disease_count, Person& out) {
    const auto expected = kFixedColumns.size() + static_cast<std::size_t>(disease_count);
    if (f.size() != expected)
        return RowError{"BAD_ROW", "expected " + std::to_string(expected) + " fields, found " + std::to_string(f.size())};
    if (!is_valid_id(f[0])) return RowError{"BAD_ID", "invalid PersonID '" + std::string(f[0]) + "'"};
    out.person_id = f[0];
    if (!is_valid_id(f[1])) return RowError{"BAD_ID", "invalid FamilyID '" + std::string(f[1]) + "'"};
    out.family_id = f[1];

    if (f[2] == "M")
        out.sex = Sex::Male;
    else if (f[2] == "F")
        out.sex = Sex::Female;
    else if (f[2] == "U")
        out.sex = Sex::Unknown;
    else
        return RowError{"BAD_ENUM", "Sex must be M, F or U, got '" + std::string(f[2]) + "'"};

    for (auto [col, slot] : {std::pair{3, &out.mother_id}, std::pair{4, &out.father_id}}) {
        if (f[col].empty()) continue;
        if (!is_valid_id(f[col]))
            return RowError{"BAD_ID", "invalid " + std::string(kFixedColumns[col]) + " '" + std::string(f[col]) + "'"};
        *slot = std::string(f[col]);
    }

    auto age = parse_int(f[5]);
    if (!age) return RowError{"BAD_AGE", "Age is not an integer: '" + std::string(f[5]) + "'"};
    if (*age < 0) return RowError{"NEGATIVE_AGE", "Age is negative: " + std::to_string(*age)};
    out.age_years = static_cast<int>(*age);

    if (f[6] == "alive")
        out.vital_status = VitalStatus::Alive;
    else if (f[6] == "deceased")
        out.vital_status = VitalStatus::Deceased;
    else if (f[6] == "suicide")
        out.vital_status = VitalStatus::Suicide;
    else
        return RowError{"BAD_ENUM", "VitalStatus must be alive, deceased or suicide, got '" + std::string(f[6]) + "'"};

    for (int d = 0; d < disease_count; ++d) {
        std::string_view cell = f[kFixedColumns.size() + d];
        if (cell.empty()) continue;
        auto at = parse_int(cell);
        if (!at) return RowError{"BAD_DIAGNOSIS", "diagnosis age is not an integer: '" + std::string(cell) + "'"};
        if (*at < 0) return RowError{"NEGATIVE_AGE", "diagnosis age is negative: " + std::to_string(*at)};
        if (*at > out.age_years)
            return RowError{"DIAGNOSIS_AFTER_AGE", "diagnosis age " + std::to_string(*at) + " exceeds Age " +
                                                       std::to_string(out.age_years)};
        out.diagnoses.push_back({d, static_cast<int>(*at)});
    }
    return std::nullopt;
}

// Persons lying on (or between) ancestry cycles: what survives pruning
// sources from the top and sinks from the bottom.
std::set<std::string> cyclic_persons(const std::map<std::string, const Person*>& people) {
    std::unordered_map<std::string, std::vector<std::string>> kids;
    std::unordered_map<std::string, int> n_parents, n_kids;
    for (const auto& [id, p] : people) {
        n_parents[id];
        n_kids[id];
        for (const auto* parent : {&p->father_id, &p->mother_id}) {
            if (*parent && people.count(**parent)) {
                kids[**parent].push_back(id);
                ++n_parents[id];
                ++n_kids[**parent];
            }
        }
    }
    std::set<std::string> alive;
    for (const auto& [id, p] : people) alive.insert(id);

    std::vector<std::string> stack;
    for (const auto& id : alive)
        if (n_parents[id] == 0) stack.push_back(id);
    while (!stack.empty()) {
        auto id = stack.back();
        stack.pop_back();
        alive.erase(id);
        for (const auto& k : kids[id])
            if (--n_parents[k] == 0) stack.push_back(k);
    }
    for (const auto& id : alive) {
        n_kids[id] = 0;
        for (const auto& k : kids[id]) n_kids[id] += alive.count(k) ? 1 : 0;
    }
    for (const auto& id : alive)
        if (n_kids[id] == 0) stack.push_back(id);
    std::set<std::string> out = alive;
    while (!stack.empty()) {
        auto id = stack.back();
        stack.pop_back();
        out.erase(id);
        const Person* p = people.at(id);
        for (const auto* parent : {&p->father_id, &p->mother_id})
            if (*parent && out.count(**parent) && --n_kids[**parent] == 0) stack.push_back(**parent);
    }
    return out;
}

std::vector<Issue> graph_warnings(const PedigreeGraph& g, const std::unordered_map<std::string, int>& rows) {
    std::vector<Issue> out;
    for (const auto& w : g.warnings) {
        auto it = rows.find(w.person_id);
        out.push_back({it == rows.end() ? 0 : it->second, w.code, w.message});
    }
    return out;
}

void sort_issues(std::vector<Issue>& issues) {
    std::stable_sort(issues.begin(), issues.end(), [](const Issue& a, const Issue& b) { return a.row < b.row; });
}

Issue disease_count_warning(std::size_t n) {
    return {1, "DISEASE_COUNT",
            "expected " + std::to_string(kExpectedDiseaseCount) + " disease columns, found " + std::to_string(n)};
}

}  // namespace

ParseResult parse_dataset(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw SchemaError("empty input: missing header");

    const auto header = split_fields(lines.front().text);
    for (std::size_t i = 0; i < kFixedColumns.size(); ++i) {
        if (i >= header.size() || header[i] != kFixedColumns[i])
            throw SchemaError("header column " + std::to_string(i + 1) + " must be '" +
                              std::string(kFixedColumns[i]) + "'");
    }
    std::vector<std::string> diseases(header.begin() + kFixedColumns.size(), header.end());
    if (diseases.empty()) throw SchemaError("header has no disease columns");
    {
        std::set<std::string> seen;
        for (const auto& d : diseases) {
            if (d.empty()) throw SchemaError("empty disease column name");
            if (!seen.insert(d).second) throw SchemaError("duplicate disease column '" + d + "'");
        }
    }

    ParseResult result;
    auto& report = result.report;
    if (diseases.size() != kExpectedDiseaseCount) report.warnings.push_back(disease_count_warning(diseases.size()));

    struct Row {
        int line;
        Person person;
        bool ok;
    };
    std::vector<Row> rows;
    std::unordered_map<std::string, std::size_t> first_row_of;  // person id -> index in rows
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].text.empty()) continue;
        Row row{lines[i].number, {}, true};
        if (auto err = parse_row(split_fields(lines[i].text), static_cast<int>(diseases.size()), row.person)) {
            report.errors.push_back({row.line, err->code, err->message});
            row.ok = false;
        } else if (!first_row_of.emplace(row.person.person_id, rows.size()).second) {
            report.errors.push_back({row.line, "DUPLICATE_PERSON",
                                     "person '" + row.person.person_id + "' already defined on line " +
                                         std::to_string(rows[first_row_of[row.person.person_id]].line)});
            row.ok = false;
        }
        rows.push_back(std::move(row));
    }
    // Ids from rows that failed field validation still resolve references, so
    // a bad parent row is reported once rather than cascading to its children.
    for (const auto& row : rows)
        if (!row.ok && is_valid_id(row.person.person_id)) first_row_of.emplace(row.person.person_id, &row - rows.data());

    if (rows.empty()) report.warnings.push_back({0, "NO_DATA", "no data rows"});

    for (auto& row : rows) {
        if (!row.ok) continue;
        const Person& p = row.person;
        for (const auto* parent : {&p.father_id, &p.mother_id}) {
            if (!*parent) continue;
            auto it = first_row_of.find(**parent);
            if (it == first_row_of.end()) {
                report.errors.push_back({row.line, "DANGLING_PARENT", "parent '" + **parent + "' not found"});
                row.ok = false;
                break;
            }
            const Person& parent_person = rows[it->second].person;
            if (!parent_person.family_id.empty() && parent_person.family_id != p.family_id) {
                report.errors.push_back({row.line, "DANGLING_PARENT",
                                         "parent '" + **parent + "' belongs to family '" + parent_person.family_id + "'"});
                row.ok = false;
                break;
            }
        }
    }

    std::map<std::string, const Person*> resolved;
    std::unordered_map<std::string, int> line_of;
    for (const auto& row : rows) {
        if (!row.ok) continue;
        resolved.emplace(row.person.person_id, &row.person);
        line_of.emplace(row.person.person_id, row.line);
    }
    for (const auto& id : cyclic_persons(resolved))
        report.errors.push_back({line_of.at(id), "CYCLE", "person '" + id + "' is part of an ancestry cycle"});

    std::map<std::string, std::vector<Person>> by_family;
    for (const auto& row : rows) {
        if (!row.ok) continue;
        by_family[row.person.family_id].push_back(row.person);
        ++report.persons;
        report.diagnoses += row.person.diagnoses.size();
    }
    report.families = by_family.size();
    sort_issues(report.errors);

    if (!report.ok()) {
        sort_issues(report.warnings);
        return result;
    }

    Dataset ds;
    ds.disease_names = std::move(diseases);
    for (auto& [fid, persons] : by_family) {
        try {
            auto g = build_graph(persons);
            auto w = graph_warnings(g, line_of);
            report.warnings.insert(report.warnings.end(), w.begin(), w.end());
            ds.families.emplace(fid, std::move(g));
        } catch (const Error& e) {
            report.errors.push_back({0, e.code(), "family '" + fid + "': " + e.what()});
        }
    }
    sort_issues(report.warnings);
    if (!report.ok()) return result;
    ds.warnings = report.warnings;
    result.dataset = std::move(ds);
    return result;
}

std::string serialize_dataset(const Dataset& ds) {
    std::string out;
    for (std::size_t i = 0; i < kFixedColumns.size(); ++i) {
        if (i) out += ',';
        out += kFixedColumns[i];
    }
    for (const auto& d : ds.disease_names) out += ',' + d;
    out += '\n';

    std::vector<std::string> cells(ds.disease_names.size());
    for (const auto& [fid, g] : ds.families) {
        for (const auto& [pid, p] : g.persons) {
            out += p.person_id;
            out += ',' + p.family_id;
            out += ',';
            out += to_string(p.sex);
            out += ',' + p.mother_id.value_or("");
            out += ',' + p.father_id.value_or("");
            out += ',' + std::to_string(p.age_years);
            out += ',';
            out += to_string(p.vital_status);
            std::fill(cells.begin(), cells.end(), std::string{});
            for (const auto& d : p.diagnoses) cells.at(d.disease_index) = std::to_string(d.age_at_diagnosis);
            for (const auto& c : cells) out += ',' + c;
            out += '\n';
        }
    }
    return out;
}

Dataset make_dataset(const std::vector<Person>& persons, std::vector<std::string> disease_names) {
    if (disease_names.empty()) throw InvalidInput("disease list is empty");
    const int d = static_cast<int>(disease_names.size());
    std::map<std::string, std::vector<Person>> by_family;
    std::unordered_set<std::string> ids;
    for (auto p : persons) {
        if (!ids.insert(p.person_id).second) throw DuplicatePerson("duplicate person '" + p.person_id + "'");
        std::sort(p.diagnoses.begin(), p.diagnoses.end(),
                  [](const DiagnosisRecord& a, const DiagnosisRecord& b) { return a.disease_index < b.disease_index; });
        for (std::size_t i = 0; i < p.diagnoses.size(); ++i) {
            const auto& r = p.diagnoses[i];
            if (r.disease_index < 0 || r.disease_index >= d)
                throw InvalidInput("person '" + p.person_id + "' has disease index out of range");
            if (r.age_at_diagnosis < 0 || r.age_at_diagnosis > p.age_years)
                throw InvalidInput("person '" + p.person_id + "' diagnosed outside [0, age]");
            if (i && p.diagnoses[i - 1].disease_index == r.disease_index)
                throw InvalidInput("person '" + p.person_id + "' has a repeated diagnosis");
        }
        by_family[p.family_id].push_back(std::move(p));
    }
    Dataset ds;
    ds.disease_names = std::move(disease_names);
    if (d != kExpectedDiseaseCount) ds.warnings.push_back(disease_count_warning(ds.disease_names.size()));
    for (auto& [fid, members] : by_family) {
        auto g = build_graph(members);
        for (const auto& w : graph_warnings(g, {})) ds.warnings.push_back(w);
        ds.families.emplace(fid, std::move(g));
    }
    return ds;
}

}  // namespace pedvis
