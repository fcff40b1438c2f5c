#include "pedvis/glyph.hpp"

#include "pedvis/errors.hpp"

#include <algorithm>
#include <cmath>

namespace pedvis {

double fill_fraction_for_age(int age_years) {
    return std::clamp(static_cast<double>(age_years) / kFullFillAge, 0.0, 1.0);
}

GlyphDescriptor glyph_for(const Person& person, Role role, int disease_count) {
    GlyphDescriptor g;
    g.person_id = person.person_id;
    switch (role) {
        case Role::Father: g.shape = Shape::Square; break;
        case Role::Mother: g.shape = Shape::Circle; break;
        case Role::Single: g.shape = person.sex == Sex::Female ? Shape::Circle : Shape::Square; break;
    }
    g.status_color_key = person.vital_status;
    g.fill_fraction = fill_fraction_for_age(person.age_years);
    if (person.vital_status == VitalStatus::Suicide && !person.diagnoses.empty())
        g.radial_chart = sectors_for(person.diagnoses, disease_count);
    return g;
}

std::vector<SectorSpec> sectors_for(std::span<const DiagnosisRecord> diagnoses, int disease_count) {
    if (disease_count < 1) throw IndexOutOfRange("disease count must be at least 1");
    std::vector<SectorSpec> sectors(static_cast<std::size_t>(disease_count));
    const double n = disease_count;
    for (int i = 0; i < disease_count; ++i) {
        // Shared boundaries come from the same expression, so neighbours meet exactly.
        sectors[i] = {i, i * 360.0 / n, (i + 1) * 360.0 / n, false};
    }
    for (const auto& d : diagnoses) {
        if (d.disease_index < 0 || d.disease_index >= disease_count)
            throw IndexOutOfRange("disease index " + std::to_string(d.disease_index) + " outside [0, " +
                                  std::to_string(disease_count) + ")");
        sectors[d.disease_index].filled = true;
    }
    return sectors;
}

double inner_fill_geometry(Shape, double fill_fraction) {
    if (!(fill_fraction >= 0.0 && fill_fraction <= 1.0))
        throw DomainError("fill fraction must lie in [0, 1]");
    return std::sqrt(fill_fraction);
}

std::vector<DotPlotSeries> build_dotplots(const Dataset& ds) {
    std::vector<DotPlotSeries> series(ds.disease_names.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        series[i].disease_index = static_cast<int>(i);
        series[i].disease_name = ds.disease_names[i];
    }
    for (const auto& [fid, g] : ds.families)
        for (const auto& [pid, p] : g.persons)
            for (const auto& d : p.diagnoses) series.at(d.disease_index).dots.push_back({pid, fid, d.age_at_diagnosis});
    for (auto& s : series) {
        std::sort(s.dots.begin(), s.dots.end(), [](const Dot& a, const Dot& b) {
            return std::tie(a.age_at_diagnosis, a.person_id) < std::tie(b.age_at_diagnosis, b.person_id);
        });
    }
    return series;
}

std::string_view to_string(Shape shape) { return shape == Shape::Square ? "square" : "circle"; }

const std::string& Palette::status(VitalStatus s) const {
    switch (s) {
        case VitalStatus::Alive: return alive;
        case VitalStatus::Deceased: return deceased;
        case VitalStatus::Suicide: return suicide;
    }
    return alive;
}

const std::string& Palette::disease(int disease_index) const {
    if (disease_index < 0 || static_cast<std::size_t>(disease_index) >= diseases.size())
        throw PaletteError("no color for disease " + std::to_string(disease_index));
    return diseases[disease_index];
}

void Palette::require_coverage(int disease_count) const {
    for (const auto* c : {&alive, &deceased, &suicide})
        if (c->empty()) throw PaletteError("status color missing");
    if (disease_count > 0) disease(disease_count - 1);
    for (int i = 0; i < disease_count; ++i)
        if (diseases[i].empty()) throw PaletteError("no color for disease " + std::to_string(i));
}

std::vector<std::string> Palette::default_disease_colors() {
    return {"#1F77B4", "#FF7F0E", "#2CA02C", "#D62728", "#9467BD", "#8C564B", "#E377C2", "#BCBD22",
            "#17BECF", "#393B79", "#AEC7E8", "#FFBB78", "#98DF8A", "#FF9896", "#C5B0D5", "#F4A261"};
}

std::vector<std::string> default_disease_names() {
    return {"Depression",     "Anxiety",        "Bipolar",      "Schizophrenia", "PTSD",       "ADHD",
            "AlcoholUse",     "SubstanceUse",   "Personality",  "EatingDisorder", "OCD",       "Autism",
            "SleepDisorder",  "ChronicPain",    "Epilepsy",     "Psychosis"};
}

}  // namespace pedvis
