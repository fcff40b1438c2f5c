#pragma once

#include "pedvis/ingest.hpp"
#include "pedvis/pedigree.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pedvis {

enum class Shape { Square, Circle };

/// One slice of the per-victim diagnosis chart. Angles in degrees, sector 0
/// starting east and proceeding counterclockwise.
struct SectorSpec {
    int disease_index = 0;
    double angle_start = 0.0;
    double angle_end = 0.0;
    bool filled = false;

    int color_key() const { return disease_index; }

    friend bool operator==(const SectorSpec&, const SectorSpec&) = default;
};

struct GlyphDescriptor {
    std::string person_id;
    Shape shape = Shape::Square;
    VitalStatus status_color_key = VitalStatus::Alive;
    double fill_fraction = 0.0;
    std::optional<std::vector<SectorSpec>> radial_chart;

    friend bool operator==(const GlyphDescriptor&, const GlyphDescriptor&) = default;
};

struct Dot {
    std::string person_id;
    std::string family_id;
    int age_at_diagnosis = 0;

    friend bool operator==(const Dot&, const Dot&) = default;
};

struct DotPlotSeries {
    int disease_index = 0;
    std::string disease_name;
    std::vector<Dot> dots;  // (age_at_diagnosis, person_id) ascending

    friend bool operator==(const DotPlotSeries&, const DotPlotSeries&) = default;
};

/// Ages at or above this fill the glyph completely.
inline constexpr double kFullFillAge = 100.0;

GlyphDescriptor glyph_for(const Person& person, Role role, int disease_count);

double fill_fraction_for_age(int age_years);

/// All `disease_count` sectors in index order, filled where diagnosed.
/// Throws IndexOutOfRange for a diagnosis outside [0, disease_count).
std::vector<SectorSpec> sectors_for(std::span<const DiagnosisRecord> diagnoses, int disease_count);

/// Linear scale of the concentric inner shape whose area is `fill_fraction`
/// of the outer one. Area scales with the square of the side (or radius) for
/// both shapes, so the answer is sqrt(f) either way.
double inner_fill_geometry(Shape shape, double fill_fraction);

std::vector<DotPlotSeries> build_dotplots(const Dataset& ds);

std::string_view to_string(Shape shape);

/// Hex colors for the status and disease encodings.
struct Palette {
    std::string alive = "#2A9D8F";
    std::string deceased = "#9E9E9E";
    std::string suicide = "#000000";
    std::vector<std::string> diseases = default_disease_colors();

    const std::string& status(VitalStatus s) const;
    /// Throws PaletteError when the table has no entry for `disease_index`.
    const std::string& disease(int disease_index) const;
    /// Throws PaletteError unless every status and `disease_count` diseases resolve.
    void require_coverage(int disease_count) const;

    static std::vector<std::string> default_disease_colors();

    friend bool operator==(const Palette&, const Palette&) = default;
};

/// Placeholder disease names used by fixtures and the default config.
std::vector<std::string> default_disease_names();

}  // namespace pedvis
