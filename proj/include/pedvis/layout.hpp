#pragma once

#include "pedvis/glyph.hpp"
#include "pedvis/pedigree.hpp"

#include <string>
#include <vector>

namespace pedvis {

enum class Direction { CounterClockwise, Clockwise };

struct LayoutConfig {
    double ring_spacing = 80.0;
    double center_radius = 0.0;
    double glyph_size = 12.0;
    double partner_offset = 8.0;  // tangential half-gap between partner glyphs
    double start_angle = 0.0;     // radians
    Direction direction = Direction::CounterClockwise;

    /// Throws ConfigError unless every length is in range and
    /// ring_spacing > 2 * glyph_size.
    void validate() const;

    friend bool operator==(const LayoutConfig&, const LayoutConfig&) = default;
};

struct PlacedGlyph {
    std::string person_id;
    Role role = Role::Single;
    Shape shape = Shape::Square;
    double x = 0.0;
    double y = 0.0;
    GlyphDescriptor descriptor;
};

struct PlacedUnit {
    std::string unit_id;
    int generation = 0;
    double theta = 0.0;        // span midpoint, normalized to [0, 2pi)
    double span_start = 0.0;   // in [0, 2pi)
    double span_end = 0.0;     // span_start + width; may exceed 2pi when the span wraps
    double radius = 0.0;
    std::vector<PlacedGlyph> glyphs;

    double span_width() const { return span_end - span_start; }
};

struct Link {
    std::string from;
    std::string to;
};

struct LayoutWarning {
    std::string code;  // OVERLAP
    int generation = 0;
    std::string unit_a;
    std::string unit_b;
    std::string message;
};

/// Geometry for one family. Angles are radians measured counterclockwise
/// from +x with y up. `ring_offset` is 1 when several founder units hang off
/// an invisible root, pushing every ring one step outward.
struct RadialLayout {
    std::string family_id;
    LayoutConfig config;
    int disease_count = 0;
    int ring_offset = 0;
    std::vector<PlacedUnit> nodes;  // unit_id ascending
    std::vector<Link> links;        // (from, to) ascending
    std::vector<LayoutWarning> warnings;
    int max_generation = -1;
    double bounds = 0.0;  // half-width of the enclosing square, centered on the origin

    const PlacedUnit* find(std::string_view unit_id) const;
    double ring_radius(int generation) const;
};

/// Number of childless units in the subtree rooted at `unit_id` (itself
/// included). Throws UnknownUnit.
int leaf_count(const PedigreeGraph& graph, std::string_view unit_id);

/// Sunburst-style layout: each unit gets a contiguous angular span carved
/// from its parent's in proportion to leaf counts, and sits at the span
/// midpoint on its generation ring.
RadialLayout compute_layout(const PedigreeGraph& graph, const LayoutConfig& cfg = {},
                            int disease_count = kExpectedDiseaseCount);

/// Angular half-extent (radians) of a unit's glyphs on its ring; 0 at the center.
double angular_half_extent(const PlacedUnit& unit, const LayoutConfig& cfg);

}  // namespace pedvis
