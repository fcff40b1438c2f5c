#pragma once

#include "pedvis/analytics.hpp"
#include "pedvis/glyph.hpp"
#include "pedvis/ingest.hpp"
#include "pedvis/layout.hpp"

#include <json.hpp>

#include <string>

namespace pedvis {

using Json = nlohmann::ordered_json;

/// Rounds to 9 significant digits so serialized geometry is stable across
/// platforms. Negative zero collapses to zero.
double round_sig9(double v);

Json to_json(const LayoutConfig& cfg);
Json to_json(const GlyphDescriptor& glyph);
Json to_json(const RadialLayout& layout);
Json to_json(const DotPlotSeries& series);
Json to_json(const std::vector<DotPlotSeries>& series);
Json to_json(const ValidationReport& report);
Json to_json(const LineageChain& chain);
Json to_json(const IsolatedBurdenFinding& finding);
Json to_json(const CooccurrenceMatrix& matrix, Scope scope);
Json palette_json(const Palette& palette, const std::vector<std::string>& disease_names);

/// Canonical compact text for documents that must be byte-stable.
std::string dump(const Json& doc);

}  // namespace pedvis
