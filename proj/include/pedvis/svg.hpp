#pragma once

#include "pedvis/glyph.hpp"
#include "pedvis/layout.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pedvis {

struct RenderConfig {
    std::optional<int> canvas_width;   // default 800 single, 1600 compare
    std::optional<int> canvas_height;  // default 900
    Palette palette;
    bool show_dotplots = true;
    bool show_legend = true;

    int width(bool compare) const { return canvas_width.value_or(compare ? 1600 : 800); }
    int height() const { return canvas_height.value_or(900); }
    void validate() const;
};

/// Standalone SVG 1.1 for one family. Layer order is fixed: generation
/// rings, links, units by unit_id, legend, dot-plots. Dot-plots are drawn
/// only when `dotplots` is non-empty and enabled. Throws PaletteError.
std::string render_family(const RadialLayout& layout, const RenderConfig& cfg,
                          const std::vector<std::string>& disease_names,
                          const std::vector<DotPlotSeries>& dotplots = {});

/// Two families side by side over a shared dot-plot strip and legend.
std::string render_compare(const RadialLayout& left, const RadialLayout& right,
                           const std::vector<DotPlotSeries>& dotplots, const RenderConfig& cfg,
                           const std::vector<std::string>& disease_names);

/// "%.9g" with negative zero folded; shared by every coordinate attribute.
std::string format_number(double v);

std::string xml_escape(std::string_view text);

}  // namespace pedvis
