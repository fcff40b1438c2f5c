#pragma once

#include "pedvis/layout.hpp"
#include "pedvis/svg.hpp"

#include <string>
#include <string_view>

namespace pedvis {

struct AppConfig {
    LayoutConfig layout;
    RenderConfig render;
};

/// Reads the `key = value` config format. Blank lines and lines starting
/// with '#' are ignored. Recognized keys:
///
///   ring_spacing, center_radius, glyph_size, partner_offset   (numbers)
///   start_angle                                               (radians)
///   direction                                                 (ccw | cw)
///   canvas_width, canvas_height                               (pixels)
///   show_dotplots, show_legend                                (true | false)
///   color.alive, color.deceased, color.suicide                (#RRGGBB)
///   color.disease.<index>                                     (#RRGGBB)
///
/// Unknown keys and malformed values throw ConfigError naming the line.
AppConfig parse_config(std::string_view text);

}  // namespace pedvis
