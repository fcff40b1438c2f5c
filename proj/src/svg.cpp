#include "pedvis/svg.hpp"

#include "pedvis/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>

namespace pedvis {

std::string format_number(double v) {
    if (v == 0.0 || !std::isfinite(v)) v = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    std::string s = buf;
    return s == "-0" ? "0" : s;
}

std::string xml_escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

void RenderConfig::validate() const {
    if (canvas_width && *canvas_width <= 0) throw ConfigError("canvas_width must be positive");
    if (canvas_height && *canvas_height <= 0) throw ConfigError("canvas_height must be positive");
}

namespace {

constexpr double kLegendWidth = 150.0;
constexpr double kStripHeight = 220.0;
constexpr double kPanelMargin = 16.0;
constexpr double kDotRadius = 4.0;
constexpr char kLinkColor[] = "#8A8A8A";
constexpr char kRingColor[] = "#E4E4E4";
constexpr char kSectorStroke[] = "#BDBDBD";

class SvgWriter {
public:
    void line(const std::string& s) {
        out_.append(depth_ * 1, ' ');
        out_ += s;
        out_ += '\n';
    }
    void open(const std::string& s) {
        line(s);
        ++depth_;
    }
    void close(const std::string& tag) {
        --depth_;
        line("</" + tag + ">");
    }
    std::string take() { return std::move(out_); }

private:
    std::string out_;
    int depth_ = 0;
};

std::string attr(const char* name, double v) { return std::string(" ") + name + "=\"" + format_number(v) + "\""; }
std::string attr(const char* name, std::string_view v) {
    return std::string(" ") + name + "=\"" + xml_escape(v) + "\"";
}

struct Frame {
    double width;   // panel size in pixels
    double height;
    double scale;   // layout units -> pixels
};

Frame frame_for(const RadialLayout& layout, double width, double height) {
    const double half = std::min(width, height) / 2.0 - kPanelMargin;
    double scale = 1.0;
    if (layout.bounds > 0.0 && half > 0.0) scale = std::min(1.0, half / layout.bounds);
    return {width, height, scale};
}

void write_sector_chart(SvgWriter& w, const PlacedGlyph& g, double cx, double cy, double radius,
                        const Palette& palette) {
    const auto& sectors = *g.descriptor.radial_chart;
    w.open("<g class=\"radial-chart\"" + attr("data-person", g.person_id) + attr("data-cx", cx) + attr("data-cy", cy) +
           ">");
    if (sectors.size() == 1) {
        const auto& s = sectors.front();
        w.line("<circle" + attr("cx", cx) + attr("cy", cy) + attr("r", radius) +
               attr("fill", s.filled ? palette.disease(s.disease_index) : std::string("#FFFFFF")) +
               attr("stroke", kSectorStroke) + attr("data-disease", static_cast<double>(s.disease_index)) + "/>");
    } else {
        for (const auto& s : sectors) {
            const double a0 = s.angle_start * std::numbers::pi / 180.0;
            const double a1 = s.angle_end * std::numbers::pi / 180.0;
            // Screen y grows downward, so counterclockwise arcs use sweep-flag 0.
            const double x0 = cx + radius * std::cos(a0), y0 = cy - radius * std::sin(a0);
            const double x1 = cx + radius * std::cos(a1), y1 = cy - radius * std::sin(a1);
            const int large = s.angle_end - s.angle_start > 180.0 ? 1 : 0;
            std::string d = "M" + format_number(cx) + " " + format_number(cy) + " L" + format_number(x0) + " " +
                            format_number(y0) + " A" + format_number(radius) + " " + format_number(radius) + " 0 " +
                            std::to_string(large) + " 0 " + format_number(x1) + " " + format_number(y1) + " Z";
            w.line("<path class=\"sector\"" + attr("d", d) +
                   attr("fill", s.filled ? palette.disease(s.disease_index) : std::string("#FFFFFF")) +
                   attr("stroke", kSectorStroke) + attr("stroke-width", 0.5) +
                   attr("data-disease", static_cast<double>(s.disease_index)) + "/>");
        }
    }
    w.close("g");
}

void write_glyph(SvgWriter& w, const PlacedGlyph& g, double size, double scale, const Palette& palette) {
    const double cx = g.x * scale;
    const double cy = -g.y * scale;
    const double side = size * scale;
    const std::string& color = palette.status(g.descriptor.status_color_key);
    const double inner = side * inner_fill_geometry(g.shape, g.descriptor.fill_fraction);

    w.open("<g class=\"glyph\"" + attr("data-person", g.person_id) +
           attr("data-status", to_string(g.descriptor.status_color_key)) + attr("data-role", to_string(g.role)) + ">");
    if (g.shape == Shape::Square) {
        w.line("<rect" + attr("x", cx - side / 2) + attr("y", cy - side / 2) + attr("width", side) +
               attr("height", side) + attr("fill", color) + " fill-opacity=\"0.25\"" + attr("stroke", color) + "/>");
        if (inner > 0.0)
            w.line("<rect class=\"age-fill\"" + attr("x", cx - inner / 2) + attr("y", cy - inner / 2) +
                   attr("width", inner) + attr("height", inner) + attr("fill", color) + "/>");
    } else {
        w.line("<circle" + attr("cx", cx) + attr("cy", cy) + attr("r", side / 2) + attr("fill", color) +
               " fill-opacity=\"0.25\"" + attr("stroke", color) + "/>");
        if (inner > 0.0)
            w.line("<circle class=\"age-fill\"" + attr("cx", cx) + attr("cy", cy) + attr("r", inner / 2) +
                   attr("fill", color) + "/>");
    }
    w.close("g");
    if (g.descriptor.radial_chart) write_sector_chart(w, g, cx, cy, side * 0.75, palette);
}

void write_family(SvgWriter& w, const RadialLayout& layout, const Frame& f, double origin_x, double origin_y,
                  const Palette& palette) {
    const double s = f.scale;
    w.open("<g" + attr("id", "g-family-" + layout.family_id) + " class=\"family\"" +
           attr("transform", "translate(" + format_number(origin_x + f.width / 2) + "," +
                                 format_number(origin_y + f.height / 2) + ")") +
           ">");

    w.open("<g class=\"rings\">");
    std::set<int> generations;
    for (const auto& n : layout.nodes) generations.insert(n.generation);
    for (int g : generations) {
        const double r = layout.ring_radius(g) * s;
        if (r > 0.0)
            w.line("<circle" + attr("r", r) + " fill=\"none\"" + attr("stroke", kRingColor) +
                   attr("data-generation", static_cast<double>(g)) + "/>");
    }
    w.close("g");

    w.open("<g class=\"links\">");
    for (const auto& link : layout.links) {
        const PlacedUnit* a = layout.find(link.from);
        const PlacedUnit* b = layout.find(link.to);
        const double ax = a->radius * std::cos(a->theta) * s, ay = -a->radius * std::sin(a->theta) * s;
        const double bx = b->radius * std::cos(b->theta) * s, by = -b->radius * std::sin(b->theta) * s;
        w.line("<path class=\"link\"" +
               attr("d", "M" + format_number(ax) + " " + format_number(ay) + " L" + format_number(bx) + " " +
                             format_number(by)) +
               attr("data-from", link.from) + attr("data-to", link.to) + " fill=\"none\"" +
               attr("stroke", kLinkColor) + "/>");
    }
    w.close("g");

    w.open("<g class=\"units\">");
    for (const auto& n : layout.nodes) {
        w.open("<g" + attr("id", "g-unit-" + n.unit_id) + " class=\"unit\"" +
               attr("data-generation", static_cast<double>(n.generation)) + ">");
        for (const auto& g : n.glyphs) write_glyph(w, g, layout.config.glyph_size, s, palette);
        w.close("g");
    }
    w.close("g");
    w.close("g");
}

void write_legend(SvgWriter& w, const Palette& palette, const std::vector<std::string>& disease_names) {
    w.open("<g id=\"legend\" transform=\"translate(10,10)\">");
    double y = 0.0;
    auto entry = [&](const std::string& color, const std::string& label) {
        w.line("<rect" + attr("x", 0.0) + attr("y", y) + attr("width", 12.0) + attr("height", 12.0) +
               attr("fill", color) + "/>");
        w.line("<text" + attr("x", 18.0) + attr("y", y + 10) + " font-size=\"11\" font-family=\"sans-serif\">" +
               xml_escape(label) + "</text>");
        y += 16.0;
    };
    entry(palette.alive, "Alive");
    entry(palette.deceased, "Deceased");
    entry(palette.suicide, "Suicide");
    y += 8.0;
    for (std::size_t i = 0; i < disease_names.size(); ++i) entry(palette.disease(static_cast<int>(i)), disease_names[i]);
    w.close("g");
}

void write_dotplots(SvgWriter& w, const std::vector<DotPlotSeries>& series, const Palette& palette, double width,
                    double top) {
    w.open("<g id=\"dotplots\"" + attr("transform", "translate(0," + format_number(top) + ")") + ">");
    w.line("<line" + attr("x1", kPanelMargin) + attr("y1", 0.0) + attr("x2", width - kPanelMargin) +
           attr("y2", 0.0) + attr("stroke", kRingColor) + "/>");
    const double column = series.empty() ? 0.0 : (width - 2 * kPanelMargin) / static_cast<double>(series.size());
    const double baseline = kStripHeight - 34.0;
    const double room = baseline - 24.0;
    for (const auto& s : series) {
        const double cx = kPanelMargin + column * (s.disease_index + 0.5);
        const std::string& color = palette.disease(s.disease_index);
        const double step =
            s.dots.empty() ? 0.0 : std::min(2 * kDotRadius + 1.0, room / static_cast<double>(s.dots.size()));
        w.open("<g class=\"series\"" + attr("data-disease", static_cast<double>(s.disease_index)) +
               attr("data-count", static_cast<double>(s.dots.size())) + ">");
        for (std::size_t k = 0; k < s.dots.size(); ++k) {
            const auto& d = s.dots[k];
            w.line("<circle class=\"dot\"" + attr("cx", cx) + attr("cy", baseline - k * step) +
                   attr("r", kDotRadius) + attr("fill", color) + attr("data-person", d.person_id) +
                   attr("data-family", d.family_id) + attr("data-age", static_cast<double>(d.age_at_diagnosis)) +
                   "/>");
        }
        w.line("<text" + attr("x", cx) + attr("y", baseline + 16) +
               " font-size=\"9\" font-family=\"sans-serif\" text-anchor=\"middle\">" + xml_escape(s.disease_name) +
               "</text>");
        w.line("<text" + attr("x", cx) + attr("y", baseline + 28) +
               " font-size=\"9\" font-family=\"sans-serif\" text-anchor=\"middle\">" +
               std::to_string(s.dots.size()) + "</text>");
        w.close("g");
    }
    w.close("g");
}

void open_document(SvgWriter& w, int width, int height) {
    w.line("<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
    w.open("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"" + attr("width", width) +
           attr("height", height) +
           attr("viewBox", "0 0 " + std::to_string(width) + " " + std::to_string(height)) + ">");
    w.line("<rect" + attr("width", width) + attr("height", height) + " fill=\"#FFFFFF\"/>");
}

void check_palette(const RenderConfig& cfg, const std::vector<std::string>& disease_names,
                   std::initializer_list<const RadialLayout*> layouts) {
    cfg.validate();
    int needed = static_cast<int>(disease_names.size());
    for (const auto* l : layouts) needed = std::max(needed, l->disease_count);
    cfg.palette.require_coverage(needed);
}

}  // namespace

std::string render_family(const RadialLayout& layout, const RenderConfig& cfg,
                          const std::vector<std::string>& disease_names, const std::vector<DotPlotSeries>& dotplots) {
    check_palette(cfg, disease_names, {&layout});
    const int width = cfg.width(false);
    const int height = cfg.height();
    const bool strip = cfg.show_dotplots && !dotplots.empty();
    const double tree_h = height - (strip ? kStripHeight : 0.0);

    SvgWriter w;
    open_document(w, width, height);
    if (!layout.nodes.empty()) write_family(w, layout, frame_for(layout, width, tree_h), 0.0, 0.0, cfg.palette);
    if (cfg.show_legend) write_legend(w, cfg.palette, disease_names);
    if (strip) write_dotplots(w, dotplots, cfg.palette, width, tree_h);
    w.close("svg");
    return w.take();
}

std::string render_compare(const RadialLayout& left, const RadialLayout& right,
                           const std::vector<DotPlotSeries>& dotplots, const RenderConfig& cfg,
                           const std::vector<std::string>& disease_names) {
    check_palette(cfg, disease_names, {&left, &right});
    const int width = cfg.width(true);
    const int height = cfg.height();
    const double tree_h = height - (cfg.show_dotplots ? kStripHeight : 0.0);
    const double panel_w = width / 2.0;

    SvgWriter w;
    open_document(w, width, height);
    w.line("<line" + attr("x1", panel_w) + attr("y1", 0.0) + attr("x2", panel_w) + attr("y2", tree_h) +
           attr("stroke", kRingColor) + "/>");
    for (auto [side, layout, x] : {std::tuple{"left", &left, 0.0}, std::tuple{"right", &right, panel_w}}) {
        w.open("<g" + attr("id", std::string("panel-") + side) +
               attr("transform", "translate(" + format_number(x) + ",0)") + attr("data-family", layout->family_id) +
               ">");
        w.line("<text" + attr("x", panel_w / 2) + attr("y", 20.0) +
               " font-size=\"14\" font-family=\"sans-serif\" text-anchor=\"middle\">Family " +
               xml_escape(layout->family_id) + "</text>");
        if (!layout->nodes.empty())
            write_family(w, *layout, frame_for(*layout, panel_w, tree_h), 0.0, 0.0, cfg.palette);
        w.close("g");
    }
    if (cfg.show_legend) write_legend(w, cfg.palette, disease_names);
    if (cfg.show_dotplots) write_dotplots(w, dotplots, cfg.palette, width, tree_h);
    w.close("svg");
    return w.take();
}

}  // namespace pedvis
