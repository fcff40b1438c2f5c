#include "pedvis/config.hpp"

#include "pedvis/errors.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

namespace pedvis {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_hex_color(std::string_view v) {
    if (v.size() != 7 || v[0] != '#') return false;
    for (char c : v.substr(1))
        if (!std::isxdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

AppConfig parse_config(std::string_view text) {
    AppConfig cfg;
    int line_no = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') continue;

        auto fail = [&](const std::string& why) -> ConfigError {
            return ConfigError("config line " + std::to_string(line_no) + ": " + why);
        };
        auto eq = line.find('=');
        if (eq == std::string_view::npos) throw fail("expected key = value");
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));

        auto number = [&]() {
            char* end = nullptr;
            double v = std::strtod(value.c_str(), &end);
            if (value.empty() || *end != '\0') throw fail("'" + key + "' expects a number");
            return v;
        };
        auto integer = [&]() {
            int v = 0;
            auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
            if (ec != std::errc{} || ptr != value.data() + value.size()) throw fail("'" + key + "' expects an integer");
            return v;
        };
        auto boolean = [&]() {
            if (value == "true") return true;
            if (value == "false") return false;
            throw fail("'" + key + "' expects true or false");
        };
        auto color = [&]() {
            if (!is_hex_color(value)) throw fail("'" + key + "' expects #RRGGBB");
            return value;
        };

        if (key == "ring_spacing") cfg.layout.ring_spacing = number();
        else if (key == "center_radius") cfg.layout.center_radius = number();
        else if (key == "glyph_size") cfg.layout.glyph_size = number();
        else if (key == "partner_offset") cfg.layout.partner_offset = number();
        else if (key == "start_angle") cfg.layout.start_angle = number();
        else if (key == "direction") {
            if (value == "ccw") cfg.layout.direction = Direction::CounterClockwise;
            else if (value == "cw") cfg.layout.direction = Direction::Clockwise;
            else throw fail("direction expects ccw or cw");
        }
        else if (key == "canvas_width") cfg.render.canvas_width = integer();
        else if (key == "canvas_height") cfg.render.canvas_height = integer();
        else if (key == "show_dotplots") cfg.render.show_dotplots = boolean();
        else if (key == "show_legend") cfg.render.show_legend = boolean();
        else if (key == "color.alive") cfg.render.palette.alive = color();
        else if (key == "color.deceased") cfg.render.palette.deceased = color();
        else if (key == "color.suicide") cfg.render.palette.suicide = color();
        else if (key.rfind("color.disease.", 0) == 0) {
            std::string_view idx = std::string_view(key).substr(14);
            int i = -1;
            auto [ptr, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), i);
            if (ec != std::errc{} || ptr != idx.data() + idx.size() || i < 0 || i > 1023)
                throw fail("bad disease index in '" + key + "'");
            auto& table = cfg.render.palette.diseases;
            if (table.size() <= static_cast<std::size_t>(i)) table.resize(i + 1);
            table[i] = color();
        }
        else throw fail("unknown key '" + key + "'");
    }
    cfg.layout.validate();
    cfg.render.validate();
    return cfg;
}

}  // namespace pedvis
