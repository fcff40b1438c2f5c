#include "pedvis/json_io.hpp"

#include <cstdio>
#include <cstdlib>

namespace pedvis {

double round_sig9(double v) {
    if (v == 0.0) return 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

Json to_json(const LayoutConfig& cfg) {
    return Json{{"ring_spacing", round_sig9(cfg.ring_spacing)},
                {"center_radius", round_sig9(cfg.center_radius)},
                {"glyph_size", round_sig9(cfg.glyph_size)},
                {"partner_offset", round_sig9(cfg.partner_offset)},
                {"start_angle", round_sig9(cfg.start_angle)},
                {"direction", cfg.direction == Direction::CounterClockwise ? "ccw" : "cw"}};
}

Json to_json(const GlyphDescriptor& glyph) {
    Json j{{"status", std::string(to_string(glyph.status_color_key))},
           {"fill_fraction", round_sig9(glyph.fill_fraction)},
           {"radial_chart", nullptr}};
    if (glyph.radial_chart) {
        Json sectors = Json::array();
        for (const auto& s : *glyph.radial_chart) {
            sectors.push_back({{"disease_index", s.disease_index},
                               {"angle_start", round_sig9(s.angle_start)},
                               {"angle_end", round_sig9(s.angle_end)},
                               {"filled", s.filled}});
        }
        j["radial_chart"] = std::move(sectors);
    }
    return j;
}

Json to_json(const RadialLayout& layout) {
    Json nodes = Json::array();
    for (const auto& n : layout.nodes) {
        Json glyphs = Json::array();
        for (const auto& g : n.glyphs) {
            Json gj{{"person_id", g.person_id},
                    {"role", std::string(to_string(g.role))},
                    {"shape", std::string(to_string(g.shape))},
                    {"x", round_sig9(g.x)},
                    {"y", round_sig9(g.y)}};
            const Json descriptor = to_json(g.descriptor);
            for (const auto& [k, v] : descriptor.items()) gj[k] = v;
            glyphs.push_back(std::move(gj));
        }
        nodes.push_back({{"unit_id", n.unit_id},
                         {"generation", n.generation},
                         {"radius", round_sig9(n.radius)},
                         {"theta", round_sig9(n.theta)},
                         {"span", {round_sig9(n.span_start), round_sig9(n.span_end)}},
                         {"glyphs", std::move(glyphs)}});
    }
    Json links = Json::array();
    for (const auto& l : layout.links) links.push_back({{"from", l.from}, {"to", l.to}});
    Json warnings = Json::array();
    for (const auto& w : layout.warnings) {
        warnings.push_back({{"code", w.code},
                            {"generation", w.generation},
                            {"units", {w.unit_a, w.unit_b}},
                            {"message", w.message}});
    }
    return Json{{"family_id", layout.family_id},
                {"config", to_json(layout.config)},
                {"disease_count", layout.disease_count},
                {"max_generation", layout.max_generation},
                {"ring_offset", layout.ring_offset},
                {"bounds", round_sig9(layout.bounds)},
                {"nodes", std::move(nodes)},
                {"links", std::move(links)},
                {"warnings", std::move(warnings)}};
}

Json to_json(const DotPlotSeries& series) {
    Json dots = Json::array();
    for (const auto& d : series.dots)
        dots.push_back({{"person_id", d.person_id}, {"family_id", d.family_id}, {"age_at_diagnosis", d.age_at_diagnosis}});
    return Json{{"disease_index", series.disease_index},
                {"disease_name", series.disease_name},
                {"count", series.dots.size()},
                {"dots", std::move(dots)}};
}

Json to_json(const std::vector<DotPlotSeries>& series) {
    Json out = Json::array();
    for (const auto& s : series) out.push_back(to_json(s));
    return out;
}

namespace {

Json issues_json(const std::vector<Issue>& issues) {
    Json out = Json::array();
    for (const auto& i : issues) out.push_back({{"row", i.row}, {"code", i.code}, {"message", i.message}});
    return out;
}

}  // namespace

Json to_json(const ValidationReport& report) {
    return Json{{"ok", report.ok()},
                {"errors", issues_json(report.errors)},
                {"warnings", issues_json(report.warnings)},
                {"counts", {{"persons", report.persons}, {"families", report.families}, {"diagnoses", report.diagnoses}}}};
}

Json to_json(const LineageChain& chain) {
    return Json{{"persons", chain.persons}, {"shared_diagnoses", chain.shared_diagnoses}};
}

Json to_json(const IsolatedBurdenFinding& f) {
    return Json{{"person_id", f.person_id},
                {"diagnosis_count", f.diagnosis_count},
                {"generation", f.generation},
                {"peer_alive_fraction", round_sig9(f.peer_alive_fraction)},
                {"context_alive_fraction", round_sig9(f.context_alive_fraction)}};
}

Json to_json(const CooccurrenceMatrix& matrix, Scope scope) {
    Json rows = Json::array();
    for (int i = 0; i < matrix.size(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < matrix.size(); ++j) row.push_back(matrix.at(i, j));
        rows.push_back(std::move(row));
    }
    return Json{{"scope", std::string(to_string(scope))}, {"matrix", std::move(rows)}};
}

Json palette_json(const Palette& palette, const std::vector<std::string>& disease_names) {
    Json diseases = Json::array();
    for (std::size_t i = 0; i < disease_names.size(); ++i) {
        diseases.push_back({{"index", i},
                            {"name", disease_names[i]},
                            {"color", palette.disease(static_cast<int>(i))}});
    }
    return Json{{"status", {{"alive", palette.alive}, {"deceased", palette.deceased}, {"suicide", palette.suicide}}},
                {"diseases", std::move(diseases)}};
}

std::string dump(const Json& doc) { return doc.dump(); }

}  // namespace pedvis
