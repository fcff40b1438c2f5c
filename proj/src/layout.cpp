#include "pedvis/layout.hpp"

#include "pedvis/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <unordered_map>

namespace pedvis {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double normalize_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    if (a >= kTwoPi) a -= kTwoPi;
    return a;
}

// Leaf counts for every unit, computed bottom-up without recursion.
std::unordered_map<std::string, int> all_leaf_counts(const PedigreeGraph& graph) {
    std::unordered_map<std::string, int> leaves;
    std::vector<std::pair<const CoupleUnit*, bool>> stack;
    for (const auto& root : graph.founder_units) stack.emplace_back(&graph.units.at(root), false);
    while (!stack.empty()) {
        auto [u, expanded] = stack.back();
        stack.pop_back();
        if (u->child_units.empty()) {
            leaves[u->unit_id] = 1;
        } else if (expanded) {
            int sum = 0;
            for (const auto& c : u->child_units) sum += leaves.at(c);
            leaves[u->unit_id] = sum;
        } else {
            stack.emplace_back(u, true);
            for (const auto& c : u->child_units) stack.emplace_back(&graph.units.at(c), false);
        }
    }
    return leaves;
}

struct Span {
    double start;
    double end;
};

// Splits [parent.start, parent.end] into contiguous pieces proportional to
// `weights`; the last piece ends exactly at parent.end.
std::vector<Span> split_span(Span parent, const std::vector<int>& weights) {
    double total = 0.0;
    for (int w : weights) total += w;
    std::vector<Span> out;
    out.reserve(weights.size());
    const double width = parent.end - parent.start;
    double cumulative = 0.0;
    double start = parent.start;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        cumulative += weights[i];
        double end = i + 1 == weights.size() ? parent.end : parent.start + width * (cumulative / total);
        out.push_back({start, end});
        start = end;
    }
    return out;
}

void place_glyphs(const PedigreeGraph& graph, const CoupleUnit& unit, const LayoutConfig& cfg, int disease_count,
                  PlacedUnit& node) {
    const double px = node.radius * std::cos(node.theta);
    const double py = node.radius * std::sin(node.theta);
    const double tx = -std::sin(node.theta);
    const double ty = std::cos(node.theta);
    const bool couple = unit.father && unit.mother;

    auto place = [&](const std::string& pid, double offset) {
        const Role role = unit.role_of(pid);
        PlacedGlyph g;
        g.person_id = pid;
        g.role = role;
        g.descriptor = glyph_for(graph.persons.at(pid), role, disease_count);
        g.shape = g.descriptor.shape;
        g.x = px + offset * tx;
        g.y = py + offset * ty;
        node.glyphs.push_back(std::move(g));
    };
    if (unit.father) place(*unit.father, couple ? -cfg.partner_offset : 0.0);
    if (unit.mother) place(*unit.mother, couple ? cfg.partner_offset : 0.0);
}

void report_overlaps(RadialLayout& layout) {
    std::map<int, std::vector<const PlacedUnit*>> rings;
    for (const auto& n : layout.nodes)
        if (n.radius > 0.0) rings[n.generation].push_back(&n);

    for (auto& [gen, units] : rings) {
        if (units.size() < 2) continue;
        std::sort(units.begin(), units.end(), [](const PlacedUnit* a, const PlacedUnit* b) {
            return std::tie(a->theta, a->unit_id) < std::tie(b->theta, b->unit_id);
        });
        std::set<std::pair<std::string, std::string>> reported;
        for (std::size_t i = 0; i < units.size(); ++i) {
            const PlacedUnit* a = units[i];
            const PlacedUnit* b = units[(i + 1) % units.size()];
            double gap = b->theta - a->theta;
            if (i + 1 == units.size()) gap += kTwoPi;
            gap -= angular_half_extent(*a, layout.config) + angular_half_extent(*b, layout.config);
            if (gap >= 0.0) continue;
            auto key = std::minmax(a->unit_id, b->unit_id);
            if (!reported.emplace(key.first, key.second).second) continue;
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.3g", -gap);
            layout.warnings.push_back({"OVERLAP", gen, key.first, key.second,
                                       "glyphs of units '" + key.first + "' and '" + key.second + "' on ring " +
                                           std::to_string(gen) + " overlap by " + buf + " rad"});
        }
    }
}

}  // namespace

void LayoutConfig::validate() const {
    auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!positive(ring_spacing)) throw ConfigError("ring_spacing must be positive");
    if (!positive(glyph_size)) throw ConfigError("glyph_size must be positive");
    if (!positive(partner_offset)) throw ConfigError("partner_offset must be positive");
    if (!(std::isfinite(center_radius) && center_radius >= 0.0)) throw ConfigError("center_radius must be non-negative");
    if (!std::isfinite(start_angle)) throw ConfigError("start_angle must be finite");
    if (!(ring_spacing > 2.0 * glyph_size)) throw ConfigError("ring_spacing must exceed 2 * glyph_size");
}

const PlacedUnit* RadialLayout::find(std::string_view unit_id) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), unit_id,
                               [](const PlacedUnit& n, std::string_view id) { return n.unit_id < id; });
    return it != nodes.end() && it->unit_id == unit_id ? &*it : nullptr;
}

double RadialLayout::ring_radius(int generation) const {
    return config.center_radius + (generation + ring_offset) * config.ring_spacing;
}

int leaf_count(const PedigreeGraph& graph, std::string_view unit_id) {
    const CoupleUnit& root = graph.unit(unit_id);
    int leaves = 0;
    std::vector<const CoupleUnit*> stack{&root};
    while (!stack.empty()) {
        const CoupleUnit* u = stack.back();
        stack.pop_back();
        if (u->child_units.empty()) ++leaves;
        for (const auto& c : u->child_units) stack.push_back(&graph.units.at(c));
    }
    return leaves;
}

double angular_half_extent(const PlacedUnit& unit, const LayoutConfig& cfg) {
    if (unit.radius <= 0.0) return 0.0;
    const double half = unit.glyphs.size() > 1 ? cfg.partner_offset + cfg.glyph_size / 2.0 : cfg.glyph_size / 2.0;
    return half / unit.radius;
}

RadialLayout compute_layout(const PedigreeGraph& graph, const LayoutConfig& cfg, int disease_count) {
    cfg.validate();
    RadialLayout layout;
    layout.family_id = graph.family_id;
    layout.config = cfg;
    layout.disease_count = disease_count;
    layout.max_generation = graph.max_generation();
    if (graph.units.empty()) return layout;

    const auto leaves = all_leaf_counts(graph);
    std::unordered_map<std::string, Span> spans;  // in layout order, before rotation
    {
        std::vector<int> weights;
        for (const auto& f : graph.founder_units) weights.push_back(leaves.at(f));
        layout.ring_offset = graph.founder_units.size() > 1 ? 1 : 0;
        auto pieces = split_span({0.0, kTwoPi}, weights);
        for (std::size_t i = 0; i < pieces.size(); ++i) spans[graph.founder_units[i]] = pieces[i];
    }
    std::vector<const CoupleUnit*> queue;
    for (const auto& f : graph.founder_units) queue.push_back(&graph.units.at(f));
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const CoupleUnit* u = queue[head];
        if (u->child_units.empty()) continue;
        std::vector<int> weights;
        for (const auto& c : u->child_units) weights.push_back(leaves.at(c));
        auto pieces = split_span(spans.at(u->unit_id), weights);
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            spans[u->child_units[i]] = pieces[i];
            queue.push_back(&graph.units.at(u->child_units[i]));
        }
    }

    const double sign = cfg.direction == Direction::CounterClockwise ? 1.0 : -1.0;
    layout.nodes.reserve(graph.units.size());
    for (const auto& [uid, u] : graph.units) {
        const Span s = spans.at(uid);
        PlacedUnit node;
        node.unit_id = uid;
        node.generation = u.generation;
        const double width = s.end - s.start;
        const double raw_start = sign > 0 ? cfg.start_angle + s.start : cfg.start_angle - s.end;
        node.span_start = normalize_angle(raw_start);
        node.span_end = node.span_start + width;
        node.theta = normalize_angle(node.span_start + width / 2.0);
        node.radius = layout.ring_radius(u.generation);
        place_glyphs(graph, u, cfg, disease_count, node);
        for (const auto& g : node.glyphs)
            layout.bounds = std::max(layout.bounds, std::max(std::abs(g.x), std::abs(g.y)) + cfg.glyph_size / 2.0);
        layout.nodes.push_back(std::move(node));
        if (u.parent_unit) layout.links.push_back({*u.parent_unit, uid});
    }
    std::sort(layout.links.begin(), layout.links.end(),
              [](const Link& a, const Link& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
    report_overlaps(layout);
    return layout;
}

}  // namespace pedvis
