// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "pedvis/analytics.hpp"
#include "pedvis/glyph.hpp"
#include "pedvis/ingest.hpp"
#include "pedvis/json_io.hpp"
#include "pedvis/layout.hpp"
#include "pedvis/service.hpp"
#include "pedvis/svg.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/xml_check.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>

using namespace pedvis;
namespace t = pedvis::test;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(const std::string& name, const std::function<Outcome()>& check) {
    Outcome o;
    try {
        o = check();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s  %-28s %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

Outcome lca_oracle() {
    const auto start = Clock::now();
    int mismatches = 0, queries = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        auto persons = t::random_pedigree(seed, 200);
        auto index = t::index_persons(persons);
        auto g = build_graph(persons);
        t::Rng rng(seed ^ 0x9E3779B97F4A7C15ULL);
        for (int q = 0; q < 50; ++q, ++queries) {
            const auto& a = persons[rng.below(static_cast<int>(persons.size()))].person_id;
            const auto& b = persons[rng.below(static_cast<int>(persons.size()))].person_id;
            if (lowest_common_ancestors(g, a, b) != t::oracle_lca(index, a, b)) ++mismatches;
        }
    }
    const double secs = seconds_since(start);
    return {mismatches == 0 && secs < 30.0,
            fmt("%.0f queries, %.0f mismatches, %.3f s (limit 30 s)", queries, mismatches, secs)};
}

Outcome layout_invariants() {
    const auto start = Clock::now();
    double worst_partition = 0.0, worst_proportion = 0.0;
    int non_monotone = 0, json_diffs = 0, deepest = 0;
    std::size_t largest = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        t::Rng rng(seed);
        const int depth = rng.between(1, 10);
        const int branching = rng.between(1, 5);
        auto g = build_graph(t::random_family_tree(seed, depth, branching, 2000));
        auto layout = compute_layout(g);
        largest = std::max(largest, g.persons.size());
        deepest = std::max(deepest, layout.max_generation);
        for (const auto& n : layout.nodes) {
            const auto& u = g.unit(n.unit_id);
            if (u.child_units.empty()) continue;
            const double leaves = t::oracle_leaf_count(g, n.unit_id);
            double cursor = n.span_start;
            for (const auto& c : u.child_units) {
                const PlacedUnit* child = layout.find(c);
                worst_partition = std::max(worst_partition,
                                           std::abs(std::remainder(child->span_start - cursor, 2 * std::numbers::pi)));
                cursor = child->span_start + child->span_width();
                const double ratio = child->span_width() / n.span_width();
                worst_proportion = std::max(worst_proportion, std::abs(ratio - t::oracle_leaf_count(g, c) / leaves));
            }
            worst_partition = std::max(worst_partition, std::abs(cursor - (n.span_start + n.span_width())));
        }
        std::map<int, double> rings;
        for (const auto& n : layout.nodes) rings.emplace(n.generation, n.radius);
        double previous = -1.0;
        for (const auto& [gen, r] : rings) {
            if (!(r > previous)) ++non_monotone;
            previous = r;
        }
        if (dump(to_json(layout)) != dump(to_json(compute_layout(g)))) ++json_diffs;
    }
    const double secs = seconds_since(start);
    const bool ok = worst_partition <= 1e-9 && worst_proportion <= 1e-9 && non_monotone == 0 && json_diffs == 0 &&
                    secs < 10.0;
    return {ok, fmt("largest %.0f persons, deepest generation %.0f, ", static_cast<double>(largest), deepest) +
                    fmt("partition err %.3g rad, proportion err %.3g, ", worst_partition, worst_proportion) +
                    fmt("non-monotone rings %.0f, json diffs %.0f, %.3f s (limit 10 s)", non_monotone, json_diffs, secs)};
}

Outcome sector_geometry() {
    std::string detail;
    bool ok = true;
    for (int d : {1, 2, 16, 17}) {
        auto s = sectors_for({}, d);
        bool part = static_cast<int>(s.size()) == d && s.front().angle_start == 0.0 && s.back().angle_end == 360.0;
        for (int i = 0; i + 1 < d; ++i) part &= s[i].angle_end == s[i + 1].angle_start;
        for (int i = 0; i < d; ++i) part &= s[i].angle_end > s[i].angle_start;
        if (d == 16)
            for (const auto& x : s) part &= x.angle_end - x.angle_start == 22.5;
        ok &= part;
        detail += "D=" + std::to_string(d) + (part ? " ok " : " BAD ");
    }
    return {ok, detail};
}

Outcome lineages_27251() {
    auto chains = suicide_lineages(build_graph(t::family_27251_like()));
    bool ok = chains.size() == 2;
    for (const auto& c : chains) ok &= c.persons.size() == 2 && c.shared_diagnoses.count(t::kDepression) == 1;
    return {ok, std::to_string(chains.size()) + " chains"};
}

Outcome burden_149() {
    auto f = isolated_burden(build_graph(t::family_149_like()), 5);
    const bool ok = f.size() == 1 && f[0].diagnosis_count == 5 && f[0].peer_alive_fraction == 1.0 &&
                    f[0].context_alive_fraction == 1.0;
    if (f.size() != 1) return {false, std::to_string(f.size()) + " findings"};
    return {ok, f[0].person_id + fmt(": count %.0f, peer %.9g, context %.9g", f[0].diagnosis_count,
                                     f[0].peer_alive_fraction, f[0].context_alive_fraction)};
}

Outcome nine_families() {
    ServiceState state(t::nine_family_dataset(), AppConfig{});
    auto families = Json::parse(handle_request(state, "/api/families", {}).body);
    std::vector<std::string> ids;
    for (const auto& f : families) ids.push_back(f["family_id"]);
    int bad_pairs = 0, pairs = 0;
    std::size_t dots = 0;
    for (const auto& a : ids) {
        for (const auto& b : ids) {
            ++pairs;
            auto r = handle_request(state, "/api/compare", {{"left", a}, {"right", b}});
            auto j = Json::parse(r.body);
            const bool good = r.status == 200 && j["left"]["family_id"] == a && j["right"]["family_id"] == b &&
                              j["dotplots"].size() == static_cast<std::size_t>(state.dataset().disease_count());
            if (!good) ++bad_pairs;
            if (pairs == 1)
                for (const auto& s : j["dotplots"]) dots += s["dots"].size();
        }
    }
    const auto expected = state.dataset().diagnosis_count();
    const bool ok = families.size() == 9 && bad_pairs == 0 && dots == expected;
    return {ok, std::to_string(families.size()) + " families, " + std::to_string(pairs) + " compare pairs (" +
                    std::to_string(bad_pairs) + " bad), dots " + std::to_string(dots) + "/" + std::to_string(expected)};
}

Outcome ingest_round_trip() {
    int round_trip_failures = 0, permutation_failures = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        auto ds = t::random_dataset(seed);
        auto first = parse_dataset(serialize_dataset(ds));
        if (!first.dataset) {
            ++round_trip_failures;
            continue;
        }
        auto second = parse_dataset(serialize_dataset(*first.dataset));
        if (!second.dataset || !(*second.dataset == *first.dataset) || !(*first.dataset == ds)) ++round_trip_failures;
    }
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto ds = t::random_dataset(1000 + seed);
        std::istringstream in(serialize_dataset(ds));
        std::string header, line;
        std::getline(in, header);
        std::vector<std::string> rows;
        while (std::getline(in, line))
            if (!line.empty()) rows.push_back(line);
        t::Rng rng(seed);
        for (std::size_t i = rows.size(); i > 1; --i) std::swap(rows[i - 1], rows[rng.below(static_cast<int>(i))]);
        std::string shuffled = header + "\n";
        for (const auto& r : rows) shuffled += r + "\n";
        auto parsed = parse_dataset(shuffled);
        if (!parsed.dataset || !(*parsed.dataset == ds)) ++permutation_failures;
    }
    return {round_trip_failures == 0 && permutation_failures == 0,
            fmt("round-trip failures %.0f/50, permutation failures %.0f/20", round_trip_failures, permutation_failures)};
}

std::string read_golden(const std::string& name) {
    std::ifstream in(std::string(PEDVIS_GOLDEN_DIR) + "/" + name, std::ios::binary);
    if (!in) return {};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome render_determinism() {
    const auto ds = t::nine_family_dataset();
    const RenderConfig cfg;
    const auto dots = build_dotplots(ds);
    auto layout_of = [&](const std::string& id) { return compute_layout(ds.family(id), {}, ds.disease_count()); };
    int documents = 0, malformed = 0, unstable = 0;
    auto check = [&](const std::function<std::string()>& render) {
        const std::string a = render();
        ++documents;
        if (!t::xml_error(a).empty()) ++malformed;
        if (a != render()) ++unstable;
        return a;
    };
    for (const auto& [fid, g] : ds.families) check([&] { return render_family(layout_of(fid), cfg, ds.disease_names, dots); });
    const auto compare = check([&] {
        return render_compare(layout_of("27251"), layout_of("68939"), dots, cfg, ds.disease_names);
    });
    const auto single = check([&] { return render_family(layout_of("149"), cfg, ds.disease_names, dots); });
    const bool goldens = compare == read_golden("compare_27251_68939.svg") && single == read_golden("family_149.svg");
    return {malformed == 0 && unstable == 0 && goldens,
            fmt("%.0f documents, %.0f malformed, %.0f unstable, ", documents, malformed, unstable) +
                (goldens ? "goldens match" : "golden mismatch")};
}

Outcome performance() {
    auto persons = t::random_family_tree(42, 12, 8, 10000, "BIG");
    auto g = build_graph(persons);
    auto start = Clock::now();
    auto layout = compute_layout(g);
    std::size_t glyphs = 0;
    for (const auto& n : layout.nodes) glyphs += n.glyphs.size();
    const double layout_secs = seconds_since(start);

    const std::string csv = serialize_dataset(t::nine_family_dataset());
    start = Clock::now();
    auto parsed = parse_dataset(csv);
    ServiceState state(std::move(*parsed.dataset), AppConfig{});
    bool served = handle_request(state, "/api/families", {}).status == 200;
    for (const auto& [fid, fam] : state.dataset().families) served &= state.layout(fid) != nullptr;
    const double cold_secs = seconds_since(start);

    return {persons.size() == 10000 && layout_secs < 1.0 && served && cold_secs < 0.5,
            fmt("%.0f persons, %.0f glyphs, ", static_cast<double>(persons.size()), static_cast<double>(glyphs)) +
                fmt("layout %.3f s (limit 1 s), service cold start %.3f s (limit 0.5 s)", layout_secs, cold_secs)};
}

}  // namespace

int main() {
    report("lca-oracle-equivalence", lca_oracle);
    report("layout-invariants", layout_invariants);
    report("sector-geometry", sector_geometry);
    report("fixture-27251-lineages", lineages_27251);
    report("fixture-149-isolated-burden", burden_149);
    report("nine-family-service", nine_families);
    report("ingest-round-trip", ingest_round_trip);
    report("render-determinism", render_determinism);
    report("performance", performance);
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
