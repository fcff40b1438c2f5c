#include "pedvis/service.hpp"

#include "pedvis/analytics.hpp"
#include "pedvis/errors.hpp"

#include <httplib.h>

#include <charconv>
#include <functional>
#include <mutex>

namespace pedvis {

ServiceState::ServiceState(Dataset dataset, AppConfig config)
    : dataset_(std::move(dataset)),
      config_(std::move(config)),
      dotplots_(build_dotplots(dataset_)),
      config_hash_(std::hash<std::string>{}(dump(to_json(config_.layout)))) {
    config_.layout.validate();
    config_.render.validate();
}

std::shared_ptr<const RadialLayout> ServiceState::layout(std::string_view family_id) const {
    const auto& graph = dataset_.family(family_id);
    auto key = std::make_pair(std::string(family_id), config_hash_);
    {
        std::shared_lock lock(cache_mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    // Computed outside the lock; a racing insert yields an identical layout.
    auto computed = std::make_shared<const RadialLayout>(compute_layout(graph, config_.layout, dataset_.disease_count()));
    std::unique_lock lock(cache_mutex_);
    return cache_.try_emplace(std::move(key), std::move(computed)).first->second;
}

std::size_t ServiceState::cached_layouts() const {
    std::shared_lock lock(cache_mutex_);
    return cache_.size();
}

std::string layout_body(const ServiceState& state, std::string_view family_id) {
    return dump(to_json(*state.layout(family_id)));
}

Json families_json(const Dataset& ds) {
    Json out = Json::array();
    for (const auto& [fid, g] : ds.families) {
        std::size_t suicides = 0;
        for (const auto& [pid, p] : g.persons) suicides += p.vital_status == VitalStatus::Suicide;
        out.push_back({{"family_id", fid}, {"person_count", g.persons.size()}, {"suicide_count", suicides}});
    }
    return out;
}

namespace {

struct BadQuery : Error {
    explicit BadQuery(const std::string& m) : Error("BAD_QUERY", m) {}
};

HttpResponse json_response(int status, const Json& body) { return {status, "application/json", dump(body)}; }

HttpResponse error_response(int status, const std::string& code, const std::string& message) {
    return json_response(status, Json{{"error", code}, {"message", message}});
}

const std::string& require(const QueryParams& q, const std::string& key) {
    auto it = q.find(key);
    if (it == q.end() || it->second.empty()) throw BadQuery("missing query parameter '" + key + "'");
    return it->second;
}

HttpResponse route(const ServiceState& state, std::string_view path, const QueryParams& q) {
    const Dataset& ds = state.dataset();

    if (path == "/healthz") return {200, "text/plain", "ok"};
    if (path == "/api/families") return json_response(200, families_json(ds));
    if (path == "/api/dotplots") return json_response(200, to_json(state.dotplots()));

    constexpr std::string_view families_prefix = "/api/families/";
    constexpr std::string_view layout_suffix = "/layout";
    if (path.size() > families_prefix.size() + layout_suffix.size() && path.substr(0, families_prefix.size()) == families_prefix &&
        path.substr(path.size() - layout_suffix.size()) == layout_suffix) {
        auto id = path.substr(families_prefix.size(), path.size() - families_prefix.size() - layout_suffix.size());
        return {200, "application/json", layout_body(state, id)};
    }

    if (path == "/api/compare") {
        auto left = state.layout(require(q, "left"));
        auto right = state.layout(require(q, "right"));
        return json_response(200, Json{{"left", to_json(*left)},
                                       {"right", to_json(*right)},
                                       {"dotplots", to_json(state.dotplots())},
                                       {"palette", palette_json(state.config().render.palette, ds.disease_names)}});
    }
    if (path == "/api/analytics/lca") {
        const auto& graph = ds.family(require(q, "family"));
        auto lca = lowest_common_ancestors(graph, require(q, "a"), require(q, "b"));
        return json_response(200, Json(std::vector<std::string>(lca.begin(), lca.end())));
    }
    if (path == "/api/analytics/lineages") {
        Json out = Json::array();
        for (const auto& c : suicide_lineages(ds.family(require(q, "family")))) out.push_back(to_json(c));
        return json_response(200, out);
    }
    if (path == "/api/analytics/cooccurrence") {
        auto it = q.find("scope");
        const std::string scope = it == q.end() ? "suicide" : it->second;
        if (scope != "suicide" && scope != "all") throw BadQuery("scope must be 'suicide' or 'all'");
        const Scope s = scope == "all" ? Scope::All : Scope::SuicideVictims;
        return json_response(200, to_json(diagnosis_cooccurrence(ds, s), s));
    }
    if (path == "/api/analytics/isolated") {
        const auto& graph = ds.family(require(q, "family"));
        int min = kDefaultMinDiagnoses;
        if (auto it = q.find("min"); it != q.end()) {
            const std::string& v = it->second;
            auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), min);
            if (ec != std::errc{} || ptr != v.data() + v.size() || min < 1)
                throw BadQuery("min must be a positive integer");
        }
        Json out = Json::array();
        for (const auto& f : isolated_burden(graph, min)) out.push_back(to_json(f));
        return json_response(200, out);
    }
    return error_response(404, "NOT_FOUND", "no route for '" + std::string(path) + "'");
}

}  // namespace

HttpResponse handle_request(const ServiceState& state, std::string_view path, const QueryParams& query) {
    try {
        return route(state, path, query);
    } catch (const UnknownFamily& e) {
        return error_response(404, e.code(), e.what());
    } catch (const UnknownPerson& e) {
        return error_response(404, e.code(), e.what());
    } catch (const BadQuery& e) {
        return error_response(400, e.code(), e.what());
    } catch (const std::exception& e) {
        return error_response(500, "INTERNAL", e.what());
    }
}

void install_routes(httplib::Server& server, const ServiceState& state, const std::string& static_dir) {
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                {"Access-Control-Allow-Methods", "GET, OPTIONS"},
                                {"Access-Control-Allow-Headers", "Content-Type"}});
    if (!static_dir.empty() && !server.set_mount_point("/", static_dir))
        throw ConfigError("static directory '" + static_dir + "' does not exist");

    auto handler = [&state](const httplib::Request& req, httplib::Response& res) {
        QueryParams query;
        for (const auto& [k, v] : req.params) query.emplace(k, v);  // first value wins
        auto out = handle_request(state, req.path, query);
        res.status = out.status;
        res.set_content(out.body, out.content_type);
    };
    server.Get("/healthz", handler);
    server.Get(R"(/api/.*)", handler);
    server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
}

}  // namespace pedvis
