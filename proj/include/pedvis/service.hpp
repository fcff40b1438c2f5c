#pragma once

#include "pedvis/config.hpp"
#include "pedvis/glyph.hpp"
#include "pedvis/ingest.hpp"
#include "pedvis/json_io.hpp"
#include "pedvis/layout.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <string_view>

namespace httplib {
class Server;
}

namespace pedvis {

/// Read-only state behind the HTTP API. The dataset and dot-plots are fixed
/// at construction; layouts are computed on first request and memoized per
/// (family, layout config).
class ServiceState {
public:
    ServiceState(Dataset dataset, AppConfig config);

    const Dataset& dataset() const { return dataset_; }
    const AppConfig& config() const { return config_; }
    const std::vector<DotPlotSeries>& dotplots() const { return dotplots_; }

    /// Throws UnknownFamily.
    std::shared_ptr<const RadialLayout> layout(std::string_view family_id) const;
    std::size_t cached_layouts() const;

private:
    Dataset dataset_;
    AppConfig config_;
    std::vector<DotPlotSeries> dotplots_;
    std::uint64_t config_hash_;

    mutable std::shared_mutex cache_mutex_;
    mutable std::map<std::pair<std::string, std::uint64_t>, std::shared_ptr<const RadialLayout>> cache_;
};

struct HttpResponse {
    int status = 200;
    std::string content_type = "application/json";
    std::string body;
};

using QueryParams = std::map<std::string, std::string>;

/// Routes one GET request. Unknown families and persons map to 404, missing
/// or malformed parameters to 400.
HttpResponse handle_request(const ServiceState& state, std::string_view path, const QueryParams& query);

/// Layout body shared by `/api/families/{id}/layout` and the `layout` CLI command.
std::string layout_body(const ServiceState& state, std::string_view family_id);

Json families_json(const Dataset& ds);

/// Registers every API route plus permissive CORS headers on `server`.
/// When `static_dir` is non-empty it is mounted at `/` for the UI assets.
void install_routes(httplib::Server& server, const ServiceState& state, const std::string& static_dir = {});

}  // namespace pedvis
