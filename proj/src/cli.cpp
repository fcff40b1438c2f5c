#include "pedvis/cli.hpp"

#include "pedvis/analytics.hpp"
#include "pedvis/config.hpp"
#include "pedvis/errors.hpp"
#include "pedvis/json_io.hpp"
#include "pedvis/service.hpp"
#include "pedvis/svg.hpp"

#include <CLI11.hpp>
#include <httplib.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace pedvis {

namespace {

// Carries an exit code out of a subcommand.
struct CliFailure {
    int exit_code;
    std::string code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliFailure{kExitIo, "IO", "cannot open '" + path + "'"};
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw CliFailure{kExitIo, "IO", "cannot read '" + path + "'"};
    return ss.str();
}

void write_output(const std::string& path, const std::string& body, std::ostream& out) {
    if (path.empty()) {
        out << body << '\n';
        return;
    }
    std::ofstream f(path, std::ios::binary);
    f << body;
    if (!f) throw CliFailure{kExitIo, "IO", "cannot write '" + path + "'"};
}

AppConfig load_config(const std::string& path) {
    if (path.empty()) return {};
    try {
        return parse_config(read_file(path));
    } catch (const ConfigError& e) {
        throw CliFailure{kExitBadArgs, e.code(), e.what()};
    }
}

ParseResult parse_or_report(const std::string& text) {
    try {
        return parse_dataset(text);
    } catch (const SchemaError& e) {
        ParseResult r;
        r.report.errors.push_back({1, e.code(), e.what()});
        return r;
    }
}

Dataset load_dataset(const std::string& path) {
    auto result = parse_or_report(read_file(path));
    if (!result.dataset) {
        const auto& first = result.report.errors.front();
        throw CliFailure{kExitValidation, first.code,
                         "'" + path + "' failed validation with " + std::to_string(result.report.errors.size()) +
                             " error(s); first at line " + std::to_string(first.row) + ": " + first.message};
    }
    return std::move(*result.dataset);
}

const PedigreeGraph& family_or_fail(const Dataset& ds, const std::string& id) {
    try {
        return ds.family(id);
    } catch (const UnknownFamily& e) {
        throw CliFailure{kExitBadArgs, e.code(), e.what()};
    }
}

Json stats_json(const Dataset& ds, const std::string& family, int min_diagnoses, Scope scope) {
    Json families = Json::array();
    for (const auto& [fid, g] : ds.families) {
        if (!family.empty() && fid != family) continue;
        Json lineages = Json::array();
        for (const auto& c : suicide_lineages(g)) lineages.push_back(to_json(c));
        Json burden = Json::array();
        for (const auto& f : isolated_burden(g, min_diagnoses)) burden.push_back(to_json(f));
        families.push_back({{"family_id", fid}, {"lineages", std::move(lineages)}, {"isolated_burden", std::move(burden)}});
    }
    return Json{{"dotplots", to_json(build_dotplots(ds))},
                {"cooccurrence", to_json(diagnosis_cooccurrence(ds, scope), scope)},
                {"families", std::move(families)}};
}

Json lca_json(const Dataset& ds, const std::string& family, const std::string& a, const std::string& b) {
    const PedigreeGraph* graph = nullptr;
    if (!family.empty()) {
        graph = &family_or_fail(ds, family);
    } else {
        for (const auto& [fid, g] : ds.families)
            if (g.contains(a)) graph = &g;
    }
    if (!graph || !graph->contains(a)) throw CliFailure{kExitBadArgs, "UNKNOWN_PERSON", "unknown person '" + a + "'"};
    std::vector<std::string> ids;
    if (graph->contains(b)) {
        auto lca = lowest_common_ancestors(*graph, a, b);
        ids.assign(lca.begin(), lca.end());
    } else if (!family.empty()) {
        throw CliFailure{kExitBadArgs, "UNKNOWN_PERSON", "unknown person '" + b + "'"};
    }
    return Json{{"lca", ids}};
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pedigree layout and analytics"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "Key-value config file (palette, layout constants)");

    std::string file;
    std::string output;

    auto* validate = app.add_subcommand("validate", "Check a dataset and print the validation report");
    validate->add_option("file", file, "Input CSV")->required();

    auto* layout = app.add_subcommand("layout", "Print the radial layout JSON of one family");
    std::string family;
    layout->add_option("file", file, "Input CSV")->required();
    layout->add_option("--family", family, "Family id")->required();
    layout->add_option("-o,--output", output, "Output file (default stdout)");

    auto* render = app.add_subcommand("render", "Render one family or a side-by-side comparison to SVG");
    std::string left, right;
    render->add_option("file", file, "Input CSV")->required();
    auto* left_opt = render->add_option("--left", left, "Family shown on the left");
    auto* right_opt = render->add_option("--right", right, "Family shown on the right");
    auto* family_opt = render->add_option("--family", family, "Render a single family");
    left_opt->needs(right_opt);
    right_opt->needs(left_opt);
    family_opt->excludes(left_opt)->excludes(right_opt);
    render->add_option("-o,--output", output, "Output file (default stdout)");

    auto* stats = app.add_subcommand("stats", "Dot-plots, lineages, co-occurrence and isolated-burden findings");
    int min_diagnoses = kDefaultMinDiagnoses;
    std::vector<std::string> lca_pair;
    std::string scope_name = "suicide";
    stats->add_option("file", file, "Input CSV")->required();
    stats->add_option("--family", family, "Restrict per-family results");
    stats->add_option("--min-diagnoses", min_diagnoses, "Isolated-burden threshold")->check(CLI::PositiveNumber);
    stats->add_option("--lca", lca_pair, "Lowest common ancestors of two persons")->expected(2);
    stats->add_option("--scope", scope_name, "Co-occurrence scope")->check(CLI::IsMember({"suicide", "all"}));
    stats->add_option("-o,--output", output, "Output file (default stdout)");

    auto* serve = app.add_subcommand("serve", "Serve the HTTP API (PEDVIS_PORT overrides --port)");
    int port = 8080;
    std::string host = "0.0.0.0";
    std::string static_dir;
    serve->add_option("file", file, "Input CSV")->required();
    serve->add_option("--port", port, "Listen port")->check(CLI::Range(0, 65535));
    serve->add_option("--host", host, "Listen address");
    serve->add_option("--static", static_dir, "Directory of UI assets served at /");

    auto fail_line = [&](const std::string& code, const std::string& message) {
        err << Json{{"error", code}, {"message", message}}.dump() << '\n';
    };

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        fail_line("BAD_ARGS", e.what());
        return kExitBadArgs;
    }

    try {
        const AppConfig config = load_config(config_path);

        if (validate->parsed()) {
            auto result = parse_or_report(read_file(file));
            out << to_json(result.report).dump() << '\n';
            return result.report.ok() ? kExitOk : kExitValidation;
        }

        const Dataset ds = load_dataset(file);

        if (layout->parsed()) {
            family_or_fail(ds, family);
            ServiceState state(ds, config);
            write_output(output, layout_body(state, family), out);
        } else if (render->parsed()) {
            const int d = ds.disease_count();
            std::string svg;
            if (!left.empty()) {
                auto l = compute_layout(family_or_fail(ds, left), config.layout, d);
                auto r = compute_layout(family_or_fail(ds, right), config.layout, d);
                svg = render_compare(l, r, build_dotplots(ds), config.render, ds.disease_names);
            } else if (!family.empty()) {
                auto l = compute_layout(family_or_fail(ds, family), config.layout, d);
                svg = render_family(l, config.render, ds.disease_names, build_dotplots(ds));
            } else {
                throw CliFailure{kExitBadArgs, "BAD_ARGS", "render needs --left and --right, or --family"};
            }
            write_output(output, svg, out);
        } else if (stats->parsed()) {
            Json doc;
            if (!lca_pair.empty()) {
                doc = lca_json(ds, family, lca_pair[0], lca_pair[1]);
            } else {
                if (!family.empty()) family_or_fail(ds, family);
                doc = stats_json(ds, family, min_diagnoses, scope_name == "all" ? Scope::All : Scope::SuicideVictims);
            }
            write_output(output, doc.dump(), out);
        } else if (serve->parsed()) {
            if (const char* env = std::getenv("PEDVIS_PORT")) {
                try {
                    port = std::stoi(env);
                } catch (const std::exception&) {
                    throw CliFailure{kExitBadArgs, "BAD_ARGS", std::string("PEDVIS_PORT is not a port: ") + env};
                }
            }
            ServiceState state(ds, config);
            httplib::Server server;
            try {
                install_routes(server, state, static_dir);
            } catch (const ConfigError& e) {
                throw CliFailure{kExitIo, e.code(), e.what()};
            }
            if (!server.bind_to_port(host, port))
                throw CliFailure{kExitIo, "IO", "cannot listen on " + host + ":" + std::to_string(port)};
            err << Json{{"event", "listening"}, {"host", host}, {"port", port}}.dump() << std::endl;
            server.listen_after_bind();
        }
        return kExitOk;
    } catch (const CliFailure& f) {
        fail_line(f.code, f.message);
        return f.exit_code;
    } catch (const Error& e) {
        fail_line(e.code(), e.what());
        return e.code() == "PALETTE" || e.code() == "CONFIG" ? kExitBadArgs : kExitValidation;
    }
}

}  // namespace pedvis
