// isocycle: command-line front end.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "isocycle/cycle_analysis.hpp"
#include "isocycle/discharging.hpp"
#include "isocycle/extension.hpp"
#include "isocycle/generators.hpp"
#include "isocycle/graph_io.hpp"
#include "isocycle/oracle.hpp"
#include "isocycle/tunnels.hpp"

using namespace isocycle;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kValidation = 2, kContract = 3, kNotFound = 4 };

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::ExtensionNotFound: return kNotFound;
        case ErrorKind::ContractViolation:
        case ErrorKind::DegenerateSide:
        case ErrorKind::MinorOneFacePresent:
        case ErrorKind::CycleTooShort:
        case ErrorKind::NotInTunnel:
        case ErrorKind::InvalidMove: return kContract;
        default: return kValidation;
    }
}

struct RunConfig {
    std::string graph;
    std::string cycle;
    std::string cycle_file;
    std::string output;
    std::string dump_dot;
    int indent = 2;
    std::uint64_t seed = 0;
    bool tier2_only = false;
    bool loose_transfer = false;
};

PlaneGraph load_graph(const std::string& source) {
    if (source.rfind("named:", 0) == 0) return named_graph(source.substr(6));
    return read_graph_file(source);
}

std::vector<VertexId> load_cycle(const PlaneGraph& g, const RunConfig& cfg) {
    if (!cfg.cycle_file.empty()) {
        std::ifstream in(cfg.cycle_file);
        if (!in) throw Error(ErrorKind::ParseError, "cannot open " + cfg.cycle_file);
        json doc;
        try {
            in >> doc;
        } catch (const json::exception& e) {
            throw Error(ErrorKind::ParseError, e.what());
        }
        return cycle_from_json(g, doc);
    }
    if (cfg.cycle.empty()) throw Error(ErrorKind::ParseError, "a cycle is required (--cycle or --cycle-file)");
    return parse_vertex_list(g, cfg.cycle);
}

// Validates cycle-ness and isolation before any analysis.
void require_isolating(const PlaneGraph& g, const std::vector<VertexId>& cyc) {
    CycleOnGraph c(g, cyc);
    if (!is_isolating(g, c)) {
        throw Error(ErrorKind::ContractViolation, "invariant violated: cycle is not isolating");
    }
}

void emit(const RunConfig& cfg, const json& doc) {
    const std::string text = doc.dump(cfg.indent < 0 ? -1 : cfg.indent);
    if (cfg.output.empty()) {
        std::cout << text << '\n';
    } else {
        std::ofstream out(cfg.output);
        if (!out) throw Error(ErrorKind::ParseError, "cannot write " + cfg.output);
        out << text << '\n';
    }
}

void dump_dot(const RunConfig& cfg, const PlaneGraph& g, const std::vector<VertexId>& cyc, int step) {
    if (cfg.dump_dot.empty()) return;
    std::filesystem::create_directories(cfg.dump_dot);
    DotStyle style;
    style.highlight_cycle = cyc;
    style.graph_name = "step" + std::to_string(step);
    std::ofstream out(std::filesystem::path(cfg.dump_dot) / ("step" + std::to_string(step) + ".dot"));
    write_dot(out, g, style);
}

json validate_report(const PlaneGraph& g) {
    return {{"valid", true},
            {"n", g.vertex_count()},
            {"m", g.edge_count()},
            {"faces", g.face_count()},
            {"n5", count_faces_of_size(g, 5)},
            {"three_connected", is_three_connected(g)},
            {"essentially_four_connected", is_essentially_four_connected(g)},
            {"checksum", g.checksum()}};
}

GrowOptions grow_options(const RunConfig& cfg) {
    GrowOptions opt;
    opt.tier1 = !cfg.tier2_only;
    opt.strict_transfer = !cfg.loose_transfer;
    return opt;
}

json run_batch_item(const json& item, bool grow) {
    InstanceRecipe r = InstanceRecipe::from_json(item);
    PlaneGraph g = realize(r);
    json out{{"recipe", r.to_json()}, {"label", r.label()}, {"checksum", g.checksum()}, {"n", g.vertex_count()}};
    if (item.contains("checksum") && item["checksum"].get<std::uint64_t>() != g.checksum()) {
        out["checksum_mismatch"] = true;
    }
    if (grow && g.vertex_count() <= kOracleLimit) {
        const int n = g.vertex_count();
        const int bound = length_bound(n);
        std::vector<VertexId> start;
        for (int c = 6; c < bound && start.empty(); ++c) {
            auto cycles = oracle_isolating_cycles(g, c, 1);
            if (!cycles.empty()) start = cycles.front();
        }
        if (!start.empty()) {
            const auto t = grow_to_bound(g, start, {});
            out["grow"] = {{"start", start.size()}, {"final", t.final_cycle.size()}, {"bound", t.bound},
                           {"fallback_rate", t.fallback_rate()}};
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"isocycle: isolating cycles in plane graphs"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("-o,--output", cfg.output, "write the report here instead of stdout");
    app.add_option("--indent", cfg.indent, "JSON indentation (-1 for compact)");
    app.add_option("--seed", cfg.seed, "random seed (ISOCYCLE_SEED overrides)");

    auto add_graph = [&cfg](CLI::App* sub) {
        sub->add_option("-g,--graph", cfg.graph, "graph JSON file, or named:<name>")->required();
    };
    auto add_cycle = [&cfg](CLI::App* sub) {
        sub->add_option("-c,--cycle", cfg.cycle, "comma-separated vertex ids");
        sub->add_option("--cycle-file", cfg.cycle_file, "JSON file holding the cycle");
    };

    auto* validate = app.add_subcommand("validate", "check a graph file");
    add_graph(validate);

    auto* analyze = app.add_subcommand("analyze", "faces, arches, trees and tunnels of a cycle");
    add_graph(analyze);
    add_cycle(analyze);
    analyze->add_flag("--loose-transfer", cfg.loose_transfer, "transfer pairs may use arches of other tunnels");

    auto* audit = app.add_subcommand("audit", "discharging ledger and invariant checks");
    add_graph(audit);
    add_cycle(audit);
    audit->add_flag("--loose-transfer", cfg.loose_transfer, "transfer pairs may use arches of other tunnels");

    auto* extend = app.add_subcommand("extend", "one extension step");
    add_graph(extend);
    add_cycle(extend);
    extend->add_flag("--tier2-only", cfg.tier2_only, "skip the pattern catalog");
    extend->add_option("--dump-dot", cfg.dump_dot, "directory for DOT snapshots");

    auto* grow = app.add_subcommand("grow", "extend up to the length bound");
    add_graph(grow);
    add_cycle(grow);
    grow->add_flag("--tier2-only", cfg.tier2_only, "skip the pattern catalog");
    grow->add_flag("--loose-transfer", cfg.loose_transfer, "transfer pairs may use arches of other tunnels");
    grow->add_option("--dump-dot", cfg.dump_dot, "directory for DOT snapshots");

    auto* gen = app.add_subcommand("gen", "generate a graph");
    InstanceRecipe recipe;
    std::string base;
    gen->add_option("--family", recipe.family, "named, insertion, random-triangulation, random-e4c")->required();
    gen->add_option("--name", recipe.name, "named graph");
    gen->add_option("--base", base, "insertion base: a named graph or 'random'");
    gen->add_option("--n", recipe.n, "vertex count for random families");
    gen->add_flag("--four-connected", recipe.four_connected, "random triangulations: require 4-connectivity");
    gen->add_option("--sparsify", recipe.sparsify, "random-e4c: edge deletions to attempt");

    auto* circ = app.add_subcommand("circ", "exact circumference");
    add_graph(circ);

    auto* dot = app.add_subcommand("export-dot", "DOT drawing of a graph and optional cycle");
    add_graph(dot);
    add_cycle(dot);

    auto* batch = app.add_subcommand("batch", "realize a manifest of recipes");
    std::string manifest;
    int threads = 1;
    bool batch_grow = false;
    batch->add_option("--manifest", manifest, "JSON list of recipes")->required();
    batch->add_option("--threads", threads, "worker threads");
    batch->add_flag("--grow", batch_grow, "grow from the shortest oracle start");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }
    if (const char* env = std::getenv("ISOCYCLE_SEED")) {
        try {
            cfg.seed = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "error: ISOCYCLE_SEED must be an unsigned integer\n";
            return kUsage;
        }
    }

    try {
        if (*validate) {
            emit(cfg, validate_report(load_graph(cfg.graph)));
        } else if (*analyze || *audit) {
            const PlaneGraph g = load_graph(cfg.graph);
            const auto cyc = load_cycle(g, cfg);
            require_isolating(g, cyc);
            const CycleAnalysis a = analyze_cycle(g, cyc);
            const TunnelSet t = build_tunnels(a);
            TransferPairOracle oracle(a, t, !cfg.loose_transfer);
            if (*analyze) {
                json doc = analysis_to_json(a);
                doc["tunnels"] = tunnels_to_json(a, t, oracle);
                const auto tc = check_trees(a);
                doc["tree_check"] = {{"ok", tc.ok}, {"failures", tc.failures}};
                emit(cfg, doc);
            } else {
                DischargeOptions opt{!cfg.loose_transfer};
                const WeightLedger ledger = apply_discharging(a, t, opt);
                json doc = ledger_to_json(a, ledger);
                const auto inv = check_invariants(a, t, ledger, opt);
                doc["invariants"] = {{"conservation", inv.conservation},
                                     {"exclusivity", inv.exclusivity},
                                     {"opposite_exclusivity", inv.opposite_exclusivity},
                                     {"tunnel_one_way", inv.tunnel_one_way},
                                     {"exit_coupling", inv.exit_coupling},
                                     {"mono_spacing", inv.mono_spacing},
                                     {"notes", inv.notes}};
                emit(cfg, doc);
            }
        } else if (*extend) {
            const PlaneGraph g = load_graph(cfg.graph);
            const auto cyc = load_cycle(g, cfg);
            require_isolating(g, cyc);
            if (static_cast<int>(cyc.size()) >= length_bound(g.vertex_count())) {
                emit(cfg, {{"extended", false}, {"reason", "cycle already meets the length bound"}});
                return kOk;
            }
            const auto step = extend_once(g, cyc, grow_options(cfg));
            if (!step) throw Error(ErrorKind::ExtensionNotFound, "no extension found below the bound");
            dump_dot(cfg, g, cyc, 0);
            dump_dot(cfg, g, step->move.result, 1);
            json doc = move_to_json(g, step->move);
            doc["extended"] = true;
            doc["tier"] = step->tier2 ? 2 : 1;
            emit(cfg, doc);
        } else if (*grow) {
            const PlaneGraph g = load_graph(cfg.graph);
            const auto cyc = load_cycle(g, cfg);
            require_isolating(g, cyc);
            GrowOptions opt = grow_options(cfg);
            int step_no = 0;
            dump_dot(cfg, g, cyc, 0);
            opt.on_step = [&](const GrowthStep&, const std::vector<VertexId>& cur) { dump_dot(cfg, g, cur, ++step_no); };
            const auto started = std::chrono::steady_clock::now();
            const GrowthTrace trace = grow_to_bound(g, cyc, opt);
            const double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
            json doc = trace_to_json(g, trace);
            doc["seconds"] = secs;
            std::cerr << "grow: " << trace.initial.size() << " -> " << trace.final_cycle.size() << " (bound "
                      << trace.bound << "), tier-2 fallback rate " << trace.fallback_rate() << '\n';
            emit(cfg, doc);
        } else if (*gen) {
            recipe.seed = cfg.seed;
            if (recipe.family == "insertion") recipe.name = base.empty() ? recipe.name : base;
            const PlaneGraph g = realize(recipe);
            json doc = graph_to_json(g);
            doc["recipe"] = recipe.to_json();
            emit(cfg, doc);
        } else if (*circ) {
            const PlaneGraph g = load_graph(cfg.graph);
            const int value = oracle_circumference(g);
            if (cfg.output.empty()) {
                std::cout << value << '\n';
            } else {
                emit(cfg, {{"circumference", value}});
            }
        } else if (*dot) {
            const PlaneGraph g = load_graph(cfg.graph);
            DotStyle style;
            if (!cfg.cycle.empty() || !cfg.cycle_file.empty()) style.highlight_cycle = load_cycle(g, cfg);
            if (cfg.output.empty()) {
                write_dot(std::cout, g, style);
            } else {
                std::ofstream out(cfg.output);
                write_dot(out, g, style);
            }
        } else if (*batch) {
            std::ifstream in(manifest);
            if (!in) throw Error(ErrorKind::ParseError, "cannot open " + manifest);
            json doc;
            try {
                in >> doc;
            } catch (const json::exception& e) {
                throw Error(ErrorKind::ParseError, e.what());
            }
            const json items = doc.is_object() ? doc.at("instances") : doc;
            std::vector<json> results(items.size());
            std::atomic<std::size_t> next{0};
            std::mutex err_mu;
            std::optional<Error> first_error;
            auto worker = [&] {
                for (std::size_t i = next++; i < items.size(); i = next++) {
                    try {
                        results[i] = run_batch_item(items[i], batch_grow);
                    } catch (const Error& e) {
                        std::lock_guard<std::mutex> lock(err_mu);
                        results[i] = {{"error", e.what()}};
                        if (!first_error) first_error = e;
                    }
                }
            };
            std::vector<std::thread> pool;
            for (int i = 0; i < std::max(1, threads); ++i) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
            emit(cfg, json(results));
            if (first_error) return exit_code(first_error->kind());
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const json::exception& e) {
        std::cerr << "error: ParseError: " << e.what() << '\n';
        return kValidation;
    }
    return kOk;
}
