#include "arrangis/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "arrangis/errors.hpp"
#include "arrangis/io.hpp"

namespace arrangis {

namespace {

struct RunConfig {
    std::string arrangement_path;
    std::string wiring_path;
    std::string character_path;
    std::string cycle;
    unsigned order = 6;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string output_path;
};

std::uint64_t enumeration_cap() {
    if (const char* env = std::getenv("ARRANGIS_ENUM_CAP")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw InputError("ARRANGIS_ENUM_CAP is not a number");
        }
    }
    return kDefaultEnumerationCap;
}

void write_out(const RunConfig& cfg, std::ostream& out, const std::string& text) {
    if (cfg.output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.output_path, std::ios::binary);
    if (!f) throw InputError("cannot write " + cfg.output_path);
    f << text;
}

std::string render(const RunConfig& cfg, const Json& j, const std::string& text_form) {
    if (cfg.format == "text") return text_form;
    return j.dump(2) + "\n";
}

int cmd_combinatorics(const RunConfig& cfg, std::ostream& out) {
    const Arrangement a = load_arrangement(cfg.arrangement_path);
    const Combinatorics c = combinatorics_of(a);
    Json j = combinatorics_to_json(c);
    j["validation"] = validate_combinatorics(c) ? "violated" : "ok";
    std::ostringstream text;
    text << c.lines.size() << " lines, " << c.points.size() << " points\n";
    for (std::size_t p = 0; p < c.points.size(); ++p) text << c.point_id(static_cast<int>(p)) << "\n";
    write_out(cfg, out, render(cfg, j, text.str()));
    return 0;
}

int cmd_inner_cyclic(const RunConfig& cfg, std::ostream& out) {
    const Arrangement a = load_arrangement(cfg.arrangement_path);
    const Combinatorics c = combinatorics_of(a);
    const auto hits = enumerate_inner_cyclic(c, cfg.order, enumeration_cap());
    const Json j = inner_cyclic_hits_to_json(c, cfg.order, hits);
    std::ostringstream text;
    text << hits.size() << " inner-cyclic character(s) at order " << cfg.order << "\n";
    for (const auto& hit : hits) {
        for (std::size_t i = 0; i < c.lines.size(); ++i)
            text << (i ? " " : "") << hit.xi.values[i].to_string();
        text << "\n";
    }
    write_out(cfg, out, render(cfg, j, text.str()));
    return 0;
}

int cmd_wiring(const RunConfig& cfg, std::ostream& out) {
    const Arrangement a = load_arrangement(cfg.arrangement_path);
    if (a.lines.empty()) throw InputError("empty arrangement");
    auto [w, frame] = wiring_for(a, a.lines.front().label, cfg.seed);
    const std::string dsl = print_wiring(w);
    Json j = wiring_to_json(w);
    j["infinity"] = a.lines.front().label;
    j["seed"] = cfg.seed;
    write_out(cfg, out, render(cfg, j, dsl));
    return 0;
}

int cmd_invariant(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.arrangement_path.empty()) {
        const Arrangement a = load_arrangement(cfg.arrangement_path);
        const Combinatorics c = combinatorics_of(a);
        const Json cj = parse_json_text(read_file(cfg.character_path), cfg.character_path);
        const Character xi = character_from_json(cj, c);
        const Cycle gamma = cycle_from_string(cfg.cycle, c);
        const InvariantResult res = invariant(a, xi, gamma, cfg.seed);
        std::ostringstream text;
        text << res.value.to_string() << "\n";
        write_out(cfg, out, render(cfg, invariant_result_to_json(res), text.str()));
        return 0;
    }
    // Wiring-file route: the affine picture is given, geometry is skipped.
    const WiringDiagram w = parse_wiring(read_file(cfg.wiring_path));
    const Json cj = parse_json_text(read_file(cfg.character_path), cfg.character_path);
    if (!cj.contains("exponents")) throw InputError("character file needs an 'exponents' map");
    // The infinity line is the one character line that is not a strand.
    std::string infinity;
    for (const auto& [label, value] : cj["exponents"].items()) {
        (void)value;
        if (std::find(w.initial_labels.begin(), w.initial_labels.end(), label) == w.initial_labels.end()) {
            if (!infinity.empty())
                throw InputError("character names several lines outside the diagram: " + infinity +
                                 " and " + label);
            infinity = label;
        }
    }
    if (infinity.empty()) throw InputError("character names no line beyond the diagram's strands");
    const Combinatorics c = combinatorics_from_wiring(w, infinity);
    const Character xi = character_from_json(cj, c);
    const Cycle gamma = cycle_from_string(cfg.cycle, c);
    const InnerCyclicCheck check = is_inner_cyclic(c, xi, gamma);
    if (!check.ok)
        throw InputError("triplet is not inner-cyclic (condition " +
                         std::to_string(check.failed_condition) + "): " + check.detail);
    const HomologyClass h = istar_cycle(w, c.lines, infinity, to_label_cycle(c, gamma));
    InvariantResult res;
    res.value = evaluate(c, xi, h);
    res.witness = h;
    res.seed = cfg.seed;
    res.infinity_label = infinity;
    res.wiring_source = cfg.wiring_path;
    std::ostringstream text;
    text << res.value.to_string() << "\n";
    write_out(cfg, out, render(cfg, invariant_result_to_json(res), text.str()));
    return 0;
}

int cmd_depth(const RunConfig& cfg, std::ostream& out) {
    const Arrangement a = load_arrangement(cfg.arrangement_path);
    const Combinatorics c = combinatorics_of(a);
    const Json cj = parse_json_text(read_file(cfg.character_path), cfg.character_path);
    const Character xi = character_from_json(cj, c);
    const DepthReport report = build_a_xi(a, xi, cfg.seed);
    std::ostringstream text;
    text << "depth " << report.depth << " (" << report.components.size() << " components)\n";
    write_out(cfg, out, render(cfg, depth_report_to_json(report), text.str()));
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Topological invariants of complex projective line arrangements"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--output", cfg.output_path, "write to a file instead of stdout");
        sub->add_option("--seed", cfg.seed, "projection seed");
    };

    CLI::App* comb = app.add_subcommand("combinatorics", "intersection data of an arrangement file");
    comb->add_option("--arrangement", cfg.arrangement_path)->required();
    add_common(comb);

    CLI::App* inner = app.add_subcommand("inner-cyclic", "enumerate inner-cyclic characters");
    inner->add_option("--arrangement", cfg.arrangement_path)->required();
    inner->add_option("--order", cfg.order, "character order bound (default 6)");
    add_common(inner);

    CLI::App* wiring = app.add_subcommand("wiring", "braided wiring diagram of an arrangement");
    wiring->add_option("--arrangement", cfg.arrangement_path)->required();
    add_common(wiring);

    CLI::App* inv = app.add_subcommand("invariant", "invariant of an inner-cyclic triplet");
    inv->add_option("--arrangement", cfg.arrangement_path);
    inv->add_option("--wiring", cfg.wiring_path);
    inv->add_option("--character", cfg.character_path)->required();
    inv->add_option("--cycle", cfg.cycle)->required();
    add_common(inv);

    CLI::App* depth = app.add_subcommand("depth", "quasi-projective depth of a torsion character");
    depth->add_option("--arrangement", cfg.arrangement_path)->required();
    depth->add_option("--character", cfg.character_path)->required();
    add_common(depth);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (comb->parsed()) return cmd_combinatorics(cfg, out);
        if (inner->parsed()) return cmd_inner_cyclic(cfg, out);
        if (wiring->parsed()) return cmd_wiring(cfg, out);
        if (inv->parsed()) {
            if (cfg.arrangement_path.empty() == cfg.wiring_path.empty())
                throw InputError("invariant needs exactly one of --arrangement or --wiring");
            return cmd_invariant(cfg, out);
        }
        if (depth->parsed()) return cmd_depth(cfg, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const CapExceededError& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const GenericityError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace arrangis
