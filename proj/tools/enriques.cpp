#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "enriques/conductrix.hpp"
#include "enriques/fibration_graph.hpp"
#include "enriques/q444.hpp"
#include "enriques/verify.hpp"
#include "enriques/weightings.hpp"

using namespace enriques;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string format = "text";
    std::string diagram;
    std::optional<std::int64_t> fibre_weight;
    std::int64_t bound = -6;
    std::string kind = "quasi-elliptic";
    std::string golden;
    int max_components = 9;
    std::vector<std::string> claims;
    int radius = 5;
    int rank = 2;
    std::string surface = "T6";
    std::string second_fibre = "simple";
    std::string dot;
    bool inventory = false;
};

void emit(const RunConfig& cfg, const json& j, const std::string& text) {
    if (cfg.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::string in_display_order(const IVec& w, const DynkinDiagram& d) {
    std::ostringstream os;
    for (int v : d.display_order()) os << ' ' << w[v];
    return os.str();
}

int cmd_weights(const RunConfig& cfg) {
    if (cfg.bound > -2) throw UsageError("--bound must be <= -2");
    if (cfg.fibre_weight && (*cfg.fibre_weight < 0 || *cfg.fibre_weight > 2))
        throw UsageError("--fibre-weight must be 0, 1 or 2");
    DynkinDiagram d = [&] {
        try {
            return parse_diagram(cfg.diagram);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();
    const auto rows = enumerate_admissible(d, cfg.fibre_weight, cfg.bound);
    json j;
    j["diagram"] = to_json(d);
    j["bound"] = cfg.bound;
    j["fibre_weight"] = cfg.fibre_weight ? json(*cfg.fibre_weight) : json(nullptr);
    j["weights"] = json::array();
    std::ostringstream os;
    os << d.name() << "  bound " << cfg.bound << "  fibre weight "
       << (cfg.fibre_weight ? std::to_string(*cfg.fibre_weight) : "any") << "  " << rows.size() << " admissible\n";
    os << "  display order:";
    for (int v : d.display_order()) os << ' ' << v;
    os << "\n";
    for (const auto& aw : rows) {
        j["weights"].push_back({{"w", aw.w}, {"certificate", to_json(aw.cert, d)}});
        os << "  w:" << in_display_order(aw.w, d) << "  m=" << aw.cert.fibre_weight;
        if (aw.cert.excess) os << "  e=" << *aw.cert.excess;
        if (aw.cert.representation) {
            os << "  u:" << in_display_order(aw.cert.representation->u, d);
            os << "  w':" << in_display_order(aw.cert.representation->complement, d);
        }
        os << "\n";
    }
    emit(cfg, j, os.str());
    return kOk;
}

int cmd_tables(const RunConfig& cfg) {
    FibrationKind kind;
    try {
        kind = parse_kind(cfg.kind);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (cfg.max_components < 1) throw UsageError("--max-components must be positive");
    const std::string path = cfg.golden.empty() ? golden_path(kind) : cfg.golden;
    const auto rows = generate_table(kind, cfg.max_components);
    GoldenTable golden;
    try {
        golden = load_golden(path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    DiffReport diff;
    try {
        diff = diff_against_golden(rows, golden.rows);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    json j;
    j["kind"] = to_string(kind);
    j["golden"] = path;
    j["rows"] = json::array();
    for (const auto& p : rows) j["rows"].push_back(to_json(p));
    j["diff"] = {{"matched", diff.matched.size()}, {"missing", json::array()}, {"extra", json::array()}};
    for (const auto& p : diff.missing) j["diff"]["missing"].push_back(to_json(p));
    for (const auto& p : diff.extra) j["diff"]["extra"].push_back(to_json(p));
    j["diff_empty"] = diff.empty();

    std::ostringstream os;
    os << to_string(kind) << " conductrices, up to " << cfg.max_components << " components: " << rows.size() << " rows\n";
    for (const auto& p : rows) os << "  " << render_profile(p) << "\n";
    os << "golden " << path << ": " << golden.rows.size() << " rows, " << diff.matched.size() << " matched\n";
    for (const auto& p : diff.missing) os << "  missing " << render_profile(p) << "\n";
    for (const auto& p : diff.extra) os << "  extra   " << render_profile(p) << "\n";
    os << (diff.empty() ? "diff empty\n" : "diff NOT empty\n");
    emit(cfg, j, os.str());
    return diff.empty() ? kOk : kFailed;
}

int cmd_verify(const RunConfig& cfg) {
    auto names = cfg.claims.empty() ? claim_names() : cfg.claims;
    for (const auto& n : names) {
        const auto all = claim_names();
        if (std::find(all.begin(), all.end(), n) == all.end()) throw UsageError("unknown claim '" + n + "'");
    }
    json j = json::array();
    std::ostringstream os;
    bool ok = true;
    for (const auto& n : names) {
        auto r = run_claim(n);
        ok = ok && r.pass;
        j.push_back(to_json(r));
        os << (r.pass ? "PASS " : "FAIL ") << r.name << "\n";
        for (const auto& d : r.details) os << "    " << d << "\n";
    }
    emit(cfg, {{"claims", j}, {"pass", ok}}, os.str());
    return ok ? kOk : kFailed;
}

int cmd_lattice(const RunConfig& cfg) {
    using namespace q444;
    const auto& n = named();
    json j;
    std::ostringstream os;
    os << "coordinates: 0-2 arm 2 (outer, mid, inner), 3 centre, 4-6 arm 1, 7-9 arm 3 (inner, mid, outer)\n";
    for (const auto& l : {lattice_Q(), lattice_Q2(), lattice_Qprime(), lattice_Qdouble()}) {
        Rational disc = discriminant(l);
        j["discriminants"][l.name] = disc.str();
        os << "disc " << l.name << " = " << disc << "\n";
    }
    auto named_json = [&](const std::string& name, const Vec& v) {
        j["named"][name] = vec_to_json(v);
        os << "  " << name << " = " << format_vec(v) << "\n";
    };
    os << "named vectors\n";
    named_json("C", n.C);
    for (int i = 0; i < 3; ++i) named_json("f" + std::to_string(i + 1), n.f[i]);
    named_json("e", n.e);
    for (int i = 0; i < 3; ++i) named_json("v" + std::to_string(i + 1), n.v[i]);
    for (int i = 0; i < 3; ++i) named_json("e" + std::to_string(i + 1), n.e7[i]);

    auto rep = verify_maximality();
    j["maximality"] = {{"smith", rep.smith},
                       {"dual_quotient_order", rep.dual_quotient_order},
                       {"basis_parity_ok", rep.basis_parity_ok},
                       {"minus_one_split", rep.minus_one_split},
                       {"hyperbolic_ok", rep.hyperbolic_ok},
                       {"pass", rep.pass()}};
    os << "maximality: dual quotient order " << rep.dual_quotient_order << ", split " << rep.minus_one_split
       << " x Z(-1) + H(2) " << (rep.hyperbolic_ok ? "yes" : "no") << "\n";
    for (const auto& o : rep.overlattices) {
        j["maximality"]["overlattices"].push_back({{"x", vec_to_json(o.representative)}, {"value", o.value.str()}, {"odd", o.odd}});
        os << "  x = " << format_vec(o.representative) << "  x^2 + C.x = " << o.value << (o.odd ? " odd" : " even") << "\n";
    }
    os << "candidates\n";
    for (const auto& c : candidate_vectors()) {
        j["candidates"].push_back(vec_to_json(c));
        os << "  " << format_vec(c) << "\n";
    }
    emit(cfg, j, os.str());
    return rep.pass() ? kOk : kFailed;
}

SurfaceModel surface_from(const RunConfig& cfg) {
    if (cfg.radius < 0) throw UsageError("--radius must be >= 0");
    if (cfg.second_fibre != "simple" && cfg.second_fibre != "double")
        throw UsageError("--second-fibre must be simple or double");
    try {
        return make_surface(parse_surface(cfg.surface), cfg.rank, cfg.second_fibre == "double");
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

int cmd_flips(const RunConfig& cfg) {
    auto s = surface_from(cfg);
    if (s.type != SurfaceType::T6) throw UsageError("flip graphs exist for T6 surfaces only");
    auto g = build_flip_graph(s, cfg.radius);
    if (!cfg.dot.empty()) {
        std::ofstream out(cfg.dot);
        if (!out) throw UsageError("cannot write " + cfg.dot);
        out << to_dot(g);
    }
    json j = to_json(g);
    j["mw_rank"] = s.mw_rank;
    j["coxeter_ball"] = coxeter_ball_size(cfg.radius);
    std::ostringstream os;
    os << "T6 MW-rank " << s.mw_rank << " radius " << cfg.radius << ": " << g.nodes.size() << " configurations, "
       << g.edges.size() << " flips (Coxeter ball " << coxeter_ball_size(cfg.radius) << ")\n";
    for (const auto& e : g.edges) os << "  " << e.from << " -" << e.arm << "- " << e.to << "\n";
    emit(cfg, j, os.str());
    return kOk;
}

int cmd_census(const RunConfig& cfg) {
    auto s = surface_from(cfg);
    auto c = fibration_census(s, cfg.radius);
    json j = to_json(c);
    std::ostringstream os;
    os << to_string(s.type);
    if (s.type == SurfaceType::T6) os << " MW-rank " << s.mw_rank << " radius " << cfg.radius;
    if (s.type == SurfaceType::T7) os << " second fibre " << cfg.second_fibre;
    os << ": " << c.elliptic_count << " elliptic, " << c.quasi_elliptic_count << " quasi-elliptic";
    if (s.type == SurfaceType::T6) os << " classes in the ball (" << c.graph.nodes.size() << " configurations)";
    os << "\n";
    for (const auto& fc : c.classes) {
        os << "  " << q444::format_vec(fc.half_fibre) << "  in";
        for (int m : fc.members) os << ' ' << m;
        os << (fc.interior ? "" : "  (boundary)") << "\n";
    }
    bool ok = c.multiplicities_ok && c.extraneous_pairing_ok;
    if (cfg.inventory && s.type == SurfaceType::T6) {
        auto inv = minus_two_curve_inventory(s, cfg.radius);
        j["inventory"] = to_json(inv);
        os << "end-vertex curves: " << inv.curves.size() << ", max interior membership " << inv.max_interior_membership << "\n";
        ok = ok && inv.max_interior_membership <= 6;
    }
    if (s.type == SurfaceType::T6)
        os << "multiplicities " << (c.multiplicities_ok ? "ok" : "BAD") << ", extraneous pairing "
           << (c.extraneous_pairing_ok ? "ok" : "BAD") << "\n";
    emit(cfg, j, os.str());
    return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Admissible weightings, conductrix tables and the T_{4,4,4} lattice calculus"};
    app.require_subcommand(1);
    RunConfig cfg;
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    };

    auto* weights = app.add_subcommand("weights", "Enumerate admissible weightings of a diagram");
    weights->add_option("--diagram", cfg.diagram, "Diagram, e.g. E~6, D~5, A~3, A~*1")->required();
    weights->add_option("--fibre-weight", cfg.fibre_weight, "Only weights with this fibre weight (0, 1, 2)");
    weights->add_option("--bound", cfg.bound, "Lower bound B on vertex weights (B <= -2)")->capture_default_str();
    add_format(weights);

    auto* tables = app.add_subcommand("tables", "Regenerate a conductrix table and diff it against golden data");
    tables->add_option("--kind", cfg.kind, "elliptic or quasi-elliptic")->capture_default_str();
    tables->add_option("--golden", cfg.golden, "Golden table path (default: $ENRIQUES_GOLDEN_DIR or the data directory)");
    tables->add_option("--max-components", cfg.max_components, "Largest fibre size")->capture_default_str();
    add_format(tables);

    auto* verify = app.add_subcommand("verify", "Run the verification claims");
    verify->add_option("--claim", cfg.claims, "Claim to run (repeatable); all by default");
    add_format(verify);
    verify->footer("Claims: " + [] {
        std::string s;
        for (const auto& n : claim_names()) s += (s.empty() ? "" : ", ") + n;
        return s;
    }());

    auto* lattice = app.add_subcommand("lattice", "Discriminants, named vectors, maximality and candidates");
    add_format(lattice);

    auto add_surface = [&](CLI::App* sub) {
        sub->add_option("--surface", cfg.surface, "T6, T7 or T8")->capture_default_str();
        sub->add_option("--rank", cfg.rank, "MW-rank of a T6 surface (0, 1, 2)")->capture_default_str();
        sub->add_option("--radius", cfg.radius, "Flip-graph radius")->capture_default_str();
        sub->add_option("--second-fibre", cfg.second_fibre, "T7: simple or double second reducible fibre")->capture_default_str();
        add_format(sub);
    };
    auto* flips = app.add_subcommand("flips", "Flip graph of a T6 surface");
    add_surface(flips);
    flips->add_option("--dot", cfg.dot, "Write the graph in DOT format to this file");

    auto* census = app.add_subcommand("census", "Genus 1 fibration census");
    add_surface(census);
    census->add_flag("--inventory", cfg.inventory, "Also list end-vertex -2-curve classes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*weights) return cmd_weights(cfg);
        if (*tables) return cmd_tables(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*lattice) return cmd_lattice(cfg);
        if (*flips) return cmd_flips(cfg);
        if (*census) return cmd_census(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}
