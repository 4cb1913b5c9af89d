#include "enriques/conductrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#ifndef ENRIQUES_DATA_DIR
#define ENRIQUES_DATA_DIR "data"
#endif

namespace enriques {

std::string to_string(FibrationKind k) { return k == FibrationKind::Elliptic ? "elliptic" : "quasi-elliptic"; }

FibrationKind parse_kind(const std::string& s) {
    if (s == "elliptic") return FibrationKind::Elliptic;
    if (s == "quasi-elliptic" || s == "quasi_elliptic") return FibrationKind::QuasiElliptic;
    throw std::invalid_argument("unknown fibration kind '" + s + "'");
}

const std::vector<CurveInvariantRow>& invariant_table() {
    static const std::vector<CurveInvariantRow> rows = {
        {0, 1, 1, -1, 0},  {0, 2, -1, -4, 0}, {2, 1, 0, -2, 0},
        {4, 1, -1, -3, 0}, {6, 1, -2, -2, 0}, {1, 2, -2, -6, 0},
    };
    return rows;
}

std::int64_t expected_fibre_weight(FibrationKind kind, const DynkinDiagram& d, int fibre_mult) {
    if (kind == FibrationKind::Elliptic) return 0;
    if (fibre_mult != 1 && fibre_mult != 2) throw std::invalid_argument("fibre multiplicity must be 1 or 2");
    // The curve of cusps meets F twice on a simple fibre and once on a double one.
    // The A~*1 rows of the quasi-elliptic table use the opposite labelling.
    if (d.family() == Family::AStar && d.rank() == 1) return fibre_mult;
    return 3 - fibre_mult;
}

std::vector<MultiplicitySolution> weight_to_multiplicities(const Weighting& w, const DynkinDiagram& d,
                                                           FibrationKind kind, int fibre_mult) {
    const std::int64_t m = expected_fibre_weight(kind, d, fibre_mult);
    if (fibre_weight(w, d) != m) return {};
    const bool simple_qe = kind == FibrationKind::QuasiElliptic && fibre_mult == 1;
    std::vector<MultiplicitySolution> out;
    for (auto& r : all_representations(w, d, m, simple_qe)) {
        MultiplicitySolution s;
        s.A_s = r.u;
        for (int v = 0; v < d.size(); ++v)
            if (r.complement[v] != 0) s.cusp.emplace_back(v, static_cast<int>(r.complement[v]));
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<IVec> assign_self_intersections(const Weighting& w, const DynkinDiagram& d) {
    const int n = d.size();
    const auto& table = invariant_table();
    std::vector<std::vector<const CurveInvariantRow*>> options(n);
    for (int v = 0; v < n; ++v)
        for (const auto& row : table)
            if (row.AE == w[v]) options[v].push_back(&row);

    std::vector<IVec> out;
    std::vector<const CurveInvariantRow*> pick(n, nullptr);

    auto compatible = [&](const CurveInvariantRow& a, const CurveInvariantRow& b) {
        if (!d.transversal()) return true;
        // two s = 1 curves only meet if the meeting point is blown up on both
        if (a.s == 1 && b.s == 1 && (a.r == 0 || b.r == 0)) return false;
        auto minus3_clash = [](const CurveInvariantRow& x, const CurveInvariantRow& y) {
            return x.self_int == -3 && (y.self_int == -1 || y.self_int == -2);
        };
        return !minus3_clash(a, b) && !minus3_clash(b, a);
    };
    auto budget_ok = [&] {
        if (!d.transversal()) return true;
        for (int v = 0; v < n; ++v) {
            if (pick[v]->s != 1) continue;
            int points = 0;
            for (int x : d.neighbours(v))
                if (pick[x]->s == 1) points += d.multiplicity(v, x);
            if (points > pick[v]->r) return false;
        }
        return true;
    };

    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            if (!budget_ok()) return;
            IVec types(n);
            for (int x = 0; x < n; ++x) types[x] = pick[x]->self_int;
            out.push_back(std::move(types));
            return;
        }
        for (const auto* row : options[v]) {
            bool ok = true;
            for (int x : d.neighbours(v))
                if (x < v && !compatible(*row, *pick[x])) { ok = false; break; }
            if (!ok) continue;
            pick[v] = row;
            rec(v + 1);
        }
    };
    rec(0);
    return out;
}

Weighting profile_weight(const ConductrixProfile& p, const DynkinDiagram& d) {
    Weighting w = weight_of(p.A_s, d);
    for (auto [v, deg] : p.cusp) w[v] += deg;
    return w;
}

ConductrixProfile canonicalize(ConductrixProfile p) {
    const DynkinDiagram d = parse_diagram(p.diagram);
    ConductrixProfile best = p;
    bool first = true;
    for (const auto& perm : automorphism_group(d)) {
        ConductrixProfile q = p;
        for (int v = 0; v < d.size(); ++v) {
            q.A_s[perm[v]] = p.A_s[v];
            q.self_int[perm[v]] = p.self_int[v];
            if (!p.weight.empty()) q.weight[perm[v]] = p.weight[v];
        }
        for (auto& c : q.cusp) c.first = perm[c.first];
        std::sort(q.cusp.begin(), q.cusp.end());
        if (first || std::tie(q.A_s, q.self_int, q.cusp) < std::tie(best.A_s, best.self_int, best.cusp)) best = q;
        first = false;
    }
    return best;
}

std::vector<ConductrixProfile> generate_table(FibrationKind kind, int max_components, std::int64_t lower) {
    std::vector<ConductrixProfile> rows;
    for (const auto& d : diagrams_up_to(max_components)) {
        std::set<ConductrixProfile> seen;
        std::vector<int> mults = kind == FibrationKind::Elliptic ? std::vector<int>{1} : std::vector<int>{1, 2};
        for (int mult : mults) {
            const std::int64_t m = expected_fibre_weight(kind, d, mult);
            for (const auto& aw : enumerate_admissible(d, m, lower))
                for (const auto& sol : weight_to_multiplicities(aw.w, d, kind, mult))
                    for (const auto& types : assign_self_intersections(aw.w, d)) {
                        ConductrixProfile p;
                        p.diagram = d.name();
                        p.kind = kind;
                        p.d = kind == FibrationKind::Elliptic ? 0 : mult;
                        p.A_s = sol.A_s;
                        p.self_int = types;
                        p.cusp = sol.cusp;
                        p.weight = aw.w;
                        seen.insert(canonicalize(std::move(p)));
                    }
        }
        rows.insert(rows.end(), seen.begin(), seen.end());
    }
    return rows;
}

DiffReport diff_against_golden(const std::vector<ConductrixProfile>& generated,
                               const std::vector<ConductrixProfile>& golden) {
    DiffReport r;
    std::multiset<ConductrixProfile> gen, gold;
    for (const auto& p : generated) gen.insert(canonicalize(p));
    for (const auto& p : golden) {
        if (!generated.empty() && p.kind != generated.front().kind)
            throw std::invalid_argument("golden table kind does not match the generated table");
        gold.insert(canonicalize(p));
    }
    for (const auto& p : gold) {
        auto it = gen.find(p);
        if (it != gen.end()) {
            r.matched.push_back(p);
            gen.erase(it);
        } else {
            r.missing.push_back(p);
        }
    }
    r.extra.assign(gen.begin(), gen.end());
    return r;
}

nlohmann::json to_json(const ConductrixProfile& p) {
    nlohmann::json j;
    j["kind"] = to_string(p.kind);
    j["diagram"] = to_json(parse_diagram(p.diagram));
    j["d"] = p.d ? nlohmann::json(p.d) : nlohmann::json(nullptr);
    j["A_s"] = p.A_s;
    j["self_int"] = p.self_int;
    auto cusp = nlohmann::json::array();
    for (auto [v, deg] : p.cusp) cusp.push_back({v, deg});
    j["cusp"] = cusp;
    if (!p.family.empty()) j["family"] = p.family;
    if (!p.weight.empty()) j["weight"] = p.weight;
    return j;
}

ConductrixProfile profile_from_json(const nlohmann::json& j) {
    for (const char* key : {"kind", "diagram", "d", "A_s", "self_int", "cusp"})
        if (!j.contains(key)) throw std::invalid_argument(std::string("conductrix row lacks field '") + key + "'");
    ConductrixProfile p;
    p.kind = parse_kind(j["kind"].get<std::string>());
    DynkinDiagram d = diagram_from_json(j["diagram"]);
    p.diagram = d.name();
    p.d = j["d"].is_null() ? 0 : j["d"].get<int>();
    p.A_s = j["A_s"].get<IVec>();
    p.self_int = j["self_int"].get<IVec>();
    if (static_cast<int>(p.A_s.size()) != d.size() || static_cast<int>(p.self_int.size()) != d.size())
        throw std::invalid_argument("conductrix row size does not match " + d.name());
    for (const auto& c : j["cusp"]) p.cusp.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
    std::sort(p.cusp.begin(), p.cusp.end());
    if (j.contains("family")) p.family = j["family"].get<std::string>();
    if (j.contains("weight")) p.weight = j["weight"].get<IVec>();
    return p;
}

nlohmann::json to_json(const GoldenTable& t) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["kind"] = to_string(t.kind);
    j["max_components"] = t.max_components;
    auto rows = nlohmann::json::array();
    for (const auto& p : t.rows) rows.push_back(to_json(p));
    j["rows"] = rows;
    return j;
}

GoldenTable golden_from_json(const nlohmann::json& j) {
    if (!j.contains("schema_version") || j["schema_version"] != 1 || !j.contains("rows"))
        throw std::invalid_argument("not a version-1 conductrix table");
    GoldenTable t;
    t.kind = parse_kind(j.at("kind").get<std::string>());
    t.max_components = j.value("max_components", 9);
    for (const auto& r : j["rows"]) {
        auto p = profile_from_json(r);
        if (p.kind != t.kind) throw std::invalid_argument("row kind differs from table kind");
        t.rows.push_back(std::move(p));
    }
    return t;
}

GoldenTable load_golden(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open golden table " + path);
    return golden_from_json(nlohmann::json::parse(in));
}

std::string golden_directory() {
    if (const char* env = std::getenv("ENRIQUES_GOLDEN_DIR"); env && *env) return env;
    return ENRIQUES_DATA_DIR;
}

std::string golden_path(FibrationKind kind) {
    return golden_directory() + (kind == FibrationKind::Elliptic ? "/elliptic_conductrices.json"
                                                                 : "/quasi_elliptic_conductrices.json");
}

std::string render_profile(const ConductrixProfile& p) {
    const DynkinDiagram d = parse_diagram(p.diagram);
    std::ostringstream os;
    os << p.diagram;
    if (p.d) os << "  d=" << p.d;
    auto cusp_at = [&](int v) {
        for (auto [x, deg] : p.cusp)
            if (x == v) return deg;
        return 0;
    };
    os << "  types:";
    for (int v : d.display_order()) {
        int c = cusp_at(v);
        os << ' ' << (c ? "[" : "") << p.self_int[v] << (c ? "]" : "") << (c > 1 ? "x" + std::to_string(c) : "");
    }
    os << "  A_s:";
    for (int v : d.display_order()) os << ' ' << p.A_s[v];
    return os.str();
}

}  // namespace enriques
