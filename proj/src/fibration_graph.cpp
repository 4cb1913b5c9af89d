#include "enriques/fibration_graph.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace enriques {

using q444::Config;
using q444::Vec;

std::string to_string(SurfaceType t) {
    switch (t) {
        case SurfaceType::T6: return "T6";
        case SurfaceType::T7: return "T7";
        case SurfaceType::T8: return "T8";
    }
    return "?";
}

SurfaceType parse_surface(const std::string& s) {
    if (s == "T6" || s == "T333" || s == "T_{3,3,3}") return SurfaceType::T6;
    if (s == "T7" || s == "T245" || s == "T_{2,4,5}") return SurfaceType::T7;
    if (s == "T8" || s == "T237" || s == "T_{2,3,7}") return SurfaceType::T8;
    throw std::invalid_argument("unknown surface type '" + s + "' (expected T6, T7 or T8)");
}

SurfaceModel make_surface(SurfaceType type, int mw_rank, bool second_fibre_double) {
    SurfaceModel s;
    s.type = type;
    s.second_fibre_double = second_fibre_double;
    if (type != SurfaceType::T6) return s;
    if (mw_rank < 0 || mw_rank > 2) throw std::invalid_argument("MW-rank must be 0, 1 or 2");
    s.mw_rank = mw_rank;
    const auto& n = q444::named();
    if (mw_rank == 0)
        for (const auto& f : n.f) s.extraneous_classes.push_back(sub(n.e, f));
    if (mw_rank == 1) {
        s.extraneous_classes.push_back(add(n.e, n.f[0]));
        s.extraneous_classes.push_back(sub(n.e, n.f[0]));
    }
    return s;
}

std::optional<Config> effective_flip(const SurfaceModel& s, const Config& t, int arm) {
    if (s.type != SurfaceType::T6) throw std::invalid_argument("only T6 surfaces carry flippable configurations");
    if (s.mw_rank == 0) return std::nullopt;
    Config f = q444::flip(t, arm);
    if (s.mw_rank == 2 || q444::one_realisable_arm(f)) return f;
    return std::nullopt;
}

int FlipGraph::node_of(const Config& t) const {
    auto it = std::find(nodes.begin(), nodes.end(), t);
    return it == nodes.end() ? -1 : static_cast<int>(it - nodes.begin());
}

int FlipGraph::degree(int node) const {
    return static_cast<int>(std::count_if(edges.begin(), edges.end(),
                                          [&](const FlipEdge& e) { return e.from == node || e.to == node; }));
}

FlipGraph build_flip_graph(const SurfaceModel& s, int radius) {
    if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
    FlipGraph g;
    g.radius = radius;
    std::map<Config, int> index;
    auto visit = [&](const Config& t, int depth) {
        auto [it, fresh] = index.emplace(t, static_cast<int>(g.nodes.size()));
        if (fresh) {
            g.nodes.push_back(t);
            g.depth.push_back(depth);
        }
        return it->second;
    };
    visit(q444::standard_config(), 0);
    std::set<std::pair<int, int>> seen_edges;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int a = queue.front();
        queue.pop_front();
        if (g.depth[a] == radius) continue;
        for (int arm = 1; arm <= 3; ++arm) {
            auto f = effective_flip(s, g.nodes[a], arm);
            if (!f) continue;
            const std::size_t before = g.nodes.size();
            const int b = visit(*f, g.depth[a] + 1);
            if (g.nodes.size() > before) queue.push_back(b);
            if (seen_edges.emplace(std::min(a, b), std::max(a, b)).second)
                g.edges.push_back({std::min(a, b), arm, std::max(a, b)});
        }
    }
    return g;
}

std::string to_dot(const FlipGraph& g) {
    std::ostringstream os;
    os << "graph flips {\n";
    for (std::size_t k = 0; k < g.nodes.size(); ++k) os << "  n" << k << " [label=\"" << k << " d" << g.depth[k] << "\"];\n";
    for (const auto& e : g.edges) os << "  n" << e.from << " -- n" << e.to << " [label=\"" << e.arm << "\"];\n";
    os << "}\n";
    return os.str();
}

std::size_t coxeter_ball_size(int radius) {
    // Tits representation: B(a_i, a_i) = 1, B(a_i, a_j) = -1/2, s_i(x) = x - 2 B(a_i, x) a_i.
    RMatrix B(3, RVec(3, Rational(-1, 2)));
    for (int i = 0; i < 3; ++i) B[i][i] = 1;
    std::array<RMatrix, 3> s;
    for (int i = 0; i < 3; ++i) {
        s[i] = identity(3);
        for (int c = 0; c < 3; ++c) s[i][i][c] = s[i][i][c] - B[i][c] * 2;
    }
    std::set<RMatrix> ball{identity(3)};
    std::vector<RMatrix> frontier{identity(3)};
    for (int r = 0; r < radius; ++r) {
        std::vector<RMatrix> next;
        for (const auto& m : frontier)
            for (const auto& g : s) {
                RMatrix p = multiply(m, g);
                if (ball.insert(p).second) next.push_back(p);
            }
        frontier = std::move(next);
    }
    return ball.size();
}

namespace {

std::vector<Vec> end_vertices(const Config& t) {
    return {t[q444::outer(1)], t[q444::outer(2)], t[q444::outer(3)]};
}

bool extraneous_pairing(const SurfaceModel& s, const Vec& v) {
    if (s.extraneous_classes.empty()) return true;
    int twos = 0;
    for (const auto& x : s.extraneous_classes) {
        Rational p = q444::dot(v, x);
        if (p == 2) ++twos;
        else if (p != 0) return false;
    }
    return twos == 1;
}

}  // namespace

Census fibration_census(const SurfaceModel& s, int radius) {
    Census c;
    c.surface = s;
    c.radius = radius;
    switch (s.type) {
        case SurfaceType::T8:
            c.quasi_elliptic_count = 1;
            return c;
        case SurfaceType::T7:
            c.quasi_elliptic_count = s.second_fibre_double ? 2 : 3;
            return c;
        case SurfaceType::T6: break;
    }
    c.elliptic_count = 1;
    c.graph = build_flip_graph(s, radius);
    std::map<Vec, FibrationClass> classes;
    for (std::size_t k = 0; k < c.graph.nodes.size(); ++k) {
        const auto& t = c.graph.nodes[k];
        for (int arm = 1; arm <= 3; ++arm) {
            Vec half = scale(Rational(1, 2), q444::e7_of(t, arm));
            auto& fc = classes[half];
            fc.half_fibre = half;
            fc.members.push_back(static_cast<int>(k));
            if (c.graph.depth[k] < radius) fc.interior = true;
        }
        for (const auto& v : end_vertices(t))
            if (!extraneous_pairing(s, v)) c.extraneous_pairing_ok = false;
    }
    for (auto& [key, fc] : classes) {
        std::sort(fc.members.begin(), fc.members.end());
        fc.members.erase(std::unique(fc.members.begin(), fc.members.end()), fc.members.end());
        if (fc.interior && (fc.members.size() < 1 || fc.members.size() > 2)) c.multiplicities_ok = false;
        c.classes.push_back(fc);
    }
    c.quasi_elliptic_count = static_cast<int>(c.classes.size());
    return c;
}

Inventory minus_two_curve_inventory(const SurfaceModel& s, int radius) {
    if (s.type != SurfaceType::T6) throw std::invalid_argument("the curve inventory is defined for T6 surfaces");
    const FlipGraph g = build_flip_graph(s, radius);
    std::map<Vec, CurveClass> curves;
    for (std::size_t k = 0; k < g.nodes.size(); ++k)
        for (const auto& v : end_vertices(g.nodes[k])) {
            auto& cc = curves[v];
            cc.vec = v;
            cc.members.push_back(static_cast<int>(k));
            // configurations sharing an end-vertex are at most three flips apart
            if (g.depth[k] + 3 <= radius) cc.interior = true;
        }
    Inventory inv;
    for (auto& [key, cc] : curves) {
        if (cc.interior)
            inv.max_interior_membership = std::max(inv.max_interior_membership, static_cast<int>(cc.members.size()));
        inv.curves.push_back(cc);
    }
    return inv;
}

nlohmann::json to_json(const FlipGraph& g) {
    nlohmann::json j;
    j["radius"] = g.radius;
    j["nodes"] = g.nodes.size();
    j["edges"] = g.edges.size();
    auto adj = nlohmann::json::array();
    for (const auto& e : g.edges) adj.push_back({e.from, e.arm, e.to});
    j["adjacency"] = adj;
    j["depth"] = g.depth;
    return j;
}

nlohmann::json to_json(const Census& c) {
    nlohmann::json j;
    j["surface"] = to_string(c.surface.type);
    if (c.surface.type == SurfaceType::T6) j["mw_rank"] = c.surface.mw_rank;
    if (c.surface.type == SurfaceType::T7) j["second_fibre_double"] = c.surface.second_fibre_double;
    j["radius"] = c.radius;
    j["elliptic_count"] = c.elliptic_count;
    j["quasi_elliptic_count"] = c.quasi_elliptic_count;
    auto classes = nlohmann::json::array();
    for (const auto& fc : c.classes)
        classes.push_back({{"class", q444::vec_to_json(fc.half_fibre)},
                           {"member_configs", fc.members},
                           {"interior", fc.interior}});
    j["quasi_elliptic_classes"] = classes;
    if (c.surface.type == SurfaceType::T6) {
        j["flip_graph"] = {{"nodes", c.graph.nodes.size()}, {"edges", c.graph.edges.size()}};
        j["multiplicities_ok"] = c.multiplicities_ok;
        j["extraneous_pairing_ok"] = c.extraneous_pairing_ok;
    }
    return j;
}

nlohmann::json to_json(const Inventory& inv) {
    nlohmann::json j;
    auto curves = nlohmann::json::array();
    for (const auto& cc : inv.curves)
        curves.push_back({{"class", q444::vec_to_json(cc.vec)}, {"member_configs", cc.members}, {"interior", cc.interior}});
    j["curves"] = curves;
    j["count"] = inv.curves.size();
    j["max_interior_membership"] = inv.max_interior_membership;
    return j;
}

}  // namespace enriques
