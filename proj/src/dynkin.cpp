#include "enriques/dynkin.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <set>
#include <stdexcept>

namespace enriques {

namespace {

std::int64_t gcd_all(const IVec& v) {
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x);
    return g;
}

}  // namespace

DynkinDiagram::DynkinDiagram(Family family, int rank) : family_(family), rank_(rank) {
    auto reject = [&] { throw std::invalid_argument("invalid diagram rank " + std::to_string(rank) + " for " + name()); };
    int n = 0;
    switch (family) {
        case Family::A: if (rank < 1) reject(); n = rank + 1; break;
        case Family::D: if (rank < 4) reject(); n = rank + 1; break;
        case Family::E: if (rank < 6 || rank > 8) reject(); n = rank + 1; break;
        case Family::AStar: if (rank != 1 && rank != 2) reject(); n = rank + 1; break;
    }
    adj_.assign(n, std::vector<int>(n, 0));
    nbrs_.assign(n, {});
    auto perm_from_pairs = [n](std::initializer_list<std::pair<int, int>> swaps) {
        Permutation p(n);
        std::iota(p.begin(), p.end(), 0);
        for (auto [a, b] : swaps) std::swap(p[a], p[b]);
        return p;
    };

    switch (family) {
        case Family::A:
        case Family::AStar:
            if (n == 2) {
                add_edge(0, 1, 2);
                generators_.push_back({1, 0});
            } else {
                for (int i = 0; i < n; ++i) add_edge(i, (i + 1) % n);
                Permutation rot(n), refl(n);
                for (int i = 0; i < n; ++i) { rot[i] = (i + 1) % n; refl[i] = (n - i) % n; }
                generators_ = {rot, refl};
            }
            attached_ = 0;
            break;
        case Family::D:
            if (rank == 4) {
                for (int i = 1; i <= 4; ++i) add_edge(0, i);
                generators_.push_back(perm_from_pairs({{1, 2}}));
                generators_.push_back({0, 2, 3, 4, 1});
                attached_ = 4;
            } else {
                const int len = rank - 3;  // chain c_1..c_len
                for (int i = 0; i + 1 < len; ++i) add_edge(i, i + 1);
                add_edge(len - 1, rank - 3);
                add_edge(len - 1, rank - 2);
                add_edge(0, rank - 1);
                add_edge(0, rank);
                attached_ = rank;
                generators_.push_back(perm_from_pairs({{rank - 3, rank - 2}}));
                generators_.push_back(perm_from_pairs({{rank - 1, rank}}));
                Permutation flip(n);
                for (int i = 0; i < len; ++i) flip[i] = len - 1 - i;
                flip[rank] = rank - 3;
                flip[rank - 3] = rank;
                flip[rank - 1] = rank - 2;
                flip[rank - 2] = rank - 1;
                generators_.push_back(flip);
            }
            break;
        case Family::E:
            if (rank == 6) {
                add_edge(0, 1); add_edge(1, 2);
                add_edge(0, 3); add_edge(3, 4);
                add_edge(0, 5); add_edge(5, 6);
                generators_.push_back(perm_from_pairs({{1, 3}, {2, 4}}));
                generators_.push_back({0, 3, 4, 5, 6, 1, 2});
                attached_ = 6;
            } else if (rank == 7) {
                add_edge(0, 1);
                add_edge(0, 2); add_edge(2, 3); add_edge(3, 4);
                add_edge(0, 5); add_edge(5, 6); add_edge(6, 7);
                generators_.push_back(perm_from_pairs({{2, 5}, {3, 6}, {4, 7}}));
                attached_ = 7;
            } else {
                add_edge(0, 1);
                add_edge(0, 2); add_edge(2, 3);
                add_edge(0, 4);
                for (int i = 4; i < 8; ++i) add_edge(i, i + 1);
                attached_ = 8;
            }
            break;
    }

    // inverse of the finite (non-extended) sub-Gram, embedded with a zero row/column at the attached vertex
    std::vector<int> fin;
    for (int v = 0; v < n; ++v)
        if (v != attached_) fin.push_back(v);
    IMatrix g = gram();
    RMatrix sub(fin.size(), RVec(fin.size()));
    for (std::size_t i = 0; i < fin.size(); ++i)
        for (std::size_t j = 0; j < fin.size(); ++j) sub[i][j] = g[fin[i]][fin[j]];
    auto inv = inverse(sub);
    if (!inv) throw std::logic_error("finite sub-diagram of " + name() + " is degenerate");
    finite_inverse_.assign(n, RVec(n));
    for (std::size_t i = 0; i < fin.size(); ++i)
        for (std::size_t j = 0; j < fin.size(); ++j) finite_inverse_[fin[i]][fin[j]] = (*inv)[i][j];

    // Kodaira-Neron cycle: attached coefficient 1, the rest solves Gram_fin x = -Gram[., attached]
    RVec rhs(n);
    for (int v = 0; v < n; ++v)
        if (v != attached_) rhs[v] = -g[v][attached_];
    RVec x = multiply(finite_inverse_, rhs);
    x[attached_] = 1;
    fibre_.resize(n);
    for (int v = 0; v < n; ++v) fibre_[v] = x[v].to_integer();
    std::int64_t gg = gcd_all(fibre_);
    for (auto& c : fibre_) c /= gg;
}

void DynkinDiagram::add_edge(int a, int b, int mult) {
    edges_.push_back({std::min(a, b), std::max(a, b), mult});
    adj_[a][b] = adj_[b][a] = mult;
    nbrs_[a].push_back(b);
    nbrs_[b].push_back(a);
}

std::string DynkinDiagram::name() const {
    switch (family_) {
        case Family::A: return "A~" + std::to_string(rank_);
        case Family::D: return "D~" + std::to_string(rank_);
        case Family::E: return "E~" + std::to_string(rank_);
        case Family::AStar: return "A~*" + std::to_string(rank_);
    }
    return "?";
}

IMatrix DynkinDiagram::gram() const {
    const int n = size();
    IMatrix g(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i) {
        g[i][i] = -2;
        for (int j = 0; j < n; ++j)
            if (i != j) g[i][j] = adj_[i][j];
    }
    return g;
}

std::vector<int> DynkinDiagram::display_order() const {
    const int n = size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (family_ == Family::D) {
        if (rank_ == 4) return {4, 0, 1, 2, 3};
        order.clear();
        order.push_back(rank_);
        for (int i = 0; i < rank_ - 3; ++i) order.push_back(i);
        order.push_back(rank_ - 3);
        order.push_back(rank_ - 2);
        order.push_back(rank_ - 1);
    } else if (family_ == Family::E) {
        if (rank_ == 6) return {2, 1, 0, 3, 5, 4, 6};
        if (rank_ == 7) return {4, 3, 2, 0, 1, 5, 6, 7};
        return {3, 2, 0, 1, 4, 5, 6, 7, 8};
    }
    return order;
}

DynkinDiagram build_diagram(Family family, int rank) { return DynkinDiagram(family, rank); }

DynkinDiagram parse_diagram(const std::string& name) {
    static const std::regex re(R"(^\s*([ADEade])~?(\*)?\s*_?(\d+)\s*$)");
    std::smatch m;
    if (!std::regex_match(name, m, re)) throw std::invalid_argument("cannot parse diagram name '" + name + "'");
    char f = static_cast<char>(std::toupper(static_cast<unsigned char>(m[1].str()[0])));
    int rank = std::stoi(m[3].str());
    bool star = m[2].matched;
    if (star && f != 'A') throw std::invalid_argument("only A~* is a degenerate type: '" + name + "'");
    Family fam = star ? Family::AStar : (f == 'A' ? Family::A : (f == 'D' ? Family::D : Family::E));
    return DynkinDiagram(fam, rank);
}

std::vector<DynkinDiagram> diagrams_up_to(int max_vertices) {
    std::vector<DynkinDiagram> out;
    if (max_vertices >= 2) out.emplace_back(Family::AStar, 1);
    if (max_vertices >= 3) out.emplace_back(Family::AStar, 2);
    for (int r = 1; r + 1 <= max_vertices; ++r) out.emplace_back(Family::A, r);
    for (int r = 4; r + 1 <= max_vertices; ++r) out.emplace_back(Family::D, r);
    for (int r = 6; r <= 8 && r + 1 <= max_vertices; ++r) out.emplace_back(Family::E, r);
    return out;
}

IVec kodaira_neron_cycle(const DynkinDiagram& d) { return d.fibre_cycle(); }

int excess_denominator(const DynkinDiagram& d) { return d.family() == Family::A ? 2 : 1; }

IVec branch_vertex_cycle(const DynkinDiagram& d) {
    if (!d.is_standard()) throw std::invalid_argument("branch vertex cycle is not defined for " + d.name());
    IVec v(d.size(), 0);
    if (d.family() == Family::A) return v;
    if (d.family() == Family::E && d.rank() == 6) return v;
    std::vector<int> branch;
    for (int x = 0; x < d.size(); ++x)
        if (d.degree(x) >= 3) branch.push_back(x);
    if (branch.size() == 2) {
        for (int x : branch) v[x] = 1;
    } else {
        v[branch.at(0)] = 2;
    }
    return v;
}

IVec excess_cycle(const DynkinDiagram& d) {
    if (!d.is_standard()) throw std::invalid_argument("excess cycle is not defined for " + d.name());
    const auto& edges = d.edges();
    const int n = d.size();
    const int k = excess_denominator(d);
    IVec f = kodaira_neron_cycle(d), v = branch_vertex_cycle(d);
    IVec target(n);
    for (int x = 0; x < n; ++x) target[x] = k * f[x] + v[x];

    IVec e(edges.size(), 0);
    if (d.family() == Family::A) {
        std::fill(e.begin(), e.end(), 1);
    } else {
        // tree: peel vertices with a single undetermined edge
        std::vector<bool> known(edges.size(), false);
        IVec remaining = target;
        for (std::size_t done = 0; done < edges.size();) {
            bool progressed = false;
            for (int x = 0; x < n; ++x) {
                int open = -1, cnt = 0;
                for (std::size_t i = 0; i < edges.size(); ++i)
                    if (!known[i] && (edges[i].a == x || edges[i].b == x)) { open = static_cast<int>(i); ++cnt; }
                if (cnt != 1) continue;
                // value on edge root counts the multiplicity once per endpoint
                e[open] = remaining[x] / edges[open].mult;
                known[open] = true;
                remaining[edges[open].a] -= e[open] * edges[open].mult;
                remaining[edges[open].b] -= e[open] * edges[open].mult;
                ++done;
                progressed = true;
            }
            if (!progressed) throw std::logic_error("excess cycle peeling stalled on " + d.name());
        }
    }
    // check n F = sum_e m_e (a + b) - V
    IVec lhs(n, 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        lhs[edges[i].a] += e[i] * edges[i].mult;
        lhs[edges[i].b] += e[i] * edges[i].mult;
    }
    if (lhs != target) throw std::logic_error("excess cycle identity fails on " + d.name());
    return e;
}

std::int64_t pair(const IVec& a, const IVec& b, const DynkinDiagram& d) {
    if (static_cast<int>(a.size()) != d.size() || static_cast<int>(b.size()) != d.size())
        throw std::invalid_argument("root vector does not match the basis of " + d.name());
    IMatrix g = d.gram();
    std::int64_t s = 0;
    for (int i = 0; i < d.size(); ++i)
        for (int j = 0; j < d.size(); ++j) s += a[i] * g[i][j] * b[j];
    return s;
}

Rational pair(const RVec& a, const RVec& b, const DynkinDiagram& d) {
    if (static_cast<int>(a.size()) != d.size() || static_cast<int>(b.size()) != d.size())
        throw std::invalid_argument("root vector does not match the basis of " + d.name());
    return bilinear(to_rational(d.gram()), a, b);
}

std::vector<Permutation> automorphism_group(const DynkinDiagram& d) {
    Permutation id(d.size());
    std::iota(id.begin(), id.end(), 0);
    std::vector<Permutation> group{id};
    std::set<Permutation> seen{id};
    for (std::size_t i = 0; i < group.size(); ++i)
        for (const auto& g : d.automorphism_generators()) {
            Permutation p(d.size());
            for (int v = 0; v < d.size(); ++v) p[v] = g[group[i][v]];
            if (seen.insert(p).second) group.push_back(p);
        }
    std::sort(group.begin() + 1, group.end());
    return group;
}

nlohmann::json to_json(const DynkinDiagram& d) {
    static const char* kinds[] = {"A~", "D~", "E~", "A~*"};
    nlohmann::json j;
    j["kind"] = kinds[static_cast<int>(d.family())];
    j["rank"] = d.rank();
    std::vector<int> ids(d.size());
    std::iota(ids.begin(), ids.end(), 0);
    j["vertices"] = ids;
    auto edges = nlohmann::json::array();
    for (const auto& e : d.edges()) edges.push_back({e.a, e.b, e.mult});
    j["edges"] = edges;
    j["attached"] = d.attached();
    return j;
}

DynkinDiagram diagram_from_json(const nlohmann::json& j) {
    DynkinDiagram d = parse_diagram(j.at("kind").get<std::string>() + std::to_string(j.at("rank").get<int>()));
    if (j.contains("edges") && to_json(d)["edges"] != j["edges"])
        throw std::invalid_argument("diagram edges do not match the canonical " + d.name());
    return d;
}

}  // namespace enriques
