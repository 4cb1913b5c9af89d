#include "enriques/weightings.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace enriques {

namespace {

const IVec& excess_weights(const DynkinDiagram& d) {
    thread_local std::map<std::string, IVec> cache;
    auto it = cache.find(d.name());
    if (it != cache.end()) return it->second;
    IVec e;
    if (d.family() == Family::AStar) {
        if (d.rank() == 1) throw std::invalid_argument("total excess is not defined for A~*1");
        e = excess_cycle(build_diagram(Family::A, 2));
    } else {
        e = excess_cycle(d);
    }
    return cache.emplace(d.name(), std::move(e)).first->second;
}

bool is_alternating(const Weighting& w, const DynkinDiagram& d) {
    for (auto x : w)
        if (x != 1 && x != -1) return false;
    for (const auto& e : d.edges())
        if (w[e.a] == w[e.b]) return false;
    return true;
}

bool is_zero_weight(const Weighting& w) {
    return std::all_of(w.begin(), w.end(), [](auto x) { return x == 0; });
}

}  // namespace

std::int64_t fibre_weight(const Weighting& w, const DynkinDiagram& d) {
    IVec f = kodaira_neron_cycle(d);
    std::int64_t s = 0;
    for (int v = 0; v < d.size(); ++v) s += f[v] * w[v];
    return s;
}

std::int64_t edge_excess(const Weighting& w, int edge, const DynkinDiagram& d) {
    const Edge& e = d.edges().at(edge);
    return -static_cast<std::int64_t>(e.mult) * (w[e.a] + w[e.b]);
}

std::int64_t total_excess(const Weighting& w, const DynkinDiagram& d) {
    const IVec& ec = excess_weights(d);
    std::int64_t s = 0;
    for (std::size_t i = 0; i < ec.size(); ++i) s += ec[i] * edge_excess(w, static_cast<int>(i), d);
    return s;
}

IVec weight_of(const IVec& u, const DynkinDiagram& d) {
    IVec w(d.size(), 0);
    for (int v = 0; v < d.size(); ++v) {
        w[v] = -2 * u[v];
        for (int x : d.neighbours(v)) w[v] += d.multiplicity(v, x) * u[x];
    }
    return w;
}

IVec reduce_mod_fibre(IVec u, const DynkinDiagram& d) {
    IVec f = kodaira_neron_cycle(d);
    // smallest k with u + kF >= 0; then u + (k-1)F has a negative entry
    std::int64_t k = INT64_MIN;
    for (int v = 0; v < d.size(); ++v) k = std::max(k, Rational(-u[v], f[v]).ceil());
    for (int v = 0; v < d.size(); ++v) u[v] += k * f[v];
    return u;
}

std::vector<Representation> all_representations(const Weighting& w, const DynkinDiagram& d, std::int64_t m,
                                                bool condition6) {
    std::vector<Representation> out;
    if (m < 0) return out;
    const int n = d.size();
    const IVec f = kodaira_neron_cycle(d);
    const RMatrix& ginv = d.finite_gram_inverse();
    IVec comp(n, 0);

    auto try_complement = [&] {
        RVec r(n);
        for (int v = 0; v < n; ++v) r[v] = w[v] - comp[v];
        RVec ur = multiply(ginv, r);
        IVec u(n);
        for (int v = 0; v < n; ++v) {
            if (!ur[v].is_integer()) return;
            u[v] = ur[v].num();
        }
        IVec got = weight_of(u, d);
        for (int v = 0; v < n; ++v)
            if (got[v] != w[v] - comp[v]) return;
        u = reduce_mod_fibre(u, d);
        if (condition6)
            for (int v = 0; v < n; ++v)
                if (f[v] == 1 && u[v] != 0) return;
        out.push_back({u, comp});
    };

    // complements w' >= 0 with w'(F) = m, in lexicographic order
    std::function<void(int, std::int64_t)> rec = [&](int v, std::int64_t left) {
        if (v == n) {
            if (left == 0) try_complement();
            return;
        }
        for (std::int64_t x = 0; x * f[v] <= left; ++x) {
            comp[v] = x;
            rec(v + 1, left - x * f[v]);
        }
        comp[v] = 0;
    };
    rec(0, m);
    return out;
}

std::optional<Representation> find_representing_element(const Weighting& w, const DynkinDiagram& d, std::int64_t m) {
    auto all = all_representations(w, d, m, m == 2);
    if (all.empty()) return std::nullopt;
    return all.front();
}

AdmissibilityCertificate check_admissible(const Weighting& w, const DynkinDiagram& d) {
    if (static_cast<int>(w.size()) != d.size()) throw std::invalid_argument("weight size does not match " + d.name());
    AdmissibilityCertificate c;
    c.semi = !d.transversal();
    c.fibre_weight = fibre_weight(w, d);
    if (!(d.family() == Family::AStar && d.rank() == 1)) c.excess = total_excess(w, d);
    for (std::size_t i = 0; i < d.edges().size(); ++i) {
        auto ex = edge_excess(w, static_cast<int>(i), d);
        if (ex > 0) c.excessive_edges.emplace_back(static_cast<int>(i), ex);
    }
    auto fail = [&](int k) {
        c.failed_condition = k;
        return c;
    };
    // 1
    for (auto x : w)
        if (x > 1) return fail(1);
    // 2
    if (!c.semi)
        for (std::size_t i = 0; i < d.edges().size(); ++i)
            if (edge_excess(w, static_cast<int>(i), d) < 0) return fail(2);
    // 3
    if (c.fibre_weight < 0 || c.fibre_weight > 2) return fail(3);
    // 4
    for (int v = 0; v < d.size(); ++v) {
        if (w[v] != 0) continue;
        int zeros = 0;
        for (int x : d.neighbours(v)) zeros += (w[x] == 0);
        if (zeros > 2) return fail(4);
    }
    // 5 and 6
    auto reps = all_representations(w, d, c.fibre_weight, false);
    if (reps.empty()) return fail(5);
    if (c.fibre_weight == 2) {
        IVec f = kodaira_neron_cycle(d);
        auto ok = std::find_if(reps.begin(), reps.end(), [&](const Representation& r) {
            for (int v = 0; v < d.size(); ++v)
                if (f[v] == 1 && r.u[v] != 0) return false;
            return true;
        });
        if (ok == reps.end()) return fail(6);
        c.representation = *ok;
    } else {
        c.representation = reps.front();
    }
    c.admissible = true;
    return c;
}

std::vector<AdmissibleWeight> enumerate_admissible(const DynkinDiagram& d, std::optional<std::int64_t> m,
                                                   std::int64_t lower) {
    if (lower > -2) throw std::invalid_argument("lower bound must be <= -2");
    const int n = d.size();
    const IVec f = kodaira_neron_cycle(d);
    const std::int64_t m_lo = m ? *m : 0, m_hi = m ? *m : 2;
    const bool edge_rule = d.transversal();

    // suffix sums of F multiplicities for the fibre-weight bounds
    IVec tail(n + 1, 0);
    for (int v = n - 1; v >= 0; --v) tail[v] = tail[v + 1] + f[v];

    std::vector<AdmissibleWeight> out;
    Weighting w(n, 0);
    std::function<void(int, std::int64_t)> rec = [&](int v, std::int64_t partial) {
        if (v == n) {
            if (partial < m_lo || partial > m_hi) return;
            auto cert = check_admissible(w, d);
            if (cert.admissible) out.push_back({w, std::move(cert)});
            return;
        }
        std::int64_t hi = 1;
        if (edge_rule)
            for (int x : d.neighbours(v))
                if (x < v) hi = std::min(hi, -w[x]);
        for (std::int64_t x = lower; x <= hi; ++x) {
            std::int64_t p = partial + f[v] * x;
            // remaining vertices contribute at most +1 and at least `lower` each
            if (p + tail[v + 1] < m_lo) continue;
            if (p + lower * tail[v + 1] > m_hi) continue;
            w[v] = x;
            rec(v + 1, p);
        }
        w[v] = 0;
    };
    rec(0, 0);
    return out;
}

bool ExcessReport::pass() const {
    return std::all_of(clauses.begin(), clauses.end(), [](const ClauseResult& c) { return c.pass; });
}

std::string format_weight(const Weighting& w) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ")";
    return os.str();
}

ExcessReport verify_excess_results(const DynkinDiagram& d, std::int64_t lower) {
    if (!d.is_standard()) throw std::invalid_argument("excess results concern A~, D~, E~ only, not " + d.name());
    ExcessReport rep;
    rep.diagram = d.name();
    const auto all = enumerate_admissible(d, std::nullopt, lower);
    rep.admissible = all.size();
    const IVec V = branch_vertex_cycle(d);
    const IVec F = kodaira_neron_cycle(d);
    const int k = excess_denominator(d);
    const bool ae6 = d.family() == Family::A || (d.family() == Family::E && d.rank() == 6);
    const bool single_branch = (d.family() == Family::D && d.rank() == 4) || (d.family() == Family::E && d.rank() >= 7);
    const bool double_branch = d.family() == Family::D && d.rank() > 4;
    std::vector<int> branch;
    for (int v = 0; v < d.size(); ++v)
        if (d.degree(v) >= 3) branch.push_back(v);

    auto clause = [&](const std::string& name) -> ClauseResult& {
        for (auto& c : rep.clauses)
            if (c.clause == name) return c;
        rep.clauses.push_back({name, true, ""});
        return rep.clauses.back();
    };
    auto violate = [&](const std::string& name, const Weighting& w, const std::string& why) {
        auto& c = clause(name);
        if (c.pass) c.detail = why + " at w=" + format_weight(w);
        c.pass = false;
    };

    clause("identity e+nm=-w(V)");
    if (ae6) clause("i");
    if (single_branch) clause("ii");
    if (double_branch) clause("iii");
    if (!ae6) clause("iv");
    clause("iv.5");
    clause("v");

    std::vector<Weighting> m0_nonzero, m2_zero_excess;
    for (const auto& [w, cert] : all) {
        const std::int64_t e = *cert.excess, m = cert.fibre_weight;
        std::int64_t wV = 0;
        for (int v = 0; v < d.size(); ++v) wV += w[v] * V[v];
        if (e + k * m != -wV) violate("identity e+nm=-w(V)", w, "e+nm=" + std::to_string(e + k * m));

        const bool zero = is_zero_weight(w), alt = is_alternating(w, d);
        if (ae6 && (!(zero || alt) || m != 0 || e != 0)) violate("i", w, "not zero/alternating with e=m=0");
        if (single_branch) {
            std::int64_t f = -w[branch[0]];
            if (e + m != 2 * f) violate("ii", w, "e+m != 2f");
        }
        if (double_branch) {
            std::int64_t f1 = -w[branch[0]], f2 = -w[branch[1]];
            if (e + m != f1 + f2) violate("iii", w, "e+m != f1+f2");
        }
        if (!ae6) {
            for (int b : branch) {
                std::int64_t f = -w[b];
                if (f <= 1) continue;
                bool outlier = d.family() == Family::D && d.rank() == 4 && f == 2 && m == 0;
                for (int x = 1; x <= 4 && outlier; ++x) outlier = w[x] == 1;
                if (!outlier) violate("iv", w, "branch weight " + std::to_string(-f));
            }
        }
        // iv.5: only meaningful under condition 6, i.e. fibre weight 2
        if (m == 2)
            for (const auto& r : all_representations(w, d, m, true))
                for (int v = 0; v < d.size(); ++v)
                    if (F[v] == 1 && r.complement[v] != 0) violate("iv.5", w, "complement nonzero on a multiplicity-1 vertex");
        if (e == 0) {
            if (!(zero || alt) || (m != 0 && m != 2)) violate("v", w, "excess 0 but not zero/alternating");
            if (!zero && m == 0) m0_nonzero.push_back(w);
            if (!zero && m == 2) m2_zero_excess.push_back(w);
        }
    }
    rep.zero_excess_nonzero_m0 = m0_nonzero.size();
    rep.zero_excess_m2 = m2_zero_excess.size();

    // v, first bullet
    const bool d4n1 = d.family() == Family::D && d.rank() % 4 == 1;
    const bool e6 = d.family() == Family::E && d.rank() == 6;
    if (!m0_nonzero.empty() && !d4n1 && !e6) violate("v", m0_nonzero[0], "nonzero excess-0 weight of fibre weight 0 on " + d.name());
    if (d4n1 || e6) {
        std::set<Weighting> orbits;
        for (const auto& w : m0_nonzero) {
            Weighting best = w;
            for (const auto& p : automorphism_group(d)) {
                Weighting img(d.size());
                for (int v = 0; v < d.size(); ++v) img[p[v]] = w[v];
                best = std::min(best, img);
            }
            orbits.insert(best);
        }
        if (d4n1 && orbits.size() != 1) violate("v", {}, std::to_string(orbits.size()) + " orbits of excess-0 m=0 weights");
        if (e6) {
            bool ok = m0_nonzero.size() == 2;
            if (ok) {
                Weighting neg = m0_nonzero[0];
                for (auto& x : neg) x = -x;
                ok = neg == m0_nonzero[1];
            }
            if (!ok) violate("v", {}, "E~6 does not have exactly two excess-0 weights differing by sign");
        }
    }
    // v, second bullet
    const bool d2n = d.family() == Family::D && d.rank() % 2 == 0;
    const bool e78 = d.family() == Family::E && d.rank() >= 7;
    if (!m2_zero_excess.empty() && !d2n && !e78) violate("v", m2_zero_excess[0], "excess-0 fibre-weight-2 weight on " + d.name());
    if (d2n || e78) {
        if (m2_zero_excess.size() != 1) {
            violate("v", {}, std::to_string(m2_zero_excess.size()) + " excess-0 fibre-weight-2 weights");
        } else {
            const Weighting& w = m2_zero_excess[0];
            std::vector<int> support_vertices;
            for (int v = 0; v < d.size(); ++v) {
                int count = 0;
                for (const auto& r : all_representations(w, d, 2, true))
                    if (r.complement[v] != 0) ++count;
                if (count > 1) violate("v", w, "several representing elements with complement at one vertex");
                if (count == 1) support_vertices.push_back(v);
            }
            int expected = -1;
            if (d2n) expected = (d.rank() - 4) / 2;  // middle of the chain c_1..c_{n-3}
            if (d.family() == Family::E && d.rank() == 7) expected = 1;
            bool ok = support_vertices.size() == 1 && (expected < 0 || support_vertices[0] == expected);
            if (!ok) {
                std::string s;
                for (int v : support_vertices) s += " " + std::to_string(v);
                violate("v", w, "complement support vertices:" + s);
            }
        }
    }
    return rep;
}

nlohmann::json to_json(const AdmissibilityCertificate& c, const DynkinDiagram& d) {
    nlohmann::json j;
    j["admissible"] = c.admissible;
    j["semi_admissible_rules"] = c.semi;
    j["fibre_weight"] = c.fibre_weight;
    j["excess"] = c.excess ? nlohmann::json(*c.excess) : nlohmann::json(nullptr);
    auto ex = nlohmann::json::array();
    for (auto [e, v] : c.excessive_edges) ex.push_back({{"edge", {d.edges()[e].a, d.edges()[e].b}}, {"excess", v}});
    j["excessive_edges"] = ex;
    if (c.representation) {
        j["u"] = c.representation->u;
        j["complement"] = c.representation->complement;
    } else {
        j["u"] = nullptr;
        j["complement"] = nullptr;
    }
    j["failed_condition"] = c.failed_condition ? nlohmann::json(*c.failed_condition) : nlohmann::json(nullptr);
    return j;
}

}  // namespace enriques
