#include "enriques/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "enriques/conductrix.hpp"
#include "enriques/fibration_graph.hpp"
#include "enriques/q444.hpp"
#include "enriques/weightings.hpp"

namespace enriques {

namespace {

using q444::Vec;

struct Check {
    ClaimResult& r;
    void operator()(bool ok, const std::string& what) {
        if (!ok) {
            r.pass = false;
            r.details.push_back("FAIL " + what);
        } else {
            r.details.push_back("ok   " + what);
        }
    }
};

std::vector<DynkinDiagram> standard_diagrams(int max_rank) {
    std::vector<DynkinDiagram> out;
    for (const auto& d : diagrams_up_to(max_rank + 1))
        if (d.is_standard()) out.push_back(d);
    return out;
}

void discriminants(Check& c) {
    using namespace q444;
    c(discriminant(lattice_Q()) == -16, "disc Q = -16");
    c(discriminant(lattice_Q2()) == -16384, "disc Q(2) = -16384");
    c(discriminant(lattice_Qprime()) == -4, "disc Q' = -4");
    Rational dd = discriminant(lattice_Qdouble());
    c(dd == 1 || dd == -1, "Q'' unimodular (disc " + dd.str() + ")");
}

void maximality(Check& c) {
    auto rep = q444::verify_maximality();
    c(rep.dual_quotient_order == 4, "dual quotient of Q' has order 4");
    c(rep.basis_parity_ok, "x^2 = C.x mod 2 on the Q' basis");
    c(rep.minus_one_split == 8 && rep.hyperbolic_ok, "Q' = Z(-1)^8 + H(2) with C -> u+v");
    std::vector<Rational> want{1, 1, 3};
    bool values = rep.overlattices.size() == 3;
    for (std::size_t k = 0; values && k < 3; ++k) values = rep.overlattices[k].value == want[k] && rep.overlattices[k].odd;
    c(values, "u/2, v/2, (u+v)/2 give x^2 + C.x = 1, 1, 3");
}

void sigma_relations(Check& c) {
    using namespace q444;
    const auto& n = named();
    for (int i = 1; i <= 3; ++i) {
        const std::string s = "sigma_" + std::to_string(i);
        c(sigma_is_isometry(i), s + " is an isometry");
        c(multiply(sigma(i), sigma(i)) == identity(kDim), s + " is an involution");
        c(multiply(sigma(i), n.f[i - 1]) == sub(scale(2, n.e), n.f[i - 1]), s + "(f_i) = 2e - f_i");
        for (int j = 1; j <= 3; ++j) {
            if (j == i) continue;
            const int k = 6 - i - j;
            c(multiply(sigma(i), n.f[j - 1]) == scale(-1, n.f[k - 1]),
              s + "(f_" + std::to_string(j) + ") = -f_" + std::to_string(k));
            if (j > i) c(relation_order(i, j) == 3, "(sigma_" + std::to_string(i) + " sigma_" + std::to_string(j) + ")^3 = 1");
        }
        c(multiply(sigma(i), n.v[i - 1]) == add(n.v[i - 1], scale(2, sub(n.e, n.f[i - 1]))),
          s + "(v_i) = v_i + 2(f_j + f_k)");
    }
    const std::vector<int> t{3, 1, 2};
    c(apply_word(t, n.f[0]) == scale(-1, n.f[0]), "t(f_1) = -f_1");
    c(apply_word(t, n.v[0]) == lin({{1, n.v[0]}, {2, n.e}, {2, n.f[1]}}), "t(v_1) = v_1 + 2e + 2f_2");
}

void flip_table(Check& c) {
    auto entries = q444::verify_flip_table(2);
    int bad = 0;
    for (const auto& e : entries)
        if (!e.pass) {
            ++bad;
            c(false, e.column + " n=" + std::to_string(e.n) + " arm " + std::to_string(e.arm));
        }
    c(entries.size() == 54 && bad == 0, std::to_string(entries.size() - bad) + "/54 entries (6 columns, 3 arms, n = 0..2)");
}

void iterating_flips(Check& c) {
    auto rep = iterated_flip_check(200, 8);
    c(rep.failures == 0, std::to_string(rep.samples - rep.failures) + "/" + std::to_string(rep.samples) +
                             " flip sequences equal the word action");
}

void realisability(Check& c) {
    using namespace q444;
    const auto T = standard_config();
    c(is_realisable(T), "standard configuration is realisable");
    c(one_realisable_arm(T) == 1, "standard configuration is 1-realisable in arm 1");
    c(flip(T, 1) == apply_word({1}, T), "flip(T,1) = sigma_1 T");
    c(flip(flip(T, 1), 1) == T, "flip is an involution");
    c(!is_one_realisable(flip(T, 1), 1), "flip in arm 1 is not 1-realisable in arm 1");
    c(one_realisable_arm(flip(T, 2)) == 3, "flip in arm 2 is 1-realisable in arm 3");
    c(one_realisable_arm(flip(T, 3)) == 2, "flip in arm 3 is 1-realisable in arm 2");
    for (int i = 1; i <= 3; ++i) {
        c(is_two_realisable_vector(named().v[i - 1], i), "v_" + std::to_string(i) + " is 2-realisable");
        c(is_one_realisable_vector(named().v[i - 1], i), "v_" + std::to_string(i) + " is 1-realisable");
    }
}

void candidates(Check& c) {
    using namespace q444;
    const auto& n = named();
    auto got = candidate_vectors();
    std::vector<Vec> want;
    for (const auto& f : n.f) {
        want.push_back(add(n.e, f));
        want.push_back(sub(n.e, f));
    }
    std::sort(want.begin(), want.end());
    c(got.size() == 6, std::to_string(got.size()) + " candidate vectors");
    c(got == want, "candidates are e +- f_i");
}

void torsor(Check& c) {
    auto rep = q444::t333_extension_torsor_check(100);
    int bad = 0;
    for (const auto& s : rep.samples)
        if (!(s.configuration && s.in_lattice && s.realisable == s.expected_realisable)) ++bad;
    c(rep.pass(), std::to_string(rep.samples.size() - bad) + "/100 sampled extensions behave (realisable iff F even)");
}

void excess_results(Check& c) {
    for (const auto& d : standard_diagrams(12)) {
        auto rep = verify_excess_results(d);
        for (const auto& cl : rep.clauses)
            if (!cl.pass) c(false, d.name() + " clause " + cl.clause + ": " + cl.detail);
    }
    c(true, "excess results checked on A~1..A~12, D~4..D~12, E~6..E~8");
}

void excess_counts(Check& c) {
    auto e6 = enumerate_admissible(parse_diagram("E~6"), 0);
    c(e6.size() == 3, "E~6 fibre weight 0: " + std::to_string(e6.size()) + " admissible weights (want 3)");
    auto e7 = verify_excess_results(parse_diagram("E~7"));
    c(e7.zero_excess_m2 == 1, "E~7 fibre weight 2 excess 0: " + std::to_string(e7.zero_excess_m2) + " (want 1)");
    for (int r = 7; r <= 12; r += 4) {
        auto rep = verify_excess_results(build_diagram(Family::D, r));
        c(rep.zero_excess_nonzero_m0 == 0, "D~" + std::to_string(r) + " nonzero excess-0 fibre weight 0: " +
                                               std::to_string(rep.zero_excess_nonzero_m0));
    }
    const auto d4 = parse_diagram("D~4");
    bool f2 = false;
    for (const auto& aw : enumerate_admissible(d4, std::nullopt))
        if (aw.w[0] == -2) f2 = true;
    c(f2, "D~4 admits a weight with f = 2");
}

void stability(Check& c) {
    auto rep = bound_stability(12);
    for (const auto& name : rep.differing) c(false, name + " changes between B = -6 and B = -8");
    c(rep.pass(), "enumeration identical for B = -6 and B = -8 up to rank 12");
}

void table(Check& c, FibrationKind kind) {
    auto gen = generate_table(kind, 9);
    auto golden = load_golden(golden_path(kind));
    auto diff = diff_against_golden(gen, golden.rows);
    c(diff.missing.empty(), std::to_string(diff.missing.size()) + " golden rows missing");
    for (const auto& p : diff.missing) c(false, "missing " + render_profile(p));
    for (const auto& p : diff.extra) c(false, "extra   " + render_profile(p));
    c(diff.extra.empty(), std::to_string(diff.extra.size()) + " extra rows");
}

void flip_graphs(Check& c) {
    for (int r : {1, 3, 5}) {
        const std::string rs = " radius " + std::to_string(r);
        auto g0 = build_flip_graph(make_surface(SurfaceType::T6, 0), r);
        c(g0.nodes.size() == 1 && g0.edges.empty(), "rank 0" + rs + ": 1 node");
        auto g1 = build_flip_graph(make_surface(SurfaceType::T6, 1), r);
        c(g1.nodes.size() == static_cast<std::size_t>(2 * r + 1), "rank 1" + rs + ": 2r+1 nodes");
        auto g2 = build_flip_graph(make_surface(SurfaceType::T6, 2), r);
        c(g2.nodes.size() == coxeter_ball_size(r), "rank 2" + rs + ": " + std::to_string(g2.nodes.size()) +
                                                      " nodes, Coxeter ball " + std::to_string(coxeter_ball_size(r)));
    }
}

void census(Check& c) {
    auto c0 = fibration_census(make_surface(SurfaceType::T6, 0), 5);
    c(c0.quasi_elliptic_count == 3 && c0.elliptic_count == 1, "T6 rank 0: 1 elliptic, 3 quasi-elliptic");
    c(fibration_census(make_surface(SurfaceType::T8), 5).quasi_elliptic_count == 1, "T8: 1 fibration");
    c(fibration_census(make_surface(SurfaceType::T7, 0, true), 5).quasi_elliptic_count == 2, "T7 double: 2");
    c(fibration_census(make_surface(SurfaceType::T7, 0, false), 5).quasi_elliptic_count == 3, "T7 simple: 3");
    for (int rank = 0; rank <= 2; ++rank) {
        auto cs = fibration_census(make_surface(SurfaceType::T6, rank), 5);
        c(cs.multiplicities_ok, "T6 rank " + std::to_string(rank) + ": interior multiplicities in {1,2}");
        c(cs.extraneous_pairing_ok, "T6 rank " + std::to_string(rank) + ": end-vertices meet one extraneous class");
    }
}

void inventory(Check& c) {
    for (int rank = 0; rank <= 2; ++rank) {
        const auto s = make_surface(SurfaceType::T6, rank);
        auto a = minus_two_curve_inventory(s, 4), b = minus_two_curve_inventory(s, 6);
        const std::string rs = "rank " + std::to_string(rank);
        c(b.max_interior_membership <= 6, rs + ": interior membership <= 6 (max " + std::to_string(b.max_interior_membership) + ")");
        if (rank == 0)
            c(a.curves.size() == 3 && b.curves.size() == 3, rs + ": exactly the 3 standard end-vertices");
        else
            c(b.curves.size() > a.curves.size(), rs + ": inventory grows from radius 4 to 6 (" +
                                                     std::to_string(a.curves.size()) + " -> " + std::to_string(b.curves.size()) + ")");
    }
}

const std::vector<std::pair<std::string, std::function<void(Check&)>>>& registry() {
    static const std::vector<std::pair<std::string, std::function<void(Check&)>>> r = {
        {"discriminants", discriminants},
        {"maximality", maximality},
        {"sigma-relations", sigma_relations},
        {"flip-table", flip_table},
        {"iterating-flips", iterating_flips},
        {"realisability", realisability},
        {"candidates", candidates},
        {"torsor", torsor},
        {"excess-results", excess_results},
        {"excess-counts", excess_counts},
        {"bound-stability", stability},
        {"table-quasi-elliptic", [](Check& c) { table(c, FibrationKind::QuasiElliptic); }},
        {"table-elliptic", [](Check& c) { table(c, FibrationKind::Elliptic); }},
        {"flip-graph", flip_graphs},
        {"census", census},
        {"inventory", inventory},
    };
    return r;
}

}  // namespace

std::vector<std::string> claim_names() {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
}

ClaimResult run_claim(const std::string& name) {
    for (const auto& [n, fn] : registry())
        if (n == name) {
            ClaimResult r{name, true, {}};
            Check c{r};
            try {
                fn(c);
            } catch (const std::exception& e) {
                c(false, std::string("exception: ") + e.what());
            }
            return r;
        }
    throw std::invalid_argument("unknown claim '" + name + "'");
}

IteratedFlipReport iterated_flip_check(int samples, int max_length, std::uint64_t seed) {
    IteratedFlipReport rep;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len(0, max_length), arm(1, 3);
    const auto T = q444::standard_config();
    for (int s = 0; s < samples; ++s) {
        std::vector<int> word(len(rng));
        for (auto& i : word) i = arm(rng);
        q444::Config cur = T;
        for (int i : word) cur = q444::flip(cur, i);
        ++rep.samples;
        if (cur != q444::apply_word(word, T)) {
            if (rep.failures++ == 0) rep.first_bad_word = word;
        }
    }
    return rep;
}

StabilityReport bound_stability(int max_rank, std::int64_t lower_a, std::int64_t lower_b) {
    StabilityReport rep;
    for (const auto& d : standard_diagrams(max_rank)) {
        auto a = enumerate_admissible(d, std::nullopt, lower_a), b = enumerate_admissible(d, std::nullopt, lower_b);
        bool same = a.size() == b.size();
        for (std::size_t k = 0; same && k < a.size(); ++k) same = a[k].w == b[k].w;
        if (!same) rep.differing.push_back(d.name());
    }
    return rep;
}

nlohmann::json to_json(const ClaimResult& r) {
    return {{"claim", r.name}, {"pass", r.pass}, {"details", r.details}};
}

}  // namespace enriques
