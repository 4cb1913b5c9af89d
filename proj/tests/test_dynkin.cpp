#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "enriques/dynkin.hpp"

using namespace enriques;

namespace {

// Every vertex permutation preserving the edge multiplicities, by brute force.
std::size_t brute_automorphisms(const DynkinDiagram& d) {
    std::vector<int> p(d.size());
    std::iota(p.begin(), p.end(), 0);
    std::size_t count = 0;
    do {
        bool ok = true;
        for (int a = 0; a < d.size() && ok; ++a)
            for (int b = 0; b < d.size() && ok; ++b) ok = d.multiplicity(a, b) == d.multiplicity(p[a], p[b]);
        if (ok) ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

IVec in_display(const IVec& x, const DynkinDiagram& d) {
    IVec out;
    for (int v : d.display_order()) out.push_back(x[v]);
    return out;
}

}  // namespace

TEST_CASE("diagram shapes") {
    auto e8 = build_diagram(Family::E, 8);
    CHECK(e8.size() == 9);
    int branch = 0;
    for (int v = 0; v < 9; ++v)
        if (e8.degree(v) == 3) ++branch;
    CHECK(branch == 1);

    auto a1 = parse_diagram("A~*1");
    CHECK(a1.size() == 2);
    REQUIRE(a1.edges().size() == 1);
    CHECK(a1.edges()[0].mult == 2);
    CHECK(pair(IVec{1, 0}, IVec{0, 1}, a1) == 2);

    auto d4 = parse_diagram("D~4");
    CHECK(d4.degree(0) == 4);
    for (int v = 1; v <= 4; ++v) CHECK(d4.degree(v) == 1);

    CHECK_THROWS(parse_diagram("D~3"));
    CHECK_THROWS(parse_diagram("E~9"));
    CHECK_THROWS(parse_diagram("D~*2"));
    CHECK_THROWS(build_diagram(Family::A, 0));
}

TEST_CASE("Kodaira-Neron cycle: radical, positive, primitive, attached multiplicity 1") {
    for (const auto& d : diagrams_up_to(13)) {
        CAPTURE(d.name());
        const IVec F = kodaira_neron_cycle(d);
        const IMatrix g = d.gram();
        std::int64_t gcd = 0;
        for (int a = 0; a < d.size(); ++a) {
            std::int64_t s = 0;
            for (int b = 0; b < d.size(); ++b) s += g[a][b] * F[b];
            CHECK(s == 0);
            CHECK(F[a] > 0);
            gcd = std::gcd(gcd, F[a]);
        }
        CHECK(gcd == 1);
        CHECK(F[d.attached()] == 1);
    }
}

TEST_CASE("Kodaira-Neron multiplicities against hard-coded values") {
    CHECK(in_display(kodaira_neron_cycle(parse_diagram("E~8")), parse_diagram("E~8")) == IVec{2, 4, 6, 3, 5, 4, 3, 2, 1});
    CHECK(in_display(kodaira_neron_cycle(parse_diagram("E~7")), parse_diagram("E~7")) == IVec{1, 2, 3, 4, 2, 3, 2, 1});
    CHECK(in_display(kodaira_neron_cycle(parse_diagram("E~6")), parse_diagram("E~6")) == IVec{1, 2, 3, 2, 2, 1, 1});
    CHECK(kodaira_neron_cycle(parse_diagram("A~5")) == IVec(6, 1));
    CHECK(kodaira_neron_cycle(parse_diagram("A~*2")) == IVec(3, 1));
    const auto d7 = parse_diagram("D~7");
    const IVec F = kodaira_neron_cycle(d7);
    for (int v = 0; v < d7.size(); ++v) CHECK(F[v] == (d7.degree(v) == 1 ? 1 : 2));
}

TEST_CASE("excess cycle identity n F = E - V up to rank 12") {
    for (const auto& d : diagrams_up_to(13)) {
        if (!d.is_standard()) continue;
        CAPTURE(d.name());
        const IVec E = excess_cycle(d), V = branch_vertex_cycle(d), F = kodaira_neron_cycle(d);
        IVec lhs(d.size(), 0);
        for (std::size_t k = 0; k < d.edges().size(); ++k) {
            const auto& e = d.edges()[k];
            lhs[e.a] += E[k] * e.mult;
            lhs[e.b] += E[k] * e.mult;
        }
        for (int v = 0; v < d.size(); ++v) CHECK(lhs[v] - V[v] == excess_denominator(d) * F[v]);
    }
    auto e8 = excess_cycle(parse_diagram("E~8"));
    std::sort(e8.begin(), e8.end());
    CHECK(e8 == IVec{1, 1, 2, 2, 2, 2, 3, 3});
    auto e6 = excess_cycle(parse_diagram("E~6"));
    CHECK(std::all_of(e6.begin(), e6.end(), [](auto x) { return x == 1; }));
    CHECK(excess_denominator(parse_diagram("A~4")) == 2);
    CHECK_THROWS(excess_cycle(parse_diagram("A~*1")));
}

TEST_CASE("branch vertex cycle") {
    auto e6 = branch_vertex_cycle(parse_diagram("E~6"));
    CHECK(std::all_of(e6.begin(), e6.end(), [](auto x) { return x == 0; }));
    const auto d6 = parse_diagram("D~6");
    auto v = branch_vertex_cycle(d6);
    for (int x = 0; x < d6.size(); ++x) CHECK(v[x] == (d6.degree(x) == 3 ? 1 : 0));
    const auto e7 = parse_diagram("E~7");
    auto w = branch_vertex_cycle(e7);
    for (int x = 0; x < e7.size(); ++x) CHECK(w[x] == (e7.degree(x) == 3 ? 2 : 0));
}

TEST_CASE("automorphism group matches a brute-force count and preserves the Gram matrix") {
    for (const auto& d : diagrams_up_to(9)) {
        CAPTURE(d.name());
        auto group = automorphism_group(d);
        CHECK(group.size() == brute_automorphisms(d));
        const IMatrix g = d.gram();
        for (const auto& p : group)
            for (int a = 0; a < d.size(); ++a)
                for (int b = 0; b < d.size(); ++b) CHECK(g[a][b] == g[p[a]][p[b]]);
    }
}

TEST_CASE("diagram JSON round trip") {
    for (const auto& d : diagrams_up_to(9)) {
        auto j = to_json(d);
        CHECK(j.contains("kind"));
        CHECK(j.contains("edges"));
        CHECK(diagram_from_json(j).name() == d.name());
        CHECK(diagram_from_json(j).gram() == d.gram());
    }
}
