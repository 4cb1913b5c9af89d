#include "doctest.h"

#include <map>
#include <set>

#include "enriques/q444.hpp"

using namespace enriques;
using namespace enriques::q444;

namespace {

// T_{4,4,4} Gram rebuilt from the arm layout, independent of the library's.
RMatrix t444_gram() {
    RMatrix g(kDim, RVec(kDim, 0));
    for (int i = 0; i < kDim; ++i) g[i][i] = -2;
    const int arms[3][3] = {{4, 5, 6}, {2, 1, 0}, {7, 8, 9}};
    for (const auto& a : arms) {
        g[3][a[0]] = g[a[0]][3] = 1;
        g[a[0]][a[1]] = g[a[1]][a[0]] = 1;
        g[a[1]][a[2]] = g[a[2]][a[1]] = 1;
    }
    return g;
}

Rational pairing(const Vec& x, const Vec& y) { return bilinear(t444_gram(), x, y); }

// Fraction-free Bareiss elimination.
Rational bareiss(RMatrix m) {
    const std::size_t n = m.size();
    Rational sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Vec half(std::initializer_list<int> twice) {
    Vec v;
    for (int x : twice) v.push_back(Rational(x, 2));
    return v;
}

bool multiple_of_e(const Vec& x) {
    const Vec& e = named().e;
    Rational k = x[kCentre] / e[kCentre];
    return k.is_integer() && is_zero(sub(x, scale(k, e)));
}

}  // namespace

TEST_CASE("discriminants") {
    CHECK(discriminant(lattice_Q()) == -16);
    CHECK(bareiss(t444_gram()) == -16);
    RMatrix g2 = t444_gram();
    for (auto& r : g2)
        for (auto& x : r) x = x * 2;
    CHECK(discriminant(lattice_Q2()) == bareiss(g2));
    CHECK(discriminant(lattice_Q2()) == -16 * 1024);
    Rational dd = discriminant(lattice_Qdouble());
    CHECK((dd == 1 || dd == -1));
    CHECK(bareiss(lattice_Qdouble().gram) == dd);
}

TEST_CASE("Q' basis squares and integrality") {
    auto qp = lattice_Qprime();
    for (int k = 0; k < kDim; ++k) CHECK(qp.gram[k][k] == (hollow(k) ? -1 : -4));
    for (auto& row : qp.gram)
        for (auto& x : row) CHECK(x.is_integer());
    auto qd = lattice_Qdouble();
    for (auto& row : qd.gram)
        for (auto& x : row) CHECK(x.is_integer());
}

TEST_CASE("maximality of Q'") {
    auto rep = verify_maximality();
    // oracle: the dual quotient order is |det| of the Q' Gram
    Rational det = bareiss(lattice_Qprime().gram);
    CHECK(det == -4);
    CHECK(rep.dual_quotient_order == 4);
    std::int64_t prod = 1;
    for (auto s : rep.smith) prod *= s;
    CHECK(prod == 4);
    CHECK(rep.basis_parity_ok);
    CHECK(rep.minus_one_split == 8);
    CHECK(rep.hyperbolic_ok);
    REQUIRE(rep.overlattices.size() == 3);
    CHECK(rep.overlattices[0].value == 1);
    CHECK(rep.overlattices[1].value == 1);
    CHECK(rep.overlattices[2].value == 3);
    CHECK(rep.pass());
}

TEST_CASE("named vectors") {
    const auto& n = named();
    CHECK(n.f[0] == half({-1, 0, 1, 2, 2, 2, 2, 1, 0, -1}));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(pairing(n.f[i], n.f[j]) == (i == j ? -2 : 1));
    CHECK(pairing(n.e, n.e) == 0);
    for (int k = 0; k < kDim; ++k)
        if (k != outer(1) && k != outer(2) && k != outer(3)) CHECK(pairing(n.e, basis_vector(k)) == 0);
    for (int i = 0; i < 3; ++i) {
        // e_i is in the radical of the E~7 avoiding v_i and mid(i)
        for (int k = 0; k < kDim; ++k)
            if (k != outer(i + 1) && k != mid(i + 1)) CHECK(pairing(n.e7[i], basis_vector(k)) == 0);
        CHECK(sub(n.e7[i], n.v[i]) == add(n.v[i], scale(2, sub(n.e, n.f[i]))));
    }
    // C pairs -4 or -1 with the Q' basis modulo 2 like its squares
    CHECK(in_Q(n.C));
}

TEST_CASE("sigma: isometries, involutions, relations") {
    const auto& n = named();
    const RMatrix G = t444_gram();
    for (int i = 1; i <= 3; ++i) {
        CHECK(multiply(multiply(transpose(sigma(i)), G), sigma(i)) == G);
        // apply twice to every vertex of the standard configuration
        for (int k = 0; k < kDim; ++k) CHECK(apply_word({i, i}, basis_vector(k)) == basis_vector(k));
        CHECK(multiply(sigma(i), n.f[i - 1]) == sub(scale(2, n.e), n.f[i - 1]));
        for (int j = 1; j <= 3; ++j)
            if (j != i) CHECK(multiply(sigma(i), n.f[j - 1]) == scale(-1, n.f[5 - i - j]));
    }
    CHECK(apply_word({1}, n.v[0]) == add(n.v[0], scale(2, add(n.f[1], n.f[2]))));
    CHECK(apply_word({1}, n.f[1]) == scale(-1, n.f[2]));
    CHECK(apply_word({}, n.v[1]) == n.v[1]);
    CHECK(relation_order(1, 2) == 3);
    CHECK(relation_order(2, 3) == 3);
    CHECK(relation_order(1, 3) == 3);
}

TEST_CASE("t = sigma3 sigma1 sigma2") {
    const auto& n = named();
    const std::vector<int> t{3, 1, 2};
    CHECK(apply_word(t, n.v[0]) == lin({{1, n.v[0]}, {2, n.e}, {2, n.f[1]}}));
    CHECK(apply_word(t, n.f[0]) == scale(-1, n.f[0]));
    // t^2 sigma3 on v3, modulo Ze and minus v3
    Vec x = sub(apply_word({3, 1, 2, 3, 1, 2, 3}, n.v[2]), n.v[2]);
    Vec expected = sub(scale(2, sub(n.f[1], n.f[2])), scale(2, n.f[2]));
    CHECK(multiple_of_e(sub(x, expected)));
}

TEST_CASE("flip table") {
    auto entries = verify_flip_table(2);
    CHECK(entries.size() == 54);
    for (const auto& e : entries) {
        CAPTURE(e.column);
        CAPTURE(e.n);
        CAPTURE(e.arm);
        CHECK(e.pass);
    }
}

TEST_CASE("flips and realisability") {
    const auto T = standard_config();
    CHECK(is_configuration(T));
    CHECK(is_realisable(T));
    CHECK(is_one_realisable(T, 1));
    for (int i = 1; i <= 3; ++i) {
        CHECK(flip(T, i) == apply_word({i}, T));
        CHECK(flip(flip(T, i), i) == T);
        Config f = flip(T, i);
        for (int k = 0; k < kDim; ++k)
            if (k != outer(i)) CHECK(f[k] == T[k]);
    }
    CHECK_FALSE(is_one_realisable(flip(T, 1), 1));
    CHECK(one_realisable_arm(flip(T, 2)) == 3);
    CHECK(one_realisable_arm(flip(T, 3)) == 2);
    Config broken = T;
    broken[outer(1)] = basis_vector(kCentre);
    CHECK_FALSE(is_realisable(broken));
    CHECK_THROWS(flip(broken, 1));
}

TEST_CASE("1-flip transitions along the rank 1 line") {
    // from a configuration 1-realisable in arm i, flips in the other arms are
    // 1-realisable in the remaining arm
    std::vector<Config> frontier{standard_config()};
    for (int step = 0; step < 4; ++step) {
        std::vector<Config> next;
        for (const auto& t : frontier) {
            auto i = one_realisable_arm(t);
            REQUIRE(i);
            for (int j = 1; j <= 3; ++j) {
                if (j == *i) continue;
                Config f = flip(t, j);
                CHECK(one_realisable_arm(f) == 6 - *i - j);
                next.push_back(f);
            }
            CHECK_FALSE(one_realisable_arm(flip(t, *i)));
        }
        frontier = next;
    }
}

TEST_CASE("vector realisability by direct pairing") {
    const auto& n = named();
    for (int i = 0; i < 3; ++i) {
        int twos = 0;
        for (int j = 0; j < 3; ++j) {
            Rational p = pairing(n.v[i], sub(n.e, n.f[j]));
            CHECK((p == 0 || p == 2));
            twos += p == 2;
        }
        CHECK(twos == 1);
        CHECK(is_two_realisable_vector(n.v[i], i + 1));
    }
    CHECK_FALSE(is_two_realisable_vector(n.v[0], 2));
}

TEST_CASE("candidate vectors") {
    const auto& n = named();
    Vec c = add(n.e, n.f[0]);
    CHECK(pairing(c, c) == -2);
    CHECK(in_Qdouble(c));
    for (int k = 0; k < kDim; ++k)
        if (k != outer(1) && k != outer(2) && k != outer(3)) CHECK(pairing(c, basis_vector(k)) == 0);
    for (const auto& v : n.v) {
        Rational p = pairing(c, v);
        CHECK((p == 0 || p == 2));
    }
    Vec bad = add(n.e, scale(2, n.f[0]));
    CHECK(pairing(bad, bad) == -8);
    auto got = candidate_vectors();
    CHECK(got.size() == 6);
    CHECK(std::find(got.begin(), got.end(), bad) == got.end());
    CHECK(candidate_vectors(8) == got);
}

TEST_CASE("T333 extension torsor") {
    const auto& n = named();
    auto extend = [&](const Vec& F) {
        Vec f = sub(F, scale(pairing(F, n.v[2]), n.e));
        return sub(add(n.v[2], f), scale(pairing(f, f) / 2, n.e));
    };
    CHECK(extend(Vec(kDim, 0)) == n.v[2]);
    Vec w2 = extend(scale(2, n.f[1]));
    CHECK(pairing(w2, w2) == -2);
    CHECK(in_Qprime(scale(Rational(1, 2), w2)));
    Vec w1 = extend(n.f[1]);
    CHECK(pairing(w1, w1) == -2);
    CHECK(in_Qdouble(w1));
    CHECK_FALSE(in_Qprime(scale(Rational(1, 2), w1)));
    CHECK(t333_extension_torsor_check(100).pass());
}

TEST_CASE("group action is simple: Tits elements and configurations correspond up to length 8") {
    // Tits representation of the Coxeter group with all m_ij = 3
    std::array<RMatrix, 3> s;
    for (int i = 0; i < 3; ++i) {
        s[i] = identity(3);
        for (int c = 0; c < 3; ++c) s[i][i][c] = s[i][i][c] - (c == i ? Rational(2) : Rational(-1));
    }
    std::map<RMatrix, Config> seen{{identity(3), standard_config()}};
    std::vector<std::pair<RMatrix, std::vector<int>>> frontier{{identity(3), {}}};
    std::set<Config> configs{standard_config()};
    for (int len = 1; len <= 8; ++len) {
        std::vector<std::pair<RMatrix, std::vector<int>>> next;
        for (const auto& [m, word] : frontier)
            for (int i = 0; i < 3; ++i) {
                RMatrix p = multiply(m, s[i]);
                std::vector<int> w = word;
                w.push_back(i + 1);
                Config c = apply_word(w, standard_config());
                auto it = seen.find(p);
                if (it != seen.end()) {
                    CHECK(it->second == c);
                    continue;
                }
                CHECK(configs.insert(c).second);
                CHECK(is_realisable(c));
                seen.emplace(p, c);
                next.emplace_back(p, w);
            }
        frontier = std::move(next);
    }
    CHECK(seen.size() == 1 + 3 * 8 * 9 / 2);
}
