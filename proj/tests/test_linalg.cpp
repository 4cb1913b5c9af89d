#include "doctest.h"

#include <numeric>

#include "enriques/linalg.hpp"

using namespace enriques;

namespace {

// Cofactor expansion, independent of the elimination in determinant().
std::int64_t cofactor_det(const IMatrix& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    std::int64_t total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        IMatrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<std::int64_t> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        total += (c % 2 ? -1 : 1) * m[0][c] * cofactor_det(minor);
    }
    return total;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and normalised") {
    Rational a(6, -4);
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK(a + Rational(3, 2) == 0);
    CHECK(Rational(1, 3) * 3 == 1);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational(1) / 0);
    CHECK_THROWS(Rational(1, 3).to_integer());
}

TEST_CASE("rational overflow throws instead of wrapping") {
    Rational big(INT64_MAX / 2 + 1);
    CHECK_THROWS(big * 4);
    CHECK_THROWS(big + big + big);
}

TEST_CASE("determinant agrees with cofactor expansion") {
    IMatrix m{{2, -1, 0, 3}, {1, 4, -2, 0}, {0, 5, 1, -1}, {3, 0, 2, 2}};
    CHECK(determinant(to_rational(m)) == cofactor_det(m));
    IMatrix cartan_a3{{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}};
    CHECK(determinant(to_rational(cartan_a3)) == -4);
}

TEST_CASE("inverse times matrix is the identity") {
    IMatrix m{{2, 1}, {7, 4}};
    auto inv = inverse(to_rational(m));
    REQUIRE(inv);
    CHECK(multiply(*inv, to_rational(m)) == identity(2));
    CHECK_FALSE(inverse(to_rational(IMatrix{{1, 2}, {2, 4}})));
    CHECK(rank(to_rational(IMatrix{{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("smith invariants: product is |det| and the first is the gcd of the entries") {
    IMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    auto s = smith_invariants(m);
    REQUIRE(s.size() == 3);
    std::int64_t prod = 1;
    for (auto x : s) prod *= x;
    CHECK(prod == std::abs(cofactor_det(m)));
    std::int64_t g = 0;
    for (auto& row : m)
        for (auto x : row) g = std::gcd(g, x);
    CHECK(s[0] == g);
    for (std::size_t k = 1; k < s.size(); ++k) CHECK(s[k] % s[k - 1] == 0);
    CHECK(s == std::vector<std::int64_t>{2, 6, 12});
}

TEST_CASE("hermite rows span the same lattice") {
    IMatrix rows{{2, 0, 0}, {0, 2, 0}, {1, 1, 0}, {0, 0, 4}, {3, 3, 2}};
    auto h = hermite_rows(rows);
    CHECK(h.size() == 3);
    // Gram-free index check: the determinant of the basis is the index in Z^3.
    CHECK(std::abs(cofactor_det(h)) == 4);
}
