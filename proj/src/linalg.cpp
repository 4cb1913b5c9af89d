#include "enriques/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace enriques {

namespace {

std::int64_t checked(__int128 v) {
    if (v > INT64_MAX || v < -INT64_MAX) throw std::overflow_error("integer overflow in lattice reduction");
    return static_cast<std::int64_t>(v);
}

// Bring the smallest nonzero |entry| of column c (rows >= r) to row r, then
// clear the column below by Euclidean steps. Returns false when column is zero.
bool reduce_column(IMatrix& m, std::size_t r, std::size_t c) {
    const std::size_t rows = m.size();
    for (;;) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i][c] != 0 && (piv == rows || std::llabs(m[i][c]) < std::llabs(m[piv][c]))) piv = i;
        if (piv == rows) return false;
        std::swap(m[r], m[piv]);
        bool done = true;
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            std::int64_t q = m[i][c] / m[r][c];
            for (std::size_t j = 0; j < m[i].size(); ++j)
                m[i][j] = checked(static_cast<__int128>(m[i][j]) - static_cast<__int128>(q) * m[r][j]);
            if (m[i][c] != 0) done = false;
        }
        if (done) return true;
    }
}

}  // namespace

RMatrix identity(std::size_t n) {
    RMatrix m(n, RVec(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RMatrix to_rational(const IMatrix& m) {
    RMatrix r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (auto x : m[i]) r[i].emplace_back(x);
    return r;
}

RMatrix transpose(const RMatrix& m) {
    if (m.empty()) return {};
    RMatrix t(m[0].size(), RVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

RMatrix multiply(const RMatrix& a, const RMatrix& b) {
    RMatrix c(a.size(), RVec(b.empty() ? 0 : b[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < b[k].size(); ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

RVec multiply(const RMatrix& a, const RVec& x) {
    RVec y(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            if (!x[j].is_zero()) y[i] += a[i][j] * x[j];
    return y;
}

RVec add(const RVec& a, const RVec& b) {
    RVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

RVec sub(const RVec& a, const RVec& b) {
    RVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

RVec scale(const Rational& s, const RVec& a) {
    RVec r(a);
    for (auto& x : r) x *= s;
    return r;
}

bool is_zero(const RVec& a) {
    return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x.is_zero(); });
}

Rational bilinear(const RMatrix& g, const RVec& x, const RVec& y) {
    Rational s;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (!g[i][j].is_zero() && !y[j].is_zero()) s += x[i] * g[i][j] * y[j];
    }
    return s;
}

Rational determinant(RMatrix m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return 0;
        if (p != c) { std::swap(m[p], m[c]); det = -det; }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            Rational f = m[r][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    return det;
}

std::optional<RMatrix> inverse(const RMatrix& m) {
    const std::size_t n = m.size();
    RMatrix a = m, inv = identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rational d = a[c][c];
        for (std::size_t j = 0; j < n; ++j) { a[c][j] /= d; inv[c][j] /= d; }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            Rational f = a[r][c];
            for (std::size_t j = 0; j < n; ++j) { a[r][j] -= f * a[c][j]; inv[r][j] -= f * inv[c][j]; }
        }
    }
    return inv;
}

std::size_t rank(RMatrix m) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c].is_zero()) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

std::vector<std::int64_t> smith_invariants(IMatrix m) {
    std::vector<std::int64_t> diag;
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // pick the smallest nonzero entry of the trailing block as pivot
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 && (pr == rows || std::llabs(m[i][j]) < std::llabs(m[pr][pc]))) { pr = i; pc = j; }
        if (pr == rows) break;
        std::swap(m[t], m[pr]);
        for (auto& row : m) std::swap(row[t], row[pc]);
        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            std::int64_t q = m[i][t] / m[t][t];
            for (std::size_t j = t; j < cols; ++j)
                m[i][j] = checked(static_cast<__int128>(m[i][j]) - static_cast<__int128>(q) * m[t][j]);
            if (m[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            std::int64_t q = m[t][j] / m[t][t];
            for (std::size_t i = t; i < rows; ++i)
                m[i][j] = checked(static_cast<__int128>(m[i][j]) - static_cast<__int128>(q) * m[i][t]);
            if (m[t][j] != 0) clean = false;
        }
        if (!clean) continue;
        // divisibility: fold any entry not divisible by the pivot into row t
        bool divisible = true;
        for (std::size_t i = t + 1; i < rows && divisible; ++i)
            for (std::size_t j = t + 1; j < cols; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    for (std::size_t k = t; k < cols; ++k) m[t][k] = checked(static_cast<__int128>(m[t][k]) + m[i][k]);
                    divisible = false;
                    break;
                }
        if (!divisible) continue;
        diag.push_back(std::llabs(m[t][t]));
        ++t;
    }
    return diag;
}

IMatrix hermite_rows(IMatrix rows) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        if (!reduce_column(rows, r, c)) continue;
        if (rows[r][c] < 0)
            for (auto& x : rows[r]) x = -x;
        for (std::size_t i = 0; i < r; ++i) {
            std::int64_t q = rows[i][c] / rows[r][c];
            if (rows[i][c] - q * rows[r][c] < 0) --q;
            for (std::size_t j = 0; j < cols; ++j)
                rows[i][j] = checked(static_cast<__int128>(rows[i][j]) - static_cast<__int128>(q) * rows[r][j]);
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

}  // namespace enriques
