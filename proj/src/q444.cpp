#include "enriques/q444.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace enriques::q444 {

namespace {

void check_arm(int arm) {
    if (arm < 1 || arm > 3) throw std::invalid_argument("arm must be 1, 2 or 3");
}

const RMatrix& gram_Q() {
    static const RMatrix g = [] {
        RMatrix m(kDim, RVec(kDim, 0));
        for (int i = 0; i < kDim; ++i) m[i][i] = -2;
        auto link = [&](int a, int b) { m[a][b] = m[b][a] = 1; };
        for (int arm = 1; arm <= 3; ++arm) {
            link(kCentre, inner(arm));
            link(inner(arm), mid(arm));
            link(mid(arm), outer(arm));
        }
        return m;
    }();
    return g;
}

// Arm-symmetric vector: value at centre, then (inner, mid, outer) for the
// distinguished arm and for the other two arms.
Vec arm_vector(int arm, Rational centre, std::array<Rational, 3> own, std::array<Rational, 3> other) {
    Vec x(kDim, 0);
    x[kCentre] = centre;
    for (int a = 1; a <= 3; ++a) {
        const auto& vals = a == arm ? own : other;
        x[inner(a)] = vals[0];
        x[mid(a)] = vals[1];
        x[outer(a)] = vals[2];
    }
    return x;
}

Vec combine(const Vec& coeffs, const Config& t) {
    Vec out(kDim, 0);
    for (int k = 0; k < kDim; ++k)
        if (!coeffs[k].is_zero()) out = add(out, scale(coeffs[k], t[k]));
    return out;
}

// Q' coordinates of an ambient vector (filled as is, hollow doubled).
Vec to_prime_coords(const Vec& x) {
    Vec y = x;
    for (int k = 0; k < kDim; ++k)
        if (hollow(k)) y[k] = y[k] * 2;
    return y;
}

// x - expected is an integer multiple of e.
bool equal_mod_e(const Vec& x, const Vec& expected) {
    Vec d = sub(x, expected);
    const Vec& e = named().e;
    Rational k = d[kCentre] / e[kCentre];
    return k.is_integer() && is_zero(sub(d, scale(k, e)));
}

}  // namespace

int inner(int arm) {
    check_arm(arm);
    return arm == 1 ? 4 : arm == 2 ? 2 : 7;
}
int mid(int arm) {
    check_arm(arm);
    return arm == 1 ? 5 : arm == 2 ? 1 : 8;
}
int outer(int arm) {
    check_arm(arm);
    return arm == 1 ? 6 : arm == 2 ? 0 : 9;
}
bool hollow(int pos) { return pos != kCentre && pos != 1 && pos != 5 && pos != 8; }

Vec basis_vector(int pos) {
    Vec x(kDim, 0);
    x.at(pos) = 1;
    return x;
}

Vec from_ints(const std::vector<std::int64_t>& coords) {
    if (coords.size() != kDim) throw std::invalid_argument("expected 10 coordinates");
    return Vec(coords.begin(), coords.end());
}

Rational dot(const Vec& x, const Vec& y) { return bilinear(gram_Q(), x, y); }
Rational dot_prime(const Vec& x, const Vec& y) { return dot(x, y) * 2; }

Vec lin(const std::vector<std::pair<Rational, Vec>>& terms) {
    Vec out(kDim, 0);
    for (const auto& [c, v] : terms) out = add(out, scale(c, v));
    return out;
}

const NamedVectors& named() {
    static const NamedVectors nv = [] {
        NamedVectors n;
        n.C = from_ints({0, 1, 1, 2, 1, 1, 0, 1, 1, 0});
        const Rational h(1, 2);
        for (int i = 1; i <= 3; ++i) {
            n.f[i - 1] = arm_vector(i, 1, {1, 1, 1}, {h, 0, -h});
            n.v[i - 1] = basis_vector(outer(i));
            n.e7[i - 1] = arm_vector(i, 4, {2, 0, 0}, {3, 2, 1});
        }
        n.e = add(add(n.f[0], n.f[1]), n.f[2]);
        return n;
    }();
    return nv;
}

LatticeModel lattice_Q() {
    LatticeModel l{"Q", {}, gram_Q()};
    for (int k = 0; k < kDim; ++k) l.basis.push_back(basis_vector(k));
    return l;
}

LatticeModel lattice_Q2() {
    LatticeModel l = lattice_Q();
    l.name = "Q(2)";
    for (auto& row : l.gram)
        for (auto& x : row) x = x * 2;
    return l;
}

LatticeModel lattice_Qprime() {
    LatticeModel l{"Q'", {}, {}};
    for (int k = 0; k < kDim; ++k) l.basis.push_back(scale(hollow(k) ? Rational(1, 2) : Rational(1), basis_vector(k)));
    l.gram.assign(kDim, RVec(kDim, 0));
    for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b) l.gram[a][b] = dot_prime(l.basis[a], l.basis[b]);
    return l;
}

LatticeModel lattice_Qdouble() {
    // Hermite basis of the span of 2*generators, then halve.
    IMatrix rows;
    for (int k = 0; k < kDim; ++k) {
        std::vector<std::int64_t> r(kDim, 0);
        r[k] = 2;
        rows.push_back(r);
    }
    for (const auto& e7 : named().e7) {
        std::vector<std::int64_t> r(kDim);
        for (int k = 0; k < kDim; ++k) r[k] = e7[k].to_integer();
        rows.push_back(r);
    }
    LatticeModel l{"Q''", {}, {}};
    for (const auto& r : hermite_rows(rows)) {
        Vec x(kDim);
        for (int k = 0; k < kDim; ++k) x[k] = Rational(r[k], 2);
        l.basis.push_back(x);
    }
    l.gram.assign(l.basis.size(), RVec(l.basis.size(), 0));
    for (std::size_t a = 0; a < l.basis.size(); ++a)
        for (std::size_t b = 0; b < l.basis.size(); ++b) l.gram[a][b] = dot(l.basis[a], l.basis[b]);
    return l;
}

bool in_Q(const Vec& x) {
    return std::all_of(x.begin(), x.end(), [](const Rational& r) { return r.is_integer(); });
}

bool in_Qprime(const Vec& x) {
    for (int k = 0; k < kDim; ++k)
        if (!(hollow(k) ? x[k] * 2 : x[k]).is_integer()) return false;
    return true;
}

bool in_Qdouble(const Vec& x) {
    // Q'' = Q + Z e7_1/2 + Z e7_2/2 (e7_3/2 is congruent to their sum mod Q).
    const auto& n = named();
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            Vec y = sub(x, add(scale(Rational(a, 2), n.e7[0]), scale(Rational(b, 2), n.e7[1])));
            if (in_Q(y)) return true;
        }
    return false;
}

bool divisible_by_2_in_Qprime(const Vec& x) { return in_Qprime(scale(Rational(1, 2), x)); }

Rational discriminant(const LatticeModel& l) { return determinant(l.gram); }

Config standard_config() {
    Config t;
    for (int k = 0; k < kDim; ++k) t.push_back(basis_vector(k));
    return t;
}

bool is_configuration(const Config& t) {
    if (t.size() != kDim) return false;
    const auto& g = gram_Q();
    for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b)
            if (dot(t[a], t[b]) != g[a][b]) return false;
    return true;
}

const RMatrix& sigma(int i) {
    static const std::array<RMatrix, 3> mats = [] {
        std::array<RMatrix, 3> m;
        for (int arm = 1; arm <= 3; ++arm) {
            RMatrix s = identity(kDim);
            Vec img = sub(named().e7[arm - 1], named().v[arm - 1]);
            for (int r = 0; r < kDim; ++r) s[r][outer(arm)] = img[r];
            m[arm - 1] = s;
        }
        return m;
    }();
    check_arm(i);
    return mats[i - 1];
}

Vec apply_word(const std::vector<int>& word, const Vec& x) {
    Vec y = x;
    for (auto it = word.rbegin(); it != word.rend(); ++it) y = multiply(sigma(*it), y);
    return y;
}

Config apply_word(const std::vector<int>& word, const Config& t) {
    Config out;
    for (const auto& x : t) out.push_back(apply_word(word, x));
    return out;
}

RMatrix word_matrix(const std::vector<int>& word) {
    RMatrix m = identity(kDim);
    for (int i : word) m = multiply(m, sigma(i));
    return m;
}

Vec e7_of(const Config& t, int arm) { return combine(named().e7.at(arm - 1), t); }
Vec f_of(const Config& t, int arm) { return combine(named().f.at(arm - 1), t); }
Vec e_of(const Config& t) { return combine(named().e, t); }

Config flip(const Config& t, int arm) {
    if (!is_realisable(t)) throw std::invalid_argument("flip of a non-realisable configuration");
    Config out = t;
    out[outer(arm)] = sub(e7_of(t, arm), t[outer(arm)]);
    return out;
}

bool is_realisable(const Config& t) {
    if (!is_configuration(t)) return false;
    const Config s = standard_config();
    for (int k = 0; k < kDim; ++k) {
        bool end = k == outer(1) || k == outer(2) || k == outer(3);
        if (!end && t[k] != s[k]) return false;  // extends the standard T_{3,3,3}
        if (!in_Qdouble(t[k])) return false;
        if (end && !divisible_by_2_in_Qprime(t[k])) return false;
    }
    return true;
}

bool is_one_realisable(const Config& t, int arm) {
    const auto& n = named();
    Vec e2 = e_of(t), f2 = f_of(t, arm);
    std::vector<Vec> mine{add(e2, f2), sub(e2, f2)}, ref{add(n.e, n.f[0]), sub(n.e, n.f[0])};
    std::sort(mine.begin(), mine.end());
    std::sort(ref.begin(), ref.end());
    return mine == ref;
}

std::optional<int> one_realisable_arm(const Config& t) {
    for (int arm = 1; arm <= 3; ++arm)
        if (is_one_realisable(t, arm)) return arm;
    return std::nullopt;
}

namespace {

// Pairs 0 with the standard T_{3,3,3} except 1 with the arm's mid vertex.
bool extends_arm(const Vec& v, int arm) {
    for (int k = 0; k < kDim; ++k) {
        if (k == outer(1) || k == outer(2) || k == outer(3)) continue;
        Rational want = k == mid(arm) ? 1 : 0;
        if (dot(v, basis_vector(k)) != want) return false;
    }
    return true;
}

}  // namespace

bool is_one_realisable_vector(const Vec& v, int arm) {
    if (!extends_arm(v, arm)) return false;
    const auto& n = named();
    Rational p = dot(v, add(n.e, n.f[0])), m = dot(v, sub(n.e, n.f[0]));
    return (p == 0 && m == 2) || (p == 2 && m == 0);
}

bool is_two_realisable_vector(const Vec& v, int arm) {
    if (!extends_arm(v, arm)) return false;
    const auto& n = named();
    int twos = 0;
    for (int i = 0; i < 3; ++i) {
        Rational x = dot(v, sub(n.e, n.f[i]));
        if (x == 2) ++twos;
        else if (x != 0) return false;
    }
    return twos == 1;
}

std::vector<Vec> candidate_vectors(int bound) {
    std::vector<Vec> out;
    const auto& n = named();
    const int steps = 4 * bound + 1;
    // Orthogonality to the T_{3,3,3} fixes everything from centre, inner1, inner2.
    for (int a = 0; a < steps; ++a)
        for (int b = 0; b < steps; ++b)
            for (int c = 0; c < steps; ++c) {
                Rational centre = Rational(a, 2) - bound, in1 = Rational(b, 2) - bound, in2 = Rational(c, 2) - bound;
                Vec x(kDim, 0);
                x[kCentre] = centre;
                x[inner(1)] = in1;
                x[inner(2)] = in2;
                x[inner(3)] = centre * 2 - in1 - in2;
                for (int arm = 1; arm <= 3; ++arm) {
                    x[mid(arm)] = x[inner(arm)] * 2 - centre;
                    x[outer(arm)] = x[mid(arm)] * 2 - x[inner(arm)];
                }
                bool inside = std::all_of(x.begin(), x.end(), [&](const Rational& r) { return r >= -bound && r <= bound; });
                if (!inside || !in_Qdouble(x) || dot(x, x) != -2) continue;
                bool ok = true;
                for (const auto& v : n.v) {
                    Rational p = dot(x, v);
                    if (p != 0 && p != 2) ok = false;
                }
                if (ok) out.push_back(x);
            }
    std::sort(out.begin(), out.end());
    return out;
}

bool MaximalityReport::pass() const {
    if (dual_quotient_order != 4 || !basis_parity_ok || !hyperbolic_ok || overlattices.size() != 3) return false;
    return std::all_of(overlattices.begin(), overlattices.end(), [](const OverlatticeCheck& c) { return c.odd; });
}

MaximalityReport verify_maximality() {
    MaximalityReport rep;
    const LatticeModel qp = lattice_Qprime();
    IMatrix g(kDim, std::vector<std::int64_t>(kDim));
    for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b) g[a][b] = qp.gram[a][b].to_integer();
    rep.smith = smith_invariants(g);
    rep.dual_quotient_order = 1;
    for (auto s : rep.smith) rep.dual_quotient_order *= s;

    // Work on Q' coordinates with the integral Gram g.
    const RMatrix G = qp.gram;
    auto form = [&](const Vec& x, const Vec& y) { return bilinear(G, x, y); };
    const Vec C = to_prime_coords(named().C);

    rep.basis_parity_ok = true;
    for (int k = 0; k < kDim; ++k) {
        Vec b = basis_vector(k);
        Rational d = form(b, b) - form(C, b);
        if (!(d / 2).is_integer()) rep.basis_parity_ok = false;
    }

    // Split off square -1 vectors: the hollow basis vectors, then any found by search.
    std::vector<Vec> split;
    std::vector<Vec> L;
    for (int k = 0; k < kDim; ++k) L.push_back(basis_vector(k));
    auto project = [&](const Vec& s) {
        IMatrix rows;
        for (const auto& x : L) {
            Vec p = add(x, scale(form(x, s), s));
            std::vector<std::int64_t> r(kDim);
            for (int k = 0; k < kDim; ++k) r[k] = p[k].to_integer();
            rows.push_back(r);
        }
        L.clear();
        for (const auto& r : hermite_rows(rows)) L.push_back(Vec(r.begin(), r.end()));
        split.push_back(s);
    };
    for (int k = 0; k < kDim; ++k)
        if (hollow(k)) project(basis_vector(k));
    auto search = [&](std::function<bool(const Vec&)> pred, int range) -> std::optional<Vec> {
        const int r = static_cast<int>(L.size());
        std::vector<int> c(r, -range);
        while (true) {
            Vec x(kDim, 0);
            for (int i = 0; i < r; ++i) x = add(x, scale(c[i], L[i]));
            std::int64_t g = 0;
            for (int k : c) g = std::gcd(g, static_cast<std::int64_t>(k));
            if (g == 1 && pred(x)) return x;
            int i = 0;
            while (i < r && c[i] == range) c[i++] = -range;
            if (i == r) return std::nullopt;
            ++c[i];
        }
    };
    while (L.size() > 2) {
        auto s = search([&](const Vec& x) { return form(x, x) == -1; }, 2);
        if (!s) break;
        project(*s);
    }
    rep.minus_one_split = static_cast<int>(split.size());
    if (L.size() != 2) return rep;

    auto u = search([&](const Vec& x) { return form(x, x) == 0; }, 3);
    if (!u) return rep;
    auto v = search([&](const Vec& x) { return form(x, x) == 0 && form(x, *u) == 2; }, 3);
    if (!v) return rep;
    Vec cp = C;
    for (const auto& s : split) cp = add(cp, scale(form(C, s), s));
    Vec uv = add(*u, *v);
    if (cp == scale(-1, uv)) {
        u = scale(-1, *u);
        v = scale(-1, *v);
        uv = scale(-1, uv);
    }
    rep.hyperbolic_ok = cp == uv;

    for (const Vec& x2 : {*u, *v, uv}) {
        Vec x = scale(Rational(1, 2), x2);
        OverlatticeCheck c;
        c.representative = x;
        c.value = form(x, x) + form(C, x);
        c.odd = c.value.is_integer() && c.value.num() % 2 != 0;
        // x must pair integrally with Q' to define an overlattice of the dual
        for (int k = 0; k < kDim; ++k)
            if (!form(x, basis_vector(k)).is_integer()) c.odd = false;
        rep.overlattices.push_back(c);
    }
    return rep;
}

bool TorsorReport::pass() const {
    return !samples.empty() && std::all_of(samples.begin(), samples.end(), [](const TorsorSample& s) {
        return s.configuration && s.in_lattice && s.realisable == s.expected_realisable;
    });
}

TorsorReport t333_extension_torsor_check(int sample_size, std::uint64_t seed) {
    TorsorReport rep;
    const auto& n = named();
    const Vec& v3 = n.v[2];
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> coef(-5, 5);
    for (int s = 0; s < sample_size; ++s) {
        TorsorSample ts;
        ts.F = s == 0 ? std::array<std::int64_t, 3>{0, 0, 0} : std::array<std::int64_t, 3>{coef(rng), coef(rng), coef(rng)};
        Vec F = lin({{ts.F[0], n.f[0]}, {ts.F[1], n.f[1]}, {ts.F[2], n.f[2]}});
        Vec f = sub(F, scale(dot(F, v3), n.e));
        Vec w = sub(add(v3, f), scale(dot(f, f) / 2, n.e));
        ts.configuration = dot(w, w) == -2;
        for (int k = 0; k < kDim; ++k) {
            if (k == outer(1) || k == outer(2) || k == outer(3)) continue;
            if (dot(w, basis_vector(k)) != (k == mid(3) ? 1 : 0)) ts.configuration = false;
        }
        ts.in_lattice = in_Qdouble(w);
        ts.realisable = divisible_by_2_in_Qprime(w);
        auto par = [](std::int64_t x) { return ((x % 2) + 2) % 2; };
        ts.expected_realisable = par(ts.F[0]) == par(ts.F[1]) && par(ts.F[1]) == par(ts.F[2]);
        rep.samples.push_back(ts);
    }
    return rep;
}

std::vector<FlipTableEntry> verify_flip_table(int max_n) {
    const auto& nv = named();
    const Vec d = sub(nv.f[1], nv.f[2]);
    const Vec two_f2 = scale(2, nv.f[1]), minus_two_f3 = scale(-2, nv.f[2]);
    const Vec zero(kDim, 0);
    struct Column {
        std::string name;
        int t_power_offset;  // t^{2n + offset}
        std::vector<int> suffix;
        // per arm: multiple of (f2-f3) as a + b*n, plus an extra term
        std::array<std::pair<int, int>, 3> k;
        std::array<const Vec*, 3> extra;
    };
    const std::vector<Column> cols = {
        {"t^{2n}", 0, {}, {{{0, 2}, {0, 2}, {0, 2}}}, {&zero, &zero, &zero}},
        {"t^{2n+1}", 1, {}, {{{0, 2}, {0, 2}, {0, 2}}}, {&two_f2, &minus_two_f3, &minus_two_f3}},
        {"t^{2n}s3", 0, {3}, {{{0, 2}, {0, 2}, {0, 2}}}, {&zero, &zero, &minus_two_f3}},
        {"t^{2n+1}s3", 1, {3}, {{{0, 2}, {0, 2}, {2, 2}}}, {&two_f2, &minus_two_f3, &zero}},
        {"t^{2n}s3s1", 0, {3, 1}, {{{0, 2}, {0, 2}, {0, 2}}}, {&two_f2, &zero, &minus_two_f3}},
        {"t^{2n+1}s3s1", 1, {3, 1}, {{{2, 2}, {0, 2}, {2, 2}}}, {&zero, &minus_two_f3, &zero}},
    };
    const std::vector<int> t{3, 1, 2};
    std::vector<FlipTableEntry> out;
    for (const auto& col : cols)
        for (int n = 0; n <= max_n; ++n) {
            std::vector<int> word;
            for (int r = 0; r < 2 * n + col.t_power_offset; ++r) word.insert(word.end(), t.begin(), t.end());
            word.insert(word.end(), col.suffix.begin(), col.suffix.end());
            for (int arm = 1; arm <= 3; ++arm) {
                FlipTableEntry e;
                e.column = col.name;
                e.n = n;
                e.arm = arm;
                auto [a, b] = col.k[arm - 1];
                e.expected = add(scale(a + b * n, d), *col.extra[arm - 1]);
                e.got = sub(apply_word(word, nv.v[arm - 1]), nv.v[arm - 1]);
                e.pass = equal_mod_e(e.got, e.expected);
                out.push_back(e);
            }
        }
    return out;
}

int relation_order(int i, int j, int limit) {
    const RMatrix p = multiply(sigma(i), sigma(j));
    const RMatrix id = identity(kDim);
    RMatrix m = p;
    for (int k = 1; k <= limit; ++k) {
        if (m == id) return k;
        m = multiply(m, p);
    }
    return 0;
}

bool sigma_is_isometry(int i) {
    const RMatrix& s = sigma(i);
    return multiply(transpose(s), multiply(gram_Q(), s)) == gram_Q();
}

nlohmann::json vec_to_json(const Vec& v) {
    auto j = nlohmann::json::array();
    for (const auto& x : v) j.push_back(x.str());
    return j;
}

std::string format_vec(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

}  // namespace enriques::q444
