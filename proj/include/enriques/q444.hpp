#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "enriques/linalg.hpp"

// The T_{4,4,4} lattice tower. Every vector lives in one 10-dimensional
// rational space: coordinates are coefficients on the vertex basis of Q.
//
// Coordinate order follows the picture: 0-2 arm 2 (outer, mid, inner),
// 3 centre, 4-6 arm 1 (inner, mid, outer), 7-9 arm 3 (inner, mid, outer).
// Hollow vertices (odd distance to the centre) are the inner and outer ones.
namespace enriques::q444 {

constexpr int kDim = 10;
constexpr int kCentre = 3;

int inner(int arm);
int mid(int arm);
int outer(int arm);
bool hollow(int pos);

using Vec = RVec;
using Config = std::vector<Vec>;  // kDim vectors indexed by vertex position

Vec basis_vector(int pos);
Vec from_ints(const std::vector<std::int64_t>& coords);
// Q pairing (the T_{4,4,4} Gram). Q' uses twice this.
Rational dot(const Vec& x, const Vec& y);
Rational dot_prime(const Vec& x, const Vec& y);
Vec lin(const std::vector<std::pair<Rational, Vec>>& terms);

struct LatticeModel {
    std::string name;
    std::vector<Vec> basis;  // ambient coordinates
    RMatrix gram;            // in the lattice's own form
};

LatticeModel lattice_Q();
LatticeModel lattice_Q2();       // Q with the form scaled by 2
LatticeModel lattice_Qprime();   // Q(2) + 1/2 hollow vertices, form scaled by 2
LatticeModel lattice_Qdouble();  // Q + 1/2 Kodaira-Neron cycles of the three E~7

bool in_Q(const Vec& x);
bool in_Qprime(const Vec& x);
bool in_Qdouble(const Vec& x);
// x/2 lies in Q'.
bool divisible_by_2_in_Qprime(const Vec& x);

Rational discriminant(const LatticeModel& l);

struct NamedVectors {
    Vec C;
    std::array<Vec, 3> f;
    Vec e;
    std::array<Vec, 3> v;
    std::array<Vec, 3> e7;  // Kodaira-Neron cycle of the E~7 missing v_i
};
const NamedVectors& named();

Config standard_config();
bool is_configuration(const Config& t);

// sigma_i as a matrix acting on ambient column vectors.
const RMatrix& sigma(int i);
// sigma_{w[0]} sigma_{w[1]} ... sigma_{w[n-1]} applied to x.
Vec apply_word(const std::vector<int>& word, const Vec& x);
Config apply_word(const std::vector<int>& word, const Config& t);
RMatrix word_matrix(const std::vector<int>& word);

// Kodaira-Neron cycle of the E~7 of t without its arm-i end vertex.
Vec e7_of(const Config& t, int arm);
// f'_i of t: f_i's coefficients applied to t's vectors.
Vec f_of(const Config& t, int arm);
Vec e_of(const Config& t);
Config flip(const Config& t, int arm);

bool is_realisable(const Config& t);
bool is_one_realisable(const Config& t, int arm);
std::optional<int> one_realisable_arm(const Config& t);
bool is_one_realisable_vector(const Vec& v, int arm);
bool is_two_realisable_vector(const Vec& v, int arm);

// Square -2 vectors of Q'' orthogonal to the standard T_{3,3,3} pairing 0 or 2
// with each v_i; ambient coordinates bounded by `bound`.
std::vector<Vec> candidate_vectors(int bound = 6);

struct OverlatticeCheck {
    std::vector<Rational> representative;  // coordinates on the Q' basis
    Rational value;                        // x^2 + C.x in the Q' form
    bool odd = false;
};

struct MaximalityReport {
    std::vector<std::int64_t> smith;  // invariants of the Q' Gram
    std::int64_t dual_quotient_order = 0;
    bool basis_parity_ok = false;     // x^2 = C.x mod 2 on the Q' basis
    int minus_one_split = 0;          // square -1 vectors split off
    bool hyperbolic_ok = false;       // remaining rank 2 block is H(2), C -> u+v
    std::vector<OverlatticeCheck> overlattices;  // u/2, v/2, (u+v)/2
    bool pass() const;
};
MaximalityReport verify_maximality();

struct TorsorSample {
    std::array<std::int64_t, 3> F;  // F = a f1 + b f2 + c f3
    bool configuration = false;
    bool in_lattice = false;
    bool realisable = false;
    bool expected_realisable = false;
};
struct TorsorReport {
    std::vector<TorsorSample> samples;
    bool pass() const;
};
TorsorReport t333_extension_torsor_check(int sample_size, std::uint64_t seed = 444);

struct FlipTableEntry {
    std::string column;
    int n = 0;
    int arm = 0;
    Vec expected;  // modulo Ze, v subtracted
    Vec got;
    bool pass = false;
};
std::vector<FlipTableEntry> verify_flip_table(int max_n = 2);

// Smallest k in [1, limit] with (sigma_i sigma_j)^k = 1, or 0 if none.
int relation_order(int i, int j, int limit = 12);
bool sigma_is_isometry(int i);

nlohmann::json vec_to_json(const Vec& v);
std::string format_vec(const Vec& v);

}  // namespace enriques::q444
