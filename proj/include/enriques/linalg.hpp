#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "enriques/rational.hpp"

namespace enriques {

using RVec = std::vector<Rational>;
using RMatrix = std::vector<RVec>;  // row-major
using IMatrix = std::vector<std::vector<std::int64_t>>;

RMatrix identity(std::size_t n);
RMatrix to_rational(const IMatrix& m);
RMatrix transpose(const RMatrix& m);
RMatrix multiply(const RMatrix& a, const RMatrix& b);
RVec multiply(const RMatrix& a, const RVec& x);

RVec add(const RVec& a, const RVec& b);
RVec sub(const RVec& a, const RVec& b);
RVec scale(const Rational& s, const RVec& a);
bool is_zero(const RVec& a);

// x^T G y.
Rational bilinear(const RMatrix& g, const RVec& x, const RVec& y);

Rational determinant(RMatrix m);
// Empty when singular.
std::optional<RMatrix> inverse(const RMatrix& m);
std::size_t rank(RMatrix m);

// Invariant factors d_1 | d_2 | ... of an integer matrix (zeros omitted).
std::vector<std::int64_t> smith_invariants(IMatrix m);

// Row Hermite basis of the Z-span of the given integer rows; zero rows dropped.
IMatrix hermite_rows(IMatrix rows);

}  // namespace enriques
