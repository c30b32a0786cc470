#ifndef HALFGRIDS_LINALG_HPP
#define HALFGRIDS_LINALG_HPP

#include <optional>
#include <vector>

#include "halfgrids/cyclotomic.hpp"

namespace halfgrids {

using Vec = std::vector<CycElem>;
using Matrix = std::vector<Vec>;

namespace linalg {

// Embed all entries into the lcm of the conductors present; returns it.
long unify_conductors(Matrix &m);

struct Echelon {
    Matrix rref;
    std::vector<int> pivot_cols;
    int rank;
};

Echelon reduced_echelon(Matrix m);

int rank(const Matrix &m);

// Basis of { v : m v = 0 }. Empty for injective m.
std::vector<Vec> kernel(const Matrix &m);

// Exact solution of m x = b, if one exists.
std::optional<Vec> solve(const Matrix &m, const Vec &b);

CycElem determinant(Matrix m);

Vec apply(const Matrix &m, const Vec &v);
Matrix multiply(const Matrix &a, const Matrix &b);
Matrix inverse(const Matrix &m); // throws on singular input

} // namespace linalg
} // namespace halfgrids

#endif
