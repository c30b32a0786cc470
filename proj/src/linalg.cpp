#include "halfgrids/linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace halfgrids::linalg {

long unify_conductors(Matrix &m) {
    long n = 1;
    for (const auto &row : m)
        for (const auto &e : row) n = std::lcm(n, e.conductor());
    for (auto &row : m)
        for (auto &e : row)
            if (e.conductor() != n) e = embed(e, n);
    return n;
}

Echelon reduced_echelon(Matrix m) {
    long n = unify_conductors(m);
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    Echelon e;
    e.rank = 0;
    int r = 0;
    for (int jc = 0; jc < cols && r < rows; ++jc) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (!m[i][jc].is_zero()) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(m[r], m[pr]);
        CycElem inv = m[r][jc].inv();
        for (int j = jc; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][jc].is_zero()) continue;
            CycElem f = m[i][jc];
            for (int j = jc; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        e.pivot_cols.push_back(jc);
        ++r;
    }
    e.rank = r;
    (void)n;
    e.rref = std::move(m);
    return e;
}

int rank(const Matrix &m) { return reduced_echelon(m).rank; }

std::vector<Vec> kernel(const Matrix &m) {
    if (m.empty()) return {};
    int cols = static_cast<int>(m[0].size());
    Echelon e = reduced_echelon(m);
    long n = 1;
    for (const auto &row : e.rref)
        for (const auto &x : row) n = std::lcm(n, x.conductor());
    std::vector<bool> is_pivot(cols, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int jc = 0; jc < cols; ++jc) {
        if (is_pivot[jc]) continue;
        Vec v(cols, CycElem::zero(n));
        v[jc] = CycElem::one(n);
        for (int i = 0; i < e.rank; ++i) v[e.pivot_cols[i]] = -e.rref[i][jc];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix &m, const Vec &b) {
    if (m.size() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
    if (m.empty()) return Vec{};
    int cols = static_cast<int>(m[0].size());
    Matrix aug(m);
    for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    Echelon e = reduced_echelon(std::move(aug));
    long n = 1;
    for (const auto &row : e.rref)
        for (const auto &x : row) n = std::lcm(n, x.conductor());
    // Inconsistent iff the augmented column is a pivot.
    for (int c : e.pivot_cols)
        if (c == cols) return std::nullopt;
    Vec x(cols, CycElem::zero(n));
    for (int i = 0; i < e.rank; ++i) x[e.pivot_cols[i]] = e.rref[i][cols];
    return x;
}

CycElem determinant(Matrix m) {
    long n = unify_conductors(m);
    int sz = static_cast<int>(m.size());
    for (const auto &row : m)
        if (static_cast<int>(row.size()) != sz)
            throw std::invalid_argument("determinant: matrix not square");
    CycElem det = CycElem::one(n);
    for (int c = 0; c < sz; ++c) {
        int pr = -1;
        for (int i = c; i < sz; ++i)
            if (!m[i][c].is_zero()) { pr = i; break; }
        if (pr < 0) return CycElem::zero(n);
        if (pr != c) {
            std::swap(m[c], m[pr]);
            det = -det;
        }
        det = det * m[c][c];
        CycElem inv = m[c][c].inv();
        for (int i = c + 1; i < sz; ++i) {
            if (m[i][c].is_zero()) continue;
            CycElem f = m[i][c] * inv;
            for (int j = c; j < sz; ++j) m[i][j] = m[i][j] - f * m[c][j];
        }
    }
    return det;
}

Vec apply(const Matrix &m, const Vec &v) {
    Vec out;
    out.reserve(m.size());
    for (const auto &row : m) {
        if (row.size() != v.size()) throw std::invalid_argument("apply: dimension mismatch");
        CycElem s = CycElem::zero(1);
        for (size_t j = 0; j < v.size(); ++j) s = s + row[j] * v[j];
        out.push_back(std::move(s));
    }
    return out;
}

Matrix multiply(const Matrix &a, const Matrix &b) {
    if (a.empty() || b.empty()) return {};
    size_t n = a.size(), k = b.size(), m = b[0].size();
    Matrix out(n, Vec(m, CycElem::zero(1)));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw std::invalid_argument("multiply: dimension mismatch");
        for (size_t j = 0; j < m; ++j) {
            CycElem s = CycElem::zero(1);
            for (size_t t = 0; t < k; ++t) s = s + a[i][t] * b[t][j];
            out[i][j] = std::move(s);
        }
    }
    return out;
}

Matrix inverse(const Matrix &m) {
    int sz = static_cast<int>(m.size());
    Matrix aug(m);
    for (int i = 0; i < sz; ++i) {
        if (static_cast<int>(aug[i].size()) != sz)
            throw std::invalid_argument("inverse: matrix not square");
        for (int j = 0; j < sz; ++j)
            aug[i].push_back(i == j ? CycElem::one(1) : CycElem::zero(1));
    }
    Echelon e = reduced_echelon(std::move(aug));
    for (int c : e.pivot_cols)
        if (c >= sz) throw std::domain_error("inverse: singular matrix");
    if (e.rank != sz) throw std::domain_error("inverse: singular matrix");
    Matrix out(sz);
    for (int i = 0; i < sz; ++i)
        out[i] = Vec(e.rref[i].begin() + sz, e.rref[i].end());
    return out;
}

} // namespace halfgrids::linalg
