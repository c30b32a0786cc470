#include "halfgrids/concurrency.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>
#include <string>

#include "halfgrids/rat.hpp"

namespace halfgrids {

namespace {

// u^e with the exponent reduced mod m before touching the field.
CycElem u_pow(int m, long e) {
    e %= m;
    if (e < 0) e += m;
    return CycElem::root_of_unity(m, e);
}

// p_{rc} = [1 : u^c : u^r : u^{r+c}] (r indexes the M family, c the L family).
ProjPoint grid_point(int m, int r, int c) {
    return ProjPoint::from_coords(
        {CycElem::one(m), u_pow(m, c), u_pow(m, r), u_pow(m, r + c)});
}

bool on_m_line(int m, int i, const ProjPoint &q) {
    // M_i : w - u^i y = 0, u^i x - z = 0
    return (q.v[3] - u_pow(m, i) * q.v[1]).is_zero() &&
           (u_pow(m, i) * q.v[0] - q.v[2]).is_zero();
}

bool on_l_line(int m, int j, const ProjPoint &q) {
    // L_j : w - u^j z = 0, u^j x - y = 0
    return (q.v[3] - u_pow(m, j) * q.v[2]).is_zero() &&
           (u_pow(m, j) * q.v[0] - q.v[1]).is_zero();
}

std::string point_key(const ProjPoint &p) {
    ProjPoint c = p.canonical();
    std::string s;
    for (const auto &x : c.v) {
        s += std::to_string(x.conductor());
        s += '|';
        for (const auto &r : x.coeffs()) {
            s += rat_to_string(r);
            s += ',';
        }
        s += ';';
    }
    return s;
}

} // namespace

ConcurrencyQuery make_concurrency_query(int m, int i, int j) {
    if (m < 3) throw std::invalid_argument("concurrency: m must be >= 3");
    if (i < 0 || i >= m || j < 0 || j >= m)
        throw std::invalid_argument("concurrency: indices out of range");
    ConcurrencyQuery q;
    q.m = m;
    q.i = i;
    q.j = j;
    q.plane = Plane3::from_coeffs(
        {u_pow(m, i + j), CycElem::zero(m) - u_pow(m, i),
         CycElem::zero(m) - u_pow(m, j), CycElem::one(m)});
    return q;
}

std::vector<ConcurrencyPoint> concurrency_points(int m, int i, int j) {
    ConcurrencyQuery query = make_concurrency_query(m, i, j);
    // All candidate lines of the plane: line(p_{ik}, p_{lj}) for k != j.
    std::vector<int> cols;
    for (int k = 0; k < m; ++k)
        if (k != j) cols.push_back(k);
    std::vector<ProjPoint> row_i(m, ProjPoint::p3i(1, 0, 0, 0));
    std::vector<ProjPoint> col_j(m, ProjPoint::p3i(1, 0, 0, 0));
    for (int t = 0; t < m; ++t) {
        row_i[t] = grid_point(m, i, t);
        col_j[t] = grid_point(m, t, j);
    }
    std::map<int, std::vector<ProjLine3>> lines; // lines[k][l]
    for (int k : cols) {
        std::vector<ProjLine3> fam;
        fam.reserve(m);
        for (int l = 0; l < m; ++l) fam.push_back(line_through(row_i[k], col_j[l]));
        lines[k] = std::move(fam);
    }

    // Candidates: intersections of the two pivot families k1, k2. Any point
    // of concurrence lies on one line of each family, so this is exhaustive.
    int k1 = cols[0], k2 = cols[1];
    std::map<std::string, ProjPoint> candidates;
    for (int l1 = 0; l1 < m; ++l1)
        for (int l2 = 0; l2 < m; ++l2) {
            // l1 = l2 = i degenerates both pivot lines to the row line M_i,
            // whose points are excluded anyway
            if (l1 == i && l2 == i) continue;
            auto q = lines_meet(lines[k1][l1], lines[k2][l2]);
            if (!q) continue;
            if (on_m_line(m, i, *q) || on_l_line(m, j, *q)) continue;
            candidates.emplace(point_key(*q), *q);
        }

    std::vector<ConcurrencyPoint> out;
    for (const auto &[key, q] : candidates) {
        if (!dot(query.plane.h, q.v).is_zero())
            throw std::logic_error("concurrency: candidate off the plane");
        ConcurrencyPoint cp;
        cp.q = q;
        bool ok = true;
        for (int k : cols) {
            int found = -1;
            for (int l = 0; l < m && found < 0; ++l)
                if (on_line(q, lines[k][l])) found = l;
            if (found < 0) {
                ok = false;
                break;
            }
            cp.witness.emplace_back(k, found);
        }
        if (ok) out.push_back(std::move(cp));
    }
    // The map iteration already emits keys in sorted order.
    return out;
}

ConcurrencyTable concurrency_scan(int m_min, int m_max) {
    if (m_min < 3 || m_min > m_max)
        throw std::invalid_argument("concurrency_scan: bad range");
    ConcurrencyTable table;
    for (int m = m_min; m <= m_max; ++m) {
        auto start = std::chrono::steady_clock::now();
        ConcurrencyRow row;
        row.m = m;
        row.i = 0;
        row.j = 0;
        row.points = concurrency_points(m, 0, 0);
        row.count = static_cast<int>(row.points.size());
        row.spot_i = 1;
        row.spot_j = 2 % m;
        row.spot_count =
            static_cast<int>(concurrency_points(m, row.spot_i, row.spot_j).size());
        row.maximal = row.count == 2 && row.spot_count == 2;
        row.seconds = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace halfgrids
