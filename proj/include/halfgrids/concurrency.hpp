#ifndef HALFGRIDS_CONCURRENCY_HPP
#define HALFGRIDS_CONCURRENCY_HPP

#include <utility>
#include <vector>

#include "halfgrids/projgeom.hpp"

namespace halfgrids {

// One plane of the standard construction together with its defining data.
struct ConcurrencyQuery {
    int m = 3;
    int i = 0, j = 0;
    Plane3 plane = Plane3::of(0, 0, 0, 1); // w - u^j z - u^i y + u^{i+j} x = 0
};

ConcurrencyQuery make_concurrency_query(int m, int i, int j);

// A point where m-1 lines of the plane concur: for every column k != j the
// witness records the row l(k) with q on line(p_{ik}, p_{l(k)j}).
struct ConcurrencyPoint {
    ProjPoint q = ProjPoint::p3i(1, 0, 0, 0);
    std::vector<std::pair<int, int>> witness; // (k, l(k)), all k != j
};

// Exhaustive search for all points of concurrence in the plane of (m, i, j),
// excluding points of M_i and L_j. Output deduped projectively and sorted by
// normalized coordinates.
std::vector<ConcurrencyPoint> concurrency_points(int m, int i, int j);

struct ConcurrencyRow {
    int m = 0;
    int i = 0, j = 0;           // representative plane
    int count = 0;              // concurrence points in that plane
    std::vector<ConcurrencyPoint> points;
    int spot_i = 0, spot_j = 0; // second plane checked
    int spot_count = 0;
    bool maximal = false;       // count == 2: no larger half grid contains it
    double seconds = 0.0;
};

struct ConcurrencyTable {
    std::vector<ConcurrencyRow> rows;
};

// Run concurrency_points for one representative plane per m plus a second
// spot-check plane; the group acts transitively on planes, so one count per m
// determines them all.
ConcurrencyTable concurrency_scan(int m_min, int m_max);

} // namespace halfgrids

#endif
