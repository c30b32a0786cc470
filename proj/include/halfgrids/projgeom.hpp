#ifndef HALFGRIDS_PROJGEOM_HPP
#define HALFGRIDS_PROJGEOM_HPP

#include <array>
#include <optional>

#include "halfgrids/linalg.hpp"

namespace halfgrids {

// Point of P^1 or P^3 with exact coordinates; equality is up to scalar.
struct ProjPoint {
    int dim; // 1 or 3
    Vec v;   // dim+1 coordinates, not all zero

    static ProjPoint p1(CycElem x, CycElem y);
    static ProjPoint p3(CycElem x, CycElem y, CycElem z, CycElem w);
    static ProjPoint p3i(long x, long y, long z, long w);
    static ProjPoint from_coords(Vec coords);

    // Scale so that the first nonzero coordinate is 1.
    ProjPoint canonical() const;
};

bool proj_eq(const ProjPoint &a, const ProjPoint &b);
bool proj_eq(const Vec &a, const Vec &b);

struct Plane3 {
    Vec h; // 4 hyperplane coefficients, not all zero
    static Plane3 of(long a, long b, long c, long d);
    static Plane3 from_coeffs(Vec coeffs);
};

CycElem dot(const Vec &a, const Vec &b);

// Line of P^3 as a Pluecker 6-vector (p01,p02,p03,p12,p13,p23) with two
// cached spanning points and the dual two-plane form.
struct ProjLine3 {
    std::array<CycElem, 6> pluecker;
    ProjPoint a, b;   // spanning points
    Plane3 h1, h2;    // line = h1 cap h2

    static ProjLine3 through(const ProjPoint &p, const ProjPoint &q);
    static ProjLine3 from_planes(const Plane3 &u, const Plane3 &v);
};

bool proj_eq(const ProjLine3 &a, const ProjLine3 &b);

// Bilinear pairing; zero iff the lines are coplanar (meet).
CycElem pluecker_pairing(const ProjLine3 &l, const ProjLine3 &m);
bool lines_skew(const ProjLine3 &l, const ProjLine3 &m);

struct Quadric3 {
    Matrix sym; // symmetric 4x4, nonzero
    CycElem eval(const ProjPoint &p) const;
    bool contains(const ProjPoint &p) const { return eval(p).is_zero(); }
    bool contains_line(const ProjLine3 &l) const;
};

enum class CrossRatioKind { General, Harmonic, Anharmonic };

struct CrossRatioClass {
    CycElem value;
    CrossRatioKind kind;
};

CrossRatioKind classify_cross_ratio(const CycElem &j);

// Cross ratio of four pairwise distinct points, all on P^1 or all on one
// line in P^3 (collinearity is checked).
CrossRatioClass cross_ratio(const ProjPoint &p1, const ProjPoint &p2,
                            const ProjPoint &p3, const ProjPoint &p4);

bool on_line(const ProjPoint &p, const ProjLine3 &l);
bool on_plane(const ProjPoint &p, const Plane3 &h);

ProjLine3 line_through(const ProjPoint &p, const ProjPoint &q);
Plane3 plane_through(const ProjLine3 &l, const ProjPoint &p);
ProjPoint meet_line_plane(const ProjLine3 &l, const Plane3 &h);
ProjLine3 meet_planes(const Plane3 &u, const Plane3 &v);
std::optional<ProjPoint> lines_meet(const ProjLine3 &l1, const ProjLine3 &l2);

// The unique line through p meeting the two skew lines a and b.
ProjLine3 transversal_through_point(const ProjPoint &p, const ProjLine3 &a,
                                    const ProjLine3 &b);

// Unique quadric containing three pairwise skew lines, from the kernel of
// the 9x10 system of three sample points per line.
Quadric3 quadric_through_three_skew_lines(const ProjLine3 &l1, const ProjLine3 &l2,
                                          const ProjLine3 &l3);

// Second point of l cap Q given one; root deflation, so no radicals. A
// tangent line returns `known` again.
ProjPoint second_intersection_with_quadric(const ProjLine3 &l, const Quadric3 &q,
                                           const ProjPoint &known);

// The second line meeting all four inputs, besides `known`. n1, n2, n3 must
// be pairwise skew (they span the regulus that is searched); n4 is a pure
// incidence constraint and may meet the others. The root corresponding to
// `known` is deflated, so no radicals are ever taken.
ProjLine3 second_line_meeting_four(const ProjLine3 &n1, const ProjLine3 &n2,
                                   const ProjLine3 &n3, const ProjLine3 &n4,
                                   const ProjLine3 &known);

// Unique projective transformation with src_i -> dst_i for five points in
// general position on each side.
Matrix transform_from_point_correspondence(const std::array<ProjPoint, 5> &src,
                                           const std::array<ProjPoint, 5> &dst);

ProjPoint apply_transform(const Matrix &m, const ProjPoint &p);

} // namespace halfgrids

#endif
