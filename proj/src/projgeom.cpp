#include "halfgrids/projgeom.hpp"

#include <numeric>
#include <stdexcept>

namespace halfgrids {

namespace {

bool all_zero(const Vec &v) {
    for (const auto &x : v)
        if (!x.is_zero()) return false;
    return true;
}

// Plane through three points: h_k = coefficient of y_k in det[a; b; c; y].
Vec plane_from_three_points(const Vec &a, const Vec &b, const Vec &c) {
    auto det3 = [](const CycElem &a0, const CycElem &a1, const CycElem &a2,
                   const CycElem &b0, const CycElem &b1, const CycElem &b2,
                   const CycElem &c0, const CycElem &c1, const CycElem &c2) {
        return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) +
               a2 * (b0 * c1 - b1 * c0);
    };
    Vec h;
    h.reserve(4);
    for (int k = 0; k < 4; ++k) {
        std::array<int, 3> idx{};
        int t = 0;
        for (int j = 0; j < 4; ++j)
            if (j != k) idx[t++] = j;
        CycElem m = det3(a[idx[0]], a[idx[1]], a[idx[2]],
                         b[idx[0]], b[idx[1]], b[idx[2]],
                         c[idx[0]], c[idx[1]], c[idx[2]]);
        // cofactor sign of column k in the 4x4 expansion along the last row
        if ((3 + k) % 2 == 1) m = -m;
        h.push_back(std::move(m));
    }
    return h;
}

// Pluecker vector of the intersection of two planes.
std::array<CycElem, 6> pluecker_from_planes(const Vec &u, const Vec &v) {
    auto d = [&](int i, int j) { return u[i] * v[j] - u[j] * v[i]; };
    // primal (p01,p02,p03,p12,p13,p23) = (d23,-d13,d12,d03,-d02,d01)
    return {d(2, 3), -d(1, 3), d(1, 2), d(0, 3), -d(0, 2), d(0, 1)};
}

std::array<CycElem, 6> pluecker_from_points(const Vec &a, const Vec &b) {
    auto p = [&](int i, int j) { return a[i] * b[j] - a[j] * b[i]; };
    return {p(0, 1), p(0, 2), p(0, 3), p(1, 2), p(1, 3), p(2, 3)};
}

CycElem pairing(const std::array<CycElem, 6> &l, const std::array<CycElem, 6> &m) {
    return l[0] * m[5] - l[1] * m[4] + l[2] * m[3] + l[3] * m[2] - l[4] * m[1] +
           l[5] * m[0];
}

} // namespace

ProjPoint ProjPoint::p1(CycElem x, CycElem y) {
    ProjPoint p{1, {std::move(x), std::move(y)}};
    if (all_zero(p.v)) throw std::invalid_argument("ProjPoint: zero vector");
    return p;
}

ProjPoint ProjPoint::p3(CycElem x, CycElem y, CycElem z, CycElem w) {
    ProjPoint p{3, {std::move(x), std::move(y), std::move(z), std::move(w)}};
    if (all_zero(p.v)) throw std::invalid_argument("ProjPoint: zero vector");
    return p;
}

ProjPoint ProjPoint::p3i(long x, long y, long z, long w) {
    return p3(CycElem::rational(Rat(x)), CycElem::rational(Rat(y)),
              CycElem::rational(Rat(z)), CycElem::rational(Rat(w)));
}

ProjPoint ProjPoint::from_coords(Vec coords) {
    if (coords.size() < 2 || coords.size() > 4)
        throw std::invalid_argument("ProjPoint: expected 2 to 4 coordinates");
    ProjPoint p{static_cast<int>(coords.size()) - 1, std::move(coords)};
    if (all_zero(p.v)) throw std::invalid_argument("ProjPoint: zero vector");
    return p;
}

ProjPoint ProjPoint::canonical() const {
    for (const auto &x : v) {
        if (!x.is_zero()) {
            CycElem inv = x.inv();
            ProjPoint p(*this);
            for (auto &y : p.v) y = y * inv;
            return p;
        }
    }
    throw std::logic_error("ProjPoint::canonical: zero vector");
}

bool proj_eq(const Vec &a, const Vec &b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

bool proj_eq(const ProjPoint &a, const ProjPoint &b) {
    return a.dim == b.dim && proj_eq(a.v, b.v);
}

Plane3 Plane3::of(long a, long b, long c, long d) {
    return from_coeffs({CycElem::rational(Rat(a)), CycElem::rational(Rat(b)),
                        CycElem::rational(Rat(c)), CycElem::rational(Rat(d))});
}

Plane3 Plane3::from_coeffs(Vec coeffs) {
    if (coeffs.size() != 4) throw std::invalid_argument("Plane3: expected 4 coefficients");
    if (all_zero(coeffs)) throw std::invalid_argument("Plane3: zero vector");
    return Plane3{std::move(coeffs)};
}

CycElem dot(const Vec &a, const Vec &b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    CycElem s = CycElem::zero(1);
    for (size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
    return s;
}

ProjLine3 ProjLine3::through(const ProjPoint &p, const ProjPoint &q) {
    if (p.dim != 3 || q.dim != 3)
        throw std::invalid_argument("ProjLine3: points must lie in P^3");
    if (proj_eq(p, q)) throw std::invalid_argument("ProjLine3: coincident points");
    ProjLine3 l{pluecker_from_points(p.v, q.v), p, q, Plane3{}, Plane3{}};
    auto planes = linalg::kernel(Matrix{p.v, q.v});
    if (planes.size() != 2) throw std::logic_error("ProjLine3: bad dual form");
    l.h1 = Plane3::from_coeffs(planes[0]);
    l.h2 = Plane3::from_coeffs(planes[1]);
    return l;
}

ProjLine3 ProjLine3::from_planes(const Plane3 &u, const Plane3 &v) {
    if (proj_eq(u.h, v.h)) throw std::invalid_argument("ProjLine3: coincident planes");
    auto pts = linalg::kernel(Matrix{u.h, v.h});
    if (pts.size() != 2) throw std::logic_error("ProjLine3: bad plane pair");
    ProjLine3 l = through(ProjPoint::from_coords(pts[0]), ProjPoint::from_coords(pts[1]));
    l.h1 = u;
    l.h2 = v;
    return l;
}

bool proj_eq(const ProjLine3 &a, const ProjLine3 &b) {
    Vec u(a.pluecker.begin(), a.pluecker.end());
    Vec v(b.pluecker.begin(), b.pluecker.end());
    return proj_eq(u, v);
}

CycElem pluecker_pairing(const ProjLine3 &l, const ProjLine3 &m) {
    return pairing(l.pluecker, m.pluecker);
}

bool lines_skew(const ProjLine3 &l, const ProjLine3 &m) {
    return !pluecker_pairing(l, m).is_zero();
}

CycElem Quadric3::eval(const ProjPoint &p) const {
    return dot(p.v, linalg::apply(sym, p.v));
}

bool Quadric3::contains_line(const ProjLine3 &l) const {
    ProjPoint mid = ProjPoint::from_coords(
        {l.a.v[0] + l.b.v[0], l.a.v[1] + l.b.v[1], l.a.v[2] + l.b.v[2], l.a.v[3] + l.b.v[3]});
    return contains(l.a) && contains(l.b) && contains(mid);
}

CrossRatioKind classify_cross_ratio(const CycElem &j) {
    const CycElem minus_one = CycElem::rational(Rat(-1));
    const CycElem half = CycElem::rational(Rat(1, 2));
    const CycElem two = CycElem::rational(Rat(2));
    if (j == minus_one || j == half || j == two) return CrossRatioKind::Harmonic;
    CycElem z6 = CycElem::root_of_unity(6);
    if (j == z6 || j == CycElem::root_of_unity(6, 5)) return CrossRatioKind::Anharmonic;
    return CrossRatioKind::General;
}

namespace {

CycElem cross_ratio_p1(const Vec &p1, const Vec &p2, const Vec &p3, const Vec &p4) {
    auto m = [](const Vec &a, const Vec &b) { return a[0] * b[1] - a[1] * b[0]; };
    CycElem num = m(p1, p3) * m(p2, p4);
    CycElem den = m(p1, p4) * m(p2, p3);
    if (den.is_zero()) throw std::invalid_argument("cross_ratio: coincident points");
    return num / den;
}

} // namespace

CrossRatioClass cross_ratio(const ProjPoint &p1, const ProjPoint &p2,
                            const ProjPoint &p3, const ProjPoint &p4) {
    const ProjPoint *pts[4] = {&p1, &p2, &p3, &p4};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (proj_eq(*pts[i], *pts[j]))
                throw std::invalid_argument("cross_ratio: points must be pairwise distinct");
    CycElem j;
    if (p1.dim == 1) {
        j = cross_ratio_p1(p1.v, p2.v, p3.v, p4.v);
    } else {
        // Express p3, p4 in the basis of the representatives of p1, p2; the
        // result does not depend on the chosen representatives.
        Matrix basis(4, Vec(2, CycElem::zero(1)));
        for (int i = 0; i < 4; ++i) {
            basis[i][0] = p1.v[i];
            basis[i][1] = p2.v[i];
        }
        auto c3 = linalg::solve(basis, p3.v);
        auto c4 = linalg::solve(basis, p4.v);
        if (!c3 || !c4) throw std::invalid_argument("cross_ratio: points not collinear");
        j = cross_ratio_p1({CycElem::one(), CycElem::zero()},
                           {CycElem::zero(), CycElem::one()}, *c3, *c4);
    }
    return CrossRatioClass{j, classify_cross_ratio(j)};
}

bool on_plane(const ProjPoint &p, const Plane3 &h) { return dot(p.v, h.h).is_zero(); }

bool on_line(const ProjPoint &p, const ProjLine3 &l) {
    return on_plane(p, l.h1) && on_plane(p, l.h2);
}

ProjLine3 line_through(const ProjPoint &p, const ProjPoint &q) {
    return ProjLine3::through(p, q);
}

Plane3 plane_through(const ProjLine3 &l, const ProjPoint &p) {
    if (on_line(p, l)) throw std::invalid_argument("plane_through: point lies on the line");
    Vec h = plane_from_three_points(l.a.v, l.b.v, p.v);
    if (all_zero(h)) throw std::logic_error("plane_through: degenerate span");
    return Plane3::from_coeffs(std::move(h));
}

ProjPoint meet_line_plane(const ProjLine3 &l, const Plane3 &h) {
    CycElem alpha = dot(h.h, l.a.v);
    CycElem beta = dot(h.h, l.b.v);
    if (alpha.is_zero() && beta.is_zero())
        throw std::invalid_argument("meet_line_plane: line lies in the plane");
    Vec pt(4, CycElem::zero(1));
    for (int i = 0; i < 4; ++i) pt[i] = alpha * l.b.v[i] - beta * l.a.v[i];
    return ProjPoint::from_coords(std::move(pt));
}

ProjLine3 meet_planes(const Plane3 &u, const Plane3 &v) {
    return ProjLine3::from_planes(u, v);
}

std::optional<ProjPoint> lines_meet(const ProjLine3 &l1, const ProjLine3 &l2) {
    if (proj_eq(l1, l2)) throw std::invalid_argument("lines_meet: identical lines");
    if (!pluecker_pairing(l1, l2).is_zero()) return std::nullopt;
    // Some plane of l2 misses l1; cut l1 with it.
    for (const Plane3 *h : {&l2.h1, &l2.h2}) {
        if (!(on_plane(l1.a, *h) && on_plane(l1.b, *h)))
            return meet_line_plane(l1, *h);
    }
    throw std::logic_error("lines_meet: inconsistent dual forms");
}

ProjLine3 transversal_through_point(const ProjPoint &p, const ProjLine3 &a,
                                    const ProjLine3 &b) {
    if (!lines_skew(a, b))
        throw std::invalid_argument("transversal_through_point: lines must be skew");
    if (on_line(p, a) || on_line(p, b))
        throw std::invalid_argument("transversal_through_point: point lies on an input line");
    Plane3 ha = plane_through(a, p);
    Plane3 hb = plane_through(b, p);
    if (proj_eq(ha.h, hb.h))
        throw std::invalid_argument("transversal_through_point: degenerate position");
    ProjLine3 t = meet_planes(ha, hb);
    if (!on_line(p, t)) throw std::logic_error("transversal_through_point: misses the point");
    return t;
}

namespace {

Vec quadric_monomials(const Vec &p) {
    // x^2, xy, xz, xw, y^2, yz, yw, z^2, zw, w^2
    Vec row;
    row.reserve(10);
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) row.push_back(p[i] * p[j]);
    return row;
}

} // namespace

Quadric3 quadric_through_three_skew_lines(const ProjLine3 &l1, const ProjLine3 &l2,
                                          const ProjLine3 &l3) {
    const ProjLine3 *ls[3] = {&l1, &l2, &l3};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!lines_skew(*ls[i], *ls[j]))
                throw std::invalid_argument("quadric_through_three_skew_lines: lines not skew");
    Matrix m;
    for (const ProjLine3 *l : ls) {
        Vec mid(4, CycElem::zero(1));
        for (int i = 0; i < 4; ++i) mid[i] = l->a.v[i] + l->b.v[i];
        m.push_back(quadric_monomials(l->a.v));
        m.push_back(quadric_monomials(l->b.v));
        m.push_back(quadric_monomials(mid));
    }
    auto ker = linalg::kernel(m);
    if (ker.size() != 1)
        throw std::invalid_argument("quadric_through_three_skew_lines: quadric not unique");
    const Vec &c = ker[0];
    Matrix sym(4, Vec(4, CycElem::zero(1)));
    int t = 0;
    CycElem half = CycElem::rational(Rat(1, 2));
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            if (i == j) {
                sym[i][i] = c[t];
            } else {
                sym[i][j] = c[t] * half;
                sym[j][i] = sym[i][j];
            }
            ++t;
        }
    return Quadric3{std::move(sym)};
}

ProjPoint second_intersection_with_quadric(const ProjLine3 &l, const Quadric3 &q,
                                           const ProjPoint &known) {
    if (!on_line(known, l))
        throw std::invalid_argument("second_intersection_with_quadric: known not on line");
    if (!q.contains(known))
        throw std::invalid_argument("second_intersection_with_quadric: known not on quadric");
    const ProjPoint &other = proj_eq(known, l.a) ? l.b : l.a;
    // q(known + t*other) = 2t known^T Q other + t^2 other^T Q other
    Vec q_other = linalg::apply(q.sym, other.v);
    CycElem alpha = dot(other.v, q_other);
    CycElem beta = dot(known.v, q_other) * CycElem::rational(Rat(2));
    if (alpha.is_zero() && beta.is_zero())
        throw std::invalid_argument("second_intersection_with_quadric: line lies in quadric");
    if (alpha.is_zero()) return other; // second root at t = infinity
    if (beta.is_zero()) return known;  // tangent: double root at known
    CycElem t = -(beta / alpha);
    Vec pt(4, CycElem::zero(1));
    for (int i = 0; i < 4; ++i) pt[i] = known.v[i] + t * other.v[i];
    return ProjPoint::from_coords(std::move(pt));
}

ProjLine3 second_line_meeting_four(const ProjLine3 &n1, const ProjLine3 &n2,
                                   const ProjLine3 &n3, const ProjLine3 &n4,
                                   const ProjLine3 &known) {
    const ProjLine3 *ns[4] = {&n1, &n2, &n3, &n4};
    // Only the first three lines sweep out the regulus; they must be pairwise
    // skew. The fourth is a pure incidence constraint and may touch the others.
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!lines_skew(*ns[i], *ns[j]))
                throw std::invalid_argument("second_line_meeting_four: regulus lines not skew");
    for (int i = 0; i < 4; ++i)
        if (!pluecker_pairing(*ns[i], known).is_zero())
            throw std::invalid_argument("second_line_meeting_four: known misses an input line");
    // Points of n1 are x(t) = a + t b (t = infinity is b). Meeting n4 with
    // the transversal of n2, n3 through x(t) is a quadratic psi(t) = 0; the
    // fixed polynomial formulas below keep psi honest, so three samples
    // interpolate it exactly.
    auto psi = [&](const CycElem &t) {
        Vec x(4, CycElem::zero(1));
        for (int i = 0; i < 4; ++i) x[i] = n1.a.v[i] + t * n1.b.v[i];
        Vec h2 = plane_from_three_points(n2.a.v, n2.b.v, x);
        Vec h3 = plane_from_three_points(n3.a.v, n3.b.v, x);
        return pairing(pluecker_from_planes(h2, h3), n4.pluecker);
    };
    CycElem c0 = psi(CycElem::zero(1));
    CycElem p1v = psi(CycElem::one(1));
    CycElem p2v = psi(CycElem::rational(Rat(2)));
    CycElem c2 = (p2v - CycElem::rational(Rat(2)) * p1v + c0) * CycElem::rational(Rat(1, 2));
    CycElem c1 = p1v - c0 - c2;
    // Root parameter of the known line on n1.
    auto p_star = lines_meet(known, n1);
    if (!p_star) throw std::logic_error("second_line_meeting_four: known skew to n1");
    Matrix basis(4, Vec(2, CycElem::zero(1)));
    for (int i = 0; i < 4; ++i) {
        basis[i][0] = n1.a.v[i];
        basis[i][1] = n1.b.v[i];
    }
    auto coords = linalg::solve(basis, p_star->v);
    if (!coords) throw std::logic_error("second_line_meeting_four: meet point off n1");
    bool known_at_infinity = (*coords)[0].is_zero();
    std::optional<CycElem> t_other;
    if (known_at_infinity) {
        if (!c2.is_zero())
            throw std::logic_error("second_line_meeting_four: infinity is not a root");
        if (c1.is_zero())
            throw std::invalid_argument("second_line_meeting_four: degenerate pencil");
        t_other = -(c0 / c1);
    } else {
        CycElem t_star = (*coords)[1] / (*coords)[0];
        CycElem at_star = c2 * t_star * t_star + c1 * t_star + c0;
        if (!at_star.is_zero())
            throw std::logic_error("second_line_meeting_four: known parameter is not a root");
        if (c2.is_zero()) {
            if (c1.is_zero())
                throw std::invalid_argument("second_line_meeting_four: degenerate pencil");
            t_other = std::nullopt; // second root at infinity
        } else {
            CycElem other = -(c1 / c2) - t_star;
            if (other == t_star)
                throw std::invalid_argument("second_line_meeting_four: tangency at known root");
            t_other = other;
        }
    }
    ProjPoint p = t_other
                      ? ProjPoint::from_coords({n1.a.v[0] + *t_other * n1.b.v[0],
                                                n1.a.v[1] + *t_other * n1.b.v[1],
                                                n1.a.v[2] + *t_other * n1.b.v[2],
                                                n1.a.v[3] + *t_other * n1.b.v[3]})
                      : n1.b;
    ProjLine3 result = transversal_through_point(p, n2, n3);
    if (!pluecker_pairing(result, n4).is_zero())
        throw std::logic_error("second_line_meeting_four: result misses the fourth line");
    if (proj_eq(result, known))
        throw std::invalid_argument("second_line_meeting_four: tangency at known root");
    return result;
}

Matrix transform_from_point_correspondence(const std::array<ProjPoint, 5> &src,
                                           const std::array<ProjPoint, 5> &dst) {
    auto frame_matrix = [](const std::array<ProjPoint, 5> &pts) {
        Matrix cols(4, Vec(4, CycElem::zero(1)));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) cols[i][j] = pts[j].v[i];
        auto lambda = linalg::solve(cols, pts[4].v);
        if (!lambda) throw std::invalid_argument("transform: five points not in general position");
        for (int j = 0; j < 4; ++j)
            if ((*lambda)[j].is_zero())
                throw std::invalid_argument("transform: five points not in general position");
        Matrix m(4, Vec(4, CycElem::zero(1)));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m[i][j] = (*lambda)[j] * pts[j].v[i];
        return m;
    };
    Matrix ms = frame_matrix(src);
    Matrix md = frame_matrix(dst);
    return linalg::multiply(md, linalg::inverse(ms));
}

ProjPoint apply_transform(const Matrix &m, const ProjPoint &p) {
    return ProjPoint::from_coords(linalg::apply(m, p.v));
}

} // namespace halfgrids
