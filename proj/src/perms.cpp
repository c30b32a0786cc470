#include "halfgrids/perms.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace halfgrids {

PermS4 PermS4::identity() { return PermS4{{1, 2, 3, 4}}; }

PermS4 PermS4::of(int a, int b, int c, int d) {
    PermS4 s{{a, b, c, d}};
    std::array<int, 4> sorted = s.img;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 4>{1, 2, 3, 4})
        throw std::invalid_argument("PermS4: not a permutation of {1,2,3,4}");
    return s;
}

PermS4 PermS4::compose(const PermS4 &inner) const {
    PermS4 r{};
    for (int k = 1; k <= 4; ++k) r.img[k - 1] = (*this)(inner(k));
    return r;
}

PermS4 PermS4::inverse() const {
    PermS4 r{};
    for (int k = 1; k <= 4; ++k) r.img[(*this)(k) - 1] = k;
    return r;
}

std::vector<int> perm_fixed_points(const PermS4 &s) {
    std::vector<int> out;
    for (int k = 1; k <= 4; ++k)
        if (s(k) == k) out.push_back(k);
    return out;
}

bool is_involution(const PermS4 &s) {
    return !(s == PermS4::identity()) && s.compose(s) == PermS4::identity();
}

std::vector<PermS4> all_permutations_s4() {
    std::array<int, 4> v = {1, 2, 3, 4};
    std::vector<PermS4> out;
    do {
        out.push_back(PermS4{{v[0], v[1], v[2], v[3]}});
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

ProjPoint Mobius::apply(const ProjPoint &p) const {
    if (p.dim != 1) throw std::invalid_argument("Mobius: expects a point of P^1");
    return ProjPoint::from_coords(linalg::apply(mat, p.v));
}

bool mobius_eq(const Mobius &f, const Mobius &g) {
    // f.mat = lambda g.mat for some nonzero lambda: all 2x2 "minors" of the
    // flattened 2x4 coefficient matrix vanish.
    Vec a = {f.mat[0][0], f.mat[0][1], f.mat[1][0], f.mat[1][1]};
    Vec b = {g.mat[0][0], g.mat[0][1], g.mat[1][0], g.mat[1][1]};
    return proj_eq(a, b);
}

std::vector<PermS4> stabilizer_permutations(const std::array<ProjPoint, 4> &p) {
    CycElem base = cross_ratio(p[0], p[1], p[2], p[3]).value;
    std::vector<PermS4> out;
    for (const auto &s : all_permutations_s4()) {
        CycElem j = cross_ratio(p[s(1) - 1], p[s(2) - 1], p[s(3) - 1], p[s(4) - 1]).value;
        if (j == base) out.push_back(s);
    }
    return out;
}

Mobius mobius_from_permutation(const std::array<ProjPoint, 4> &p, const PermS4 &sigma) {
    // Unknowns (a, b, c, d); each correspondence [x:y] -> [X:Y] contributes
    // (a x + b y) Y - (c x + d y) X = 0.
    Matrix m;
    for (int i = 0; i < 3; ++i) {
        const Vec &s = p[i].v;
        const Vec &t = p[sigma(i + 1) - 1].v;
        m.push_back({s[0] * t[1], s[1] * t[1], -(s[0] * t[0]), -(s[1] * t[0])});
    }
    auto ker = linalg::kernel(m);
    if (ker.size() != 1)
        throw std::invalid_argument("mobius_from_permutation: correspondences degenerate");
    Mobius f;
    f.mat = {{ker[0][0], ker[0][1]}, {ker[0][2], ker[0][3]}};
    if (linalg::determinant(f.mat).is_zero())
        throw std::invalid_argument("mobius_from_permutation: singular map");
    if (!proj_eq(f.apply(p[3]), p[sigma(4) - 1]))
        throw std::invalid_argument(
            "mobius_from_permutation: permutation does not preserve the cross ratio");
    return f;
}

FixedPointReport mobius_fixed_points(const Mobius &f, long conductor) {
    CycElem al = f.mat[0][0], be = f.mat[0][1], ga = f.mat[1][0], de = f.mat[1][1];
    if (be.is_zero() && ga.is_zero() && al == de)
        throw std::invalid_argument("mobius_fixed_points: identity map");
    long n = conductor;
    if (n == 0) {
        n = 4;
        for (const auto &row : f.mat)
            for (const auto &e : row) n = std::lcm(n, e.conductor());
    }
    FixedPointReport rep;
    // Fixed points in the chart [1:t] solve be t^2 + (al - de) t - ga = 0.
    if (be.is_zero()) {
        // [0:1] is fixed; the remaining equation is linear.
        ProjPoint inf = ProjPoint::p1(CycElem::zero(n), CycElem::one(n));
        rep.kind = FixedPointReport::Kind::InField;
        if (al == de)
            rep.points = {inf, inf}; // parabolic: [0:1] doubled
        else
            rep.points = {inf, ProjPoint::p1(CycElem::one(n), ga / (al - de))};
        return rep;
    }
    CycElem center = (de - al) / (CycElem::rational(Rat(2)) * be);
    CycElem disc = (al - de) * (al - de) + CycElem::rational(Rat(4)) * be * ga;
    CycElem radicand = disc / (CycElem::rational(Rat(4)) * be * be);
    if (radicand.is_zero()) {
        ProjPoint fix = ProjPoint::p1(CycElem::one(n), embed(center, std::lcm(n, center.conductor())));
        rep.kind = FixedPointReport::Kind::InField;
        rep.points = {fix, fix};
        return rep;
    }
    std::optional<CycElem> root;
    if (auto r = radicand.as_rational()) root = sqrt_in_field(*r, n);
    if (root) {
        long nn = std::lcm(n, std::lcm(center.conductor(), root->conductor()));
        CycElem c = embed(center, nn), a = embed(*root, nn);
        rep.kind = FixedPointReport::Kind::InField;
        rep.points = {ProjPoint::p1(CycElem::one(nn), c + a),
                      ProjPoint::p1(CycElem::one(nn), c - a)};
    } else {
        rep.kind = FixedPointReport::Kind::Symbolic;
        rep.center = center;
        rep.radicand = radicand;
    }
    return rep;
}

std::vector<SigmaGroup> admissible_sigma_sets(const CycElem &q) {
    if (q.is_zero() || q == CycElem::one(q.conductor()))
        throw std::invalid_argument("admissible_sigma_sets: q must differ from 0 and 1");
    long n = q.conductor();
    std::array<ProjPoint, 4> pts = {
        ProjPoint::p1(CycElem::one(n), CycElem::zero(n)),
        ProjPoint::p1(CycElem::zero(n), CycElem::one(n)),
        ProjPoint::p1(CycElem::one(n), CycElem::one(n)),
        ProjPoint::p1(CycElem::one(n), q)};
    // Fixed-point-free members of the stabilizer, keyed by the normalized
    // coefficient triple of the Moebius fixed-point quadratic.
    struct Entry {
        PermS4 sigma;
        Mobius map;
        std::array<CycElem, 3> quadratic;
    };
    std::vector<Entry> entries;
    for (const auto &s : stabilizer_permutations(pts)) {
        if (!perm_fixed_points(s).empty()) continue;
        Mobius f = mobius_from_permutation(pts, s);
        std::array<CycElem, 3> quad = {f.mat[0][1], f.mat[0][0] - f.mat[1][1], -f.mat[1][0]};
        CycElem scale = CycElem::one(1);
        for (const auto &c : quad)
            if (!c.is_zero()) {
                scale = c.inv();
                break;
            }
        for (auto &c : quad) c = c * scale;
        entries.push_back({s, std::move(f), std::move(quad)});
    }
    std::vector<SigmaGroup> groups;
    std::vector<bool> taken(entries.size(), false);
    for (size_t i = 0; i < entries.size(); ++i) {
        if (taken[i]) continue;
        std::vector<size_t> members = {i};
        for (size_t j = i + 1; j < entries.size(); ++j)
            if (!taken[j] && entries[j].quadratic == entries[i].quadratic) {
                members.push_back(j);
                taken[j] = true;
            }
        if (members.size() < 2) continue;
        // Column distinctness: sigma(k) pairwise different for every k.
        bool columns_ok = true;
        for (size_t x = 0; x < members.size() && columns_ok; ++x)
            for (size_t y = x + 1; y < members.size() && columns_ok; ++y)
                for (int k = 1; k <= 4; ++k)
                    if (entries[members[x]].sigma(k) == entries[members[y]].sigma(k)) {
                        columns_ok = false;
                        break;
                    }
        if (!columns_ok) continue;
        if (members.size() >= 3) {
            bool has_non_involution = false;
            for (size_t m : members)
                if (!is_involution(entries[m].sigma)) has_non_involution = true;
            if (!has_non_involution) continue;
        }
        SigmaGroup g;
        for (size_t m : members) g.perms.push_back(entries[m].sigma);
        std::sort(g.perms.begin(), g.perms.end());
        g.quadratic = entries[i].quadratic;
        g.fixed_points = mobius_fixed_points(entries[i].map, std::lcm(4L, n));
        groups.push_back(std::move(g));
    }
    return groups;
}

PermS4 sigma_from_external_line(const Config &grid, int i, const ProjLine3 &l) {
    if (i < 2 || i > 4)
        throw std::invalid_argument("sigma_from_external_line: line index must be 2, 3 or 4");
    const ProjLine3 &l1 = grid.line("L[1]");
    Quadric3 q = quadric_through_three_skew_lines(grid.line("L[1]"), grid.line("L[2]"),
                                                  grid.line("L[3]"));
    if (q.contains_line(l))
        throw std::invalid_argument("sigma_from_external_line: line lies on the grid quadric");
    if (!lines_skew(l, l1))
        throw std::invalid_argument("sigma_from_external_line: line meets L[1]");
    std::array<int, 4> img{};
    std::array<bool, 4> hit{};
    for (int j = 1; j <= 4; ++j) {
        const ProjPoint &p =
            grid.point("P[" + std::to_string(i) + "][" + std::to_string(j) + "]");
        ProjLine3 t = transversal_through_point(p, l1, l);
        auto meet = lines_meet(t, l1);
        if (!meet)
            throw std::invalid_argument("sigma_from_external_line: transversal misses L[1]");
        int k = 0;
        for (int c = 1; c <= 4; ++c)
            if (proj_eq(*meet, grid.point("P[1][" + std::to_string(c) + "]"))) k = c;
        if (k == 0)
            throw std::invalid_argument(
                "sigma_from_external_line: transversal hits L[1] off the labeled points");
        img[j - 1] = k;
        if (hit[k - 1])
            throw std::invalid_argument("sigma_from_external_line: assignment not bijective");
        hit[k - 1] = true;
    }
    return PermS4{{img[0], img[1], img[2], img[3]}};
}

} // namespace halfgrids
