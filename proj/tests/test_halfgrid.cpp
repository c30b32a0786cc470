#include "doctest.h"

#include <numeric>

#include <set>

#include "halfgrids/halfgrid.hpp"

using namespace halfgrids;

namespace {

struct Lcg {
    unsigned long long state;
    explicit Lcg(unsigned long long seed) : state(seed) {}
    long next(long lo, long hi) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + static_cast<long>((state >> 33) % static_cast<unsigned long long>(hi - lo + 1));
    }
};

int points_on(const Config &cfg, const ProjLine3 &l) {
    int c = 0;
    for (const auto &lp : cfg.points)
        if (on_line(lp.pt, l)) ++c;
    return c;
}

Matrix diag4(const CycElem &a, const CycElem &b, const CycElem &c, const CycElem &d) {
    long n = std::max({a.conductor(), b.conductor(), c.conductor(), d.conductor()});
    Matrix m(4, Vec(4, CycElem::zero(n)));
    m[0][0] = a;
    m[1][1] = b;
    m[2][2] = c;
    m[3][3] = d;
    return m;
}

bool in_config(const Config &cfg, const ProjPoint &p) {
    return cfg.label_of(p).has_value();
}

} // namespace

TEST_CASE("standard grid points and lines") {
    Config g = standard_grid(3);
    CHECK(g.conductor == 12);
    CHECK(g.points.size() == 9);
    CHECK(proj_eq(g.point("p[0][0]"), ProjPoint::p3i(1, 1, 1, 1)));
    // p_12 = [1 : u^2 : u : u^3] = [1 : u^2 : u : 1] with u a cube root
    CycElem u = CycElem::root_of_unity(12, 4);
    CHECK(proj_eq(g.point("p[1][2]"),
                  ProjPoint::p3(CycElem::one(12), u * u, u, CycElem::one(12))));

    for (long m : {3L, 4L, 5L}) {
        Config cfg = standard_grid(m);
        CHECK(cfg.points.size() == static_cast<size_t>(m * m));
        // rows and columns hold exactly m points; M_i meets L_j at p_ij
        for (long i = 0; i < m; ++i) {
            const auto &mi = cfg.line("M[" + std::to_string(i) + "]");
            CHECK(points_on(cfg, mi) == m);
            for (long j = 0; j < m; ++j) {
                const auto &lj = cfg.line("L[" + std::to_string(j) + "]");
                auto meet = lines_meet(mi, lj);
                REQUIRE(meet.has_value());
                CHECK(proj_eq(*meet, cfg.point("p[" + std::to_string(i) + "][" +
                                               std::to_string(j) + "]")));
            }
        }
        for (long j = 0; j < m; ++j)
            CHECK(points_on(cfg, cfg.line("L[" + std::to_string(j) + "]")) == m);
        // the transversals meet every column line
        for (long j = 0; j < m; ++j) {
            CHECK(!lines_skew(cfg.line("T1"), cfg.line("L[" + std::to_string(j) + "]")));
            CHECK(!lines_skew(cfg.line("T2"), cfg.line("L[" + std::to_string(j) + "]")));
        }
    }
    CHECK_THROWS_AS(standard_grid(2), std::invalid_argument);
}

TEST_CASE("group action preserves the grid") {
    for (long m : {3L, 4L}) {
        Config cfg = standard_grid(m);
        long n = std::lcm(m, 4L);
        CycElem u = CycElem::root_of_unity(n, n / m);
        Matrix g1 = diag4(CycElem::one(n), CycElem::one(n), u, u);
        Matrix g2 = diag4(CycElem::one(n), u, CycElem::one(n), u);
        for (const auto &lp : cfg.points) {
            CHECK(in_config(cfg, apply_transform(g1, lp.pt)));
            CHECK(in_config(cfg, apply_transform(g2, lp.pt)));
        }
    }
}

TEST_CASE("y sets") {
    auto [y1, y2] = y_sets(4);
    REQUIRE(y1.size() == 4);
    REQUIRE(y2.size() == 4);
    CHECK(proj_eq(y1[0], ProjPoint::p3i(-1, 0, 0, 1)));
    CHECK(proj_eq(y2[0], ProjPoint::p3i(0, -1, 1, 0)));
    // each set is collinear: Y1 on {y = z = 0}, Y2 on {x = w = 0}
    ProjLine3 l1 = meet_planes(Plane3::of(0, 1, 0, 0), Plane3::of(0, 0, 1, 0));
    ProjLine3 l2 = meet_planes(Plane3::of(1, 0, 0, 0), Plane3::of(0, 0, 0, 1));
    for (const auto &p : y1) CHECK(on_line(p, l1));
    for (const auto &p : y2) CHECK(on_line(p, l2));
}

TEST_CASE("standard half grids") {
    Config full4 = standard_halfgrid(4, HalfGridVariant::Full);
    CHECK(full4.points.size() == 24);
    // declared half-grid family: L[0..3], Y1, Y2
    int family = 0;
    for (const auto &ll : full4.lines)
        if (ll.label != "T1" && ll.label != "T2") {
            ++family;
            CHECK(points_on(full4, ll.line) >= 4);
        }
    CHECK(family == 6);

    Config y13 = standard_halfgrid(3, HalfGridVariant::Y1);
    CHECK(y13.points.size() == 12);
    int family3 = 0;
    for (const auto &ll : y13.lines)
        if (ll.label != "T1" && ll.label != "T2") ++family3;
    CHECK(family3 == 4);

    Config y15 = standard_halfgrid(5, HalfGridVariant::Y1);
    CHECK(y15.points.size() == 30);
    int family5 = 0;
    for (const auto &ll : y15.lines)
        if (ll.label != "T1" && ll.label != "T2") ++family5;
    CHECK(family5 == 6);

    CHECK(halfgrid_variant_supported(4, HalfGridVariant::Full));
    CHECK(!halfgrid_variant_supported(5, HalfGridVariant::Full));
    CHECK(halfgrid_variant_supported(5, HalfGridVariant::Y2));
}

TEST_CASE("f4 root model") {
    Config f4 = f4_root_model();
    CHECK(f4.points.size() == 24);
    CHECK(in_config(f4, ProjPoint::p3i(1, 0, 0, 0)));
    CHECK(in_config(f4, ProjPoint::p3i(1, 1, 0, 0)));
    // the scan finds 18 lines with >= 4 points; among them sits a unique
    // 6-line skew family covering everything (the half-grid family)
    auto big = incidence_lines(f4, 4);
    CHECK(big.size() == 18);
    auto st = detect_structure(f4, 4, 6);
    CHECK(st.kind == StructureKind::HalfGrid);
    REQUIRE(st.half_grid.has_value());
    const auto &fam = st.half_grid->lines;
    REQUIRE(fam.size() == 6);
    for (size_t i = 0; i < fam.size(); ++i)
        for (size_t j = i + 1; j < fam.size(); ++j)
            CHECK(lines_skew(fam[i].line, fam[j].line));
}

TEST_CASE("incidence lines") {
    CHECK(incidence_lines(standard_grid(3), 3).size() == 6);
    // rows, columns, the Y lines and eight mixed diagonals all reach 4 points
    CHECK(incidence_lines(standard_halfgrid(4, HalfGridVariant::Full), 4).size() == 18);

    Config tiny;
    tiny.conductor = 1;
    tiny.add_point("a", ProjPoint::p3i(1, 0, 0, 0));
    tiny.add_point("b", ProjPoint::p3i(0, 1, 0, 0));
    CHECK(incidence_lines(tiny, 3).empty());
    CHECK(incidence_lines(tiny, 2).size() == 1);
}

TEST_CASE("structure detection") {
    auto grid = detect_structure(standard_grid(4), 4, 4);
    CHECK(grid.kind == StructureKind::Grid);
    REQUIRE(grid.grid.has_value());
    CHECK(grid.grid->a_lines.size() == 4);
    CHECK(grid.grid->b_lines.size() == 4);
    // same-size families must be disjoint
    for (const auto &a : grid.grid->a_lines)
        for (const auto &b : grid.grid->b_lines) CHECK(!proj_eq(a.line, b.line));

    auto half = detect_structure(standard_halfgrid(4, HalfGridVariant::Full), 4, 6);
    CHECK(half.kind == StructureKind::HalfGrid);
    REQUIRE(half.half_grid.has_value());
    CHECK(half.half_grid->lines.size() == 6);

    auto half3 = detect_structure(standard_halfgrid(3, HalfGridVariant::Y1), 3, 4);
    CHECK(half3.kind == StructureKind::HalfGrid);

    Lcg rng(7);
    Config random;
    random.conductor = 1;
    for (int i = 0; i < 24; ++i)
        random.add_point("r" + std::to_string(i),
                         ProjPoint::p3i(rng.next(1, 40), rng.next(1, 40), rng.next(1, 40),
                                        rng.next(1, 40)));
    CHECK(detect_structure(random, 4, 6).kind == StructureKind::Neither);

    CHECK_THROWS_AS(detect_structure(random, 5, 6), std::invalid_argument);
}

TEST_CASE("three line grid check") {
    Config full4 = standard_halfgrid(4, HalfGridVariant::Full);
    auto check1 = three_line_grid_check(full4, {full4.line("L[0]"), full4.line("Y1"),
                                                full4.line("Y2")});
    CHECK(check1.ok);
    CHECK(check1.transversals.size() == 4);
    auto check2 = three_line_grid_check(full4, {full4.line("L[1]"), full4.line("L[2]"),
                                                full4.line("L[3]")});
    CHECK(check2.ok);
    CHECK(check2.transversals.size() == 4);

    Config grid4 = standard_grid(4);
    auto check3 = three_line_grid_check(grid4, {grid4.line("L[0]"), grid4.line("L[1]"),
                                                grid4.line("L[2]")});
    CHECK(check3.ok);

    // perturb one point: the transversal through it misses
    Config broken = full4;
    for (auto &lp : broken.points)
        if (lp.label == "p[0][0]") lp.pt = ProjPoint::p3i(1, 1, 1, 3);
    auto check4 = three_line_grid_check(broken, {broken.line("L[0]"), broken.line("Y1"),
                                                 broken.line("Y2")});
    CHECK(!check4.ok);
}

TEST_CASE("projective equivalence search") {
    Config f4 = f4_root_model();
    auto self = find_projective_equivalence(f4, f4);
    REQUIRE(self.equivalent);
    CHECK(self.point_map.size() == 24);

    // image under a random invertible matrix is recovered
    Matrix t = {{CycElem::rational(Rat(1)), CycElem::rational(Rat(2)), CycElem::zero(1),
                 CycElem::rational(Rat(1))},
                {CycElem::zero(1), CycElem::rational(Rat(1)), CycElem::rational(Rat(3)),
                 CycElem::zero(1)},
                {CycElem::rational(Rat(1)), CycElem::zero(1), CycElem::rational(Rat(1)),
                 CycElem::rational(Rat(1))},
                {CycElem::zero(1), CycElem::zero(1), CycElem::zero(1),
                 CycElem::rational(Rat(1))}};
    REQUIRE(!linalg::determinant(t).is_zero());
    Config moved;
    moved.conductor = 1;
    for (const auto &lp : f4.points) moved.add_point(lp.label, apply_transform(t, lp.pt));
    auto rec = find_projective_equivalence(f4, moved);
    REQUIRE(rec.equivalent);
    for (const auto &lp : f4.points)
        CHECK(proj_eq(apply_transform(rec.transform, lp.pt), moved.point(lp.label)));

    // different sizes are never equivalent
    Config small;
    small.conductor = 1;
    small.add_point("x", ProjPoint::p3i(1, 0, 0, 0));
    CHECK(!find_projective_equivalence(f4, small).equivalent);
}
