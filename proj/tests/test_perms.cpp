#include "doctest.h"

#include <algorithm>

#include "halfgrids/perms.hpp"

using namespace halfgrids;

namespace {

std::array<ProjPoint, 4> normalized_quadruple(const CycElem &q) {
    long n = q.conductor();
    return {ProjPoint::p1(CycElem::one(n), CycElem::zero(n)),
            ProjPoint::p1(CycElem::zero(n), CycElem::one(n)),
            ProjPoint::p1(CycElem::one(n), CycElem::one(n)),
            ProjPoint::p1(CycElem::one(n), q)};
}

Mobius mobius_i(long a, long b, long c, long d) {
    Mobius f;
    f.mat = {{CycElem::rational(Rat(a)), CycElem::rational(Rat(b))},
             {CycElem::rational(Rat(c)), CycElem::rational(Rat(d))}};
    return f;
}

bool contains(const std::vector<PermS4> &v, const PermS4 &s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

// [x : a + b*i] over conductor 4.
ProjPoint p1_gauss(long x, long a, long b) {
    return ProjPoint::p1(CycElem::rational(Rat(x), 4), CycElem(4, {Rat(a), Rat(b)}));
}

} // namespace

TEST_CASE("permutation combinatorics") {
    CHECK(perm_fixed_points(PermS4::of(2, 1, 3, 4)) == std::vector<int>{3, 4});
    CHECK(perm_fixed_points(PermS4::of(2, 1, 4, 3)).empty());
    CHECK(is_involution(PermS4::of(2, 1, 4, 3)));
    // (3,4,2,1) squares to (2,1,3,4)-like non-identity, so order 4
    PermS4 c4 = PermS4::of(3, 4, 2, 1);
    CHECK(perm_fixed_points(c4).empty());
    CHECK(!is_involution(c4));
    CHECK(c4.compose(c4).compose(c4.compose(c4)) == PermS4::identity());
    CHECK(c4.compose(c4.inverse()) == PermS4::identity());
    CHECK(all_permutations_s4().size() == 24);
    CHECK_THROWS_AS(PermS4::of(1, 1, 3, 4), std::invalid_argument);
}

TEST_CASE("stabilizer of the cross ratio") {
    // generic parameter
    auto gen = stabilizer_permutations(normalized_quadruple(CycElem::rational(Rat(5))));
    REQUIRE(gen.size() == 4);
    CHECK(contains(gen, PermS4::identity()));
    CHECK(contains(gen, PermS4::of(2, 1, 4, 3)));
    CHECK(contains(gen, PermS4::of(3, 4, 1, 2)));
    CHECK(contains(gen, PermS4::of(4, 3, 2, 1)));

    // harmonic parameter adds four more
    auto har = stabilizer_permutations(normalized_quadruple(CycElem::rational(Rat(-1))));
    REQUIRE(har.size() == 8);
    for (const auto &s : gen) CHECK(contains(har, s));
    CHECK(contains(har, PermS4::of(2, 1, 3, 4)));
    CHECK(contains(har, PermS4::of(1, 2, 4, 3)));
    CHECK(contains(har, PermS4::of(3, 4, 2, 1)));
    CHECK(contains(har, PermS4::of(4, 3, 1, 2)));

    // anharmonic parameter: primitive sixth root of unity
    auto anh = stabilizer_permutations(normalized_quadruple(CycElem::root_of_unity(6)));
    CHECK(anh.size() == 12);
}

TEST_CASE("associated linear maps for the generic parameter") {
    for (long qv : {5L, -1L, 7L}) {
        CycElem q = CycElem::rational(Rat(qv));
        auto pts = normalized_quadruple(q);

        Mobius f = mobius_from_permutation(pts, PermS4::of(2, 1, 4, 3));
        CHECK(mobius_eq(f, mobius_i(0, 1, qv, 0)));

        Mobius g = mobius_from_permutation(pts, PermS4::of(3, 4, 1, 2));
        CHECK(mobius_eq(g, mobius_i(qv, -1, qv, -qv)));

        Mobius h = mobius_from_permutation(pts, PermS4::of(4, 3, 2, 1));
        CHECK(mobius_eq(h, mobius_i(1, -1, qv, -1)));

        // every stabilizer member induces a map moving each point correctly
        for (const auto &s : stabilizer_permutations(pts)) {
            if (s == PermS4::identity()) continue;
            Mobius m = mobius_from_permutation(pts, s);
            for (int i = 1; i <= 4; ++i)
                CHECK(proj_eq(m.apply(pts[i - 1]), pts[s(i) - 1]));
        }
    }
    // a permutation outside the stabilizer is rejected
    auto pts = normalized_quadruple(CycElem::rational(Rat(5)));
    CHECK_THROWS_AS(mobius_from_permutation(pts, PermS4::of(2, 1, 3, 4)),
                    std::invalid_argument);
}

TEST_CASE("fixed points of the three generic involutions") {
    // q = 5: centers 0, 5, 1 and radicands 5, 20, -4
    auto rep1 = mobius_fixed_points(mobius_i(0, 1, 5, 0));
    REQUIRE(rep1.kind == FixedPointReport::Kind::Symbolic);
    CHECK(rep1.center == CycElem::zero(1));
    CHECK(rep1.radicand == CycElem::rational(Rat(5)));

    auto rep2 = mobius_fixed_points(mobius_i(5, -1, 5, -5));
    REQUIRE(rep2.kind == FixedPointReport::Kind::Symbolic);
    CHECK(rep2.center == CycElem::rational(Rat(5)));
    CHECK(rep2.radicand == CycElem::rational(Rat(20)));

    // 1 - q = -4 is a square once i is in the field: fixed points [1:1 +- 2i]
    auto rep3 = mobius_fixed_points(mobius_i(1, -1, 5, -1));
    REQUIRE(rep3.kind == FixedPointReport::Kind::InField);
    CHECK(proj_eq(rep3.points[0], p1_gauss(1, 1, 2)));
    CHECK(proj_eq(rep3.points[1], p1_gauss(1, 1, -2)));
}

TEST_CASE("fixed points in the harmonic specialization") {
    // (2,1,4,3): [1:i] and [1:-i]
    auto rep1 = mobius_fixed_points(mobius_i(0, 1, -1, 0));
    REQUIRE(rep1.kind == FixedPointReport::Kind::InField);
    CHECK(proj_eq(rep1.points[0], p1_gauss(1, 0, 1)));
    CHECK(proj_eq(rep1.points[1], p1_gauss(1, 0, -1)));

    // (3,4,1,2): [1:-1 +- sqrt(2)], symbolic over the ambient field
    auto rep2 = mobius_fixed_points(mobius_i(-1, -1, -1, 1));
    REQUIRE(rep2.kind == FixedPointReport::Kind::Symbolic);
    CHECK(rep2.center == CycElem::rational(Rat(-1)));
    CHECK(rep2.radicand == CycElem::rational(Rat(2)));

    // (4,3,2,1): [1:1 +- sqrt(2)]
    auto rep3 = mobius_fixed_points(mobius_i(1, -1, -1, -1));
    REQUIRE(rep3.kind == FixedPointReport::Kind::Symbolic);
    CHECK(rep3.center == CycElem::rational(Rat(1)));
    CHECK(rep3.radicand == CycElem::rational(Rat(2)));

    // the two extra harmonic 4-cycles, matrices ((1,-1),(1,1)) and
    // ((1,1),(-1,1)), both with fixed points [1:+-i]
    auto pts = normalized_quadruple(CycElem::rational(Rat(-1)));
    Mobius f = mobius_from_permutation(pts, PermS4::of(3, 4, 2, 1));
    CHECK(mobius_eq(f, mobius_i(1, -1, 1, 1)));
    Mobius g = mobius_from_permutation(pts, PermS4::of(4, 3, 1, 2));
    CHECK(mobius_eq(g, mobius_i(1, 1, -1, 1)));
    for (const Mobius &m : {f, g}) {
        auto rep = mobius_fixed_points(m);
        REQUIRE(rep.kind == FixedPointReport::Kind::InField);
        CHECK(proj_eq(rep.points[0], p1_gauss(1, 0, 1)));
        CHECK(proj_eq(rep.points[1], p1_gauss(1, 0, -1)));
        // fixed really means fixed
        CHECK(proj_eq(m.apply(rep.points[0]), rep.points[0]));
        CHECK(proj_eq(m.apply(rep.points[1]), rep.points[1]));
    }

    CHECK_THROWS_AS(mobius_fixed_points(mobius_i(3, 0, 0, 3)), std::invalid_argument);
}

TEST_CASE("admissible permutation sets") {
    auto harmonic = admissible_sigma_sets(CycElem::rational(Rat(-1)));
    REQUIRE(harmonic.size() == 1);
    const auto &g = harmonic[0];
    REQUIRE(g.perms.size() == 3);
    CHECK(g.perms[0] == PermS4::of(2, 1, 4, 3));
    CHECK(g.perms[1] == PermS4::of(3, 4, 2, 1));
    CHECK(g.perms[2] == PermS4::of(4, 3, 1, 2));
    REQUIRE(g.fixed_points.kind == FixedPointReport::Kind::InField);
    CHECK(proj_eq(g.fixed_points.points[0], p1_gauss(1, 0, 1)));
    CHECK(proj_eq(g.fixed_points.points[1], p1_gauss(1, 0, -1)));
    // together with the identity the set forms a Latin square
    std::vector<PermS4> rows = {PermS4::identity(), g.perms[0], g.perms[1], g.perms[2]};
    for (int k = 1; k <= 4; ++k) {
        std::array<int, 4> col{};
        for (int r = 0; r < 4; ++r) col[r] = rows[r](k);
        std::sort(col.begin(), col.end());
        CHECK(col == std::array<int, 4>{1, 2, 3, 4});
    }

    CHECK(admissible_sigma_sets(CycElem::rational(Rat(5))).empty());
    CHECK(admissible_sigma_sets(CycElem::root_of_unity(6)).empty());
    CHECK_THROWS_AS(admissible_sigma_sets(CycElem::one()), std::invalid_argument);
}

TEST_CASE("permutation read off from an external line") {
    // the three-line initial configuration with its harmonic quadruples
    Config grid;
    grid.conductor = 4;
    long coords[3][4][4] = {{{1, 0, 0, 0}, {0, 0, 1, 0}, {1, 0, 1, 0}, {1, 0, -1, 0}},
                            {{0, 1, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 1}, {0, 1, 0, -1}},
                            {{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 1, 1, 1}, {1, 1, -1, -1}}};
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 4; ++j) {
            auto &c = coords[i - 1][j - 1];
            grid.add_point("P[" + std::to_string(i) + "][" + std::to_string(j) + "]",
                           ProjPoint::p3i(c[0], c[1], c[2], c[3]));
        }
    grid.add_line("L[1]", meet_planes(Plane3::of(0, 1, 0, 0), Plane3::of(0, 0, 0, 1)));
    grid.add_line("L[2]", meet_planes(Plane3::of(1, 0, 0, 0), Plane3::of(0, 0, 1, 0)));
    grid.add_line("L[3]", meet_planes(Plane3::of(-1, 1, 0, 0), Plane3::of(0, 0, -1, 1)));

    ProjLine3 l = meet_planes(Plane3::of(0, 1, 1, 0), Plane3::of(1, 0, 0, -1));
    CHECK(sigma_from_external_line(grid, 2, l) == PermS4::of(2, 1, 4, 3));
    CHECK(sigma_from_external_line(grid, 3, l) == PermS4::of(3, 4, 2, 1));

    // a line on the grid quadric is rejected
    ProjLine3 on_q = line_through(ProjPoint::p3i(1, 0, 0, 0), ProjPoint::p3i(0, 1, 0, 0));
    CHECK_THROWS_AS(sigma_from_external_line(grid, 2, on_q), std::invalid_argument);
}
