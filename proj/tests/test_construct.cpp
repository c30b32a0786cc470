#include "doctest.h"

#include "halfgrids/construct.hpp"

using namespace halfgrids;

namespace {

ProjLine3 line_of(std::array<long, 4> h1, std::array<long, 4> h2) {
    return meet_planes(Plane3::of(h1[0], h1[1], h1[2], h1[3]),
                       Plane3::of(h2[0], h2[1], h2[2], h2[3]));
}

// Golden equations of the six external lines, rows in mu order.
const std::array<std::pair<std::array<long, 4>, std::array<long, 4>>, 6> kExternal = {{
    {{0, 1, 1, 0}, {1, 0, 0, -1}},
    {{0, 1, -1, 0}, {1, 0, 0, 1}},
    {{0, 1, -1, 1}, {1, 0, -1, 2}},
    {{0, 1, -2, 1}, {1, 0, -1, 1}},
    {{0, 1, 1, -1}, {1, 0, 1, -2}},
    {{0, 1, 2, -1}, {1, 0, 1, -1}},
}};

} // namespace

TEST_CASE("initial data") {
    InitialData d = initial_data();
    CHECK(d.config.points.size() == 12);
    CHECK(proj_eq(d.config.point("P[2][3]"), ProjPoint::p3i(0, 1, 0, 1)));
    CHECK(proj_eq(d.config.point("P[3][4]"), ProjPoint::p3i(1, 1, -1, -1)));
    // all points on the quadric, four harmonic points per line
    for (const auto &lp : d.config.points) CHECK(d.quadric.contains(lp.pt));
    for (int i = 1; i <= 3; ++i) {
        auto cr = cross_ratio(d.config.point("P[" + std::to_string(i) + "][1]"),
                              d.config.point("P[" + std::to_string(i) + "][2]"),
                              d.config.point("P[" + std::to_string(i) + "][3]"),
                              d.config.point("P[" + std::to_string(i) + "][4]"));
        CHECK(cr.kind == CrossRatioKind::Harmonic);
    }
    CHECK(d.harmonic_parameter == CycElem::rational(Rat(-1)));
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) CHECK(lines_skew(d.lines[i], d.lines[j]));
}

TEST_CASE("external lines match the golden table") {
    auto mus = all_mu_assignments();
    for (int row = 0; row < 6; ++row) {
        ProjLine3 l = external_line(mus[row]);
        ProjLine3 expect = line_of(kExternal[row].first, kExternal[row].second);
        CHECK(proj_eq(l, expect));
    }
}

TEST_CASE("r points of the first row") {
    auto mus = all_mu_assignments();
    ProjLine3 l = external_line(mus[0]);
    auto r = r_points(l, mus[0]);
    CHECK(proj_eq(r[0], ProjPoint::p3i(0, 1, -1, 0)));
    CHECK(proj_eq(r[1], ProjPoint::p3i(1, 0, 0, 1)));
    CHECK(proj_eq(r[2], ProjPoint::p3i(1, 1, -1, 1)));
    CHECK(proj_eq(r[3], ProjPoint::p3i(1, -1, 1, 1)));
    for (const auto &p : r) CHECK(on_line(p, l));
}

TEST_CASE("fourth line of the first row") {
    auto mus = all_mu_assignments();
    ProjLine3 l = external_line(mus[0]);
    auto r = r_points(l, mus[0]);
    auto [l4, p4] = fourth_line(mus[0], l, r);
    CHECK(proj_eq(p4[0], ProjPoint::p3i(-1, 1, 0, 0)));
    CHECK(proj_eq(p4[1], ProjPoint::p3i(0, 0, -1, 1)));
    CHECK(proj_eq(p4[2], ProjPoint::p3i(-1, 1, -1, 1)));
    CHECK(proj_eq(p4[3], ProjPoint::p3i(-1, 1, 1, -1)));
    CHECK(proj_eq(l4, line_of({1, 1, 0, 0}, {0, 0, 1, 1})));
}

TEST_CASE("all six runs and the fourth-line pairing") {
    RunAllReport rep = run_all_mu();
    REQUIRE(rep.results.size() == 6);
    for (int row = 0; row < 6; ++row)
        CHECK(proj_eq(rep.results[row].l,
                      line_of(kExternal[row].first, kExternal[row].second)));
    REQUIRE(rep.l4_pairs.size() == 3);
    CHECK(rep.l4_pairs[0] == std::array<int, 2>{1, 2});
    CHECK(rep.l4_pairs[1] == std::array<int, 2>{3, 5});
    CHECK(rep.l4_pairs[2] == std::array<int, 2>{4, 6});
    // rows 1, 2 share L4 = V(x+y, z+w)
    CHECK(proj_eq(rep.results[0].l4, line_of({1, 1, 0, 0}, {0, 0, 1, 1})));
    CHECK(proj_eq(rep.results[1].l4, rep.results[0].l4));
    // every z20 carries 20 distinct points
    for (const auto &res : rep.results) CHECK(res.z20.points.size() == 20);
}

TEST_CASE("permutations round-trip through the external line") {
    RunAllReport rep = run_all_mu();
    for (const auto &res : rep.results) {
        CHECK(sigma_from_external_line(res.z20, 2, res.l) == res.mu.sigma2);
        CHECK(sigma_from_external_line(res.z20, 3, res.l) == res.mu.sigma3);
        CHECK(sigma_from_external_line(res.z20, 4, res.l) == res.mu.sigma4);
    }
}

TEST_CASE("assembled pairs") {
    RunAllReport rep = run_all_mu();
    Config z12 = assemble_pair(rep, {1, 2});
    CHECK(z12.points.size() == 24);
    CHECK(z12.lines.size() == 6);

    // the assembled set is a (4,6) half grid, never a grid
    auto st = detect_structure(z12, 4, 6);
    CHECK(st.kind == StructureKind::HalfGrid);

    // equivalent to the F4 model and to the standard half grid
    auto vs_f4 = find_projective_equivalence(z12, f4_root_model());
    CHECK(vs_f4.equivalent);
    Config z35 = assemble_pair(rep, {3, 5});
    auto vs_z12 = find_projective_equivalence(z35, z12);
    CHECK(vs_z12.equivalent);

    CHECK_THROWS_AS(assemble_pair(rep, {1, 3}), std::invalid_argument);
}
