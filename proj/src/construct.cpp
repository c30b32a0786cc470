#include "halfgrids/construct.hpp"

#include <set>
#include <stdexcept>

namespace halfgrids {

namespace {

const long kDisplay[3][4][4] = {
    {{1, 0, 0, 0}, {0, 0, 1, 0}, {1, 0, 1, 0}, {1, 0, -1, 0}},
    {{0, 1, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 1}, {0, 1, 0, -1}},
    {{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 1, 1, 1}, {1, 1, -1, -1}}};

std::string plabel(int i, int j) {
    return "P[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

// Cross-lines of one sigma: line(P[1][sigma(i)], P[row][i]) for i = 1..4.
std::array<ProjLine3, 4> cross_lines(const Config &cfg, int row, const PermS4 &sigma) {
    std::array<ProjLine3, 4> out = {
        line_through(cfg.point(plabel(1, sigma(1))), cfg.point(plabel(row, 1))),
        line_through(cfg.point(plabel(1, sigma(2))), cfg.point(plabel(row, 2))),
        line_through(cfg.point(plabel(1, sigma(3))), cfg.point(plabel(row, 3))),
        line_through(cfg.point(plabel(1, sigma(4))), cfg.point(plabel(row, 4)))};
    return out;
}

} // namespace

InitialData initial_data() {
    InitialData d;
    d.config.conductor = 4;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 4; ++j) {
            const long *c = kDisplay[i - 1][j - 1];
            d.config.add_point(plabel(i, j), ProjPoint::p3i(c[0], c[1], c[2], c[3]));
        }
    d.lines[0] = meet_planes(Plane3::of(0, 1, 0, 0), Plane3::of(0, 0, 0, 1));
    d.lines[1] = meet_planes(Plane3::of(1, 0, 0, 0), Plane3::of(0, 0, 1, 0));
    d.lines[2] = meet_planes(Plane3::of(-1, 1, 0, 0), Plane3::of(0, 0, -1, 1));
    for (int i = 0; i < 3; ++i)
        d.config.add_line("L[" + std::to_string(i + 1) + "]", d.lines[i]);
    // Q : xw - yz = 0
    Matrix q(4, Vec(4, CycElem::zero(1)));
    Rat half(1, 2);
    q[0][3] = q[3][0] = CycElem::rational(half);
    q[1][2] = q[2][1] = CycElem::rational(-half);
    d.quadric = Quadric3{q};
    d.harmonic_parameter = CycElem::rational(Rat(-1));
    return d;
}

std::array<MuAssignment, 6> all_mu_assignments() {
    PermS4 a = PermS4::of(2, 1, 4, 3);
    PermS4 b = PermS4::of(3, 4, 2, 1);
    PermS4 c = PermS4::of(4, 3, 1, 2);
    return {MuAssignment{a, b, c}, MuAssignment{a, c, b}, MuAssignment{b, a, c},
            MuAssignment{b, c, a}, MuAssignment{c, a, b}, MuAssignment{c, b, a}};
}

ProjLine3 external_line(const MuAssignment &mu) {
    InitialData d = initial_data();
    auto n2 = cross_lines(d.config, 2, mu.sigma2);
    auto n3 = cross_lines(d.config, 3, mu.sigma3);
    // Three cross-lines of sigma2 span the regulus; one sigma3 cross-line
    // pins down the second transversal besides L[1]. Any constraint index
    // works; fall back if a particular one degenerates.
    ProjLine3 result = d.lines[0];
    bool found = false;
    for (int c = 3; c >= 0 && !found; --c) {
        try {
            result = second_line_meeting_four(n2[0], n2[1], n2[2], n3[c], d.lines[0]);
            found = true;
        } catch (const std::invalid_argument &) {
        }
    }
    if (!found) throw std::logic_error("external_line: all constraint choices degenerate");
    for (int i = 0; i < 4; ++i)
        if (!pluecker_pairing(result, n2[i]).is_zero() ||
            !pluecker_pairing(result, n3[i]).is_zero())
            throw std::logic_error("external_line: cross-validation failed");
    return result;
}

std::array<ProjPoint, 4> r_points(const ProjLine3 &l, const MuAssignment &mu) {
    InitialData d = initial_data();
    auto n2 = cross_lines(d.config, 2, mu.sigma2);
    auto n3 = cross_lines(d.config, 3, mu.sigma3);
    std::array<ProjPoint, 4> r = {ProjPoint::p3i(1, 0, 0, 0), ProjPoint::p3i(1, 0, 0, 0),
                                  ProjPoint::p3i(1, 0, 0, 0), ProjPoint::p3i(1, 0, 0, 0)};
    for (int i = 0; i < 4; ++i) {
        auto via2 = lines_meet(n2[i], l);
        if (!via2) throw std::invalid_argument("r_points: cross-line misses the external line");
        auto via3 = lines_meet(n3[i], l);
        if (!via3 || !proj_eq(*via2, *via3))
            throw std::invalid_argument("r_points: sigma2 and sigma3 descriptions disagree");
        r[i] = *via2;
    }
    return r;
}

std::pair<ProjLine3, std::array<ProjPoint, 4>> fourth_line(
    const MuAssignment &mu, const ProjLine3 &l, const std::array<ProjPoint, 4> &r) {
    (void)l;
    InitialData d = initial_data();
    std::array<ProjPoint, 4> p4 = {ProjPoint::p3i(1, 0, 0, 0), ProjPoint::p3i(1, 0, 0, 0),
                                   ProjPoint::p3i(1, 0, 0, 0), ProjPoint::p3i(1, 0, 0, 0)};
    for (int i = 0; i < 4; ++i) {
        const ProjPoint &base = d.config.point(plabel(1, mu.sigma4(i + 1)));
        ProjLine3 join = line_through(base, r[i]);
        p4[i] = second_intersection_with_quadric(join, d.quadric, base);
        if (!d.quadric.contains(p4[i]))
            throw std::logic_error("fourth_line: point off the quadric");
    }
    ProjLine3 l4 = line_through(p4[0], p4[1]);
    for (int i = 2; i < 4; ++i)
        if (!on_line(p4[i], l4))
            throw std::invalid_argument("fourth_line: the four points are not collinear");
    return {l4, p4};
}

ConstructionResult run_mu(const MuAssignment &mu) {
    ConstructionResult res;
    res.mu = mu;
    res.l = external_line(mu);
    res.r = r_points(res.l, mu);
    auto [l4, p4] = fourth_line(mu, res.l, res.r);
    res.l4 = l4;
    res.p4 = p4;
    InitialData d = initial_data();
    res.z20 = d.config;
    for (int i = 0; i < 4; ++i) res.z20.add_point(plabel(4, i + 1), p4[i]);
    for (int i = 0; i < 4; ++i) res.z20.add_point("R[" + std::to_string(i + 1) + "]", res.r[i]);
    res.z20.add_line("L[4]", l4);
    res.z20.add_line("L", res.l);
    return res;
}

RunAllReport run_all_mu() {
    RunAllReport rep;
    for (const auto &mu : all_mu_assignments()) rep.results.push_back(run_mu(mu));
    std::vector<bool> used(6, false);
    for (int i = 0; i < 6; ++i) {
        if (used[i]) continue;
        for (int j = i + 1; j < 6; ++j)
            if (!used[j] && proj_eq(rep.results[i].l4, rep.results[j].l4)) {
                rep.l4_pairs.push_back({i + 1, j + 1});
                used[i] = used[j] = true;
            }
    }
    return rep;
}

Config assemble_pair(const RunAllReport &report, const std::array<int, 2> &pair) {
    const ConstructionResult &a = report.results.at(pair[0] - 1);
    const ConstructionResult &b = report.results.at(pair[1] - 1);
    if (!proj_eq(a.l4, b.l4))
        throw std::invalid_argument("assemble_pair: rows do not share the fourth line");
    // Both rows must carve the same four grid points out of L4.
    for (const auto &p : b.p4) {
        bool found = false;
        for (const auto &q : a.p4)
            if (proj_eq(p, q)) found = true;
        if (!found)
            throw std::invalid_argument("assemble_pair: rows disagree on the L4 points");
    }
    Config z;
    z.conductor = 4;
    InitialData d = initial_data();
    for (const auto &lp : d.config.points) z.add_point(lp.label, lp.pt);
    for (int i = 0; i < 4; ++i) z.add_point(plabel(4, i + 1), a.p4[i]);
    for (int i = 0; i < 4; ++i) {
        z.add_point("R1[" + std::to_string(i + 1) + "]", a.r[i]);
        z.add_point("R2[" + std::to_string(i + 1) + "]", b.r[i]);
    }
    for (int i = 0; i < 3; ++i)
        z.add_line("L[" + std::to_string(i + 1) + "]", d.lines[i]);
    z.add_line("L[4]", a.l4);
    z.add_line("E1", a.l);
    z.add_line("E2", b.l);
    // Oracle guarantees: 24 distinct points, 6 pairwise skew declared lines.
    for (size_t i = 0; i < z.points.size(); ++i)
        for (size_t j = i + 1; j < z.points.size(); ++j)
            if (proj_eq(z.points[i].pt, z.points[j].pt))
                throw std::logic_error("assemble_pair: coincident points " +
                                       z.points[i].label + ", " + z.points[j].label);
    for (size_t i = 0; i < z.lines.size(); ++i)
        for (size_t j = i + 1; j < z.lines.size(); ++j)
            if (!lines_skew(z.lines[i].line, z.lines[j].line))
                throw std::logic_error("assemble_pair: declared lines not skew");
    return z;
}

} // namespace halfgrids
