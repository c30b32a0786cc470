#ifndef HALFGRIDS_CONSTRUCT_HPP
#define HALFGRIDS_CONSTRUCT_HPP

#include <array>
#include <vector>

#include "halfgrids/halfgrid.hpp"
#include "halfgrids/perms.hpp"
#include "halfgrids/projgeom.hpp"

namespace halfgrids {

// The normalized three-line configuration with its harmonic quadruples.
struct InitialData {
    Config config; // points P[1][1]..P[3][4], lines L[1]..L[3]
    std::array<ProjLine3, 3> lines;
    Quadric3 quadric; // xw - yz
    CycElem harmonic_parameter;
};

InitialData initial_data();

// One bijection mu: {sigma2, sigma3, sigma4} is always the admissible triple
// {(2,1,4,3), (3,4,2,1), (4,3,1,2)} in some order.
struct MuAssignment {
    PermS4 sigma2, sigma3, sigma4;
};

// All six bijections, ordered like the table rows.
std::array<MuAssignment, 6> all_mu_assignments();

// The external line determined by sigma2 and sigma3: the unique second line
// meeting all eight cross-lines besides L[1].
ProjLine3 external_line(const MuAssignment &mu);

// R_i = (cross-line i) meet L, checked against both the sigma2 and the
// sigma3 description.
std::array<ProjPoint, 4> r_points(const ProjLine3 &l, const MuAssignment &mu);

struct ConstructionResult {
    MuAssignment mu;
    ProjLine3 l;                  // external line
    std::array<ProjPoint, 4> r;   // R_1..R_4 on l
    ProjLine3 l4;                 // fourth grid line
    std::array<ProjPoint, 4> p4;  // P_41..P_44 on l4 and the quadric
    Config z20;                   // grid points, R points, declared lines
};

// P_4i as the second intersection of the quadric with line(P[1][sigma4(i)], R_i);
// verifies collinearity and returns their span.
std::pair<ProjLine3, std::array<ProjPoint, 4>> fourth_line(
    const MuAssignment &mu, const ProjLine3 &l, const std::array<ProjPoint, 4> &r);

ConstructionResult run_mu(const MuAssignment &mu);

struct RunAllReport {
    std::vector<ConstructionResult> results;          // six rows in order
    std::vector<std::array<int, 2>> l4_pairs;         // 1-based rows sharing L4
};

RunAllReport run_all_mu();

// The 24-point configuration of one row pair: the 16 grid points over the
// shared L4 plus both rows' R points, with the six lines declared.
Config assemble_pair(const RunAllReport &report, const std::array<int, 2> &pair);

} // namespace halfgrids

#endif
