#ifndef HALFGRIDS_PERMS_HPP
#define HALFGRIDS_PERMS_HPP

#include <array>
#include <optional>
#include <vector>

#include "halfgrids/halfgrid.hpp"
#include "halfgrids/projgeom.hpp"

namespace halfgrids {

// Permutation of {1,2,3,4} in one-line notation: (a,b,c,d) sends 1 to a,
// 2 to b, and so on.
struct PermS4 {
    std::array<int, 4> img;

    static PermS4 identity();
    static PermS4 of(int a, int b, int c, int d);

    int operator()(int k) const { return img[k - 1]; } // k in 1..4
    bool operator==(const PermS4 &o) const { return img == o.img; }
    bool operator<(const PermS4 &o) const { return img < o.img; }
    PermS4 compose(const PermS4 &inner) const; // this after inner
    PermS4 inverse() const;
};

std::vector<int> perm_fixed_points(const PermS4 &s); // subset of {1,2,3,4}
bool is_involution(const PermS4 &s);
std::vector<PermS4> all_permutations_s4();

// Fractional-linear automorphism of P^1, a 2x2 matrix up to scalar acting by
// [x:y] -> [a x + b y : c x + d y].
struct Mobius {
    Matrix mat; // 2x2 over CycElem, nonzero determinant
    ProjPoint apply(const ProjPoint &p) const;
};

bool mobius_eq(const Mobius &f, const Mobius &g); // equality up to scalar

struct FixedPointReport {
    enum class Kind { InField, Symbolic };
    Kind kind;
    // InField: the two fixed points (equal when the map is tangent).
    std::array<ProjPoint, 2> points;
    // Symbolic: fixed points are [1 : center +- a] with a^2 = radicand and
    // radicand not a square in the working field.
    CycElem center = CycElem::zero(1);
    CycElem radicand = CycElem::zero(1);
};

// All sigma in S4 preserving the cross ratio of the quadruple, by brute
// force over the 24 candidates.
std::vector<PermS4> stabilizer_permutations(const std::array<ProjPoint, 4> &p);

// The unique Moebius map with F(P_i) = P_{sigma(i)}; solved from three
// correspondences and verified on the fourth.
Mobius mobius_from_permutation(const std::array<ProjPoint, 4> &p, const PermS4 &sigma);

// Fixed points of a non-identity Moebius map. Square roots are attempted in
// the field of the given conductor; 0 means lcm(4, conductor of the entries),
// the ambient field of the constructions here.
FixedPointReport mobius_fixed_points(const Mobius &f, long conductor = 0);

// One admissibility class: permutations sharing a fixed-point pair, given by
// the normalized coefficient triple of the fixed-point quadratic
// c2 t^2 + c1 t + c0 (first nonzero coefficient scaled to 1).
struct SigmaGroup {
    std::vector<PermS4> perms;
    std::array<CycElem, 3> quadratic;
    FixedPointReport fixed_points;
};

// The candidate permutation sets of the admissibility filter chain over the
// normalized quadruple [1:0], [0:1], [1:1], [1:q]: fixed-point-free members
// of the stabilizer, grouped by shared Moebius fixed-point pair, kept when
// the group has >= 2 members, pairwise distinct columns, and (for size >= 3)
// a non-involution.
std::vector<SigmaGroup> admissible_sigma_sets(const CycElem &q);

// Read off sigma_i^L from a grid and an external line: sigma(j) = k when the
// transversal through P[i][j] meeting L[1] and L hits L[1] at P[1][k].
PermS4 sigma_from_external_line(const Config &grid, int i, const ProjLine3 &l);

} // namespace halfgrids

#endif
