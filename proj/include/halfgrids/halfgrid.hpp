#ifndef HALFGRIDS_HALFGRID_HPP
#define HALFGRIDS_HALFGRID_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "halfgrids/projgeom.hpp"

namespace halfgrids {

// Labeled point/line catalog for one configuration. Labels are free-form
// strings such as "P[1][2]", "R[1]", "Y1[0]", "L[4]", "T1".
struct Config {
    long conductor = 1;

    struct LabeledPoint {
        std::string label;
        ProjPoint pt;
    };
    struct LabeledLine {
        std::string label;
        ProjLine3 line;
    };

    std::vector<LabeledPoint> points;
    std::vector<LabeledLine> lines;

    void add_point(std::string label, ProjPoint p);
    void add_line(std::string label, ProjLine3 l);
    const ProjPoint &point(const std::string &label) const;
    const ProjLine3 &line(const std::string &label) const;
    bool has_point(const std::string &label) const;
    bool has_line(const std::string &label) const;
    // Label of the configuration point equal to p, if any.
    std::optional<std::string> label_of(const ProjPoint &p) const;
};

enum class HalfGridVariant { Y1, Y2, Full };

// The m x m orbit grid: points p_ij = [1 : u^j : u^i : u^{i+j}] over
// conductor lcm(m, 4), rows M[i], columns L[j], transversals T1, T2.
Config standard_grid(long m);

// The two extra collinear point sets Y1 = {[-1:0:0:u^j]}, Y2 = {[0:-1:u^j:0]}.
std::pair<std::vector<ProjPoint>, std::vector<ProjPoint>> y_sets(long m);

// Grid plus Y1, Y2 or both, with the column lines and Y lines declared as the
// half-grid family. The Full variant for odd m is constructible but flagged.
Config standard_halfgrid(long m, HalfGridVariant variant);

// Whether the (m, variant) combination carries the documented half-grid claim.
bool halfgrid_variant_supported(long m, HalfGridVariant variant);

// The 24 points of the F4 root system up to sign.
Config f4_root_model();

struct IncidenceLine {
    ProjLine3 line;
    std::vector<std::string> labels; // configuration points on the line
};

// All distinct lines spanned by point pairs containing >= k config points.
std::vector<IncidenceLine> incidence_lines(const Config &z, int k);

struct GridCert {
    std::vector<IncidenceLine> a_lines; // a skew lines, b points each
    std::vector<IncidenceLine> b_lines; // b skew lines, a points each
};

struct HalfGridCert {
    std::vector<IncidenceLine> lines; // the existing family
    // Evidence against the complementary family: every candidate line with
    // enough points, none of which assemble into a skew cover.
    std::vector<IncidenceLine> refutation_candidates;
};

enum class StructureKind { Grid, HalfGrid, Neither };

struct StructureResult {
    StructureKind kind = StructureKind::Neither;
    std::optional<GridCert> grid;
    std::optional<HalfGridCert> half_grid;
};

// Classify z as an (a,b)-grid, half grid, or neither per the incidence
// search; |z| must equal a*b.
StructureResult detect_structure(const Config &z, int a, int b);

// Check that the points of z on three chosen pairwise skew lines form a grid
// with a full family of transversals through config points.
struct ThreeLineCheck {
    bool ok = false;
    std::vector<ProjLine3> transversals;
    std::string failure; // empty when ok
};
ThreeLineCheck three_line_grid_check(const Config &z,
                                     const std::array<ProjLine3, 3> &lines);

struct EquivResult {
    bool equivalent = false;
    Matrix transform; // maps points of a onto points of b when equivalent
    std::vector<std::pair<std::string, std::string>> point_map;
};

// Search for a projective transformation mapping the point set of a onto the
// point set of b, pruning candidate frames by incidence profile.
EquivResult find_projective_equivalence(const Config &a, const Config &b);

} // namespace halfgrids

#endif
