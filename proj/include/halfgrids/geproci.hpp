#ifndef HALFGRIDS_GEPROCI_HPP
#define HALFGRIDS_GEPROCI_HPP

#include <optional>
#include <vector>

#include "halfgrids/halfgrid.hpp"
#include "halfgrids/projgeom.hpp"

namespace halfgrids {

// Image of a configuration in a plane, in fixed plane coordinates x, y, z.
struct PlanarConfig {
    long conductor = 1;
    std::vector<ProjPoint> points; // dim 2 (three coordinates each)
    std::vector<std::string> labels;
    ProjPoint center = ProjPoint::p3i(1, 0, 0, 0);
    Plane3 plane = Plane3::of(0, 0, 0, 1);
};

// Project z from the center into the plane w = 0. Throws when the center is
// on the plane, in z, or on a secant of z (image points collide).
PlanarConfig project(const Config &z, const ProjPoint &center, const Plane3 &plane);

// Number of degree-d monomials in three variables.
int monomial_count(int d);

// Coefficient vectors (graded-lex over x, y, z) spanning the degree-d forms
// vanishing at every point of s.
std::vector<Vec> vanishing_forms(const PlanarConfig &s, int d);

// Evaluate a dense graded-lex coefficient vector at a planar point.
CycElem eval_form(const Vec &coeffs, int d, const ProjPoint &p);

struct TrialRecord {
    ProjPoint center = ProjPoint::p3i(1, 0, 0, 0);
    int a = 0, b = 0;
    Vec fa, fb;          // dense graded-lex coefficients
    long shear_lambda = 0;  // x -> x + lambda z before the resultant
    long resultant_y0 = 0;  // sample point (y0, 1) of the resultant
    CycElem resultant = CycElem::zero(1); // nonzero witness value
};

// Certify that the planar points are a transverse complete intersection of
// type (a, b). Returns nullopt with no side effects when certification is
// impossible (empty kernel, or every candidate pair shares a component).
std::optional<TrialRecord> ci_certify(const PlanarConfig &s, int a, int b);

struct GeprociCert {
    int a = 0, b = 0;
    unsigned long long seed = 0;
    std::vector<TrialRecord> trials;
};

struct GeprociResult {
    bool geproci = false;
    GeprociCert cert;   // filled with the successful trials
    std::string reason; // first failure, empty on success
};

// Project from `trials` deterministic pseudo-random integer centers and
// certify each image; true iff every trial certifies. Degenerate centers
// (in z, on the plane, or on a secant) are resampled within a retry budget.
GeprociResult is_geproci(const Config &z, int a, int b, int trials,
                         unsigned long long seed);

// Re-check a certificate from scratch: projection, vanishing, resultant.
bool validate_certificate(const Config &z, const GeprociCert &cert,
                          std::string *why = nullptr);

} // namespace halfgrids

#endif
