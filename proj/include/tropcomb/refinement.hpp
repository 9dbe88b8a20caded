#ifndef TROPCOMB_REFINEMENT_HPP
#define TROPCOMB_REFINEMENT_HPP

#include <utility>
#include <vector>

#include "tropcomb/facemaps.hpp"
#include "tropcomb/hypersimplex.hpp"
#include "tropcomb/matroid.hpp"
#include "tropcomb/polynomial.hpp"

namespace tropcomb {

// Witness that two tropical points with strictly comparable subdivisions have
// different initial ideals: an octahedron (I,J) classified differently by the
// two lifts, together with the two distinct initial forms of its three-term
// relation.
struct RefinementCertificate {
    std::vector<int> I;
    std::vector<int> J;
    OctClass class_fine = OctClass::NoSplit;
    OctClass class_coarse = OctClass::NoSplit;
    Polynomial initial_fine;
    Polynomial initial_coarse;

    RefinementCertificate() : initial_fine(0), initial_coarse(0) {}
};

// Requires: both lifts tropical for the Plücker ideal, subdivide(fine)
// strictly coarsened by subdivide(coarse). Searches every (I,J) octahedron,
// returns the first with differing classes, and cross-checks that the two
// initial ideals really differ (a disagreement between the octahedron
// mechanism and the ideal-level conclusion is a fatal inconsistency).
// NoCertificateError when the exhaustive search finds nothing.
RefinementCertificate check_refinement(const LiftFunction& fine, const LiftFunction& coarse);

// A facet-map path (i0, value) shrinking (r,n) step by step while keeping
// strict basis inclusion, ending on Δ(2,4) with distinct matroids. value=1 is
// restriction onto x_{i0}=1 (matroid contraction), value=0 is the x_{i0}=0
// face (deletion). Depth-first over all facet choices; NoDescentError when
// the search exhausts.
std::vector<std::pair<int, int>> constrained_descent(const Matroid& m, const Matroid& mp);

} // namespace tropcomb

#endif
