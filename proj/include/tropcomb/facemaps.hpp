#ifndef TROPCOMB_FACEMAPS_HPP
#define TROPCOMB_FACEMAPS_HPP

#include <array>
#include <string>
#include <vector>

#include "tropcomb/hypersimplex.hpp"

namespace tropcomb {

// Restriction of a lift to a facet of the hypersimplex. value=1 is the
// x_{i0}=1 facet, a Δ(r-1,n-1); value=0 is the x_{i0}=0 facet, a Δ(r,n-1).
// Indices above i0 are relabeled down by one.
LiftFunction face_restrict(const LiftFunction& lift, int i0, int value);

// Values of the lift on the six vertices of the octahedron spanned by I
// (|I|=4) and J (|J|=r-2, disjoint): pairs {a,b} of sorted I in lex order
// (12, 13, 14, 23, 24, 34).
std::array<Rational, 6> octahedron_values(const LiftFunction& lift, const std::vector<int>& I,
                                          const std::vector<int>& J);

// The three ways Δ(2,4) splits into two pyramids, or no split. SplitA breaks
// the {12,34} diagonal, SplitB breaks {13,24}, SplitC breaks {14,23}.
enum class OctClass { NoSplit, SplitA, SplitB, SplitC };

std::string to_string(OctClass c);
OctClass oct_class_from_string(const std::string& s);

// NoSplit when the three pair sums agree; otherwise the unique strictly
// larger sum names the broken diagonal. Throws NotTropicalError when the
// minimum is attained only once (the point violates the tropical Plücker
// relation on this octahedron).
OctClass octahedron_class(const std::array<Rational, 6>& values);

} // namespace tropcomb

#endif
