#ifndef TROPCOMB_PLUECKER_HPP
#define TROPCOMB_PLUECKER_HPP

#include <string>
#include <vector>

#include "tropcomb/hypersimplex.hpp"
#include "tropcomb/ideal.hpp"

namespace tropcomb {

// Coordinate ring of the Plücker embedding of G(r,n): one variable per
// r-subset, ordered lexicographically to line up with LiftFunction indexing.
struct PlueckerRing {
    Hypersimplex hs;

    PlueckerRing(int r, int n) : hs(r, n) {}

    int nvars() const { return hs.vertex_count(); }
    int var_of(const BasisSubset& s) const { return hs.rank_of(s); }
    BasisSubset subset_of(int var) const { return hs.vertex(var); }
    std::vector<std::string> var_names() const;
};

// Ideal of the cone over G(r,n): the one-line exchange quadrics
// sum_k (-1)^k p_{alpha + beta_k} p_{beta - beta_k} over all (r-1)-subsets
// alpha and (r+1)-subsets beta, deduplicated and sign-normalized.
Ideal pluecker_ideal(int r, int n);

// The three-term relation p_{12J}p_{34J} - p_{13J}p_{24J} + p_{14J}p_{23J}
// attached to a 4-subset I and a disjoint (r-2)-subset J; indices 1..4 refer
// to sorted I.
Polynomial three_term(const PlueckerRing& ring, const std::vector<int>& I,
                      const std::vector<int>& J);

} // namespace tropcomb

#endif
