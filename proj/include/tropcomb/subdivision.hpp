#ifndef TROPCOMB_SUBDIVISION_HPP
#define TROPCOMB_SUBDIVISION_HPP

#include <vector>

#include "tropcomb/hypersimplex.hpp"
#include "tropcomb/matroid.hpp"

namespace tropcomb {

// Cells of a subdivision of Δ(r,n); each cell is the sorted list of vertex
// indices (lex ranks) it contains, and the cell list itself is sorted, so
// equality is structural.
struct MatroidSubdivision {
    Hypersimplex domain;
    std::vector<std::vector<int>> cells;

    bool operator==(const MatroidSubdivision& o) const {
        return domain == o.domain && cells == o.cells;
    }
    bool operator!=(const MatroidSubdivision& o) const { return !(*this == o); }

    std::vector<BasisSubset> cell_subsets(std::size_t k) const;
    Matroid cell_matroid(std::size_t k) const; // throws FormatError if not a matroid

    static MatroidSubdivision trivial(Hypersimplex hs);
};

// Regular subdivision induced by the lift: cells are the maximal vertex sets
// S admitting an affine functional equal to the lift on S and strictly below
// it elsewhere (domains of linearity of the lower hull). Cells are found by
// LP point location and a breadth-first walk across shared interior walls.
MatroidSubdivision subdivide(const LiftFunction& lift);

// Every cell passes the basis exchange axiom. The cells must cover all
// vertices (subdivide output always does).
bool is_matroid_decomposition(const MatroidSubdivision& s);

// Every cell of fine lies (as a vertex set) inside some cell of coarse.
bool coarsens(const MatroidSubdivision& fine, const MatroidSubdivision& coarse);

} // namespace tropcomb

#endif
