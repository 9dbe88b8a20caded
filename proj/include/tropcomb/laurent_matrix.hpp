#ifndef TROPCOMB_LAURENT_MATRIX_HPP
#define TROPCOMB_LAURENT_MATRIX_HPP

#include <vector>

#include "tropcomb/hypersimplex.hpp"
#include "tropcomb/laurent.hpp"

namespace tropcomb {

// r x n matrix over the Laurent series field surrogate Q(t); the witness of
// realizability for a tropical Plücker vector.
struct LaurentMatrix {
    int r = 0;
    int n = 0;
    std::vector<std::vector<LaurentPoly>> entries; // r rows, n columns

    void check() const;
};

// Maximal minor on the given sorted column subset (1-based).
LaurentPoly laurent_minor(const LaurentMatrix& m, const std::vector<int>& cols);

// Lift I -> valuation of the I-th maximal minor. Throws NotGeneralError
// naming the first column set whose minor vanishes identically.
LiftFunction pluecker_valuation(const LaurentMatrix& m);

} // namespace tropcomb

#endif
