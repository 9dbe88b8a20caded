#include "tropcomb/laurent_matrix.hpp"

#include "tropcomb/errors.hpp"

namespace tropcomb {

void LaurentMatrix::check() const {
    if (r <= 0 || n <= 0 || r >= n) throw FormatError("laurent matrix: need 0 < r < n");
    if (static_cast<int>(entries.size()) != r) throw DimensionError("laurent matrix: wrong row count");
    for (const auto& row : entries)
        if (static_cast<int>(row.size()) != n) throw DimensionError("laurent matrix: wrong column count");
}

namespace {

LaurentPoly det_recursive(const LaurentMatrix& m, const std::vector<int>& cols, int row,
                          std::vector<bool>& used) {
    if (row == m.r) return LaurentPoly::constant(Rational(1));
    LaurentPoly acc;
    int parity = 0;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        if (used[k]) continue;
        const LaurentPoly& e = m.entries[static_cast<std::size_t>(row)][static_cast<std::size_t>(cols[k] - 1)];
        if (!e.is_zero()) {
            used[k] = true;
            LaurentPoly sub = det_recursive(m, cols, row + 1, used);
            used[k] = false;
            LaurentPoly contrib = e * sub;
            acc = (parity % 2 == 0) ? acc + contrib : acc - contrib;
        }
        ++parity;
    }
    return acc;
}

} // namespace

LaurentPoly laurent_minor(const LaurentMatrix& m, const std::vector<int>& cols) {
    m.check();
    if (static_cast<int>(cols.size()) != m.r) throw DimensionError("laurent minor: need r columns");
    for (int c : cols)
        if (c < 1 || c > m.n) throw DimensionError("laurent minor: column out of range");
    std::vector<bool> used(cols.size(), false);
    return det_recursive(m, cols, 0, used);
}

LiftFunction pluecker_valuation(const LaurentMatrix& m) {
    m.check();
    Hypersimplex hs(m.r, m.n);
    std::vector<Rational> vals;
    vals.reserve(static_cast<std::size_t>(hs.vertex_count()));
    for (const auto& sub : hs.vertices()) {
        LaurentPoly minor = laurent_minor(m, sub.members());
        if (minor.is_zero())
            throw NotGeneralError("pluecker_valuation: minor on columns " + sub.label() +
                                  " vanishes identically");
        vals.emplace_back(minor.valuation());
    }
    return LiftFunction(hs, std::move(vals));
}

} // namespace tropcomb
