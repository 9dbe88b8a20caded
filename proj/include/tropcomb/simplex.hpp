#ifndef TROPCOMB_SIMPLEX_HPP
#define TROPCOMB_SIMPLEX_HPP

#include <vector>

#include "tropcomb/rational.hpp"

namespace tropcomb {

enum class LpStatus { Optimal, Infeasible, Unbounded };

// maximize c.z subject to A z = b, z >= 0.
struct StandardForm {
    int m = 0;
    int n = 0;
    std::vector<std::vector<Rational>> A; // m x n
    std::vector<Rational> b;              // m
    std::vector<Rational> c;              // n
};

struct StandardResult {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Rational> z;      // Optimal / Unbounded: a feasible point
    Rational value;               // Optimal
    std::vector<Rational> y;      // Optimal: y.A >= c componentwise, y.b = value
    std::vector<Rational> farkas; // Infeasible: f.A <= 0, f.b > 0
    std::vector<Rational> ray;    // Unbounded: d >= 0, A d = 0, c.d > 0
};

// Two-phase dense tableau simplex with Bland's rule throughout, so cycling is
// impossible even on the heavily degenerate programs regular subdivisions
// produce. All certificates are verified exactly before returning.
StandardResult solve_standard(const StandardForm& lp);

} // namespace tropcomb

#endif
