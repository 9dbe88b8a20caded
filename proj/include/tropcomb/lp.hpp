#ifndef TROPCOMB_LP_HPP
#define TROPCOMB_LP_HPP

#include <vector>

#include "tropcomb/rational.hpp"
#include "tropcomb/simplex.hpp"
#include "tropcomb/weights.hpp"

namespace tropcomb {

enum class Rel { Le, Eq, Ge };

struct LinearConstraint {
    WeightVector lhs;
    Rel rel = Rel::Le;
    Rational rhs;
};

// maximize objective.x over free variables x subject to the constraints.
struct LinearProgram {
    int nvars = 0;
    WeightVector objective;
    std::vector<LinearConstraint> constraints;
};

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Rational> x; // Optimal: an optimal vertex; Unbounded: a feasible point
    Rational value;
    // Optimal: multipliers with sum(y_i a_i) = objective, y_i >= 0 on <=-rows,
    // y_i <= 0 on >=-rows, sum(y_i rhs_i) = value.
    std::vector<Rational> dual;
    // Infeasible: sum(y_i a_i) = 0, same sign conditions, sum(y_i rhs_i) < 0.
    std::vector<Rational> farkas;
    // Unbounded: objective.d > 0, a.d <= 0 on <=-rows, >= 0 on >=-rows, = 0 on =-rows.
    std::vector<Rational> ray;
};

// Exact rational solve via the two-phase simplex core (x split into positive
// and negative parts). Every certificate is re-verified against the original
// program; a failed check throws InternalError rather than returning.
LpSolution lp_solve(const LinearProgram& p);

} // namespace tropcomb

#endif
