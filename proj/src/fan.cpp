#include "tropcomb/fan.hpp"

#include "tropcomb/errors.hpp"
#include "tropcomb/linalg.hpp"
#include "tropcomb/lp.hpp"

namespace tropcomb {

SupportReport support_contains(const Fan& f, const std::vector<WeightVector>& samples) {
    if (samples.empty()) throw PreconditionError("support_contains: no samples given");
    SupportReport rep;
    rep.all_contained = true;
    for (const auto& s : samples) {
        s.check_dim(f.dim);
        SampleReport sr;
        sr.sample = s;
        for (std::size_t k = 0; k < f.cones.size(); ++k) {
            if (f.cones[k].dim != f.dim) throw DimensionError("support_contains: cone dimension mismatch");
            if (cone_contains(f.cones[k], s)) {
                sr.contained = true;
                sr.witness_cone_index = static_cast<int>(k);
                break;
            }
        }
        if (!sr.contained) rep.all_contained = false;
        rep.samples.push_back(std::move(sr));
    }
    return rep;
}

int cone_dim(const ConeH& c) {
    const int n = c.dim;
    std::vector<std::vector<Rational>> eq_rows;
    for (const auto& e : c.equalities) {
        e.check_dim(n);
        eq_rows.push_back(e.entries());
    }

    // An inequality f.x <= 0 is an implicit equality iff max -f.x over the
    // cone is 0 (the origin makes the optimum nonnegative).
    for (std::size_t k = 0; k < c.inequalities.size(); ++k) {
        LinearProgram lp;
        lp.nvars = n;
        WeightVector obj(n);
        for (int i = 0; i < n; ++i) obj[i] = -c.inequalities[k][i];
        lp.objective = obj;
        for (const auto& e : c.equalities)
            lp.constraints.push_back(LinearConstraint{e, Rel::Eq, Rational(0)});
        for (const auto& f : c.inequalities)
            lp.constraints.push_back(LinearConstraint{f, Rel::Le, Rational(0)});
        LpSolution sol = lp_solve(lp);
        if (sol.status == LpStatus::Optimal && sgn(sol.value) == 0)
            eq_rows.push_back(c.inequalities[k].entries());
    }
    if (eq_rows.empty()) return n;
    return n - rank_rational(std::move(eq_rows));
}

} // namespace tropcomb
