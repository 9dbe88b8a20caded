#include "tropcomb/lp.hpp"

#include "tropcomb/errors.hpp"

namespace tropcomb {

namespace {

void check_program(const LinearProgram& p) {
    if (p.nvars < 0) throw DimensionError("lp: negative variable count");
    p.objective.check_dim(p.nvars);
    for (const auto& c : p.constraints) c.lhs.check_dim(p.nvars);
}

Rational dot(const WeightVector& a, const std::vector<Rational>& x) {
    Rational acc(0);
    for (int i = 0; i < a.dim(); ++i)
        if (sgn(a[i]) != 0) acc += a[i] * x[static_cast<std::size_t>(i)];
    return acc;
}

} // namespace

LpSolution lp_solve(const LinearProgram& p) {
    check_program(p);
    const int n = p.nvars;
    const int m = static_cast<int>(p.constraints.size());

    int slacks = 0;
    for (const auto& c : p.constraints)
        if (c.rel != Rel::Eq) ++slacks;

    StandardForm sf;
    sf.m = m;
    sf.n = 2 * n + slacks;
    sf.A.assign(static_cast<std::size_t>(m),
                std::vector<Rational>(static_cast<std::size_t>(sf.n), Rational(0)));
    sf.b.resize(static_cast<std::size_t>(m));
    sf.c.assign(static_cast<std::size_t>(sf.n), Rational(0));
    int slack_col = 2 * n;
    for (int i = 0; i < m; ++i) {
        const auto& c = p.constraints[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j) {
            sf.A[i][j] = c.lhs[j];
            sf.A[i][n + j] = -c.lhs[j];
        }
        if (c.rel == Rel::Le) sf.A[i][slack_col++] = 1;
        if (c.rel == Rel::Ge) sf.A[i][slack_col++] = -1;
        sf.b[static_cast<std::size_t>(i)] = c.rhs;
    }
    for (int j = 0; j < n; ++j) {
        sf.c[static_cast<std::size_t>(j)] = p.objective[j];
        sf.c[static_cast<std::size_t>(n + j)] = -p.objective[j];
    }

    StandardResult sr = solve_standard(sf);
    LpSolution out;
    out.status = sr.status;

    auto recover_x = [&](const std::vector<Rational>& z) {
        std::vector<Rational> x(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
            x[static_cast<std::size_t>(j)] =
                z[static_cast<std::size_t>(j)] - z[static_cast<std::size_t>(n + j)];
        return x;
    };

    auto check_signs = [&](const std::vector<Rational>& y) {
        for (int i = 0; i < m; ++i) {
            Rel r = p.constraints[static_cast<std::size_t>(i)].rel;
            int s = sgn(y[static_cast<std::size_t>(i)]);
            if (r == Rel::Le && s < 0) throw InternalError("lp: dual sign violated on <= row");
            if (r == Rel::Ge && s > 0) throw InternalError("lp: dual sign violated on >= row");
        }
    };

    auto combination = [&](const std::vector<Rational>& y, int j) {
        Rational acc(0);
        for (int i = 0; i < m; ++i)
            if (sgn(y[static_cast<std::size_t>(i)]) != 0)
                acc += y[static_cast<std::size_t>(i)] * p.constraints[static_cast<std::size_t>(i)].lhs[j];
        return acc;
    };

    if (sr.status == LpStatus::Infeasible) {
        out.farkas.resize(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) out.farkas[static_cast<std::size_t>(i)] = -sr.farkas[static_cast<std::size_t>(i)];
        check_signs(out.farkas);
        for (int j = 0; j < n; ++j)
            if (sgn(combination(out.farkas, j)) != 0)
                throw InternalError("lp: Farkas combination is not zero");
        Rational yb(0);
        for (int i = 0; i < m; ++i)
            yb += out.farkas[static_cast<std::size_t>(i)] * p.constraints[static_cast<std::size_t>(i)].rhs;
        if (sgn(yb) >= 0) throw InternalError("lp: Farkas certificate not separating");
        return out;
    }

    if (sr.status == LpStatus::Unbounded) {
        out.x = recover_x(sr.z);
        out.ray = recover_x(sr.ray);
        Rational od = dot(p.objective, out.ray);
        if (sgn(od) <= 0) throw InternalError("lp: ray does not improve objective");
        for (int i = 0; i < m; ++i) {
            const auto& c = p.constraints[static_cast<std::size_t>(i)];
            int s = sgn(dot(c.lhs, out.ray));
            if (c.rel == Rel::Le && s > 0) throw InternalError("lp: ray leaves <= row");
            if (c.rel == Rel::Ge && s < 0) throw InternalError("lp: ray leaves >= row");
            if (c.rel == Rel::Eq && s != 0) throw InternalError("lp: ray leaves = row");
        }
        return out;
    }

    out.x = recover_x(sr.z);
    out.value = sr.value;
    out.dual = sr.y;
    check_signs(out.dual);
    for (int j = 0; j < n; ++j)
        if (combination(out.dual, j) != p.objective[j])
            throw InternalError("lp: dual combination misses the objective");
    Rational yb(0);
    for (int i = 0; i < m; ++i)
        yb += out.dual[static_cast<std::size_t>(i)] * p.constraints[static_cast<std::size_t>(i)].rhs;
    if (yb != out.value) throw InternalError("lp: strong duality violated");
    // primal feasibility at the original level
    for (const auto& c : p.constraints) {
        Rational lhs = dot(c.lhs, out.x);
        if (c.rel == Rel::Le && lhs > c.rhs) throw InternalError("lp: solution violates <= row");
        if (c.rel == Rel::Ge && lhs < c.rhs) throw InternalError("lp: solution violates >= row");
        if (c.rel == Rel::Eq && lhs != c.rhs) throw InternalError("lp: solution violates = row");
    }
    return out;
}

} // namespace tropcomb
