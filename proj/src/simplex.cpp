#include "tropcomb/simplex.hpp"

#include "tropcomb/errors.hpp"

namespace tropcomb {

namespace {

struct Tableau {
    int m, n;                    // n = original columns; artificials live at n..n+m-1
    std::vector<std::vector<Rational>> row; // m rows, width n+m+1 (last = rhs)
    std::vector<Rational> obj;               // reduced costs, width n+m+1 (last = -value)
    std::vector<int> basis;                  // m entries, column index

    int width() const { return n + m + 1; }
    int rhs() const { return n + m; }

    void pivot(int p, int q) {
        Rational inv = 1 / row[p][q];
        for (auto& v : row[p]) v *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == p || sgn(row[i][q]) == 0) continue;
            Rational f = row[i][q];
            for (int j = 0; j < width(); ++j) row[i][j] -= f * row[p][j];
        }
        if (sgn(obj[q]) != 0) {
            Rational f = obj[q];
            for (int j = 0; j < width(); ++j) obj[j] -= f * row[p][j];
        }
        basis[p] = q;
    }

    // Bland: entering = lowest column index with positive reduced cost among
    // allowed columns; leaving = min ratio, ties by lowest basis label.
    // Returns true at optimum, throws on unbounded if ray output is null.
    bool run(int allowed_cols, std::vector<Rational>* ray_out) {
        while (true) {
            int q = -1;
            for (int j = 0; j < allowed_cols; ++j)
                if (sgn(obj[j]) > 0) {
                    q = j;
                    break;
                }
            if (q < 0) return true;
            int p = -1;
            Rational best;
            for (int i = 0; i < m; ++i) {
                if (sgn(row[i][q]) <= 0) continue;
                Rational ratio = row[i][rhs()] / row[i][q];
                if (p < 0 || ratio < best || (ratio == best && basis[i] < basis[p])) {
                    p = i;
                    best = ratio;
                }
            }
            if (p < 0) {
                if (!ray_out) throw InternalError("simplex: unexpected unbounded phase");
                ray_out->assign(static_cast<std::size_t>(n), Rational(0));
                (*ray_out)[static_cast<std::size_t>(q)] = 1;
                for (int i = 0; i < m; ++i)
                    if (basis[i] < n) (*ray_out)[static_cast<std::size_t>(basis[i])] = -row[i][q];
                return false;
            }
            pivot(p, q);
        }
    }
};

void verify_feasible(const StandardForm& lp, const std::vector<Rational>& z) {
    for (const auto& v : z)
        if (sgn(v) < 0) throw InternalError("simplex: negative entry in solution");
    for (int i = 0; i < lp.m; ++i) {
        Rational acc(0);
        for (int j = 0; j < lp.n; ++j)
            if (sgn(lp.A[i][j]) != 0) acc += lp.A[i][j] * z[static_cast<std::size_t>(j)];
        if (acc != lp.b[static_cast<std::size_t>(i)])
            throw InternalError("simplex: solution violates a constraint");
    }
}

} // namespace

StandardResult solve_standard(const StandardForm& lp) {
    if (static_cast<int>(lp.A.size()) != lp.m || static_cast<int>(lp.b.size()) != lp.m ||
        static_cast<int>(lp.c.size()) != lp.n)
        throw DimensionError("simplex: inconsistent program dimensions");
    for (const auto& r : lp.A)
        if (static_cast<int>(r.size()) != lp.n)
            throw DimensionError("simplex: inconsistent row width");

    Tableau t;
    t.m = lp.m;
    t.n = lp.n;
    t.basis.resize(static_cast<std::size_t>(lp.m));
    t.row.assign(static_cast<std::size_t>(lp.m),
                 std::vector<Rational>(static_cast<std::size_t>(t.width()), Rational(0)));
    std::vector<int> flip(static_cast<std::size_t>(lp.m), 1);
    for (int i = 0; i < lp.m; ++i) {
        int s = sgn(lp.b[static_cast<std::size_t>(i)]) < 0 ? -1 : 1;
        flip[static_cast<std::size_t>(i)] = s;
        for (int j = 0; j < lp.n; ++j) t.row[i][j] = s * lp.A[i][j];
        t.row[i][t.n + i] = 1;
        t.row[i][t.rhs()] = s * lp.b[static_cast<std::size_t>(i)];
        t.basis[static_cast<std::size_t>(i)] = t.n + i;
    }

    // Phase 1: maximize -sum(artificials); price out the basic artificials.
    t.obj.assign(static_cast<std::size_t>(t.width()), Rational(0));
    for (int i = 0; i < t.m; ++i)
        for (int j = 0; j < t.width(); ++j) t.obj[static_cast<std::size_t>(j)] += t.row[i][j];
    for (int i = 0; i < t.m; ++i) t.obj[static_cast<std::size_t>(t.n + i)] = 0;

    t.run(t.n, nullptr); // bounded: objective <= 0

    Rational phase1 = -t.obj[static_cast<std::size_t>(t.rhs())];
    StandardResult res;
    if (sgn(phase1) != 0) {
        // Farkas from the phase-1 duals: y_i = -1 - reduced_cost(artificial i),
        // then f = -y, unflipping the rows that were negated.
        res.status = LpStatus::Infeasible;
        res.farkas.resize(static_cast<std::size_t>(lp.m));
        for (int i = 0; i < lp.m; ++i) {
            Rational yi = Rational(-1) - t.obj[static_cast<std::size_t>(t.n + i)];
            res.farkas[static_cast<std::size_t>(i)] = -yi * flip[static_cast<std::size_t>(i)];
        }
        // verify: f.A <= 0 and f.b > 0
        for (int j = 0; j < lp.n; ++j) {
            Rational acc(0);
            for (int i = 0; i < lp.m; ++i)
                if (sgn(lp.A[i][j]) != 0) acc += res.farkas[static_cast<std::size_t>(i)] * lp.A[i][j];
            if (sgn(acc) > 0) throw InternalError("simplex: bad Farkas certificate");
        }
        Rational fb(0);
        for (int i = 0; i < lp.m; ++i) fb += res.farkas[static_cast<std::size_t>(i)] * lp.b[static_cast<std::size_t>(i)];
        if (sgn(fb) <= 0) throw InternalError("simplex: bad Farkas certificate");
        return res;
    }

    // Drive basic artificials out where possible; all-zero rows are redundant
    // constraints and their artificials stay pinned at zero.
    for (int i = 0; i < t.m; ++i) {
        if (t.basis[static_cast<std::size_t>(i)] < t.n) continue;
        int q = -1;
        for (int j = 0; j < t.n; ++j)
            if (sgn(t.row[i][j]) != 0) {
                q = j;
                break;
            }
        if (q >= 0) t.pivot(i, q);
    }

    // Phase 2 objective.
    t.obj.assign(static_cast<std::size_t>(t.width()), Rational(0));
    for (int j = 0; j < t.n; ++j) t.obj[static_cast<std::size_t>(j)] = lp.c[static_cast<std::size_t>(j)];
    for (int i = 0; i < t.m; ++i) {
        int bj = t.basis[static_cast<std::size_t>(i)];
        if (bj >= t.n) continue; // artificial basic: cost 0
        Rational cb = lp.c[static_cast<std::size_t>(bj)];
        if (sgn(cb) == 0) continue;
        for (int j = 0; j < t.width(); ++j) t.obj[static_cast<std::size_t>(j)] -= cb * t.row[i][j];
    }

    std::vector<Rational> ray;
    bool optimal = t.run(t.n, &ray);

    auto basic_point = [&]() {
        std::vector<Rational> z(static_cast<std::size_t>(lp.n), Rational(0));
        for (int i = 0; i < t.m; ++i)
            if (t.basis[static_cast<std::size_t>(i)] < t.n)
                z[static_cast<std::size_t>(t.basis[static_cast<std::size_t>(i)])] = t.row[i][t.rhs()];
        return z;
    };

    if (!optimal) {
        res.status = LpStatus::Unbounded;
        res.z = basic_point();
        res.ray = std::move(ray);
        verify_feasible(lp, res.z);
        for (const auto& v : res.ray)
            if (sgn(v) < 0) throw InternalError("simplex: bad ray (negative entry)");
        Rational cd(0);
        for (int j = 0; j < lp.n; ++j) cd += lp.c[static_cast<std::size_t>(j)] * res.ray[static_cast<std::size_t>(j)];
        if (sgn(cd) <= 0) throw InternalError("simplex: bad ray (no objective increase)");
        for (int i = 0; i < lp.m; ++i) {
            Rational acc(0);
            for (int j = 0; j < lp.n; ++j)
                if (sgn(lp.A[i][j]) != 0) acc += lp.A[i][j] * res.ray[static_cast<std::size_t>(j)];
            if (sgn(acc) != 0) throw InternalError("simplex: bad ray (leaves the affine hull)");
        }
        return res;
    }

    res.status = LpStatus::Optimal;
    res.z = basic_point();
    verify_feasible(lp, res.z);
    res.value = 0;
    for (int j = 0; j < lp.n; ++j)
        if (sgn(lp.c[static_cast<std::size_t>(j)]) != 0)
            res.value += lp.c[static_cast<std::size_t>(j)] * res.z[static_cast<std::size_t>(j)];

    // Dual from the artificial columns: y_i = -reduced_cost(artificial i),
    // unflipped. Strong duality is checked exactly.
    res.y.resize(static_cast<std::size_t>(lp.m));
    for (int i = 0; i < lp.m; ++i)
        res.y[static_cast<std::size_t>(i)] =
            -t.obj[static_cast<std::size_t>(t.n + i)] * flip[static_cast<std::size_t>(i)];
    for (int j = 0; j < lp.n; ++j) {
        Rational acc(0);
        for (int i = 0; i < lp.m; ++i)
            if (sgn(lp.A[i][j]) != 0) acc += res.y[static_cast<std::size_t>(i)] * lp.A[i][j];
        if (acc < lp.c[static_cast<std::size_t>(j)])
            throw InternalError("simplex: dual infeasible");
    }
    Rational yb(0);
    for (int i = 0; i < lp.m; ++i) yb += res.y[static_cast<std::size_t>(i)] * lp.b[static_cast<std::size_t>(i)];
    if (yb != res.value) throw InternalError("simplex: strong duality violated");
    return res;
}

} // namespace tropcomb
