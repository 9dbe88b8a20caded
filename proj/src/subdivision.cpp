#include "tropcomb/subdivision.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "tropcomb/errors.hpp"
#include "tropcomb/linalg.hpp"
#include "tropcomb/simplex.hpp"

namespace tropcomb {

std::vector<BasisSubset> MatroidSubdivision::cell_subsets(std::size_t k) const {
    std::vector<BasisSubset> out;
    for (int idx : cells[k]) out.push_back(domain.vertex(idx));
    return out;
}

Matroid MatroidSubdivision::cell_matroid(std::size_t k) const {
    return Matroid(domain.r, domain.n, cell_subsets(k));
}

MatroidSubdivision MatroidSubdivision::trivial(Hypersimplex hs) {
    std::vector<int> all(static_cast<std::size_t>(hs.vertex_count()));
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return MatroidSubdivision{hs, {std::move(all)}};
}

namespace {

struct VertexData {
    std::vector<std::uint32_t> masks;           // per vertex
    std::vector<std::vector<long long>> coords; // 0/1 vectors
};

VertexData vertex_data(const Hypersimplex& hs) {
    VertexData vd;
    int count = hs.vertex_count();
    vd.masks.reserve(static_cast<std::size_t>(count));
    vd.coords.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        BasisSubset s = hs.vertex(i);
        vd.masks.push_back(s.mask());
        std::vector<long long> c(static_cast<std::size_t>(hs.n), 0);
        for (int m : s.members()) c[static_cast<std::size_t>(m - 1)] = 1;
        vd.coords.push_back(std::move(c));
    }
    return vd;
}

// Locates the full-dimensional cell whose supporting functional the simplex
// basis certifies at p. The LP minimizes the lifted height over convex
// combinations hitting p; its basic dual is a lower-hull support whose tight
// set is a cell containing p. Returns nullopt iff p is outside Δ.
std::optional<std::vector<int>> cell_at_point(const LiftFunction& lift, const VertexData& vd,
                                              const std::vector<Rational>& p) {
    const Hypersimplex& hs = lift.domain();
    const int n = hs.n;
    const int cols = hs.vertex_count();
    StandardForm sf;
    sf.m = n; // n-1 coordinate rows (last coordinate is redundant) + normalization
    sf.n = cols;
    sf.A.assign(static_cast<std::size_t>(sf.m),
                std::vector<Rational>(static_cast<std::size_t>(cols), Rational(0)));
    sf.b.resize(static_cast<std::size_t>(sf.m));
    sf.c.resize(static_cast<std::size_t>(cols));
    for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < n - 1; ++i)
            sf.A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                Rational(vd.coords[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
        sf.A[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(j)] = 1;
        sf.c[static_cast<std::size_t>(j)] = -lift.value_at(j);
    }
    for (int i = 0; i < n - 1; ++i) sf.b[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)];
    sf.b[static_cast<std::size_t>(n - 1)] = 1;

    StandardResult res = solve_standard(sf);
    if (res.status == LpStatus::Infeasible) return std::nullopt;
    if (res.status != LpStatus::Optimal) throw InternalError("cell location LP cannot be unbounded");

    // Supporting functional alpha(x) = -(a.x' + a0) with a = y[0..n-2], a0 = y[n-1];
    // the cell is its tight set.
    std::vector<int> cell;
    for (int j = 0; j < cols; ++j) {
        Rational acc = res.y[static_cast<std::size_t>(n - 1)];
        for (int i = 0; i < n - 1; ++i)
            if (vd.coords[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] != 0)
                acc += res.y[static_cast<std::size_t>(i)];
        if (acc == -lift.value_at(j)) cell.push_back(j);
    }
    return cell;
}

bool full_dimensional(const VertexData& vd, const std::vector<int>& cell, int n) {
    if (cell.size() < static_cast<std::size_t>(n)) return false;
    std::vector<std::vector<long long>> rows;
    rows.reserve(cell.size() - 1);
    const auto& base = vd.coords[static_cast<std::size_t>(cell[0])];
    for (std::size_t k = 1; k < cell.size(); ++k) {
        std::vector<long long> row(static_cast<std::size_t>(n));
        const auto& v = vd.coords[static_cast<std::size_t>(cell[k])];
        for (int i = 0; i < n; ++i)
            row[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)] - base[static_cast<std::size_t>(i)];
        rows.push_back(std::move(row));
    }
    return rank_int(std::move(rows)) == n - 1;
}

struct Facet {
    std::vector<int> tight; // positions in the cell's vertex-index list? no: global vertex indices
};

// All facet vertex sets of conv(cell) found by brute force over candidate
// spanning subsets; vertices are 0/1 so this runs in machine integers.
std::vector<std::vector<int>> cell_facets(const VertexData& vd, const std::vector<int>& cell, int n) {
    std::set<std::vector<int>> facets;
    const int k = static_cast<int>(cell.size());
    const int need = n - 1; // points spanning a candidate wall hyperplane
    std::vector<int> pick(static_cast<std::size_t>(need));
    std::set<std::pair<std::vector<long long>, long long>> seen_planes;

    auto process = [&]() {
        std::vector<std::vector<long long>> rows;
        const auto& v0 = vd.coords[static_cast<std::size_t>(cell[static_cast<std::size_t>(pick[0])])];
        for (int i = 1; i < need; ++i) {
            const auto& vi = vd.coords[static_cast<std::size_t>(cell[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])])];
            std::vector<long long> row(static_cast<std::size_t>(n));
            for (int c = 0; c < n; ++c)
                row[static_cast<std::size_t>(c)] = vi[static_cast<std::size_t>(c)] - v0[static_cast<std::size_t>(c)];
            rows.push_back(std::move(row));
        }
        rows.push_back(std::vector<long long>(static_cast<std::size_t>(n), 1));
        auto g = nullspace_1d_int(std::move(rows), n);
        if (!g) return;
        long long c0 = 0;
        for (int c = 0; c < n; ++c) c0 += (*g)[static_cast<std::size_t>(c)] * v0[static_cast<std::size_t>(c)];
        // orient: cell on the <= side
        int side = 0;
        for (int j = 0; j < k; ++j) {
            const auto& v = vd.coords[static_cast<std::size_t>(cell[static_cast<std::size_t>(j)])];
            long long val = 0;
            for (int c = 0; c < n; ++c) val += (*g)[static_cast<std::size_t>(c)] * v[static_cast<std::size_t>(c)];
            if (val > c0) {
                if (side < 0) return; // both sides: not a face
                side = 1;
            } else if (val < c0) {
                if (side > 0) return;
                side = -1;
            }
        }
        if (side == 0) return; // whole cell on the hyperplane: not proper
        if (side > 0) {
            for (auto& x : *g) x = -x;
            c0 = -c0;
        }
        if (!seen_planes.insert({*g, c0}).second) return;
        std::vector<int> tight;
        for (int j = 0; j < k; ++j) {
            const auto& v = vd.coords[static_cast<std::size_t>(cell[static_cast<std::size_t>(j)])];
            long long val = 0;
            for (int c = 0; c < n; ++c) val += (*g)[static_cast<std::size_t>(c)] * v[static_cast<std::size_t>(c)];
            if (val == c0) tight.push_back(cell[static_cast<std::size_t>(j)]);
        }
        facets.insert(std::move(tight));
    };

    // iterate over need-subsets of {0..k-1}
    for (int i = 0; i < need; ++i) pick[static_cast<std::size_t>(i)] = i;
    if (need > k) return {};
    while (true) {
        process();
        int pos = need - 1;
        while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == k - need + pos) --pos;
        if (pos < 0) break;
        ++pick[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < need; ++i)
            pick[static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i - 1)] + 1;
    }
    return std::vector<std::vector<int>>(facets.begin(), facets.end());
}

// A wall lies on the boundary of Δ iff some coordinate is constant across its
// vertices.
bool wall_on_boundary(const VertexData& vd, const std::vector<int>& wall, int n) {
    for (int i = 0; i < n; ++i) {
        bool all0 = true, all1 = true;
        for (int idx : wall) {
            if (vd.coords[static_cast<std::size_t>(idx)][static_cast<std::size_t>(i)] != 0) all0 = false;
            else all1 = false;
        }
        if (all0 || all1) return true;
    }
    return false;
}

std::vector<Rational> barycenter(const VertexData& vd, const std::vector<int>& idxs, int n) {
    std::vector<Rational> b(static_cast<std::size_t>(n), Rational(0));
    for (int idx : idxs)
        for (int i = 0; i < n; ++i)
            b[static_cast<std::size_t>(i)] += Rational(vd.coords[static_cast<std::size_t>(idx)][static_cast<std::size_t>(i)]);
    Rational inv(1, static_cast<unsigned long>(idxs.size()));
    for (auto& x : b) x *= inv;
    return b;
}

} // namespace

MatroidSubdivision subdivide(const LiftFunction& lift) {
    const Hypersimplex& hs = lift.domain();
    const int n = hs.n;
    VertexData vd = vertex_data(hs);

    // Start from the cell located over the barycenter (any adjacent cell works
    // if the barycenter sits on a wall; the LP basis picks one).
    std::vector<Rational> bary(static_cast<std::size_t>(n), Rational(hs.r, static_cast<unsigned long>(n)));
    auto start = cell_at_point(lift, vd, bary);
    if (!start) throw InternalError("subdivide: barycenter escaped the hypersimplex");
    if (!full_dimensional(vd, *start, n))
        throw InternalError("subdivide: located cell is not full-dimensional");

    std::set<std::vector<int>> seen;
    std::set<std::vector<int>> crossed_walls;
    std::vector<std::vector<int>> queue{*start};
    seen.insert(*start);

    while (!queue.empty()) {
        std::vector<int> cell = std::move(queue.back());
        queue.pop_back();
        std::vector<Rational> cbary = barycenter(vd, cell, n);
        for (const auto& wall : cell_facets(vd, cell, n)) {
            if (wall_on_boundary(vd, wall, n)) continue;
            if (crossed_walls.count(wall)) continue;
            std::vector<Rational> wbary = barycenter(vd, wall, n);
            // step just beyond the wall, halving until we land inside the
            // unique neighbor sharing it
            Rational eps(1, 2);
            bool found = false;
            for (int attempt = 0; attempt < 80; ++attempt) {
                std::vector<Rational> z(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i)
                    z[static_cast<std::size_t>(i)] =
                        wbary[static_cast<std::size_t>(i)] +
                        eps * (wbary[static_cast<std::size_t>(i)] - cbary[static_cast<std::size_t>(i)]);
                auto neigh = cell_at_point(lift, vd, z);
                if (neigh && *neigh != cell &&
                    std::includes(neigh->begin(), neigh->end(), wall.begin(), wall.end())) {
                    crossed_walls.insert(wall);
                    if (!seen.count(*neigh)) {
                        if (!full_dimensional(vd, *neigh, n))
                            throw InternalError("subdivide: neighbor cell is not full-dimensional");
                        seen.insert(*neigh);
                        queue.push_back(std::move(*neigh));
                    }
                    found = true;
                    break;
                }
                eps /= 2;
            }
            if (!found) throw InternalError("subdivide: wall crossing did not converge");
        }
    }

    MatroidSubdivision out{hs, std::vector<std::vector<int>>(seen.begin(), seen.end())};

    // Every vertex sits on the lower hull, so the cells must cover them all.
    std::vector<bool> covered(static_cast<std::size_t>(hs.vertex_count()), false);
    for (const auto& c : out.cells)
        for (int idx : c) covered[static_cast<std::size_t>(idx)] = true;
    for (bool c : covered)
        if (!c) throw InternalError("subdivide: a vertex escaped every cell");
    return out;
}

bool is_matroid_decomposition(const MatroidSubdivision& s) {
    std::vector<bool> covered(static_cast<std::size_t>(s.domain.vertex_count()), false);
    for (const auto& c : s.cells)
        for (int idx : c) covered[static_cast<std::size_t>(idx)] = true;
    for (bool c : covered)
        if (!c) throw PreconditionError("is_matroid_decomposition: cells do not cover the vertices");
    for (std::size_t k = 0; k < s.cells.size(); ++k) {
        std::vector<std::uint32_t> masks;
        masks.reserve(s.cells[k].size());
        for (int idx : s.cells[k]) masks.push_back(s.domain.vertex(idx).mask());
        if (!is_matroid_masks(masks, s.domain.r, s.domain.n)) return false;
    }
    return true;
}

bool coarsens(const MatroidSubdivision& fine, const MatroidSubdivision& coarse) {
    if (fine.domain != coarse.domain) throw DimensionError("coarsens: domain mismatch");
    for (const auto& fc : fine.cells) {
        bool inside_some = false;
        for (const auto& cc : coarse.cells) {
            if (std::includes(cc.begin(), cc.end(), fc.begin(), fc.end())) {
                inside_some = true;
                break;
            }
        }
        if (!inside_some) return false;
    }
    return true;
}

} // namespace tropcomb
