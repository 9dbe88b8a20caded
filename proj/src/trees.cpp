#include "tropcomb/trees.hpp"

#include <algorithm>
#include <map>

#include "tropcomb/errors.hpp"
#include "tropcomb/facemaps.hpp"

namespace tropcomb {

void PhyloTree::check() const {
    if (leaves < 3) throw FormatError("tree: need at least 3 leaves");
    if (node_count < leaves) throw FormatError("tree: node count below leaf count");
    std::vector<int> degree(static_cast<std::size_t>(node_count) + 1, 0);
    for (const auto& e : edges) {
        if (e.u < 1 || e.u > node_count || e.v < 1 || e.v > node_count || e.u == e.v)
            throw FormatError("tree: bad edge endpoints");
        ++degree[static_cast<std::size_t>(e.u)];
        ++degree[static_cast<std::size_t>(e.v)];
        bool internal = !is_leaf(e.u) && !is_leaf(e.v);
        if (internal && sgn(e.length) <= 0)
            throw FormatError("tree: internal edge length must be positive");
    }
    if (static_cast<int>(edges.size()) != node_count - 1)
        throw FormatError("tree: edge count must be node count - 1");
    for (int v = 1; v <= node_count; ++v) {
        int d = degree[static_cast<std::size_t>(v)];
        if (is_leaf(v) && d != 1) throw FormatError("tree: leaf degree must be 1");
        if (!is_leaf(v) && d < 3) throw FormatError("tree: internal degree must be at least 3");
    }
}

namespace {

std::vector<std::vector<std::pair<int, Rational>>> adjacency(const PhyloTree& t) {
    std::vector<std::vector<std::pair<int, Rational>>> adj(static_cast<std::size_t>(t.node_count) + 1);
    for (const auto& e : t.edges) {
        adj[static_cast<std::size_t>(e.u)].push_back({e.v, e.length});
        adj[static_cast<std::size_t>(e.v)].push_back({e.u, e.length});
    }
    return adj;
}

} // namespace

Rational PhyloTree::distance(int a, int b) const {
    auto adj = adjacency(*this);
    std::vector<bool> visited(static_cast<std::size_t>(node_count) + 1, false);
    std::vector<std::pair<int, Rational>> stack{{a, Rational(0)}};
    visited[static_cast<std::size_t>(a)] = true;
    while (!stack.empty()) {
        auto [node, dist] = stack.back();
        stack.pop_back();
        if (node == b) return dist;
        for (const auto& [next, len] : adj[static_cast<std::size_t>(node)]) {
            if (visited[static_cast<std::size_t>(next)]) continue;
            visited[static_cast<std::size_t>(next)] = true;
            stack.push_back({next, dist + len});
        }
    }
    throw InternalError("tree: disconnected");
}

std::vector<std::vector<int>> PhyloTree::splits() const {
    auto adj = adjacency(*this);
    std::vector<std::vector<int>> out;
    for (const auto& e : edges) {
        if (is_leaf(e.u) || is_leaf(e.v)) continue;
        // leaves on the v side of edge (u,v)
        std::vector<bool> visited(static_cast<std::size_t>(node_count) + 1, false);
        visited[static_cast<std::size_t>(e.u)] = true;
        std::vector<int> stack{e.v};
        visited[static_cast<std::size_t>(e.v)] = true;
        std::vector<int> side;
        while (!stack.empty()) {
            int node = stack.back();
            stack.pop_back();
            if (is_leaf(node)) side.push_back(node);
            for (const auto& [next, len] : adj[static_cast<std::size_t>(node)]) {
                (void)len;
                if (!visited[static_cast<std::size_t>(next)]) {
                    visited[static_cast<std::size_t>(next)] = true;
                    stack.push_back(next);
                }
            }
        }
        std::sort(side.begin(), side.end());
        if (std::find(side.begin(), side.end(), 1) != side.end()) {
            std::vector<int> other;
            for (int l = 1; l <= leaves; ++l)
                if (std::find(side.begin(), side.end(), l) == side.end()) other.push_back(l);
            side = std::move(other);
        }
        out.push_back(std::move(side));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool four_point_ok(const LiftFunction& lift) {
    if (lift.r() != 2) throw FormatError("four_point_ok: defined for Δ(2,n) lifts");
    const int n = lift.n();
    std::vector<int> I(4);
    for (I[0] = 1; I[0] <= n - 3; ++I[0])
        for (I[1] = I[0] + 1; I[1] <= n - 2; ++I[1])
            for (I[2] = I[1] + 1; I[2] <= n - 1; ++I[2])
                for (I[3] = I[2] + 1; I[3] <= n; ++I[3]) {
                    try {
                        octahedron_class(octahedron_values(lift, I, {}));
                    } catch (const NotTropicalError&) {
                        return false;
                    }
                }
    return true;
}

namespace {

struct WorkingTree {
    int leaves;
    int next_id;
    std::vector<TreeEdge> edges;
};

// d over the active node set, reduced by cherry merges.
PhyloTree reconstruct(std::map<std::pair<int, int>, Rational> d, std::vector<int> active,
                      WorkingTree wt) {
    auto dist = [&](int a, int b) -> Rational& {
        return d[{std::min(a, b), std::max(a, b)}];
    };

    while (active.size() > 3) {
        int pick_a = -1, pick_b = -1;
        for (std::size_t ai = 0; ai < active.size() && pick_a < 0; ++ai) {
            for (std::size_t bi = ai + 1; bi < active.size() && pick_a < 0; ++bi) {
                int a = active[ai], b = active[bi];
                // mergeable iff d(a,k) - d(b,k) is constant over the rest
                bool ok = true;
                bool have = false;
                Rational delta;
                for (int k : active) {
                    if (k == a || k == b) continue;
                    Rational diff = dist(a, k) - dist(b, k);
                    if (!have) {
                        delta = diff;
                        have = true;
                    } else if (diff != delta) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    pick_a = a;
                    pick_b = b;
                }
            }
        }
        if (pick_a < 0) throw InternalError("tree reconstruction: no mergeable pair");

        int k0 = -1;
        for (int k : active)
            if (k != pick_a && k != pick_b) {
                k0 = k;
                break;
            }
        Rational delta = dist(pick_a, k0) - dist(pick_b, k0);
        Rational la = (dist(pick_a, pick_b) + delta) / 2;
        Rational lb = dist(pick_a, pick_b) - la;
        int v = wt.next_id++;
        wt.edges.push_back(TreeEdge{pick_a, v, la});
        wt.edges.push_back(TreeEdge{pick_b, v, lb});
        std::vector<int> next_active;
        for (int k : active) {
            if (k == pick_a || k == pick_b) continue;
            dist(v, k) = dist(pick_a, k) - la;
            next_active.push_back(k);
        }
        next_active.push_back(v);
        active = std::move(next_active);
    }

    // base: star on the remaining three
    int a = active[0], b = active[1], c = active[2];
    int center = wt.next_id++;
    Rational xa = (dist(a, b) + dist(a, c) - dist(b, c)) / 2;
    Rational xb = dist(a, b) - xa;
    Rational xc = dist(a, c) - xa;
    wt.edges.push_back(TreeEdge{a, center, xa});
    wt.edges.push_back(TreeEdge{b, center, xb});
    wt.edges.push_back(TreeEdge{c, center, xc});

    PhyloTree t;
    t.leaves = wt.leaves;
    t.node_count = wt.next_id - 1;
    t.edges = std::move(wt.edges);
    return t;
}

// Contract internal edges of length zero; negative internal edges cannot
// occur for four-point inputs.
PhyloTree contract_zero_internal(PhyloTree t) {
    while (true) {
        int found = -1;
        for (std::size_t k = 0; k < t.edges.size(); ++k) {
            const auto& e = t.edges[k];
            if (!t.is_leaf(e.u) && !t.is_leaf(e.v)) {
                if (sgn(e.length) < 0)
                    throw InternalError("tree reconstruction: negative internal edge");
                if (sgn(e.length) == 0) {
                    found = static_cast<int>(k);
                    break;
                }
            }
        }
        if (found < 0) break;
        int keep = t.edges[static_cast<std::size_t>(found)].u;
        int drop = t.edges[static_cast<std::size_t>(found)].v;
        t.edges.erase(t.edges.begin() + found);
        for (auto& e : t.edges) {
            if (e.u == drop) e.u = keep;
            if (e.v == drop) e.v = keep;
        }
        // relabel the last node id down onto drop to keep ids contiguous
        int last = t.node_count;
        if (drop != last) {
            for (auto& e : t.edges) {
                if (e.u == last) e.u = drop;
                if (e.v == last) e.v = drop;
            }
        }
        --t.node_count;
    }
    return t;
}

} // namespace

PhyloTree tree_from_point(const LiftFunction& lift) {
    if (lift.r() != 2) throw FormatError("tree_from_point: defined for Δ(2,n) lifts");
    if (!four_point_ok(lift))
        throw NotTropicalError("tree_from_point: lift violates the four point condition");
    const int n = lift.n();

    Rational maxabs(0);
    for (const auto& v : lift.values())
        if (abs(v) > maxabs) maxabs = abs(v);
    Rational C = maxabs + 1;

    std::map<std::pair<int, int>, Rational> d;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) d[{i, j}] = C - lift.value(BasisSubset({i, j}, n));

    std::vector<int> active(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) active[static_cast<std::size_t>(i - 1)] = i;
    WorkingTree wt{n, n + 1, {}};
    PhyloTree t = contract_zero_internal(reconstruct(std::move(d), std::move(active), std::move(wt)));
    t.check();
    return t;
}

LiftFunction lift_from_tree(const PhyloTree& t) {
    t.check();
    Hypersimplex hs(2, t.leaves);
    std::vector<Rational> vals;
    vals.reserve(static_cast<std::size_t>(hs.vertex_count()));
    for (const auto& sub : hs.vertices())
        vals.push_back(-t.distance(sub.members()[0], sub.members()[1]));
    return LiftFunction(hs, std::move(vals));
}

} // namespace tropcomb
