#ifndef TROPCOMB_TREES_HPP
#define TROPCOMB_TREES_HPP

#include <vector>

#include "tropcomb/hypersimplex.hpp"
#include "tropcomb/rational.hpp"

namespace tropcomb {

struct TreeEdge {
    int u = 0;
    int v = 0;
    Rational length;
};

// Unrooted tree on leaves 1..leaves; internal nodes get ids above that.
// Internal vertices have degree >= 3, internal edges carry strictly positive
// length, leaf edges may carry any rational length.
struct PhyloTree {
    int leaves = 0;
    int node_count = 0;
    std::vector<TreeEdge> edges;

    bool is_leaf(int node) const { return node >= 1 && node <= leaves; }
    void check() const;

    // Path length between two nodes.
    Rational distance(int a, int b) const;

    // Nontrivial splits, one per internal edge: the sorted leaf side not
    // containing leaf 1, the whole list sorted. Two trees have the same
    // topology iff these match.
    std::vector<std::vector<int>> splits() const;
};

// Four point condition on a Δ(2,n) lift: every octahedron's minimum pair sum
// is attained at least twice. Octahedron failures count as false, never as
// errors.
bool four_point_ok(const LiftFunction& lift);

// Reconstructs the tree whose induced lift -path(i,j) matches the input up
// to lineality; exact cherry picking on the gauge-fixed dissimilarity
// d(i,j) = C - w({i,j}) with C = 1 + max |w|. Zero-length internal edges are
// contracted, so internal edges are strictly positive exactly where the lift
// refines the split. Throws NotTropicalError unless four_point_ok holds.
PhyloTree tree_from_point(const LiftFunction& lift);

// The induced lift w({i,j}) = -path(i,j) of a tree.
LiftFunction lift_from_tree(const PhyloTree& t);

} // namespace tropcomb

#endif
