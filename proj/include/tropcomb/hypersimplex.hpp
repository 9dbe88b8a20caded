#ifndef TROPCOMB_HYPERSIMPLEX_HPP
#define TROPCOMB_HYPERSIMPLEX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tropcomb/errors.hpp"
#include "tropcomb/rational.hpp"
#include "tropcomb/weights.hpp"

namespace tropcomb {

// Sorted r-subset of {1..n}; the vertex e_I of the hypersimplex.
class BasisSubset {
public:
    BasisSubset(std::vector<int> members, int n);

    int r() const { return static_cast<int>(members_.size()); }
    int n() const { return n_; }
    const std::vector<int>& members() const { return members_; }
    bool contains(int i) const;

    std::uint32_t mask() const { return mask_; }
    static BasisSubset from_mask(std::uint32_t mask, int n);

    // Lexicographic on sorted member lists.
    bool operator<(const BasisSubset& o) const { return members_ < o.members_; }
    bool operator==(const BasisSubset& o) const { return n_ == o.n_ && members_ == o.members_; }
    bool operator!=(const BasisSubset& o) const { return !(*this == o); }

    std::string label() const; // "{1,3,4}"

private:
    std::vector<int> members_;
    int n_;
    std::uint32_t mask_;
};

// Δ(r,n): combinatorics of the convex hull of the indicator vectors e_I of
// r-subsets of {1..n}. Vertices are indexed by the lexicographic rank of the
// subset, so a LiftFunction's value vector lines up with the Plücker ring's
// variable order.
struct Hypersimplex {
    int r = 0;
    int n = 0;

    Hypersimplex(int r_, int n_) : r(r_), n(n_) {
        if (r <= 0 || n <= r) throw FormatError("hypersimplex: need 0 < r < n");
    }

    int vertex_count() const;
    int rank_of(const BasisSubset& s) const;
    BasisSubset vertex(int index) const;
    std::vector<BasisSubset> vertices() const;

    bool operator==(const Hypersimplex& o) const { return r == o.r && n == o.n; }
    bool operator!=(const Hypersimplex& o) const { return !(*this == o); }
};

int binomial(int n, int k);

// Total rational lift on the vertices of Δ(r,n).
class LiftFunction {
public:
    LiftFunction(Hypersimplex domain, std::vector<Rational> values);

    static LiftFunction zero(Hypersimplex domain);

    const Hypersimplex& domain() const { return hs_; }
    int r() const { return hs_.r; }
    int n() const { return hs_.n; }

    const Rational& value_at(int vertex_index) const {
        return values_[static_cast<std::size_t>(vertex_index)];
    }
    const Rational& value(const BasisSubset& s) const { return values_[static_cast<std::size_t>(hs_.rank_of(s))]; }
    const std::vector<Rational>& values() const { return values_; }

    // Same coordinates viewed as a weight on the Plücker ring.
    WeightVector as_weight_vector() const { return WeightVector(values_); }

    LiftFunction operator+(const LiftFunction& o) const;
    bool operator==(const LiftFunction& o) const { return hs_ == o.hs_ && values_ == o.values_; }

private:
    Hypersimplex hs_;
    std::vector<Rational> values_;
};

// The gauge lift I -> sum_{i in I} lambda_i; the lineality direction along
// which all tropical and subdivision data are invariant.
LiftFunction gauge_lift(const Hypersimplex& hs, const std::vector<Rational>& lambda);

} // namespace tropcomb

#endif
