#ifndef TROPCOMB_MATROID_HPP
#define TROPCOMB_MATROID_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "tropcomb/hypersimplex.hpp"

namespace tropcomb {

// Basis exchange axiom on a family of r-subsets of {1..n}, given as masks.
bool is_matroid_masks(const std::vector<std::uint32_t>& bases, int r, int n);

bool is_matroid(const std::vector<BasisSubset>& bases);

// Matroid presented by its bases; the exchange axiom is checked on
// construction.
class Matroid {
public:
    Matroid(int r, int n, std::vector<BasisSubset> bases);
    static Matroid uniform(int r, int n);

    int r() const { return r_; }
    int n() const { return n_; }
    const std::vector<std::uint32_t>& basis_masks() const { return masks_; }
    std::vector<BasisSubset> bases() const;
    std::size_t basis_count() const { return masks_.size(); }

    bool operator==(const Matroid& o) const { return r_ == o.r_ && n_ == o.n_ && masks_ == o.masks_; }
    bool operator!=(const Matroid& o) const { return !(*this == o); }

private:
    Matroid(int r, int n, std::vector<std::uint32_t> masks, bool trusted);
    int r_, n_;
    std::vector<std::uint32_t> masks_; // sorted, distinct

    friend std::optional<Matroid> deletion(const Matroid&, int);
    friend std::optional<Matroid> contraction(const Matroid&, int);
};

// Strict inclusion of basis sets, the "more constrained" order. Equivalent to
// strict inclusion of the matroid polytopes.
bool more_constrained(const Matroid& m, const Matroid& mp);

// Bases avoiding i0, ground set relabeled to {1..n-1}; the x_{i0}=0 face.
// Empty when i0 is a coloop.
std::optional<Matroid> deletion(const Matroid& m, int i0);

// Bases through i0 with i0 removed, relabeled; the x_{i0}=1 face. Empty when
// i0 is a loop.
std::optional<Matroid> contraction(const Matroid& m, int i0);

// Whether the matroid polytope is full-dimensional in Δ(r,n) (dimension n-1),
// which is the polytope-side reading of connectedness.
bool polytope_full_dimensional(const Matroid& m);

} // namespace tropcomb

#endif
