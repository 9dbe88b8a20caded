#include "tropcomb/matroid.hpp"

#include <algorithm>
#include <bit>

#include "tropcomb/linalg.hpp"

namespace tropcomb {

bool is_matroid_masks(const std::vector<std::uint32_t>& bases, int r, int n) {
    if (bases.empty()) return false;
    std::vector<std::uint32_t> sorted(bases);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::uint32_t b : sorted)
        if (std::popcount(b) != r || (b >> n) != 0) throw FormatError("is_matroid: inconsistent subset");
    for (std::uint32_t a : sorted) {
        for (std::uint32_t b : sorted) {
            std::uint32_t rest = a & ~b;
            while (rest) {
                std::uint32_t xbit = rest & (~rest + 1);
                rest ^= xbit;
                bool found = false;
                std::uint32_t cand = b & ~a;
                while (cand) {
                    std::uint32_t ybit = cand & (~cand + 1);
                    cand ^= ybit;
                    if (std::binary_search(sorted.begin(), sorted.end(), (a ^ xbit) | ybit)) {
                        found = true;
                        break;
                    }
                }
                if (!found) return false;
            }
        }
    }
    return true;
}

bool is_matroid(const std::vector<BasisSubset>& bases) {
    if (bases.empty()) throw FormatError("is_matroid: empty basis family");
    int r = bases.front().r();
    int n = bases.front().n();
    std::vector<std::uint32_t> masks;
    masks.reserve(bases.size());
    for (const auto& b : bases) {
        if (b.r() != r || b.n() != n) throw FormatError("is_matroid: mixed (r,n) in basis family");
        masks.push_back(b.mask());
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    return is_matroid_masks(masks, r, n);
}

Matroid::Matroid(int r, int n, std::vector<BasisSubset> bases) : r_(r), n_(n) {
    if (bases.empty()) throw FormatError("matroid: empty basis family");
    masks_.reserve(bases.size());
    for (const auto& b : bases) {
        if (b.r() != r || b.n() != n) throw FormatError("matroid: mixed (r,n) in basis family");
        masks_.push_back(b.mask());
    }
    std::sort(masks_.begin(), masks_.end());
    masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
    if (!is_matroid_masks(masks_, r, n)) throw FormatError("matroid: basis exchange axiom fails");
}

Matroid::Matroid(int r, int n, std::vector<std::uint32_t> masks, bool)
    : r_(r), n_(n), masks_(std::move(masks)) {}

Matroid Matroid::uniform(int r, int n) {
    Hypersimplex hs(r, n);
    return Matroid(r, n, hs.vertices());
}

std::vector<BasisSubset> Matroid::bases() const {
    std::vector<BasisSubset> out;
    out.reserve(masks_.size());
    for (std::uint32_t m : masks_) out.push_back(BasisSubset::from_mask(m, n_));
    return out;
}

bool more_constrained(const Matroid& m, const Matroid& mp) {
    if (m.r() != mp.r() || m.n() != mp.n()) throw DimensionError("more_constrained: (r,n) mismatch");
    if (m.basis_masks().size() >= mp.basis_masks().size()) return false;
    return std::includes(mp.basis_masks().begin(), mp.basis_masks().end(), m.basis_masks().begin(),
                         m.basis_masks().end());
}

namespace {

// Relabel a mask on {1..n} minus i0 down to {1..n-1}.
std::uint32_t squeeze(std::uint32_t mask, int i0) {
    std::uint32_t low = mask & ((1u << (i0 - 1)) - 1);
    std::uint32_t high = mask >> i0;
    return low | (high << (i0 - 1));
}

} // namespace

std::optional<Matroid> deletion(const Matroid& m, int i0) {
    if (i0 < 1 || i0 > m.n()) throw DimensionError("deletion: index out of range");
    if (m.n() - 1 <= m.r()) throw EmptyFaceError("deletion: resulting hypersimplex is degenerate");
    std::vector<std::uint32_t> masks;
    std::uint32_t bit = 1u << (i0 - 1);
    for (std::uint32_t b : m.basis_masks())
        if (!(b & bit)) masks.push_back(squeeze(b, i0));
    if (masks.empty()) return std::nullopt;
    std::sort(masks.begin(), masks.end());
    return Matroid(m.r(), m.n() - 1, std::move(masks), true);
}

std::optional<Matroid> contraction(const Matroid& m, int i0) {
    if (i0 < 1 || i0 > m.n()) throw DimensionError("contraction: index out of range");
    if (m.r() - 1 < 1) throw EmptyFaceError("contraction: rank would drop to zero");
    std::vector<std::uint32_t> masks;
    std::uint32_t bit = 1u << (i0 - 1);
    for (std::uint32_t b : m.basis_masks())
        if (b & bit) masks.push_back(squeeze(b & ~bit, i0));
    if (masks.empty()) return std::nullopt;
    std::sort(masks.begin(), masks.end());
    return Matroid(m.r() - 1, m.n() - 1, std::move(masks), true);
}

bool polytope_full_dimensional(const Matroid& m) {
    const auto& masks = m.basis_masks();
    if (masks.size() < 2) return m.n() == 1;
    std::vector<std::vector<long long>> rows;
    rows.reserve(masks.size() - 1);
    for (std::size_t k = 1; k < masks.size(); ++k) {
        std::vector<long long> row(static_cast<std::size_t>(m.n()), 0);
        for (int i = 0; i < m.n(); ++i) {
            long long a = (masks[k] >> i) & 1u;
            long long b = (masks[0] >> i) & 1u;
            row[static_cast<std::size_t>(i)] = a - b;
        }
        rows.push_back(std::move(row));
    }
    return rank_int(std::move(rows)) == m.n() - 1;
}

} // namespace tropcomb
