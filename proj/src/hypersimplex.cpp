#include "tropcomb/hypersimplex.hpp"

#include <algorithm>
#include <sstream>

namespace tropcomb {

BasisSubset::BasisSubset(std::vector<int> members, int n) : members_(std::move(members)), n_(n), mask_(0) {
    if (n <= 0 || n > 31) throw FormatError("basis subset: ground set size out of range");
    std::sort(members_.begin(), members_.end());
    for (std::size_t i = 0; i < members_.size(); ++i) {
        int m = members_[i];
        if (m < 1 || m > n) throw FormatError("basis subset: element out of range");
        if (i > 0 && members_[i - 1] == m) throw FormatError("basis subset: repeated element");
        mask_ |= 1u << (m - 1);
    }
    if (members_.empty()) throw FormatError("basis subset: empty subset");
}

bool BasisSubset::contains(int i) const {
    return i >= 1 && i <= n_ && (mask_ & (1u << (i - 1))) != 0;
}

BasisSubset BasisSubset::from_mask(std::uint32_t mask, int n) {
    std::vector<int> members;
    for (int i = 1; i <= n; ++i)
        if (mask & (1u << (i - 1))) members.push_back(i);
    return BasisSubset(std::move(members), n);
}

std::string BasisSubset::label() const {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) out << ",";
        out << members_[i];
    }
    out << "}";
    return out.str();
}

int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long acc = 1;
    k = std::min(k, n - k);
    for (int i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > 1'000'000'000LL) throw ScaleError("binomial: value out of supported range");
    }
    return static_cast<int>(acc);
}

int Hypersimplex::vertex_count() const { return binomial(n, r); }

int Hypersimplex::rank_of(const BasisSubset& s) const {
    if (s.n() != n || s.r() != r) throw DimensionError("hypersimplex: subset has wrong (r,n)");
    // lexicographic rank of the sorted subset
    int rank = 0;
    int prev = 0;
    const auto& mem = s.members();
    for (int i = 0; i < r; ++i) {
        for (int v = prev + 1; v < mem[static_cast<std::size_t>(i)]; ++v)
            rank += binomial(n - v, r - i - 1);
        prev = mem[static_cast<std::size_t>(i)];
    }
    return rank;
}

BasisSubset Hypersimplex::vertex(int index) const {
    if (index < 0 || index >= vertex_count()) throw DimensionError("hypersimplex: vertex index out of range");
    std::vector<int> members;
    int prev = 0;
    int rem = index;
    for (int i = 0; i < r; ++i) {
        int v = prev + 1;
        while (true) {
            int block = binomial(n - v, r - i - 1);
            if (rem < block) break;
            rem -= block;
            ++v;
        }
        members.push_back(v);
        prev = v;
    }
    return BasisSubset(std::move(members), n);
}

std::vector<BasisSubset> Hypersimplex::vertices() const {
    std::vector<BasisSubset> out;
    out.reserve(static_cast<std::size_t>(vertex_count()));
    for (int i = 0; i < vertex_count(); ++i) out.push_back(vertex(i));
    return out;
}

LiftFunction::LiftFunction(Hypersimplex domain, std::vector<Rational> values)
    : hs_(domain), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != hs_.vertex_count())
        throw DimensionError("lift function: value count must equal the vertex count");
}

LiftFunction LiftFunction::zero(Hypersimplex domain) {
    int count = domain.vertex_count();
    return LiftFunction(domain, std::vector<Rational>(static_cast<std::size_t>(count), Rational(0)));
}

LiftFunction LiftFunction::operator+(const LiftFunction& o) const {
    if (hs_ != o.hs_) throw DimensionError("lift function: domain mismatch");
    std::vector<Rational> vals(values_);
    for (std::size_t i = 0; i < vals.size(); ++i) vals[i] += o.values_[i];
    return LiftFunction(hs_, std::move(vals));
}

LiftFunction gauge_lift(const Hypersimplex& hs, const std::vector<Rational>& lambda) {
    if (static_cast<int>(lambda.size()) != hs.n)
        throw DimensionError("gauge lift: need one lambda per ground set element");
    std::vector<Rational> vals;
    vals.reserve(static_cast<std::size_t>(hs.vertex_count()));
    for (const auto& v : hs.vertices()) {
        Rational acc(0);
        for (int i : v.members()) acc += lambda[static_cast<std::size_t>(i - 1)];
        vals.push_back(acc);
    }
    return LiftFunction(hs, std::move(vals));
}

} // namespace tropcomb
