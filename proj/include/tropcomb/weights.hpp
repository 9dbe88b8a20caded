#ifndef TROPCOMB_WEIGHTS_HPP
#define TROPCOMB_WEIGHTS_HPP

#include <vector>

#include "tropcomb/errors.hpp"
#include "tropcomb/monomial.hpp"
#include "tropcomb/rational.hpp"

namespace tropcomb {

// Rational weight vector indexed by ring variables. For Plücker rings the
// index set is the set of r-subsets in lexicographic order.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(int dim) : entries_(static_cast<std::size_t>(dim), Rational(0)) {}
    explicit WeightVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

    int dim() const { return static_cast<int>(entries_.size()); }
    const Rational& operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    Rational& operator[](int i) { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<Rational>& entries() const { return entries_; }

    bool operator==(const WeightVector& o) const { return entries_ == o.entries_; }

    WeightVector operator+(const WeightVector& o) const {
        check_dim(o.dim());
        WeightVector w(*this);
        for (int i = 0; i < dim(); ++i) w[i] += o[i];
        return w;
    }

    WeightVector operator-(const WeightVector& o) const {
        check_dim(o.dim());
        WeightVector w(*this);
        for (int i = 0; i < dim(); ++i) w[i] -= o[i];
        return w;
    }

    WeightVector operator*(const Rational& s) const {
        WeightVector w(*this);
        for (auto& e : w.entries_) e *= s;
        return w;
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (sgn(e) != 0) return false;
        return true;
    }

    void check_dim(int d) const {
        if (dim() != d) throw DimensionError("weight vector: dimension mismatch");
    }

private:
    std::vector<Rational> entries_;
};

// Dot product of a monomial's exponent vector with a weight vector.
inline Rational weight(const Monomial& m, const WeightVector& w) {
    w.check_dim(m.nvars());
    Rational acc(0);
    for (int i = 0; i < m.nvars(); ++i) {
        int e = m.exp(i);
        if (e != 0) acc += Rational(e) * w[i];
    }
    return acc;
}

} // namespace tropcomb

#endif
