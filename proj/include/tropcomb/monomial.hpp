#ifndef TROPCOMB_MONOMIAL_HPP
#define TROPCOMB_MONOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tropcomb/errors.hpp"

namespace tropcomb {

// Dense exponent vector. Variable counts stay small here (<= 70 for the
// Plücker rings we care about), so dense storage wins over any sparse scheme.
class Monomial {
public:
    // The constant monomial 1 in a ring with nvars variables.
    explicit Monomial(int nvars) : exps_(static_cast<std::size_t>(nvars), 0), degree_(0) {
        if (nvars < 0) throw DimensionError("monomial: negative variable count");
    }

    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)), degree_(0) {
        for (int e : exps_) {
            if (e < 0) throw FormatError("monomial: negative exponent");
            degree_ += e;
        }
    }

    int nvars() const { return static_cast<int>(exps_.size()); }
    int exp(int i) const { return exps_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& exps() const { return exps_; }
    int total_degree() const { return degree_; }
    bool is_constant() const { return degree_ == 0; }

    Monomial operator*(const Monomial& o) const {
        check_same_ring(o);
        Monomial m(*this);
        for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] += o.exps_[i];
        m.degree_ += o.degree_;
        return m;
    }

    bool divides(const Monomial& o) const {
        check_same_ring(o);
        if (degree_ > o.degree_) return false;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > o.exps_[i]) return false;
        return true;
    }

    // this / o; requires o.divides(*this).
    Monomial quotient_by(const Monomial& o) const {
        check_same_ring(o);
        Monomial m(*this);
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            m.exps_[i] -= o.exps_[i];
            if (m.exps_[i] < 0) throw UndefinedInputError("monomial: quotient is not a monomial");
        }
        m.degree_ -= o.degree_;
        return m;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        a.check_same_ring(b);
        Monomial m(a);
        m.degree_ = 0;
        for (std::size_t i = 0; i < m.exps_.size(); ++i) {
            if (b.exps_[i] > m.exps_[i]) m.exps_[i] = b.exps_[i];
            m.degree_ += m.exps_[i];
        }
        return m;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        a.check_same_ring(b);
        for (std::size_t i = 0; i < a.exps_.size(); ++i)
            if (a.exps_[i] > 0 && b.exps_[i] > 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

private:
    void check_same_ring(const Monomial& o) const {
        if (exps_.size() != o.exps_.size())
            throw DimensionError("monomial: variable counts differ");
    }

    std::vector<int> exps_;
    int degree_;
};

// Graded lexicographic: degree first, then lex on the exponent vector.
// This is the canonical storage order inside Polynomial.
inline bool gradedlex_greater(const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() > b.total_degree();
    const auto& ea = a.exps();
    const auto& eb = b.exps();
    for (std::size_t i = 0; i < ea.size(); ++i)
        if (ea[i] != eb[i]) return ea[i] > eb[i];
    return false;
}

// Graded reverse lexicographic, the fixed global tie-break order: higher
// degree wins; on equal degree the one with the smaller exponent at the last
// differing position wins.
inline bool grevlex_greater(const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() > b.total_degree();
    const auto& ea = a.exps();
    const auto& eb = b.exps();
    for (std::size_t i = ea.size(); i-- > 0;)
        if (ea[i] != eb[i]) return ea[i] < eb[i];
    return false;
}

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (int e : m.exps()) {
            h ^= static_cast<std::uint64_t>(e) + 0x9e3779b97f4a7c15ULL;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace tropcomb

#endif
