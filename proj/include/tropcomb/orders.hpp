#ifndef TROPCOMB_ORDERS_HPP
#define TROPCOMB_ORDERS_HPP

#include <optional>

#include "tropcomb/monomial.hpp"
#include "tropcomb/weights.hpp"

namespace tropcomb {

// Weight-refined monomial order. The leading monomial is the one of minimal
// weight (min convention), ties broken by grevlex-greater. Without a weight
// this is plain grevlex, a global order; with a weight it is only a term
// order degreewise, which is why weighted Gröbner runs require homogeneous
// input.
struct TermOrder {
    std::optional<WeightVector> weight;

    static TermOrder global() { return TermOrder{}; }
    static TermOrder refined_by(WeightVector w) { return TermOrder{std::move(w)}; }

    bool is_global() const { return !weight.has_value(); }

    // True iff a strictly precedes b (a is "more leading").
    bool leads(const Monomial& a, const Monomial& b) const {
        if (weight) {
            Rational wa = tropcomb::weight(a, *weight);
            Rational wb = tropcomb::weight(b, *weight);
            int c = cmp(wa, wb);
            if (c != 0) return c < 0;
        }
        return grevlex_greater(a, b);
    }
};

} // namespace tropcomb

#endif
