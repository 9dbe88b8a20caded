#ifndef TROPCOMB_GROEBNER_HPP
#define TROPCOMB_GROEBNER_HPP

#include <vector>

#include "tropcomb/ideal.hpp"
#include "tropcomb/orders.hpp"
#include "tropcomb/polynomial.hpp"
#include "tropcomb/weights.hpp"

namespace tropcomb {

// Reduced Gröbner basis: auto-reduced, monic leads, uniquely determined by
// (ideal, order). Elements are stored canonically sorted by leading monomial.
class GroebnerBasis {
public:
    GroebnerBasis(std::vector<Polynomial> elements, TermOrder order)
        : elements_(std::move(elements)), order_(std::move(order)) {}

    const std::vector<Polynomial>& elements() const { return elements_; }
    const TermOrder& order() const { return order_; }
    bool reduced() const { return true; }

private:
    std::vector<Polynomial> elements_;
    TermOrder order_;
};

// Buchberger with Gebauer-Möller pair pruning, then full inter-reduction.
// With a weight in the order the input must be homogeneous (the weighted
// comparison is only a term order degreewise); otherwise the run would not
// terminate in general, so it is rejected up front.
GroebnerBasis reduced_gb(const Ideal& I, const TermOrder& ord);

// Leading monomial of f under ord. Throws on zero input.
Monomial leading_monomial(const Polynomial& f, const TermOrder& ord);

// Full normal form of f modulo gb (every term reduced).
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& ord);

// Ideal generated by the initial forms of a reduced weight-refined basis;
// this generates in_w(I).
Ideal initial_ideal(const Ideal& I, const WeightVector& w);

// Structural comparison of reduced bases under the fixed global order.
bool ideal_equal(const Ideal& A, const Ideal& B);

// Whether some monomial lies in I, decided by Rabinowitsch saturation: adjoin
// u with the generator 1 - u*x_1*...*x_N and test whether 1 lands in the
// extended ideal.
bool contains_monomial(const Ideal& I);

// w lies in the tropical variety of I iff in_w(I) contains no monomial.
bool in_tropical_variety(const Ideal& I, const WeightVector& w);

// Closed convex polyhedral cone {x : e.x = 0 for all equalities,
// f.x <= 0 for all inequalities}. Functionals are primitive integer vectors
// stored as rational weight vectors.
struct ConeH {
    int dim = 0;
    std::vector<WeightVector> equalities;
    std::vector<WeightVector> inequalities;
};

// Closure of the set of weight vectors giving the same initial forms on the
// reduced w-basis: equalities among the initial supports, inequalities
// initial <= non-initial. w itself always satisfies the result.
ConeH groebner_cone(const Ideal& I, const WeightVector& w);

bool cone_contains(const ConeH& c, const WeightVector& w);

} // namespace tropcomb

#endif
