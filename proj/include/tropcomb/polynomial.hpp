#ifndef TROPCOMB_POLYNOMIAL_HPP
#define TROPCOMB_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropcomb/errors.hpp"
#include "tropcomb/monomial.hpp"
#include "tropcomb/rational.hpp"
#include "tropcomb/weights.hpp"

namespace tropcomb {

struct Term {
    Monomial mono;
    Rational coeff;
};

// Multivariate polynomial with exact rational coefficients. Terms are kept
// in graded-lex descending order with no zero coefficients, so equality is
// structural.
class Polynomial {
public:
    explicit Polynomial(int nvars) : nvars_(nvars) {
        if (nvars < 0) throw DimensionError("polynomial: negative variable count");
    }

    // Merges duplicate monomials, drops zeros, sorts canonically.
    static Polynomial from_terms(int nvars, std::vector<Term> terms);

    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int index);
    static Polynomial monomial_term(Monomial m, Rational c);

    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_monomial() const { return terms_.size() == 1; }

    // Total degree; -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& s) const;

    bool operator==(const Polynomial& o) const {
        if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
                return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Attempts exact division; returns the quotient iff *this == q * divisor.
    std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

    void check_same_ring(const Polynomial& o) const {
        if (nvars_ != o.nvars_) throw DimensionError("polynomial: ring mismatch");
    }

private:
    int nvars_;
    std::vector<Term> terms_;
};

// Sum of the terms of f whose weight is minimal over supp(f). Min convention
// throughout this library: "initial" always means lowest weight, matching
// valuation as the minimal exponent.
Polynomial initial_form(const Polynomial& f, const WeightVector& w);

// Text rendering / parsing against a list of variable names.
std::string to_string(const Polynomial& f, const std::vector<std::string>& vars);
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars);

} // namespace tropcomb

#endif
