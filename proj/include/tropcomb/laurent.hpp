#ifndef TROPCOMB_LAURENT_HPP
#define TROPCOMB_LAURENT_HPP

#include <map>
#include <string>
#include <vector>

#include "tropcomb/errors.hpp"
#include "tropcomb/rational.hpp"

namespace tropcomb {

// Univariate Laurent polynomial in t over the rationals. Exponents are plain
// integers: bounded ramification is enough at this scale, so no Puiseux
// machinery.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly constant(const Rational& c);
    static LaurentPoly term(int exponent, const Rational& c);

    // terms: exponent -> coefficient; zero coefficients are dropped.
    static LaurentPoly from_terms(std::map<int, Rational> terms);

    const std::map<int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Least exponent with nonzero coefficient. Throws on zero input.
    int valuation() const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return terms_ != o.terms_; }

private:
    std::map<int, Rational> terms_;
};

std::string to_string(const LaurentPoly& p);

} // namespace tropcomb

#endif
