#include "tropcomb/laurent.hpp"

#include <sstream>

namespace tropcomb {

LaurentPoly LaurentPoly::constant(const Rational& c) {
    LaurentPoly p;
    if (sgn(c) != 0) p.terms_[0] = c;
    return p;
}

LaurentPoly LaurentPoly::term(int exponent, const Rational& c) {
    LaurentPoly p;
    if (sgn(c) != 0) p.terms_[exponent] = c;
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::map<int, Rational> terms) {
    LaurentPoly p;
    for (auto& [e, c] : terms)
        if (sgn(c) != 0) p.terms_.emplace(e, std::move(c));
    return p;
}

int LaurentPoly::valuation() const {
    if (terms_.empty()) throw UndefinedInputError("valuation: zero Laurent polynomial");
    return terms_.begin()->first;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r(*this);
    for (const auto& [e, c] : o.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_.emplace(e, c);
        } else {
            it->second += c;
            if (sgn(it->second) == 0) r.terms_.erase(it);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Rational prod = ca * cb;
            auto it = r.terms_.find(ea + eb);
            if (it == r.terms_.end()) {
                r.terms_.emplace(ea + eb, std::move(prod));
            } else {
                it->second += prod;
                if (sgn(it->second) == 0) r.terms_.erase(it);
            }
        }
    return r;
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rational a = c;
        if (first) {
            if (sgn(a) < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (sgn(a) < 0 ? " - " : " + ");
            a = abs(a);
        }
        first = false;
        if (e == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << "t";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

} // namespace tropcomb
