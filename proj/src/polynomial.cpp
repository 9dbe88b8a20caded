#include "tropcomb/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tropcomb {

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> terms) {
    Polynomial p(nvars);
    for (const auto& t : terms)
        if (t.mono.nvars() != nvars)
            throw DimensionError("polynomial: term in wrong ring");
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return gradedlex_greater(a.mono, b.mono);
    });
    for (auto& t : terms) {
        if (sgn(t.coeff) == 0) continue;
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    if (sgn(c) != 0) p.terms_.push_back(Term{Monomial(nvars), c});
    return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw DimensionError("polynomial: variable index out of range");
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    Polynomial p(nvars);
    p.terms_.push_back(Term{Monomial(std::move(e)), Rational(1)});
    return p;
}

Polynomial Polynomial::monomial_term(Monomial m, Rational c) {
    Polynomial p(m.nvars());
    if (sgn(c) != 0) p.terms_.push_back(Term{std::move(m), std::move(c)});
    return p;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.front().mono.total_degree();
    for (const auto& t : terms_)
        if (t.mono.total_degree() != d) return false;
    return true;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(o);
    Polynomial r(nvars_);
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() ||
            (i < terms_.size() && gradedlex_greater(terms_[i].mono, o.terms_[j].mono))) {
            r.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || gradedlex_greater(o.terms_[j].mono, terms_[i].mono)) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Rational c = terms_[i].coeff + o.terms_[j].coeff;
            if (sgn(c) != 0) r.terms_.push_back(Term{terms_[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(o);
    std::vector<Term> prods;
    prods.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_)
            prods.push_back(Term{a.mono * b.mono, a.coeff * b.coeff});
    return from_terms(nvars_, std::move(prods));
}

Polynomial Polynomial::operator*(const Rational& s) const {
    if (sgn(s) == 0) return Polynomial(nvars_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff *= s;
    return r;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
    check_same_ring(divisor);
    if (divisor.is_zero()) return std::nullopt;
    Polynomial rem(*this);
    std::vector<Term> quot;
    const Term& lead = divisor.terms_.front();
    while (!rem.is_zero()) {
        const Term& rt = rem.terms_.front();
        if (!lead.mono.divides(rt.mono)) return std::nullopt;
        Term q{rt.mono.quotient_by(lead.mono), rt.coeff / lead.coeff};
        rem = rem - divisor * Polynomial::monomial_term(q.mono, q.coeff);
        quot.push_back(std::move(q));
    }
    return from_terms(nvars_, std::move(quot));
}

Polynomial initial_form(const Polynomial& f, const WeightVector& w) {
    if (f.is_zero()) throw UndefinedInputError("initial_form: zero polynomial");
    w.check_dim(f.nvars());
    Rational min_w = weight(f.terms().front().mono, w);
    for (std::size_t i = 1; i < f.terms().size(); ++i) {
        Rational wt = weight(f.terms()[i].mono, w);
        if (wt < min_w) min_w = wt;
    }
    std::vector<Term> keep;
    for (const auto& t : f.terms())
        if (weight(t.mono, w) == min_w) keep.push_back(t);
    return Polynomial::from_terms(f.nvars(), std::move(keep));
}

namespace {

void append_rational(std::ostringstream& out, const Rational& c) {
    out << c.get_str();
}

} // namespace

std::string to_string(const Polynomial& f, const std::vector<std::string>& vars) {
    if (static_cast<int>(vars.size()) != f.nvars())
        throw DimensionError("polynomial print: variable name count mismatch");
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : f.terms()) {
        Rational c = t.coeff;
        if (first) {
            if (sgn(c) < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
            c = abs(c);
        }
        first = false;
        bool printed_coeff = false;
        if (t.mono.is_constant() || c != 1) {
            append_rational(out, c);
            printed_coeff = true;
        }
        bool any_var = false;
        for (int i = 0; i < f.nvars(); ++i) {
            int e = t.mono.exp(i);
            if (e == 0) continue;
            if (printed_coeff || any_var) out << "*";
            any_var = true;
            out << vars[static_cast<std::size_t>(i)];
            if (e > 1) out << "^" << e;
        }
    }
    return out.str();
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;
    const std::vector<std::string>& vars;

    explicit Parser(std::string_view t, const std::vector<std::string>& v) : text(t), vars(v) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    std::string read_number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw FormatError("polynomial parse: expected number");
        return std::string(text.substr(start, pos - start));
    }

    std::string read_ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start) throw FormatError("polynomial parse: expected variable name");
        return std::string(text.substr(start, pos - start));
    }

    int var_index(const std::string& name) {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        throw FormatError("polynomial parse: unknown variable '" + name + "'");
    }

    // term := number ['/' number] ('*' factor)* | factor ('*' factor)*
    Term read_term() {
        std::vector<int> exps(vars.size(), 0);
        Rational coeff(1);
        bool saw_factor = false;
        bool expect_factor = true;
        while (expect_factor) {
            skip_ws();
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                std::string num = read_number();
                std::string token = num;
                if (peek() == '/') {
                    ++pos;
                    token += "/" + read_number();
                }
                coeff *= parse_rational(token);
            } else {
                std::string name = read_ident();
                int idx = var_index(name);
                int e = 1;
                if (peek() == '^') {
                    ++pos;
                    e = std::stoi(read_number());
                }
                exps[static_cast<std::size_t>(idx)] += e;
            }
            saw_factor = true;
            if (peek() == '*') {
                ++pos;
            } else {
                expect_factor = false;
            }
        }
        if (!saw_factor) throw FormatError("polynomial parse: empty term");
        return Term{Monomial(std::move(exps)), std::move(coeff)};
    }
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars) {
    Parser p(text, vars);
    std::vector<Term> terms;
    bool negate = false;
    if (p.peek() == '+') {
        ++p.pos;
    } else if (p.peek() == '-') {
        negate = true;
        ++p.pos;
    }
    if (p.eof()) {
        // allow "0" only through the number path; bare sign is an error
        throw FormatError("polynomial parse: empty input");
    }
    while (true) {
        Term t = p.read_term();
        if (negate) t.coeff = -t.coeff;
        terms.push_back(std::move(t));
        if (p.eof()) break;
        char c = p.peek();
        if (c == '+') {
            negate = false;
            ++p.pos;
        } else if (c == '-') {
            negate = true;
            ++p.pos;
        } else {
            throw FormatError("polynomial parse: unexpected character");
        }
        if (p.eof()) throw FormatError("polynomial parse: dangling sign");
    }
    return Polynomial::from_terms(static_cast<int>(vars.size()), std::move(terms));
}

} // namespace tropcomb
