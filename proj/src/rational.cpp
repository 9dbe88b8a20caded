#include "tropcomb/rational.hpp"

#include "tropcomb/errors.hpp"

namespace tropcomb {

namespace {

bool is_integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_token(text))
            throw FormatError("rational: bad integer '" + std::string(text) + "'");
        return Rational(Integer(std::string(text)));
    }
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw FormatError("rational: bad fraction '" + std::string(text) + "'");
    Integer p(std::string(num));
    Integer q(std::string(den));
    if (sgn(q) == 0) throw FormatError("rational: zero denominator in '" + std::string(text) + "'");
    if (sgn(q) < 0) throw FormatError("rational: denominator must be positive in '" + std::string(text) + "'");
    Integer g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (sgn(p) != 0 && g != 1)
        throw FormatError("rational: unreduced fraction '" + std::string(text) + "'");
    if (sgn(p) == 0 && q != 1)
        throw FormatError("rational: unreduced fraction '" + std::string(text) + "'");
    Rational r;
    mpq_set_num(r.get_mpq_t(), p.get_mpz_t());
    mpq_set_den(r.get_mpq_t(), q.get_mpz_t());
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

} // namespace tropcomb
