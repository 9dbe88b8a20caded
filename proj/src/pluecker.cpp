#include "tropcomb/pluecker.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tropcomb/errors.hpp"

namespace tropcomb {

std::vector<std::string> PlueckerRing::var_names() const {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(nvars()));
    for (const auto& s : hs.vertices()) {
        std::ostringstream out;
        out << "p";
        bool wide = hs.n > 9;
        for (std::size_t i = 0; i < s.members().size(); ++i) {
            if (wide && i) out << "_";
            out << s.members()[i];
        }
        names.push_back(out.str());
    }
    return names;
}

namespace {

// Sign of sorting (alpha..., b) where alpha is sorted and b not in alpha.
int insertion_sign(const std::vector<int>& alpha, int b) {
    int above = 0;
    for (int a : alpha)
        if (a > b) ++above;
    return (above % 2 == 0) ? 1 : -1;
}

} // namespace

Ideal pluecker_ideal(int r, int n) {
    if (r < 2) throw PreconditionError("pluecker_ideal: rank must be at least 2");
    if (r >= n) throw PreconditionError("pluecker_ideal: need r < n");
    PlueckerRing ring(r, n);
    if (ring.nvars() > 70) throw ScaleError("pluecker_ideal: more than 70 Plücker variables");

    Hypersimplex alphas(r - 1 > 0 ? r - 1 : 1, n); // r >= 2 so r-1 >= 1
    Hypersimplex betas(r + 1, n);

    std::set<std::vector<Term>> seen;
    std::vector<Polynomial> gens;
    for (const auto& alpha : alphas.vertices()) {
        for (const auto& beta : betas.vertices()) {
            std::vector<Term> terms;
            const auto& bm = beta.members();
            for (std::size_t k = 0; k < bm.size(); ++k) {
                int b = bm[k];
                if (alpha.contains(b)) continue;
                std::vector<int> first(alpha.members());
                first.push_back(b);
                std::vector<int> second;
                for (std::size_t l = 0; l < bm.size(); ++l)
                    if (l != k) second.push_back(bm[l]);
                int sign = ((k % 2 == 0) ? 1 : -1) * insertion_sign(alpha.members(), b);
                std::vector<int> exps(static_cast<std::size_t>(ring.nvars()), 0);
                exps[static_cast<std::size_t>(ring.var_of(BasisSubset(std::move(first), n)))] += 1;
                exps[static_cast<std::size_t>(ring.var_of(BasisSubset(std::move(second), n)))] += 1;
                terms.push_back(Term{Monomial(std::move(exps)), Rational(sign)});
            }
            Polynomial g = Polynomial::from_terms(ring.nvars(), std::move(terms));
            if (g.is_zero()) continue;
            if (sgn(g.terms().front().coeff) < 0) g = -g;
            if (seen.insert(g.terms()).second) gens.push_back(std::move(g));
        }
    }
    if (gens.empty()) throw InternalError("pluecker_ideal: empty relation family");
    return Ideal(ring.nvars(), std::move(gens));
}

Polynomial three_term(const PlueckerRing& ring, const std::vector<int>& I,
                      const std::vector<int>& J) {
    const Hypersimplex& hs = ring.hs;
    if (static_cast<int>(I.size()) != 4) throw FormatError("three_term: |I| must be 4");
    if (static_cast<int>(J.size()) != hs.r - 2) throw FormatError("three_term: |J| must be r-2");
    std::vector<int> is(I);
    std::sort(is.begin(), is.end());
    for (int v : J)
        if (std::find(is.begin(), is.end(), v) != is.end())
            throw FormatError("three_term: I and J overlap");

    auto var = [&](int a, int b) {
        std::vector<int> members(J);
        members.push_back(is[static_cast<std::size_t>(a)]);
        members.push_back(is[static_cast<std::size_t>(b)]);
        return ring.var_of(BasisSubset(std::move(members), hs.n));
    };
    auto mono = [&](int v1, int v2) {
        std::vector<int> exps(static_cast<std::size_t>(ring.nvars()), 0);
        exps[static_cast<std::size_t>(v1)] += 1;
        exps[static_cast<std::size_t>(v2)] += 1;
        return Monomial(std::move(exps));
    };
    std::vector<Term> terms;
    terms.push_back(Term{mono(var(0, 1), var(2, 3)), Rational(1)});
    terms.push_back(Term{mono(var(0, 2), var(1, 3)), Rational(-1)});
    terms.push_back(Term{mono(var(0, 3), var(1, 2)), Rational(1)});
    return Polynomial::from_terms(ring.nvars(), std::move(terms));
}

} // namespace tropcomb
