#include "tropcomb/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace tropcomb {

namespace {

// Working term: monomial, coefficient, cached weight under the active order.
struct WTerm {
    Monomial m;
    Rational c;
    Rational w;
};

// Terms sorted leading-first under the active order.
using WPoly = std::vector<WTerm>;

struct Engine {
    TermOrder ord;
    bool weighted;

    explicit Engine(TermOrder o) : ord(std::move(o)), weighted(ord.weight.has_value()) {}

    Rational term_weight(const Monomial& m) const {
        return weighted ? weight(m, *ord.weight) : Rational(0);
    }

    // a strictly precedes b
    bool leads(const WTerm& a, const WTerm& b) const {
        if (weighted) {
            int c = cmp(a.w, b.w);
            if (c != 0) return c < 0;
        }
        return grevlex_greater(a.m, b.m);
    }

    WPoly to_wpoly(const Polynomial& f) const {
        WPoly p;
        p.reserve(f.terms().size());
        for (const auto& t : f.terms()) p.push_back(WTerm{t.mono, t.coeff, term_weight(t.mono)});
        std::sort(p.begin(), p.end(), [this](const WTerm& a, const WTerm& b) { return leads(a, b); });
        return p;
    }

    Polynomial from_wpoly(int nvars, const WPoly& p) const {
        std::vector<Term> terms;
        terms.reserve(p.size());
        for (const auto& t : p) terms.push_back(Term{t.m, t.c});
        return Polynomial::from_terms(nvars, std::move(terms));
    }

    // f * c * q, order preserved by multiplicativity.
    WPoly mul(const WPoly& f, const Monomial& q, const Rational& c) const {
        Rational wq = term_weight(q);
        WPoly r;
        r.reserve(f.size());
        for (const auto& t : f) r.push_back(WTerm{t.m * q, t.c * c, t.w + wq});
        return r;
    }

    WPoly sub(const WPoly& a, const WPoly& b) const {
        WPoly r;
        r.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && leads(a[i], b[j]))) {
                r.push_back(a[i++]);
            } else if (i == a.size() || leads(b[j], a[i])) {
                r.push_back(WTerm{b[j].m, -b[j].c, b[j].w});
                ++j;
            } else {
                Rational c = a[i].c - b[j].c;
                if (sgn(c) != 0) r.push_back(WTerm{a[i].m, std::move(c), a[i].w});
                ++i;
                ++j;
            }
        }
        return r;
    }

    static void make_monic(WPoly& f) {
        if (f.empty() || f.front().c == 1) return;
        Rational inv = 1 / f.front().c;
        for (auto& t : f) t.c *= inv;
    }

    // Full normal form against monic reducers; skip >= 0 excludes one reducer.
    WPoly normal_form(WPoly h, const std::vector<WPoly>& basis, int skip = -1) const {
        WPoly out;
        std::size_t pos = 0;
        while (pos < h.size()) {
            const WTerm& lead = h[pos];
            int reducer = -1;
            for (std::size_t k = 0; k < basis.size(); ++k) {
                if (static_cast<int>(k) == skip || basis[k].empty()) continue;
                if (basis[k].front().m.divides(lead.m)) {
                    reducer = static_cast<int>(k);
                    break;
                }
            }
            if (reducer < 0) {
                out.push_back(lead);
                ++pos;
                continue;
            }
            const WPoly& g = basis[static_cast<std::size_t>(reducer)];
            Monomial q = lead.m.quotient_by(g.front().m);
            WPoly tail(h.begin() + static_cast<long>(pos), h.end());
            h = sub(tail, mul(g, q, lead.c));
            pos = 0;
        }
        return out;
    }

    WPoly spoly(const WPoly& f, const WPoly& g) const {
        Monomial l = Monomial::lcm(f.front().m, g.front().m);
        // both inputs monic
        return sub(mul(f, l.quotient_by(f.front().m), Rational(1)),
                   mul(g, l.quotient_by(g.front().m), Rational(1)));
    }
};

struct Pair {
    int i, j;
    Monomial lcm;
    int deg;
};

// Deterministic pair selection: smallest lcm degree, then grevlex-smaller
// lcm, then indices.
bool pair_before(const Pair& a, const Pair& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    if (a.lcm != b.lcm) return grevlex_greater(b.lcm, a.lcm);
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

// Gebauer-Möller update: adds element t to the pair set against basis G,
// pruning old and new pairs.
void update_pairs(std::vector<Pair>& pairs, const std::vector<WPoly>& G, int t) {
    const Monomial& lt = G[static_cast<std::size_t>(t)].front().m;

    std::vector<Pair> fresh;
    for (int i = 0; i < t; ++i) {
        if (G[static_cast<std::size_t>(i)].empty()) continue;
        Monomial l = Monomial::lcm(G[static_cast<std::size_t>(i)].front().m, lt);
        fresh.push_back(Pair{i, t, l, l.total_degree()});
    }

    // Criterion M: drop (i,t) when another new pair's lcm properly divides it.
    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
        if (!keep[a]) continue;
        for (std::size_t b = 0; b < fresh.size(); ++b) {
            if (a == b || !keep[a]) continue;
            if (fresh[b].lcm != fresh[a].lcm && fresh[b].lcm.divides(fresh[a].lcm)) keep[a] = false;
        }
    }
    // Criterion F: among equal lcms keep the first.
    for (std::size_t a = 0; a < fresh.size(); ++a) {
        if (!keep[a]) continue;
        for (std::size_t b = a + 1; b < fresh.size(); ++b) {
            if (keep[b] && fresh[b].lcm == fresh[a].lcm) keep[b] = false;
        }
    }
    // Criterion B (product): coprime leads reduce to zero anyway.
    for (std::size_t a = 0; a < fresh.size(); ++a) {
        if (!keep[a]) continue;
        if (Monomial::coprime(G[static_cast<std::size_t>(fresh[a].i)].front().m, lt)) keep[a] = false;
    }

    // Prune old pairs made redundant by t.
    std::vector<Pair> kept;
    kept.reserve(pairs.size());
    for (auto& p : pairs) {
        const Monomial& li = G[static_cast<std::size_t>(p.i)].front().m;
        const Monomial& lj = G[static_cast<std::size_t>(p.j)].front().m;
        if (lt.divides(p.lcm) && Monomial::lcm(li, lt) != p.lcm && Monomial::lcm(lj, lt) != p.lcm)
            continue;
        kept.push_back(std::move(p));
    }
    pairs = std::move(kept);
    for (std::size_t a = 0; a < fresh.size(); ++a)
        if (keep[a]) pairs.push_back(std::move(fresh[a]));
}

// Core Buchberger loop. If stop_if_unit is set, returns early with {1} as
// soon as a constant enters the basis.
std::vector<WPoly> buchberger(const Engine& eng, std::vector<WPoly> gens, bool stop_if_unit) {
    std::vector<WPoly> G;
    std::vector<Pair> pairs;

    auto add = [&](WPoly h) -> bool {
        Engine::make_monic(h);
        G.push_back(std::move(h));
        update_pairs(pairs, G, static_cast<int>(G.size()) - 1);
        return stop_if_unit && G.back().front().m.is_constant();
    };

    for (auto& g : gens) {
        if (g.empty()) continue;
        WPoly h = eng.normal_form(std::move(g), G);
        if (h.empty()) continue;
        if (add(std::move(h))) return {G.back()};
    }

    while (!pairs.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k)
            if (pair_before(pairs[k], pairs[best])) best = k;
        Pair p = std::move(pairs[best]);
        pairs.erase(pairs.begin() + static_cast<long>(best));

        WPoly s = eng.spoly(G[static_cast<std::size_t>(p.i)], G[static_cast<std::size_t>(p.j)]);
        WPoly h = eng.normal_form(std::move(s), G);
        if (h.empty()) continue;
        if (add(std::move(h))) return {G.back()};
    }
    return G;
}

// Minimalize (no lead divides another lead) and tail-reduce; result is the
// reduced basis, sorted by leading monomial.
std::vector<WPoly> interreduce(const Engine& eng, std::vector<WPoly> G) {
    std::vector<WPoly> minimal;
    for (std::size_t k = 0; k < G.size(); ++k) {
        if (G[k].empty()) continue;
        bool redundant = false;
        for (std::size_t l = 0; l < G.size(); ++l) {
            if (l == k || G[l].empty()) continue;
            const Monomial& mk = G[k].front().m;
            const Monomial& ml = G[l].front().m;
            if (ml.divides(mk) && (ml != mk || l < k)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(std::move(G[k]));
    }
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        WPoly h = eng.normal_form(minimal[k], minimal, static_cast<int>(k));
        Engine::make_monic(h);
        minimal[k] = std::move(h);
    }
    std::sort(minimal.begin(), minimal.end(), [&eng](const WPoly& a, const WPoly& b) {
        return eng.leads(b.front(), a.front());
    });
    return minimal;
}

std::vector<WPoly> reduced_basis_wpoly(const Engine& eng, const Ideal& I, bool stop_if_unit) {
    std::vector<WPoly> gens;
    for (const auto& g : I.generators())
        if (!g.is_zero()) gens.push_back(eng.to_wpoly(g));
    if (gens.empty()) throw UndefinedInputError("reduced_gb: ideal has no nonzero generator");
    auto G = buchberger(eng, std::move(gens), stop_if_unit);
    return interreduce(eng, std::move(G));
}

} // namespace

GroebnerBasis reduced_gb(const Ideal& I, const TermOrder& ord) {
    if (!I.has_nonzero_generator())
        throw UndefinedInputError("reduced_gb: ideal has no nonzero generator");
    if (!ord.is_global() && !I.homogeneous())
        throw UnsupportedInputError(
            "reduced_gb: weight-refined order requires a homogeneous ideal");
    if (ord.weight) ord.weight->check_dim(I.nvars());
    Engine eng(ord);
    auto basis = reduced_basis_wpoly(eng, I, false);
    std::vector<Polynomial> out;
    out.reserve(basis.size());
    for (const auto& g : basis) out.push_back(eng.from_wpoly(I.nvars(), g));
    return GroebnerBasis(std::move(out), ord);
}

Monomial leading_monomial(const Polynomial& f, const TermOrder& ord) {
    if (f.is_zero()) throw UndefinedInputError("leading_monomial: zero polynomial");
    Engine eng(ord);
    return eng.to_wpoly(f).front().m;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    Engine eng(gb.order());
    std::vector<WPoly> basis;
    basis.reserve(gb.elements().size());
    for (const auto& g : gb.elements()) basis.push_back(eng.to_wpoly(g));
    return eng.from_wpoly(f.nvars(), eng.normal_form(eng.to_wpoly(f), basis));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& ord) {
    if (f.is_zero() || g.is_zero()) throw UndefinedInputError("s_polynomial: zero input");
    f.check_same_ring(g);
    Engine eng(ord);
    WPoly wf = eng.to_wpoly(f);
    WPoly wg = eng.to_wpoly(g);
    Engine::make_monic(wf);
    Engine::make_monic(wg);
    return eng.from_wpoly(f.nvars(), eng.spoly(wf, wg));
}

Ideal initial_ideal(const Ideal& I, const WeightVector& w) {
    if (!I.homogeneous()) throw PreconditionError("initial_ideal: ideal must be homogeneous");
    auto gb = reduced_gb(I, TermOrder::refined_by(w));
    std::vector<Polynomial> gens;
    gens.reserve(gb.elements().size());
    for (const auto& g : gb.elements()) gens.push_back(initial_form(g, w));
    return Ideal(I.nvars(), std::move(gens));
}

bool ideal_equal(const Ideal& A, const Ideal& B) {
    if (A.nvars() != B.nvars()) throw DimensionError("ideal_equal: ring mismatch");
    if (!A.homogeneous() || !B.homogeneous())
        throw PreconditionError("ideal_equal: ideals must be homogeneous");
    auto ga = reduced_gb(A, TermOrder::global());
    auto gb = reduced_gb(B, TermOrder::global());
    return ga.elements() == gb.elements();
}

bool contains_monomial(const Ideal& I) {
    if (!I.homogeneous()) throw PreconditionError("contains_monomial: ideal must be homogeneous");
    if (!I.has_nonzero_generator())
        throw UndefinedInputError("contains_monomial: ideal has no nonzero generator");
    // A single-term generator is already a monomial of I.
    for (const auto& g : I.generators())
        if (g.is_monomial()) return true;

    int n = I.nvars();
    std::vector<Polynomial> ext;
    for (const auto& g : I.generators()) {
        if (g.is_zero()) continue;
        std::vector<Term> terms;
        for (const auto& t : g.terms()) {
            std::vector<int> e = t.mono.exps();
            e.push_back(0);
            terms.push_back(Term{Monomial(std::move(e)), t.coeff});
        }
        ext.push_back(Polynomial::from_terms(n + 1, std::move(terms)));
    }
    // 1 - u * x_1 ... x_N
    std::vector<int> prod(static_cast<std::size_t>(n + 1), 1);
    ext.push_back(Polynomial::constant(n + 1, Rational(1)) -
                  Polynomial::monomial_term(Monomial(std::move(prod)), Rational(1)));

    Engine eng{TermOrder::global()};
    std::vector<WPoly> gens;
    for (const auto& g : ext) gens.push_back(eng.to_wpoly(g));
    auto G = buchberger(eng, std::move(gens), true);
    for (const auto& g : G)
        if (!g.empty() && g.front().m.is_constant()) return true;
    return false;
}

bool in_tropical_variety(const Ideal& I, const WeightVector& w) {
    return !contains_monomial(initial_ideal(I, w));
}

namespace {

// Primitive integer functional from an integer vector; returns empty
// optional for the zero vector.
std::optional<WeightVector> primitive_functional(std::vector<long long> v, bool normalize_sign) {
    long long g = 0;
    for (long long x : v) {
        long long a = x < 0 ? -x : x;
        long long b = g;
        while (b != 0) {
            long long t = a % b;
            a = b;
            b = t;
        }
        g = a;
    }
    if (g == 0) return std::nullopt;
    int lead_sign = 0;
    for (long long& x : v) {
        x /= g;
        if (lead_sign == 0 && x != 0) lead_sign = x > 0 ? 1 : -1;
    }
    if (normalize_sign && lead_sign < 0)
        for (long long& x : v) x = -x;
    std::vector<Rational> entries;
    entries.reserve(v.size());
    for (long long x : v) entries.emplace_back(static_cast<long>(x));
    return WeightVector(std::move(entries));
}

} // namespace

ConeH groebner_cone(const Ideal& I, const WeightVector& w) {
    if (!I.homogeneous()) throw PreconditionError("groebner_cone: ideal must be homogeneous");
    w.check_dim(I.nvars());
    auto gb = reduced_gb(I, TermOrder::refined_by(w));

    ConeH cone;
    cone.dim = I.nvars();
    std::set<std::vector<Rational>> eq_seen, ineq_seen;
    for (const auto& g : gb.elements()) {
        Polynomial init = initial_form(g, w);
        const Monomial& anchor = init.terms().front().mono;
        for (const auto& t : g.terms()) {
            bool is_initial = false;
            for (const auto& s : init.terms())
                if (s.mono == t.mono) {
                    is_initial = true;
                    break;
                }
            std::vector<long long> diff(static_cast<std::size_t>(I.nvars()), 0);
            for (int i = 0; i < I.nvars(); ++i)
                diff[static_cast<std::size_t>(i)] =
                    static_cast<long long>(is_initial ? t.mono.exp(i) - anchor.exp(i)
                                                      : anchor.exp(i) - t.mono.exp(i));
            auto fn = primitive_functional(std::move(diff), is_initial);
            if (!fn) continue;
            if (is_initial) {
                if (eq_seen.insert(fn->entries()).second) cone.equalities.push_back(std::move(*fn));
            } else {
                if (ineq_seen.insert(fn->entries()).second)
                    cone.inequalities.push_back(std::move(*fn));
            }
        }
    }
    if (!cone_contains(cone, w))
        throw InternalError("groebner_cone: defining weight escaped its own cone");
    return cone;
}

bool cone_contains(const ConeH& c, const WeightVector& w) {
    if (w.dim() != c.dim) throw DimensionError("cone_contains: dimension mismatch");
    auto dot = [&](const WeightVector& f) {
        Rational acc(0);
        for (int i = 0; i < c.dim; ++i)
            if (sgn(f[i]) != 0) acc += f[i] * w[i];
        return acc;
    };
    for (const auto& e : c.equalities)
        if (sgn(dot(e)) != 0) return false;
    for (const auto& f : c.inequalities)
        if (sgn(dot(f)) > 0) return false;
    return true;
}

} // namespace tropcomb
