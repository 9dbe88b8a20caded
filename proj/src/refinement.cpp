#include "tropcomb/refinement.hpp"

#include <algorithm>

#include "tropcomb/errors.hpp"
#include "tropcomb/groebner.hpp"
#include "tropcomb/pluecker.hpp"
#include "tropcomb/subdivision.hpp"

namespace tropcomb {

namespace {

// All (I, J) choices: I a 4-subset, J an (r-2)-subset of the complement.
template <typename F>
void for_each_octahedron(int r, int n, F&& fn) {
    Hypersimplex fours(4, n);
    for (const auto& iset : fours.vertices()) {
        std::vector<int> comp;
        for (int v = 1; v <= n; ++v)
            if (!iset.contains(v)) comp.push_back(v);
        if (r == 2) {
            if (fn(iset.members(), std::vector<int>{})) return;
            continue;
        }
        // (r-2)-subsets of comp
        int m = static_cast<int>(comp.size());
        int k = r - 2;
        if (k > m) continue;
        std::vector<int> pick(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::vector<int> J;
            J.reserve(static_cast<std::size_t>(k));
            for (int i : pick) J.push_back(comp[static_cast<std::size_t>(i)]);
            if (fn(iset.members(), J)) return;
            int pos = k - 1;
            while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == m - k + pos) --pos;
            if (pos < 0) break;
            ++pick[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i < k; ++i)
                pick[static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
}

} // namespace

RefinementCertificate check_refinement(const LiftFunction& fine, const LiftFunction& coarse) {
    if (fine.domain() != coarse.domain())
        throw DimensionError("check_refinement: lifts on different hypersimplices");
    const int r = fine.r();
    const int n = fine.n();
    if (r < 2) throw PreconditionError("check_refinement: rank must be at least 2");

    Ideal I = pluecker_ideal(r, n);
    if (!in_tropical_variety(I, fine.as_weight_vector()))
        throw PreconditionError("check_refinement: fine lift is not tropical");
    if (!in_tropical_variety(I, coarse.as_weight_vector()))
        throw PreconditionError("check_refinement: coarse lift is not tropical");

    MatroidSubdivision sf = subdivide(fine);
    MatroidSubdivision sc = subdivide(coarse);
    if (sf == sc) throw PreconditionError("check_refinement: subdivisions are equal, not strictly finer");
    if (!coarsens(sf, sc))
        throw PreconditionError("check_refinement: fine subdivision does not refine the coarse one");

    PlueckerRing ring(r, n);
    RefinementCertificate cert;
    bool found = false;
    for_each_octahedron(r, n, [&](const std::vector<int>& Is, const std::vector<int>& Js) {
        OctClass cf = octahedron_class(octahedron_values(fine, Is, Js));
        OctClass cc = octahedron_class(octahedron_values(coarse, Is, Js));
        if (cf == cc) return false;
        cert.I = Is;
        cert.J = Js;
        cert.class_fine = cf;
        cert.class_coarse = cc;
        Polynomial tt = three_term(ring, Is, Js);
        cert.initial_fine = initial_form(tt, fine.as_weight_vector());
        cert.initial_coarse = initial_form(tt, coarse.as_weight_vector());
        found = true;
        return true;
    });
    if (!found)
        throw NoCertificateError("check_refinement: no octahedron distinguishes the lifts");
    if (cert.initial_fine == cert.initial_coarse)
        throw InternalError("check_refinement: distinct classes but equal initial forms");
    if (ideal_equal(initial_ideal(I, fine.as_weight_vector()),
                    initial_ideal(I, coarse.as_weight_vector())))
        throw InternalError(
            "check_refinement: octahedron certificate found but initial ideals agree");
    return cert;
}

namespace {

bool descend(const Matroid& m, const Matroid& mp, std::vector<std::pair<int, int>>& path) {
    int r = m.r(), n = m.n();
    if (r == 2 && n == 4) return m != mp;

    // candidate moves keeping Δ(2,4) reachable: restriction drops both r and
    // n, the x=0 face drops n only
    for (int value : {1, 0}) {
        if (value == 1 && r - 1 < 2) continue;
        if (value == 0 && (n - 1 < 4 || (n - 1) - r < 2)) continue;
        for (int i0 = 1; i0 <= n; ++i0) {
            std::optional<Matroid> a, b;
            try {
                a = (value == 1) ? contraction(m, i0) : deletion(m, i0);
                b = (value == 1) ? contraction(mp, i0) : deletion(mp, i0);
            } catch (const EmptyFaceError&) {
                continue;
            }
            if (!a || !b) continue;
            if (!more_constrained(*a, *b)) continue;
            path.push_back({i0, value});
            if (descend(*a, *b, path)) return true;
            path.pop_back();
        }
    }
    return false;
}

} // namespace

std::vector<std::pair<int, int>> constrained_descent(const Matroid& m, const Matroid& mp) {
    if (!more_constrained(m, mp))
        throw PreconditionError("constrained_descent: first matroid must be strictly more constrained");
    if (!polytope_full_dimensional(m) || !polytope_full_dimensional(mp))
        throw PreconditionError("constrained_descent: matroid polytopes must be full-dimensional");
    if (m.r() < 2 || m.n() < 4 || m.n() - m.r() < 2)
        throw PreconditionError("constrained_descent: (r,n) cannot reach (2,4)");
    std::vector<std::pair<int, int>> path;
    if (!descend(m, mp, path))
        throw NoDescentError("constrained_descent: no facet path reaches a distinct Δ(2,4) pair");
    return path;
}

} // namespace tropcomb
