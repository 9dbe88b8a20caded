#include "tropcomb/facemaps.hpp"

#include <algorithm>

#include "tropcomb/errors.hpp"

namespace tropcomb {

namespace {

// Map an index of {1..n-1} back into {1..n} with i0 removed.
int unrelabel(int j, int i0) { return j < i0 ? j : j + 1; }

} // namespace

LiftFunction face_restrict(const LiftFunction& lift, int i0, int value) {
    const Hypersimplex& hs = lift.domain();
    if (i0 < 1 || i0 > hs.n) throw DimensionError("face_restrict: index out of range");
    if (value != 0 && value != 1) throw FormatError("face_restrict: value must be 0 or 1");

    if (value == 1) {
        if (hs.r - 1 < 1) throw EmptyFaceError("face_restrict: x=1 facet of a rank-1 hypersimplex is empty");
        Hypersimplex facet(hs.r - 1, hs.n - 1);
        std::vector<Rational> vals;
        vals.reserve(static_cast<std::size_t>(facet.vertex_count()));
        for (const auto& sub : facet.vertices()) {
            std::vector<int> members;
            members.reserve(static_cast<std::size_t>(hs.r));
            for (int j : sub.members()) members.push_back(unrelabel(j, i0));
            members.push_back(i0);
            vals.push_back(lift.value(BasisSubset(std::move(members), hs.n)));
        }
        return LiftFunction(facet, std::move(vals));
    }

    if (hs.r >= hs.n - 1)
        throw EmptyFaceError("face_restrict: x=0 facet degenerates to a point");
    Hypersimplex facet(hs.r, hs.n - 1);
    std::vector<Rational> vals;
    vals.reserve(static_cast<std::size_t>(facet.vertex_count()));
    for (const auto& sub : facet.vertices()) {
        std::vector<int> members;
        members.reserve(static_cast<std::size_t>(hs.r));
        for (int j : sub.members()) members.push_back(unrelabel(j, i0));
        vals.push_back(lift.value(BasisSubset(std::move(members), hs.n)));
    }
    return LiftFunction(facet, std::move(vals));
}

std::array<Rational, 6> octahedron_values(const LiftFunction& lift, const std::vector<int>& I,
                                          const std::vector<int>& J) {
    const Hypersimplex& hs = lift.domain();
    if (static_cast<int>(I.size()) != 4) throw FormatError("octahedron_values: |I| must be 4");
    if (static_cast<int>(J.size()) != hs.r - 2)
        throw FormatError("octahedron_values: |J| must be r-2");
    std::vector<int> is(I);
    std::sort(is.begin(), is.end());
    for (int v : is)
        if (v < 1 || v > hs.n) throw FormatError("octahedron_values: I element out of range");
    for (int v : J) {
        if (v < 1 || v > hs.n) throw FormatError("octahedron_values: J element out of range");
        if (std::find(is.begin(), is.end(), v) != is.end())
            throw FormatError("octahedron_values: I and J overlap");
    }

    std::array<Rational, 6> out;
    static const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (int k = 0; k < 6; ++k) {
        std::vector<int> members(J);
        members.push_back(is[static_cast<std::size_t>(pairs[k][0])]);
        members.push_back(is[static_cast<std::size_t>(pairs[k][1])]);
        out[static_cast<std::size_t>(k)] = lift.value(BasisSubset(std::move(members), hs.n));
    }
    return out;
}

std::string to_string(OctClass c) {
    switch (c) {
        case OctClass::NoSplit: return "NoSplit";
        case OctClass::SplitA: return "SplitA";
        case OctClass::SplitB: return "SplitB";
        case OctClass::SplitC: return "SplitC";
    }
    throw InternalError("octahedron class: bad enum value");
}

OctClass oct_class_from_string(const std::string& s) {
    if (s == "NoSplit") return OctClass::NoSplit;
    if (s == "SplitA") return OctClass::SplitA;
    if (s == "SplitB") return OctClass::SplitB;
    if (s == "SplitC") return OctClass::SplitC;
    throw FormatError("octahedron class: unknown name '" + s + "'");
}

OctClass octahedron_class(const std::array<Rational, 6>& v) {
    // pair sums over the three diagonals: {12,34}, {13,24}, {14,23}
    Rational s1 = v[0] + v[5];
    Rational s2 = v[1] + v[4];
    Rational s3 = v[2] + v[3];
    if (s1 == s2 && s2 == s3) return OctClass::NoSplit;
    if (s1 == s2 && s1 < s3) return OctClass::SplitC;
    if (s1 == s3 && s1 < s2) return OctClass::SplitB;
    if (s2 == s3 && s2 < s1) return OctClass::SplitA;
    throw NotTropicalError("octahedron: minimum pair sum attained only once");
}

} // namespace tropcomb
