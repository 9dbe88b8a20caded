#ifndef TROPCOMB_IDEAL_HPP
#define TROPCOMB_IDEAL_HPP

#include <vector>

#include "tropcomb/errors.hpp"
#include "tropcomb/polynomial.hpp"

namespace tropcomb {

// Generator list for an ideal in a fixed ring. The homogeneous flag is
// computed on construction; most operations downstream require it.
class Ideal {
public:
    Ideal(int nvars, std::vector<Polynomial> generators)
        : nvars_(nvars), gens_(std::move(generators)) {
        if (gens_.empty()) throw FormatError("ideal: empty generator list");
        homogeneous_ = true;
        for (const auto& g : gens_) {
            if (g.nvars() != nvars_) throw DimensionError("ideal: generator in wrong ring");
            if (!g.is_zero() && !g.is_homogeneous()) homogeneous_ = false;
        }
    }

    int nvars() const { return nvars_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool homogeneous() const { return homogeneous_; }

    bool has_nonzero_generator() const {
        for (const auto& g : gens_)
            if (!g.is_zero()) return true;
        return false;
    }

private:
    int nvars_;
    std::vector<Polynomial> gens_;
    bool homogeneous_;
};

} // namespace tropcomb

#endif
