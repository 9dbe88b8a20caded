#ifndef TROPCOMB_FAN_HPP
#define TROPCOMB_FAN_HPP

#include <vector>

#include "tropcomb/groebner.hpp"
#include "tropcomb/weights.hpp"

namespace tropcomb {

// A bag of cones in a common ambient space. Pairwise face-compatibility is
// neither assumed nor checked; support queries only need the union.
struct Fan {
    int dim = 0;
    std::vector<ConeH> cones;
};

struct SampleReport {
    WeightVector sample;
    bool contained = false;
    int witness_cone_index = -1; // first containing cone, -1 if none
};

struct SupportReport {
    bool all_contained = false;
    std::vector<SampleReport> samples;
};

// Checks each sample against the cones of F. With samples drawn from a
// tropical support (ray generators, interior points), an all-contained
// verdict certifies that F covers the sampled support.
SupportReport support_contains(const Fan& f, const std::vector<WeightVector>& samples);

// Dimension of the cone: ambient dimension minus the rank of the stated plus
// implicit equalities. Implicit equalities are detected exactly by LP.
int cone_dim(const ConeH& c);

} // namespace tropcomb

#endif
