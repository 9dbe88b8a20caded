#ifndef TROPCOMB_LINALG_HPP
#define TROPCOMB_LINALG_HPP

#include <optional>
#include <vector>

#include "tropcomb/rational.hpp"

namespace tropcomb {

// Row rank over the rationals; destroys its copy of the input.
int rank_rational(std::vector<std::vector<Rational>> rows);

// Row rank of a small integer matrix (entries stay bounded here: inputs are
// 0/±1 vertex differences).
int rank_int(std::vector<std::vector<long long>> rows);

// One-dimensional integer nullspace of a small integer matrix. Returns the
// primitive kernel vector (first nonzero entry positive) when the nullity is
// exactly one, nullopt otherwise.
std::optional<std::vector<long long>> nullspace_1d_int(std::vector<std::vector<long long>> rows,
                                                       int ncols);

} // namespace tropcomb

#endif
