#pragma once

#include <map>
#include <optional>

#include "qgr/bigint.hpp"
#include "qgr/rep.hpp"

namespace qgr {

Int gaussian_binomial(int n, int k, long long q);

// Exact number of subrepresentations of m with dimension vector e. lower and
// upper, when given, must be subrepresentations; the count is restricted to
// lower <= N <= upper. Both are validated.
Int count_subreps(const Rep& m, const DimVector& e, const Subspace* lower = nullptr,
                  const Subspace* upper = nullptr);

// Counts for every dimension vector in one sweep. Sink vertices are folded
// in by Gaussian-binomial closed forms, so only non-sink subspaces are
// enumerated; nullopt when that enumeration would exceed budget steps.
std::optional<std::map<DimVector, Int>> count_all_subreps(
    const Rep& m, const Subspace* lower = nullptr, const Subspace* upper = nullptr,
    unsigned long long budget = ~0ull);

} // namespace qgr
