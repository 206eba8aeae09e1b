#pragma once

#include <optional>
#include <vector>

#include "tropgeo/rational.hpp"

namespace tropgeo {

/// One solution of M x = rhs by exact Gaussian elimination (free variables
/// set to zero), or nullopt when the system is inconsistent.
std::optional<RatVec> solve_linear(std::vector<RatVec> M, RatVec rhs);

/// A nonzero integer vector d with dot(l, d) == 1, or nullopt when the gcd
/// of the entries of l is not 1. The result is reduced deterministically.
std::optional<IntVec> dual_covector(const IntVec& l);

} // namespace tropgeo
