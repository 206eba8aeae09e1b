#pragma once

#include <optional>
#include <vector>

#include "tropgeo/rational.hpp"

namespace tropgeo::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
    Status status;
    Rat value;  // objective value when Optimal
    RatVec x;   // optimizer (when Optimal) or feasible witness
};

/// Exact simplex with Bland's rule.
///
/// maximize c.x subject to A[i].x <= b[i], x free in sign.
Result maximize(const std::vector<RatVec>& A, const RatVec& b, const RatVec& c);

/// Feasibility of {x : A[i].x <= b[i]} with a witness point.
std::optional<RatVec> feasible_point(const std::vector<RatVec>& A, const RatVec& b);

/// Feasibility where the rows flagged in `strict` must hold strictly.
/// Decided by maximizing an auxiliary slack eps in [0, 1] added to every
/// strict row; strictly feasible iff the optimum is positive.
std::optional<RatVec> strict_feasible_point(const std::vector<RatVec>& A, const RatVec& b,
                                            const std::vector<bool>& strict);

} // namespace tropgeo::lp
