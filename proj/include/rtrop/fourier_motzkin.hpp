#pragma once

// Exact feasibility of small systems of linear equalities and inequalities
// over Q by substitution and Fourier-Motzkin elimination.

#include "rtrop/qlinalg.hpp"

#include <optional>
#include <vector>

namespace rtrop {

struct LinearConstraint {
    enum class Kind { Equal, AtLeast };
    RatVector coeffs;  // a
    Rat bound;         // a . x == bound  or  a . x >= bound
    Kind kind = Kind::AtLeast;
};

// A feasible point, or nullopt.  Back-substitution prefers 0 and then the
// integer nearest to 0 inside the admissible interval of each variable.
std::optional<RatVector> fm_solve(std::size_t vars, const std::vector<LinearConstraint>& constraints);

}  // namespace rtrop
