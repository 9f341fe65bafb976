#pragma once

// Small dense linear algebra over Q and affine spans of lattice points.

#include "rtrop/puiseux.hpp"

#include <optional>
#include <vector>

namespace rtrop {

using RatVector = std::vector<Rat>;
using RatMatrix = std::vector<RatVector>;

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(RatMatrix& m);

std::size_t rank(RatMatrix m);
Rat determinant(RatMatrix m);

// Some solution of a x = b, or nullopt.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

// Basis of {x : a x = 0}.
std::vector<RatVector> nullspace(const RatMatrix& a, std::size_t columns);

RatVector to_rat(const std::vector<long>& v);

// Dimension of the affine span (-1 for the empty set).
long affine_dimension(const std::vector<std::vector<long>>& points);
bool in_affine_span(const std::vector<std::vector<long>>& points, const std::vector<long>& q);
// Dimension of the linear span.
long linear_dimension(const std::vector<std::vector<long>>& points);
bool in_linear_span(const std::vector<std::vector<long>>& points, const std::vector<long>& q);

}  // namespace rtrop
