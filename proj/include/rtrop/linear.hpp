#pragma once

// Affine linear spaces over the Puiseux field: minimal-support forms of the
// row space, membership in the real tropicalization, and exact sampling.

#include "rtrop/signed_trop.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace rtrop {

using KMatrix = std::vector<std::vector<Puiseux>>;

// Fraction-free (Bareiss) elimination; every division is exact.
std::size_t k_rank(KMatrix m);
Puiseux k_determinant(KMatrix m);

struct LinearSystem {
    std::size_t n = 0;
    // Each row holds the coefficients of x_1, ..., x_n and then the constant.
    std::vector<std::vector<Puiseux>> rows;

    void validate() const;
};

struct CircuitForm {
    std::vector<Puiseux> coefficients;  // n + 1 entries, constant last
    std::vector<std::size_t> support;

    KPoly to_kpoly() const;
    friend bool operator==(const CircuitForm&, const CircuitForm&) = default;
};

// Scales a nonzero form to its canonical representative: primitive content,
// least valuation 0, and principal coefficient 1 at the first nonzero entry.
std::vector<Puiseux> normalize_form(const std::vector<Puiseux>& form);

// Throws DomainError naming a dependent row when the rows are not independent.
std::vector<CircuitForm> circuits(const LinearSystem& sys);

struct LinearVerdict {
    bool member = true;
    std::optional<std::size_t> rejecting;  // index into the circuit list
};

LinearVerdict linear_member(const std::vector<CircuitForm>& circuits, const SignedTropPoint& p);

// Deterministic points of the solution set with nonzero coordinates.  A system
// with a unique solution yields that solution once.
std::vector<std::vector<Puiseux>> sample_solutions(const LinearSystem& sys, std::size_t count, std::uint64_t seed);

}  // namespace rtrop
