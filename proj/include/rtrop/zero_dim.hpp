#pragma once

// Real tropical bases of the ideal of a finite point set V in the torus.
//
// The construction: coordinate polynomials F_j confine every candidate to a
// finite signed set S, an injective integer functional L gives one more
// polynomial F_0 separating moduli, and for every survivor c of S that is not
// the tropicalization of a point of V a polynomial G_c vanishing on V is built
// so that c falls outside its real tropical hypersurface.

#include "rtrop/signed_trop.hpp"

#include <map>
#include <vector>

namespace rtrop {

struct PointSetK {
    std::size_t dim = 0;
    std::vector<std::vector<Puiseux>> points;

    // Throws DomainError on zero coordinates, wrong lengths or repeated points.
    void validate() const;
    std::vector<SignedTropPoint> tropicalization() const;  // sorted, deduplicated
};

struct BasisCertificate {
    std::vector<KPoly> coord_polys;
    std::vector<long> functional;
    KPoly f0{0};
    std::vector<SignedTropPoint> candidates;
    std::vector<SignedTropPoint> survivors;
    std::vector<SignedTropPoint> trop_v;
    std::map<SignedTropPoint, KPoly> discards;

    // coord_polys, f0 and every G_c, skipping zero entries.
    std::vector<KPoly> polynomials() const;
};

std::vector<KPoly> coordinate_polys(const PointSetK& v);

// Cartesian product of the signed roots of trop(F_j), sorted.
std::vector<SignedTropPoint> candidate_set(const std::vector<KPoly>& coord_polys);
std::vector<SignedTropPoint> candidate_set(const PointSetK& v);

bool is_injective(const std::vector<long>& b, const std::vector<SignedTropPoint>& s);

// First b = (1, k, k^2, ..., k^{n-1}), k = 0, 1, 2, ..., injective on |S|.
std::vector<long> choose_L(const std::vector<SignedTropPoint>& s);

// Numerator of x^b - p^b after clearing negative exponents.
KPoly binomial_factor(const std::vector<Puiseux>& point, const std::vector<long>& b);

KPoly build_F0(const PointSetK& v, const std::vector<long>& b);

// Throws DomainError("point not excludable") when some point of V with the
// modulus of c also has all of its signs.
KPoly build_Gc(const PointSetK& v, const SignedTropPoint& c, const std::vector<long>& b);

BasisCertificate build_basis(const PointSetK& v);

bool verify_basis(const BasisCertificate& cert, const PointSetK& v);

}  // namespace rtrop
