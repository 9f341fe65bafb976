#pragma once

// Real tropical roots of univariate polynomials: multiplicities, the Viro
// witness polynomial, Polya certificates and non-root certificates.

#include "rtrop/signed_trop.hpp"
#include "rtrop/upoly.hpp"

#include <map>
#include <vector>

namespace rtrop {

struct UnsignedRoot {
    Rat modulus;
    long complex_mult = 0;
    friend bool operator==(const UnsignedRoot&, const UnsignedRoot&) = default;
};

struct RootReport {
    Rat modulus;
    long complex_mult = 0;
    long real_mult_plus = 0;
    long real_mult_minus = 0;
    friend bool operator==(const RootReport&, const RootReport&) = default;
};

// Breakpoints of the unsigned tropical polynomial, by decreasing modulus.
std::vector<UnsignedRoot> unsigned_roots(const RealTropPoly& f);

// Evaluated signs of the minimizing monomials at p, by increasing exponent.
std::vector<Sign> sign_sequence(const RealTropPoly& f, const SignedTrop& p);

// Sign changes of sign_sequence; throws if |p| is not a breakpoint.
long real_multiplicity(const RealTropPoly& f, const SignedTrop& p);

std::vector<RootReport> real_roots(const RealTropPoly& f);

// All signed roots a^+ / a^- with positive real multiplicity, each repeated
// as many times as its multiplicity.
std::vector<SignedTrop> signed_roots_with_multiplicity(const RealTropPoly& f);

// sum_l s_l t^{l^2} x^l
KPoly viro_lift(const std::map<long, Sign>& signs);

struct PolyaCertificate {
    unsigned long exponent = 0;
    UPoly expanded;  // g * (1 + x)^exponent
};

// Least N <= nmax such that g*(1+x)^N has only positive coefficients.
PolyaCertificate polya_exponent(const UPoly& g, unsigned long nmax);

struct NonrootCertificate {
    unsigned long exponent = 0;
    KPoly multiplier;  // (1 + s(p) t^{-|p|} x)^exponent
    KPoly product;     // F * multiplier
};

// Finds H = F * (1 + s(p) t^{-|p|} x)^N in (F) with p outside T(trop H).
NonrootCertificate certify_nonroot(const KPoly& f, const SignedTrop& p, unsigned long nmax);

}  // namespace rtrop
