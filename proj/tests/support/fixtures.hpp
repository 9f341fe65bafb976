#pragma once

#include "rtrop/text_format.hpp"
#include "rtrop/zero_dim.hpp"

#include <random>

namespace fixtures {

using namespace rtrop;

inline Puiseux P(const char* s) { return parse_puiseux(s); }

inline SignedTropPoint pt(const char* s) { return parse_signed_point(s); }

// f = 0+ (+) 1+ w (+) 0+ w^2 (+) 1+ w^3 (+) 2- w^4
inline RealTropPoly quartic() {
    return parse_trop_poly("+0 : 0\n+1 : 1\n+0 : 2\n+1 : 3\n-2 : 4\n");
}

// f = 1+ (+) 0+ v (+) 0+ w (+) 0- v^2 (+) 0+ vw (+) 0- w^2
inline RealTropPoly conic() {
    return parse_trop_poly("+1 : 0 0\n+0 : 1 0\n+0 : 0 1\n-0 : 2 0\n+0 : 1 1\n-0 : 0 2\n");
}

// x^3 + y^3 - x^2y - xy^2 + 2x^2 + 2y^2 + 4xy - 8x - 8y + 8
inline KPoly cubic_k() {
    return parse_kpoly(
        "3 0 : 1\n0 3 : 1\n2 1 : -1\n1 2 : -1\n2 0 : 2\n0 2 : 2\n1 1 : 4\n1 0 : -8\n0 1 : -8\n0 0 : 8\n");
}

inline RealTropPoly cubic() { return tropicalize(cubic_k()); }

// The singular lift for the class (0+, a+) with a = 1.
inline KPoly cubic_lift() {
    return parse_kpoly(
        "3 0 : 2\n2 1 : -1 + t + t^2\n1 2 : -2 - 2*t\n0 3 : 1\n2 0 : 2\n1 1 : 2\n0 2 : 2\n"
        "1 0 : -10\n0 1 : -1 - t\n0 0 : 6\n");
}

inline PointSetK five_points() {
    PointSetK v;
    v.dim = 2;
    v.points = parse_puiseux_rows("-1, 2\n2, 3\n-3, -t\n1, -4\n2*t, 4*t\n");
    return v;
}

inline RealTropPoly hyperplane2() { return parse_trop_poly("+0 : 0 0\n+0 : 1 0\n+0 : 0 1\n"); }

// Random helpers shared by the property tests.
inline Rat frac(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat random_rat(std::mt19937_64& rng, long num_bound, long den_bound) {
    std::uniform_int_distribution<long> num(-num_bound, num_bound);
    std::uniform_int_distribution<long> den(1, den_bound);
    return frac(num(rng), den(rng));
}

inline Rat random_nonzero_rat(std::mt19937_64& rng, long num_bound, long den_bound) {
    Rat r;
    do r = random_rat(rng, num_bound, den_bound);
    while (r == 0);
    return r;
}

// Nonzero finite sum with up to `terms` terms and exponents in [lo, hi] with
// denominators dividing `den`.
inline Puiseux random_puiseux(std::mt19937_64& rng, int terms, long lo, long hi, long den = 1) {
    std::uniform_int_distribution<int> count(1, terms);
    std::uniform_int_distribution<long> exp(lo * den, hi * den);
    while (true) {
        std::vector<Puiseux::Term> ts;
        int k = count(rng);
        for (int i = 0; i < k; ++i) ts.push_back({frac(exp(rng), den), random_nonzero_rat(rng, 9, 3)});
        Puiseux p = Puiseux::from_terms(ts);
        if (!p.is_zero()) return p;
    }
}

inline Sign random_sign(std::mt19937_64& rng) { return (rng() & 1) ? Sign::Pos : Sign::Neg; }

}  // namespace fixtures
