#include "rtrop/univariate.hpp"

#include "rtrop/error.hpp"

#include <algorithm>

namespace rtrop {

namespace {

void require_univariate(const RealTropPoly& f) {
    if (f.dim() != 1) throw DomainError("polynomial is not univariate");
    if (f.size() < 2) throw DomainError("a single monomial has no tropical roots");
}

}  // namespace

std::vector<UnsignedRoot> unsigned_roots(const RealTropPoly& f) {
    require_univariate(f);
    struct Pt {
        long x;
        Rat y;
    };
    std::vector<Pt> hull;
    for (const auto& [e, c] : f.terms()) {
        Pt q{e[0], c.modulus};
        while (hull.size() >= 2) {
            const Pt& a = hull[hull.size() - 2];
            const Pt& b = hull.back();
            // Drop b unless it lies strictly below the segment a-q.
            Rat cross = (b.y - a.y) * (q.x - a.x) - (q.y - a.y) * (b.x - a.x);
            if (cross >= 0) hull.pop_back();
            else break;
        }
        hull.push_back(std::move(q));
    }
    std::vector<UnsignedRoot> roots;
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        long dx = hull[i + 1].x - hull[i].x;
        Rat slope = (hull[i + 1].y - hull[i].y) / dx;
        roots.push_back({-slope, dx});
    }
    return roots;
}

std::vector<Sign> sign_sequence(const RealTropPoly& f, const SignedTrop& p) {
    require_univariate(f);
    std::vector<Sign> seq;
    for (const auto& entry : rt_argmin(f, {p})) seq.push_back(entry.sign);
    return seq;
}

long real_multiplicity(const RealTropPoly& f, const SignedTrop& p) {
    auto seq = sign_sequence(f, p);
    if (seq.size() < 2) throw DomainError("modulus " + render_rat(p.modulus) + " is not a tropical root");
    long changes = 0;
    for (std::size_t i = 1; i < seq.size(); ++i) changes += seq[i] != seq[i - 1];
    return changes;
}

std::vector<RootReport> real_roots(const RealTropPoly& f) {
    std::vector<RootReport> out;
    for (const auto& root : unsigned_roots(f)) {
        out.push_back({root.modulus, root.complex_mult, real_multiplicity(f, SignedTrop::pos(root.modulus)),
                       real_multiplicity(f, SignedTrop::neg(root.modulus))});
    }
    return out;
}

std::vector<SignedTrop> signed_roots_with_multiplicity(const RealTropPoly& f) {
    std::vector<SignedTrop> out;
    for (const auto& report : real_roots(f)) {
        for (long k = 0; k < report.real_mult_plus; ++k) out.push_back(SignedTrop::pos(report.modulus));
        for (long k = 0; k < report.real_mult_minus; ++k) out.push_back(SignedTrop::neg(report.modulus));
    }
    return out;
}

KPoly viro_lift(const std::map<long, Sign>& signs) {
    KPoly out(1);
    for (const auto& [l, s] : signs) out.add_term({l}, Puiseux::monomial(to_int(s), Rat(l * l)));
    return out;
}

PolyaCertificate polya_exponent(const UPoly& g, unsigned long nmax) {
    if (g.is_zero() || g.coeff(0) <= 0 || count_positive_roots(g) != 0) {
        throw DomainError("not positive on the closed positive axis");
    }
    const UPoly one_plus_x(std::vector<Rat>{Rat(1), Rat(1)});
    UPoly h = g;
    for (unsigned long n = 0; n <= nmax; ++n) {
        if (std::all_of(h.coeffs().begin(), h.coeffs().end(), [](const Rat& c) { return c > 0; })) {
            return {n, h};
        }
        h = h * one_plus_x;
    }
    throw SearchExhausted("no Polya exponent up to " + std::to_string(nmax));
}

NonrootCertificate certify_nonroot(const KPoly& f, const SignedTrop& p, unsigned long nmax) {
    if (f.dim() != 1) throw DomainError("polynomial is not univariate");
    const RealTropPoly trop_f = tropicalize(f);
    if (!rt_member(trop_f, {p})) throw DomainError(render(p) + " is not a real tropical root");
    UPoly residue = residue_poly(f, {p.modulus}).to_upoly();
    std::size_t bad = p.sign == Sign::Pos ? count_positive_roots(residue) : count_negative_roots(residue);
    if (bad != 0) throw DomainError("residue polynomial has a root of the certified sign");

    KPoly step(1);
    step.add_term({0}, Puiseux(1L));
    step.add_term({1}, Puiseux::monomial(to_int(p.sign), -p.modulus));
    KPoly multiplier = KPoly::constant(1, Puiseux(1L));
    KPoly product = f;
    for (unsigned long n = 0; n <= nmax; ++n) {
        if (!rt_member(tropicalize(product), {p})) return {n, multiplier, product};
        multiplier = multiplier * step;
        product = product * step;
    }
    throw SearchExhausted("no certificate multiplier up to exponent " + std::to_string(nmax));
}

}  // namespace rtrop
