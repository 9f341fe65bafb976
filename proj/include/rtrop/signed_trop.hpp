#pragma once

// Signed tropical numbers, real tropical polynomials and their hypersurfaces,
// and polynomials over the Puiseux field together with their signed
// tropicalization.

#include "rtrop/puiseux.hpp"
#include "rtrop/upoly.hpp"

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace rtrop {

// An element a^+ = (+1, a) or a^- = (-1, a).
struct SignedTrop {
    Sign sign = Sign::Pos;
    Rat modulus;

    static SignedTrop pos(const Rat& m) { return {Sign::Pos, m}; }
    static SignedTrop neg(const Rat& m) { return {Sign::Neg, m}; }

    friend bool operator==(const SignedTrop& a, const SignedTrop& b) {
        return a.sign == b.sign && a.modulus == b.modulus;
    }
    // By modulus, then + before -.
    friend bool operator<(const SignedTrop& a, const SignedTrop& b) {
        if (a.modulus != b.modulus) return a.modulus < b.modulus;
        return a.sign == Sign::Pos && b.sign == Sign::Neg;
    }
};

// Tropical multiplication: signs multiply, moduli add.
SignedTrop operator*(const SignedTrop& a, const SignedTrop& b);

std::string render(const SignedTrop& a);   // "+0", "-1/2", "+-3"
std::ostream& operator<<(std::ostream& os, const SignedTrop& a);

using SignedTropPoint = std::vector<SignedTrop>;
using Exponent = std::vector<long>;

std::string render(const SignedTropPoint& p);
std::string render_exponent(const Exponent& e);

// f = (+) a_l w^l over a finite support of integer exponent vectors.
class RealTropPoly {
public:
    using Terms = std::map<Exponent, SignedTrop>;

    explicit RealTropPoly(std::size_t dim) : dim_(dim) {}
    RealTropPoly(std::size_t dim, Terms terms);

    std::size_t dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    // Adds or replaces a monomial.
    void set(const Exponent& e, const SignedTrop& c);

    std::vector<Exponent> support() const;

    friend bool operator==(const RealTropPoly&, const RealTropPoly&) = default;

private:
    std::size_t dim_;
    Terms terms_;
};

struct ArgminEntry {
    Exponent exponent;
    Sign sign;  // s(a_l) * prod s(p_i)^{l_i}
    friend bool operator==(const ArgminEntry&, const ArgminEntry&) = default;
};

// Sign a monomial contributes at a signed point.
Sign evaluated_sign(Sign coeff_sign, const Exponent& e, const SignedTropPoint& p);
Rat pairing(const Exponent& e, const SignedTropPoint& p);   // <l, |p|>

Rat rt_eval(const RealTropPoly& f, const SignedTropPoint& p);
// Minimizing monomials, ordered lexicographically by exponent.
std::vector<ArgminEntry> rt_argmin(const RealTropPoly& f, const SignedTropPoint& p);
bool rt_member(const RealTropPoly& f, const SignedTropPoint& p);

// Polynomial with rational coefficients (residue polynomials, constants).
struct RatPoly {
    std::size_t dim = 0;
    std::map<Exponent, Rat> terms;

    friend bool operator==(const RatPoly&, const RatPoly&) = default;
    // Univariate view (dim must be 1): x^k * result with k the least exponent
    // is returned through `shift`.
    UPoly to_upoly(long* shift = nullptr) const;
};

std::string render(const RatPoly& p);

// Polynomial with Puiseux coefficients; Laurent exponents are allowed.
class KPoly {
public:
    using Terms = std::map<Exponent, Puiseux>;

    explicit KPoly(std::size_t dim) : dim_(dim) {}
    KPoly(std::size_t dim, Terms terms);
    static KPoly constant(std::size_t dim, const Puiseux& c);
    // x_var - c
    static KPoly linear(std::size_t dim, std::size_t var, const Puiseux& c);
    static KPoly monomial(std::size_t dim, const Exponent& e, const Puiseux& c);

    std::size_t dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Puiseux coeff(const Exponent& e) const;
    void add_term(const Exponent& e, const Puiseux& c);

    KPoly operator-() const;
    KPoly& operator+=(const KPoly& o);
    KPoly& operator-=(const KPoly& o);
    friend KPoly operator+(KPoly a, const KPoly& b) { return a += b; }
    friend KPoly operator-(KPoly a, const KPoly& b) { return a -= b; }
    friend KPoly operator*(const KPoly& a, const KPoly& b);
    friend bool operator==(const KPoly&, const KPoly&) = default;

    KPoly pow(unsigned long e) const;
    KPoly scaled(const Puiseux& c) const;
    KPoly times_monomial(const Exponent& e) const;

    // Throws DomainError when a negative exponent meets a non-monomial coordinate.
    Puiseux eval(const std::vector<Puiseux>& point) const;

    // b0*F + sum_i b_i x_i dF/dx_i, i.e. each coefficient times L(l).
    KPoly euler_operator(long b0, const std::vector<long>& b) const;

    // Largest exponent in lexicographic order.
    const Exponent& leading_exponent() const;

private:
    void check_dim(const KPoly& o) const;
    std::size_t dim_;
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const KPoly& f);

SignedTrop tropicalize(const Puiseux& x);
SignedTropPoint tropicalize(const std::vector<Puiseux>& point);
RealTropPoly tropicalize(const KPoly& f);

// F_w: principal coefficients of the monomials where trop(F) is minimal at w.
RatPoly residue_poly(const KPoly& f, const std::vector<Rat>& w);

// F * c for the unit c of K making the lex-leading coefficient have principal
// coefficient 1 (and valuation 0 when that coefficient is a single term).
KPoly normalize(const KPoly& f);
bool proportional(const KPoly& f, const KPoly& g);

// Product of one normalized representative per proportionality class.
KPoly squarefree_from_factors(const std::vector<KPoly>& factors);

}  // namespace rtrop
