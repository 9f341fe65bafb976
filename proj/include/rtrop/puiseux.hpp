#pragma once

// Exact rationals and finite real Puiseux series.
//
// A Puiseux value here is a finite sum  c_1 t^{e_1} + ... + c_k t^{e_k}  with
// rational coefficients and strictly increasing rational exponents.  The set
// of such sums is closed under the ring operations, which is all the rest of
// the library needs.  There is deliberately no operator/.

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace rtrop {

using Int = mpz_class;
using Rat = mpq_class;

enum class Sign : int { Neg = -1, Pos = 1 };

constexpr Sign operator*(Sign a, Sign b) { return a == b ? Sign::Pos : Sign::Neg; }
constexpr Sign operator-(Sign a) { return a == Sign::Pos ? Sign::Neg : Sign::Pos; }
constexpr int to_int(Sign s) { return static_cast<int>(s); }
constexpr char sign_char(Sign s) { return s == Sign::Pos ? '+' : '-'; }

// s^e for integer e; only the parity of e matters.
constexpr Sign sign_pow(Sign s, long e) { return (e % 2 == 0) ? Sign::Pos : s; }

Rat parse_rat(std::string_view text);
std::string render_rat(const Rat& r);
Rat rat_floor(const Rat& r);
Rat rat_ceil(const Rat& r);
Int lcm(const Int& a, const Int& b);

class Puiseux {
public:
    struct Term {
        Rat exponent;
        Rat coeff;
        bool operator==(const Term&) const = default;
    };

    Puiseux() = default;
    Puiseux(long c);                         // NOLINT(google-explicit-constructor)
    Puiseux(const Rat& c);                   // NOLINT(google-explicit-constructor)
    static Puiseux monomial(const Rat& coeff, const Rat& exponent);
    static Puiseux t(const Rat& exponent = 1) { return monomial(1, exponent); }

    // Builds from arbitrary (exponent, coeff) pairs, merging and dropping zeros.
    static Puiseux from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    // All of these throw std::domain_error on zero.
    const Rat& valuation() const;
    Sign sign() const;
    const Rat& principal() const;

    // Coefficient of t^w (zero if absent).
    Rat residue(const Rat& w) const;

    // lcm of the exponent denominators (1 for zero).
    Int common_denominator() const;

    Puiseux operator-() const;
    Puiseux& operator+=(const Puiseux& o);
    Puiseux& operator-=(const Puiseux& o);
    Puiseux& operator*=(const Puiseux& o);
    friend Puiseux operator+(Puiseux a, const Puiseux& b) { return a += b; }
    friend Puiseux operator-(Puiseux a, const Puiseux& b) { return a -= b; }
    friend Puiseux operator*(const Puiseux& a, const Puiseux& b);
    friend bool operator==(const Puiseux& a, const Puiseux& b) { return a.terms_ == b.terms_; }

    Puiseux pow(unsigned long e) const;
    Puiseux shifted(const Rat& e) const;   // this * t^e
    Puiseux scaled(const Rat& c) const;    // this * c

    // Substitutes t = t0.  Requires integer exponents (throws otherwise).
    Rat eval_at(const Rat& t0) const;

private:
    std::vector<Term> terms_;
};

// Total order of the real closed field: sign of a - b.
std::strong_ordering ps_cmp(const Puiseux& a, const Puiseux& b);

// Quotient a / b if it is again a finite sum, otherwise nullopt.  Used only by
// fraction-free elimination, where every division is known to be exact.
std::optional<Puiseux> divide_exact(const Puiseux& a, const Puiseux& b);

// gcd of two nonzero values viewed as Laurent polynomials in t^{1/N} over Q,
// normalized to have valuation 0 and principal coefficient 1.
Puiseux laurent_gcd(const Puiseux& a, const Puiseux& b);

Puiseux parse_puiseux(std::string_view text);
std::string render(const Puiseux& p);
std::ostream& operator<<(std::ostream& os, const Puiseux& p);

}  // namespace rtrop
