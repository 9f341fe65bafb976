#pragma once

// Dense univariate polynomials over Q and exact real root counting with
// Sturm sequences.

#include "rtrop/puiseux.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rtrop {

class UPoly {
public:
    UPoly() = default;
    // coeffs[i] is the coefficient of x^i.
    explicit UPoly(std::vector<Rat> coeffs);
    static UPoly monomial(const Rat& c, std::size_t degree);

    const std::vector<Rat>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Rat& leading() const { return coeffs_.back(); }
    Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

    UPoly scaled(const Rat& c) const;
    UPoly pow(unsigned long e) const;
    UPoly derivative() const;
    UPoly monic() const;
    // p(-x)
    UPoly reflected() const;
    Rat eval(const Rat& x) const;

    // Sign of p at +infinity / -infinity (0 for the zero polynomial).
    int sign_at_pos_inf() const;
    int sign_at_neg_inf() const;

    // Removes the largest power of x dividing p; returns that power.
    std::size_t strip_zero_roots();

    std::string to_string(char var = 'x') const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly gcd(const UPoly& a, const UPoly& b);

// The Sturm chain p, p', -rem(p, p'), ...
std::vector<UPoly> sturm_sequence(const UPoly& p);

// Number of distinct real roots in the open interval (lo, hi).  An absent
// bound means infinity.  p must be nonzero.
std::size_t count_real_roots(const UPoly& p, const std::optional<Rat>& lo, const std::optional<Rat>& hi);

std::size_t count_positive_roots(const UPoly& p);
std::size_t count_negative_roots(const UPoly& p);

}  // namespace rtrop
