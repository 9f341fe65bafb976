#include "rtrop/puiseux.hpp"

#include "rtrop/error.hpp"
#include "rtrop/upoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace rtrop {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Reads  int ['/' posint]  with an optional leading sign.
struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(0, pos + 1, what); }

    std::string digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && is_digit(text[pos])) ++pos;
        if (start == pos) fail("expected digits");
        return std::string(text.substr(start, pos - start));
    }

    Rat rational(bool allow_sign) {
        bool neg = false;
        if (allow_sign && (peek() == '-' || peek() == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        Int num(digits());
        Int den(1);
        if (peek() == '/') {
            ++pos;
            den = Int(digits());
            if (den == 0) fail("zero denominator");
        }
        Rat r(neg ? Int(-num) : num, den);
        r.canonicalize();
        return r;
    }
};

Puiseux::Term parse_term(Cursor& cur) {
    Rat coeff = 1;
    bool has_coeff = false;
    if (is_digit(cur.peek())) {
        coeff = cur.rational(false);
        has_coeff = true;
    }
    Rat exponent = 0;
    char c = cur.peek();
    if (c == '*' || c == 't') {
        if (c == '*') {
            if (!has_coeff) cur.fail("'*' without coefficient");
            ++cur.pos;
            if (cur.peek() != 't') cur.fail("expected 't'");
        }
        ++cur.pos;  // 't'
        exponent = 1;
        if (cur.peek() == '^') {
            ++cur.pos;
            if (cur.peek() == '(') {
                ++cur.pos;
                exponent = cur.rational(true);
                if (cur.peek() != ')') cur.fail("expected ')'");
                ++cur.pos;
            } else {
                exponent = cur.rational(true);
            }
        }
    } else if (!has_coeff) {
        cur.fail("expected a term");
    }
    return {exponent, coeff};
}

// Maps a nonzero value to a polynomial in u = t^{1/N}: p = t^{shift} * P(u).
struct LaurentView {
    Int denom;
    Rat shift;
    UPoly poly;
};

LaurentView to_laurent(const Puiseux& p, const Int& denom) {
    const Rat shift = p.valuation();
    std::vector<Rat> coeffs;
    for (const auto& term : p.terms()) {
        Rat k = (term.exponent - shift) * denom;
        std::size_t idx = k.get_num().get_ui();
        if (coeffs.size() <= idx) coeffs.resize(idx + 1, Rat(0));
        coeffs[idx] = term.coeff;
    }
    return {denom, shift, UPoly(std::move(coeffs))};
}

Puiseux from_laurent(const UPoly& poly, const Int& denom, const Rat& shift) {
    std::vector<Puiseux::Term> terms;
    for (std::size_t i = 0; i < poly.coeffs().size(); ++i) {
        if (poly.coeffs()[i] == 0) continue;
        Rat e(Int(static_cast<unsigned long>(i)), denom);
        e.canonicalize();
        terms.push_back({e + shift, poly.coeffs()[i]});
    }
    return Puiseux::from_terms(std::move(terms));
}

}  // namespace

Rat parse_rat(std::string_view text) {
    Cursor cur{text};
    Rat r = cur.rational(true);
    if (!cur.at_end()) cur.fail("trailing characters after rational");
    return r;
}

std::string render_rat(const Rat& r) { return r.get_str(); }

Rat rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return Rat(q);
}

Rat rat_ceil(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return Rat(q);
}

Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Puiseux::Puiseux(long c) : Puiseux(Rat(c)) {}

Puiseux::Puiseux(const Rat& c) {
    if (c != 0) terms_.push_back({Rat(0), c});
}

Puiseux Puiseux::monomial(const Rat& coeff, const Rat& exponent) {
    Puiseux p;
    if (coeff != 0) p.terms_.push_back({exponent, coeff});
    return p;
}

Puiseux Puiseux::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
    Puiseux p;
    for (auto& term : terms) {
        if (!p.terms_.empty() && p.terms_.back().exponent == term.exponent) {
            p.terms_.back().coeff += term.coeff;
        } else {
            p.terms_.push_back(std::move(term));
        }
    }
    std::erase_if(p.terms_, [](const Term& t) { return t.coeff == 0; });
    return p;
}

const Rat& Puiseux::valuation() const {
    if (is_zero()) throw std::domain_error("valuation of zero undefined");
    return terms_.front().exponent;
}

Sign Puiseux::sign() const {
    if (is_zero()) throw std::domain_error("sign of zero undefined");
    return terms_.front().coeff > 0 ? Sign::Pos : Sign::Neg;
}

const Rat& Puiseux::principal() const {
    if (is_zero()) throw std::domain_error("principal coefficient of zero undefined");
    return terms_.front().coeff;
}

Rat Puiseux::residue(const Rat& w) const {
    for (const auto& term : terms_) {
        if (term.exponent == w) return term.coeff;
        if (term.exponent > w) break;
    }
    return 0;
}

Int Puiseux::common_denominator() const {
    Int d = 1;
    for (const auto& term : terms_) d = lcm(d, term.exponent.get_den());
    return d;
}

Puiseux Puiseux::operator-() const {
    Puiseux r = *this;
    for (auto& term : r.terms_) term.coeff = -term.coeff;
    return r;
}

Puiseux& Puiseux::operator+=(const Puiseux& o) {
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->exponent < b->exponent)) {
            merged.push_back(*a++);
        } else if (a == terms_.end() || b->exponent < a->exponent) {
            merged.push_back(*b++);
        } else {
            Rat c = a->coeff + b->coeff;
            if (c != 0) merged.push_back({a->exponent, c});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

Puiseux& Puiseux::operator-=(const Puiseux& o) { return *this += -o; }

Puiseux operator*(const Puiseux& a, const Puiseux& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Puiseux::Term> terms;
    terms.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) terms.push_back({x.exponent + y.exponent, x.coeff * y.coeff});
    return Puiseux::from_terms(std::move(terms));
}

Puiseux& Puiseux::operator*=(const Puiseux& o) { return *this = *this * o; }

Puiseux Puiseux::pow(unsigned long e) const {
    Puiseux result(1L);
    Puiseux base = *this;
    while (e > 0) {
        if (e & 1UL) result *= base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

Puiseux Puiseux::shifted(const Rat& e) const {
    Puiseux r = *this;
    for (auto& term : r.terms_) term.exponent += e;
    return r;
}

Puiseux Puiseux::scaled(const Rat& c) const {
    if (c == 0) return {};
    Puiseux r = *this;
    for (auto& term : r.terms_) term.coeff *= c;
    return r;
}

Rat Puiseux::eval_at(const Rat& t0) const {
    Rat acc = 0;
    for (const auto& term : terms_) {
        if (term.exponent.get_den() != 1) throw std::domain_error("eval_at needs integer exponents");
        long e = term.exponent.get_num().get_si();
        Rat base = e >= 0 ? t0 : Rat(1 / t0);
        Rat power;
        mpz_pow_ui(power.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e >= 0 ? e : -e));
        mpz_pow_ui(power.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e >= 0 ? e : -e));
        power.canonicalize();
        acc += term.coeff * power;
    }
    return acc;
}

std::strong_ordering ps_cmp(const Puiseux& a, const Puiseux& b) {
    Puiseux d = a - b;
    if (d.is_zero()) return std::strong_ordering::equal;
    return d.sign() == Sign::Pos ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::optional<Puiseux> divide_exact(const Puiseux& a, const Puiseux& b) {
    if (b.is_zero()) throw std::domain_error("division by zero series");
    if (a.is_zero()) return Puiseux{};
    if (b.is_monomial()) {
        const auto& bt = b.terms().front();
        return a.shifted(-bt.exponent).scaled(1 / bt.coeff);
    }
    Int denom = lcm(a.common_denominator(), b.common_denominator());
    auto la = to_laurent(a, denom);
    auto lb = to_laurent(b, denom);
    auto [q, r] = divmod(la.poly, lb.poly);
    if (!r.is_zero()) return std::nullopt;
    return from_laurent(q, denom, la.shift - lb.shift);
}

Puiseux laurent_gcd(const Puiseux& a, const Puiseux& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zeros");
    if (a.is_zero()) return laurent_gcd(b, b);
    if (b.is_zero()) return laurent_gcd(a, a);
    Int denom = lcm(a.common_denominator(), b.common_denominator());
    auto la = to_laurent(a, denom);
    auto lb = to_laurent(b, denom);
    UPoly g = gcd(la.poly, lb.poly);
    g.strip_zero_roots();
    g = g.scaled(1 / g.coeffs().front());
    return from_laurent(g, denom, Rat(0));
}

Puiseux parse_puiseux(std::string_view text) {
    Cursor cur{text};
    std::vector<Puiseux::Term> terms;
    bool neg = false;
    if (cur.peek() == '-' || cur.peek() == '+') {
        neg = text[cur.pos] == '-';
        ++cur.pos;
    }
    while (true) {
        auto term = parse_term(cur);
        if (neg) term.coeff = -term.coeff;
        terms.push_back(std::move(term));
        if (cur.at_end()) break;
        char c = cur.peek();
        if (c != '+' && c != '-') cur.fail("expected '+' or '-'");
        neg = c == '-';
        ++cur.pos;
    }
    return Puiseux::from_terms(std::move(terms));
}

std::string render(const Puiseux& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& term : p.terms()) {
        if (first) {
            os << render_rat(term.coeff);
        } else {
            os << (term.coeff < 0 ? " - " : " + ") << render_rat(abs(term.coeff));
        }
        first = false;
        if (term.exponent == 0) continue;
        os << "*t";
        if (term.exponent == 1) continue;
        if (term.exponent.get_den() == 1 && term.exponent > 0) {
            os << '^' << render_rat(term.exponent);
        } else {
            os << "^(" << render_rat(term.exponent) << ')';
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Puiseux& p) { return os << render(p); }

}  // namespace rtrop
