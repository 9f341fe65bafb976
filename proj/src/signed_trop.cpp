#include "rtrop/signed_trop.hpp"

#include "rtrop/error.hpp"

#include <algorithm>
#include <sstream>

namespace rtrop {

SignedTrop operator*(const SignedTrop& a, const SignedTrop& b) { return {a.sign * b.sign, a.modulus + b.modulus}; }

std::string render(const SignedTrop& a) { return sign_char(a.sign) + render_rat(a.modulus); }

std::ostream& operator<<(std::ostream& os, const SignedTrop& a) { return os << render(a); }

std::string render(const SignedTropPoint& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ' ';
        out += render(p[i]);
    }
    return out;
}

std::string render_exponent(const Exponent& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(e[i]);
    }
    return out;
}

RealTropPoly::RealTropPoly(std::size_t dim, Terms terms) : dim_(dim), terms_(std::move(terms)) {
    for (const auto& [e, c] : terms_) {
        if (e.size() != dim_) throw DomainError("exponent vector has wrong dimension");
    }
}

void RealTropPoly::set(const Exponent& e, const SignedTrop& c) {
    if (e.size() != dim_) throw DomainError("exponent vector has wrong dimension");
    terms_[e] = c;
}

std::vector<Exponent> RealTropPoly::support() const {
    std::vector<Exponent> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back(e);
    return out;
}

namespace {

void check_point(const RealTropPoly& f, const SignedTropPoint& p) {
    if (f.dim() != p.size()) throw DomainError("dimension mismatch between polynomial and point");
    if (f.empty()) throw DomainError("empty tropical polynomial");
}

}  // namespace

Sign evaluated_sign(Sign coeff_sign, const Exponent& e, const SignedTropPoint& p) {
    Sign s = coeff_sign;
    for (std::size_t i = 0; i < e.size(); ++i) s = s * sign_pow(p[i].sign, e[i]);
    return s;
}

Rat pairing(const Exponent& e, const SignedTropPoint& p) {
    Rat acc = 0;
    for (std::size_t i = 0; i < e.size(); ++i) acc += p[i].modulus * e[i];
    return acc;
}

Rat rt_eval(const RealTropPoly& f, const SignedTropPoint& p) {
    check_point(f, p);
    bool first = true;
    Rat best;
    for (const auto& [e, c] : f.terms()) {
        Rat v = c.modulus + pairing(e, p);
        if (first || v < best) best = v;
        first = false;
    }
    return best;
}

std::vector<ArgminEntry> rt_argmin(const RealTropPoly& f, const SignedTropPoint& p) {
    Rat best = rt_eval(f, p);
    std::vector<ArgminEntry> out;
    for (const auto& [e, c] : f.terms()) {
        if (c.modulus + pairing(e, p) == best) out.push_back({e, evaluated_sign(c.sign, e, p)});
    }
    return out;
}

bool rt_member(const RealTropPoly& f, const SignedTropPoint& p) {
    bool pos = false;
    bool neg = false;
    for (const auto& entry : rt_argmin(f, p)) {
        (entry.sign == Sign::Pos ? pos : neg) = true;
    }
    return pos && neg;
}

UPoly RatPoly::to_upoly(long* shift) const {
    if (dim != 1) throw DomainError("not a univariate polynomial");
    if (terms.empty()) {
        if (shift) *shift = 0;
        return {};
    }
    long lo = terms.begin()->first[0];
    std::vector<Rat> coeffs;
    for (const auto& [e, c] : terms) {
        auto idx = static_cast<std::size_t>(e[0] - lo);
        if (coeffs.size() <= idx) coeffs.resize(idx + 1, Rat(0));
        coeffs[idx] = c;
    }
    if (shift) *shift = lo;
    return UPoly(std::move(coeffs));
}

std::string render(const RatPoly& p) {
    if (p.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool constant = std::all_of(e.begin(), e.end(), [](long x) { return x == 0; });
        if (constant || mag != 1) os << render_rat(mag);
        bool need_star = !constant && mag != 1;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << '*';
            need_star = true;
            os << 'x' << (i + 1);
            if (e[i] != 1) os << '^' << e[i];
        }
    }
    return os.str();
}

KPoly::KPoly(std::size_t dim, Terms terms) : dim_(dim) {
    for (auto& [e, c] : terms) add_term(e, c);
}

KPoly KPoly::constant(std::size_t dim, const Puiseux& c) { return monomial(dim, Exponent(dim, 0), c); }

KPoly KPoly::linear(std::size_t dim, std::size_t var, const Puiseux& c) {
    KPoly f(dim);
    Exponent e(dim, 0);
    e[var] = 1;
    f.add_term(e, Puiseux(1L));
    f.add_term(Exponent(dim, 0), -c);
    return f;
}

KPoly KPoly::monomial(std::size_t dim, const Exponent& e, const Puiseux& c) {
    KPoly f(dim);
    f.add_term(e, c);
    return f;
}

Puiseux KPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Puiseux{} : it->second;
}

void KPoly::add_term(const Exponent& e, const Puiseux& c) {
    if (e.size() != dim_) throw DomainError("exponent vector has wrong dimension");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void KPoly::check_dim(const KPoly& o) const {
    if (dim_ != o.dim_) throw DomainError("dimension mismatch between polynomials");
}

KPoly KPoly::operator-() const {
    KPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

KPoly& KPoly::operator+=(const KPoly& o) {
    check_dim(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

KPoly& KPoly::operator-=(const KPoly& o) {
    check_dim(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

KPoly operator*(const KPoly& a, const KPoly& b) {
    a.check_dim(b);
    KPoly r(a.dim_);
    Exponent e(a.dim_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

KPoly KPoly::pow(unsigned long e) const {
    KPoly result = constant(dim_, Puiseux(1L));
    KPoly base = *this;
    while (e > 0) {
        if (e & 1UL) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

KPoly KPoly::scaled(const Puiseux& c) const {
    KPoly r(dim_);
    for (const auto& [e, x] : terms_) r.add_term(e, x * c);
    return r;
}

KPoly KPoly::times_monomial(const Exponent& m) const {
    if (m.size() != dim_) throw DomainError("exponent vector has wrong dimension");
    KPoly r(dim_);
    for (const auto& [e, c] : terms_) {
        Exponent s = e;
        for (std::size_t i = 0; i < dim_; ++i) s[i] += m[i];
        r.terms_.emplace(std::move(s), c);
    }
    return r;
}

Puiseux KPoly::eval(const std::vector<Puiseux>& point) const {
    if (point.size() != dim_) throw DomainError("dimension mismatch between polynomial and point");
    std::vector<std::optional<Puiseux>> inverse(dim_);
    Puiseux acc;
    for (const auto& [e, c] : terms_) {
        Puiseux term = c;
        for (std::size_t i = 0; i < dim_; ++i) {
            if (e[i] >= 0) {
                term *= point[i].pow(static_cast<unsigned long>(e[i]));
                continue;
            }
            if (!inverse[i]) {
                if (point[i].is_zero()) throw DomainError("negative power of a zero coordinate");
                inverse[i] = divide_exact(Puiseux(1L), point[i]);
                if (!inverse[i]) throw DomainError("inverse of a coordinate is not a finite series");
            }
            term *= inverse[i]->pow(static_cast<unsigned long>(-e[i]));
        }
        acc += term;
    }
    return acc;
}

KPoly KPoly::euler_operator(long b0, const std::vector<long>& b) const {
    if (b.size() != dim_) throw DomainError("functional has wrong dimension");
    KPoly r(dim_);
    for (const auto& [e, c] : terms_) {
        long value = b0;
        for (std::size_t i = 0; i < dim_; ++i) value += b[i] * e[i];
        r.add_term(e, c.scaled(Rat(value)));
    }
    return r;
}

const Exponent& KPoly::leading_exponent() const {
    if (terms_.empty()) throw DomainError("zero polynomial has no leading monomial");
    return terms_.rbegin()->first;
}

std::ostream& operator<<(std::ostream& os, const KPoly& f) {
    if (f.is_zero()) return os << "0";
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << '(' << it->second << ')';
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            if (it->first[i] == 0) continue;
            os << "*x" << (i + 1);
            if (it->first[i] != 1) os << '^' << it->first[i];
        }
    }
    return os;
}

SignedTrop tropicalize(const Puiseux& x) { return {x.sign(), x.valuation()}; }

SignedTropPoint tropicalize(const std::vector<Puiseux>& point) {
    SignedTropPoint p;
    p.reserve(point.size());
    for (const auto& x : point) p.push_back(tropicalize(x));
    return p;
}

RealTropPoly tropicalize(const KPoly& f) {
    if (f.is_zero()) throw DomainError("tropicalization of the zero polynomial");
    RealTropPoly out(f.dim());
    for (const auto& [e, c] : f.terms()) out.set(e, tropicalize(c));
    return out;
}

RatPoly residue_poly(const KPoly& f, const std::vector<Rat>& w) {
    if (f.is_zero()) throw DomainError("residue polynomial of the zero polynomial");
    if (w.size() != f.dim()) throw DomainError("weight vector has wrong dimension");
    SignedTropPoint p;
    for (const auto& x : w) p.push_back(SignedTrop::pos(x));
    RatPoly out{f.dim(), {}};
    for (const auto& entry : rt_argmin(tropicalize(f), p)) out.terms[entry.exponent] = f.coeff(entry.exponent).principal();
    return out;
}

KPoly normalize(const KPoly& f) {
    if (f.is_zero()) return f;
    const Puiseux& lc = f.terms().rbegin()->second;
    if (lc.is_monomial()) {
        const auto& term = lc.terms().front();
        return f.scaled(Puiseux::monomial(1 / term.coeff, -term.exponent));
    }
    return f.scaled(Puiseux(Rat(1 / lc.principal())));
}

bool proportional(const KPoly& f, const KPoly& g) {
    if (f.dim() != g.dim() || f.size() != g.size()) return false;
    if (f.is_zero()) return true;
    auto fi = f.terms().begin();
    auto gi = g.terms().begin();
    for (; fi != f.terms().end(); ++fi, ++gi) {
        if (fi->first != gi->first) return false;
    }
    const Puiseux& lf = f.terms().rbegin()->second;
    const Puiseux& lg = g.terms().rbegin()->second;
    return f.scaled(lg) == g.scaled(lf);
}

KPoly squarefree_from_factors(const std::vector<KPoly>& factors) {
    if (factors.empty()) throw DomainError("empty factor list");
    std::vector<KPoly> classes;
    for (const auto& factor : factors) {
        if (factor.is_zero()) throw DomainError("zero factor");
        KPoly n = normalize(factor);
        bool seen = std::any_of(classes.begin(), classes.end(), [&](const KPoly& c) { return proportional(c, n); });
        if (!seen) classes.push_back(std::move(n));
    }
    KPoly product = KPoly::constant(factors.front().dim(), Puiseux(1L));
    for (const auto& c : classes) product = product * c;
    return product;
}

}  // namespace rtrop
