#include "rtrop/upoly.hpp"

#include <sstream>
#include <stdexcept>

namespace rtrop {

UPoly::UPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const Rat& c, std::size_t degree) {
    std::vector<Rat> v(degree + 1, Rat(0));
    v[degree] = c;
    return UPoly(std::move(v));
}

void UPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UPoly(std::move(v));
}

UPoly UPoly::scaled(const Rat& c) const {
    UPoly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    r.trim();
    return r;
}

UPoly UPoly::pow(unsigned long e) const {
    UPoly result(std::vector<Rat>{Rat(1)});
    UPoly base = *this;
    while (e > 0) {
        if (e & 1UL) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

UPoly UPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rat> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return UPoly(std::move(v));
}

UPoly UPoly::monic() const {
    if (is_zero()) return {};
    Rat inv = 1 / leading();
    return scaled(inv);
}

UPoly UPoly::reflected() const {
    UPoly r = *this;
    for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
    return r;
}

Rat UPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int UPoly::sign_at_pos_inf() const { return is_zero() ? 0 : sgn(leading()); }

int UPoly::sign_at_neg_inf() const {
    if (is_zero()) return 0;
    int s = sgn(leading());
    return degree() % 2 == 0 ? s : -s;
}

std::size_t UPoly::strip_zero_roots() {
    std::size_t k = 0;
    while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(k));
    return k;
}

std::string UPoly::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rat& c = coeffs_[i];
        if (c == 0) continue;
        Rat mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) {
            os << render_rat(mag);
            if (i > 0) os << '*';
        }
        if (i >= 1) os << var;
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly{}, a};
    std::vector<Rat> rem = a.coeffs();
    std::vector<Rat> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rat(0));
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rat q = rem[k + db] / bc[db];
        if (q == 0) continue;
        quot[k] = q;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * bc[j];
    }
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a;
    UPoly y = b;
    while (!y.is_zero()) {
        UPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
    std::vector<UPoly> seq;
    if (p.is_zero()) return seq;
    seq.push_back(p);
    UPoly d = p.derivative();
    if (d.is_zero()) return seq;
    seq.push_back(d);
    while (true) {
        UPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    return seq;
}

namespace {

std::size_t sign_variations(const std::vector<int>& signs) {
    std::size_t v = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

std::size_t variations_at(const std::vector<UPoly>& seq, const std::optional<Rat>& x, bool neg_inf) {
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const auto& q : seq) {
        if (x) signs.push_back(sgn(q.eval(*x)));
        else signs.push_back(neg_inf ? q.sign_at_neg_inf() : q.sign_at_pos_inf());
    }
    return sign_variations(signs);
}

}  // namespace

std::size_t count_real_roots(const UPoly& p, const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
    if (p.is_zero()) throw std::domain_error("root count of the zero polynomial");
    if (lo && hi && *lo >= *hi) return 0;
    // Squarefree part, then drop roots sitting exactly on a finite endpoint.
    UPoly q = divmod(p, gcd(p, p.derivative())).first;
    for (const auto& bound : {lo, hi}) {
        if (bound && q.eval(*bound) == 0) {
            q = divmod(q, UPoly(std::vector<Rat>{-*bound, Rat(1)})).first;
        }
    }
    if (q.degree() <= 0) return 0;
    auto seq = sturm_sequence(q);
    std::size_t vlo = variations_at(seq, lo, true);
    std::size_t vhi = variations_at(seq, hi, false);
    return vlo - vhi;
}

std::size_t count_positive_roots(const UPoly& p) { return count_real_roots(p, Rat(0), std::nullopt); }

std::size_t count_negative_roots(const UPoly& p) { return count_real_roots(p, std::nullopt, Rat(0)); }

}  // namespace rtrop
