#include "rtrop/zero_dim.hpp"

#include "rtrop/error.hpp"
#include "rtrop/univariate.hpp"

#include <algorithm>
#include <set>

namespace rtrop {

namespace {

std::vector<Rat> moduli(const SignedTropPoint& p) {
    std::vector<Rat> m;
    m.reserve(p.size());
    for (const auto& x : p) m.push_back(x.modulus);
    return m;
}

bool all_members(const std::vector<KPoly>& polys, const SignedTropPoint& c) {
    return std::all_of(polys.begin(), polys.end(), [&](const KPoly& f) { return rt_member(tropicalize(f), c); });
}

// trop(F_j) restricted to the variable x_j.
RealTropPoly univariate_part(const KPoly& f, std::size_t j) {
    const RealTropPoly tf = tropicalize(f);
    RealTropPoly out(1);
    for (const auto& [e, c] : tf.terms()) out.set({e[j]}, c);
    return out;
}

}  // namespace

void PointSetK::validate() const {
    if (dim == 0) throw DomainError("point set needs a positive dimension");
    std::set<std::vector<std::string>> seen;
    for (const auto& p : points) {
        if (p.size() != dim) throw DomainError("point has wrong dimension");
        std::vector<std::string> key;
        for (const auto& x : p) {
            if (x.is_zero()) throw DomainError("point has a zero coordinate");
            key.push_back(render(x));
        }
        if (!seen.insert(key).second) throw DomainError("repeated point");
    }
}

std::vector<SignedTropPoint> PointSetK::tropicalization() const {
    std::set<SignedTropPoint> out;
    for (const auto& p : points) out.insert(tropicalize(p));
    return {out.begin(), out.end()};
}

std::vector<KPoly> BasisCertificate::polynomials() const {
    std::vector<KPoly> out;
    for (const auto& f : coord_polys)
        if (!f.is_zero()) out.push_back(f);
    if (!f0.is_zero()) out.push_back(f0);
    for (const auto& [c, g] : discards)
        if (!g.is_zero()) out.push_back(g);
    return out;
}

std::vector<KPoly> coordinate_polys(const PointSetK& v) {
    v.validate();
    std::vector<KPoly> out;
    for (std::size_t j = 0; j < v.dim; ++j) {
        std::vector<KPoly> factors;
        for (const auto& p : v.points) factors.push_back(KPoly::linear(v.dim, j, p[j]));
        out.push_back(squarefree_from_factors(factors));
    }
    return out;
}

std::vector<SignedTropPoint> candidate_set(const std::vector<KPoly>& coord_polys) {
    std::vector<SignedTropPoint> product{{}};
    for (std::size_t j = 0; j < coord_polys.size(); ++j) {
        auto roots = signed_roots_with_multiplicity(univariate_part(coord_polys[j], j));
        std::set<SignedTrop> distinct(roots.begin(), roots.end());
        std::vector<SignedTropPoint> next;
        for (const auto& prefix : product) {
            for (const auto& r : distinct) {
                auto q = prefix;
                q.push_back(r);
                next.push_back(std::move(q));
            }
        }
        product = std::move(next);
    }
    std::sort(product.begin(), product.end());
    return product;
}

std::vector<SignedTropPoint> candidate_set(const PointSetK& v) { return candidate_set(coordinate_polys(v)); }

bool is_injective(const std::vector<long>& b, const std::vector<SignedTropPoint>& s) {
    std::set<std::vector<Rat>> seen_moduli;
    std::set<Rat> values;
    for (const auto& c : s) {
        auto m = moduli(c);
        if (m.size() != b.size()) throw DomainError("functional has wrong dimension");
        if (!seen_moduli.insert(m).second) continue;
        Rat value = 0;
        for (std::size_t i = 0; i < b.size(); ++i) value += m[i] * b[i];
        if (!values.insert(value).second) return false;
    }
    return true;
}

std::vector<long> choose_L(const std::vector<SignedTropPoint>& s) {
    if (s.empty()) throw DomainError("empty candidate set");
    const std::size_t n = s.front().size();
    // Distinct moduli differ by a nonzero vector d, and sum_j d_j k^j has at
    // most n-1 roots in k, so this loop terminates.
    for (long k = 0;; ++k) {
        std::vector<long> b(n);
        long power = 1;
        for (std::size_t j = 0; j < n; ++j) {
            b[j] = power;
            power *= k;
        }
        if (is_injective(b, s)) return b;
    }
}

KPoly binomial_factor(const std::vector<Puiseux>& point, const std::vector<long>& b) {
    const std::size_t n = point.size();
    Exponent pos(n, 0);
    Exponent neg(n, 0);
    Puiseux p_pos(1L);
    Puiseux p_neg(1L);
    for (std::size_t i = 0; i < n; ++i) {
        if (b[i] >= 0) {
            pos[i] = b[i];
            p_pos *= point[i].pow(static_cast<unsigned long>(b[i]));
        } else {
            neg[i] = -b[i];
            p_neg *= point[i].pow(static_cast<unsigned long>(-b[i]));
        }
    }
    // x^{b+}/x^{b-} - p^{b+}/p^{b-}, times x^{b-} p^{b-}.
    KPoly f = KPoly::monomial(n, pos, p_neg) - KPoly::monomial(n, neg, p_pos);
    return normalize(f);
}

KPoly build_F0(const PointSetK& v, const std::vector<long>& b) {
    v.validate();
    if (b.size() != v.dim) throw DomainError("functional has wrong dimension");
    std::vector<KPoly> factors;
    for (const auto& p : v.points) factors.push_back(binomial_factor(p, b));
    return squarefree_from_factors(factors);
}

KPoly build_Gc(const PointSetK& v, const SignedTropPoint& c, const std::vector<long>& b) {
    v.validate();
    if (c.size() != v.dim || b.size() != v.dim) throw DomainError("dimension mismatch");
    const auto target = moduli(c);
    std::vector<KPoly> factors;
    for (const auto& p : v.points) {
        SignedTropPoint a = tropicalize(p);
        if (moduli(a) != target) {
            factors.push_back(binomial_factor(p, b));
            continue;
        }
        std::size_t h = 0;
        while (h < v.dim && a[h].sign == c[h].sign) ++h;
        if (h == v.dim) throw DomainError("point not excludable: " + render(c) + " is the tropicalization of a point");
        factors.push_back(KPoly::linear(v.dim, h, p[h]));
    }
    return squarefree_from_factors(factors);
}

BasisCertificate build_basis(const PointSetK& v) {
    BasisCertificate cert;
    cert.coord_polys = coordinate_polys(v);
    cert.candidates = candidate_set(cert.coord_polys);
    cert.trop_v = v.tropicalization();
    cert.functional = choose_L(cert.candidates);
    cert.f0 = build_F0(v, cert.functional);

    std::vector<KPoly> base = cert.coord_polys;
    base.push_back(cert.f0);
    for (const auto& c : cert.candidates) {
        if (!all_members(base, c)) continue;
        cert.survivors.push_back(c);
        if (std::binary_search(cert.trop_v.begin(), cert.trop_v.end(), c)) continue;
        cert.discards.emplace(c, build_Gc(v, c, cert.functional));
    }
    return cert;
}

bool verify_basis(const BasisCertificate& cert, const PointSetK& v) {
    v.validate();
    const auto polys = cert.polynomials();
    for (const auto& f : polys) {
        if (f.dim() != v.dim) return false;
        for (const auto& p : v.points)
            if (!f.eval(p).is_zero()) return false;
    }
    const auto trop_v = v.tropicalization();
    for (const auto& a : trop_v) {
        if (!std::binary_search(cert.candidates.begin(), cert.candidates.end(), a)) return false;
    }
    for (const auto& c : cert.candidates) {
        bool in_trop_v = std::binary_search(trop_v.begin(), trop_v.end(), c);
        if (all_members(polys, c) != in_trop_v) return false;
    }
    return true;
}

}  // namespace rtrop
