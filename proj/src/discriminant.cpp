#include "rtrop/discriminant.hpp"

#include "rtrop/error.hpp"
#include "rtrop/fourier_motzkin.hpp"
#include "rtrop/qlinalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace rtrop {

Rat AffineFunctional::operator()(const Exponent& e) const {
    if (e.size() != b.size()) throw DomainError("functional dimension does not match exponent");
    Rat acc = b0;
    for (std::size_t i = 0; i < b.size(); ++i) acc += Rat(b[i]) * e[i];
    return acc;
}

bool AffineFunctional::is_zero() const {
    return b0 == 0 && std::all_of(b.begin(), b.end(), [](long x) { return x == 0; });
}

std::string render(const AffineFunctional& L) {
    std::string out = std::to_string(L.b0);
    for (long x : L.b) out += " " + std::to_string(x);
    return out;
}

RealTropPoly euler_derivative(const RealTropPoly& f, const AffineFunctional& L) {
    RealTropPoly out(f.dim());
    for (const auto& [e, c] : f.terms()) {
        Rat v = L(e);
        if (v == 0) continue;
        out.set(e, {v > 0 ? c.sign : -c.sign, c.modulus});
    }
    if (out.empty()) throw DomainError("derivative is zero");
    return out;
}

std::pair<RealTropPoly, SignedTropPoint> positivize(const RealTropPoly& f, const SignedTropPoint& p) {
    if (p.size() != f.dim()) throw DomainError("point dimension does not match polynomial");
    RealTropPoly g(f.dim());
    for (const auto& [e, c] : f.terms()) g.set(e, {evaluated_sign(c.sign, e, p), c.modulus});
    SignedTropPoint q = p;
    for (auto& x : q) x.sign = Sign::Pos;
    return {std::move(g), std::move(q)};
}

namespace {

long span_dimension(const std::vector<Exponent>& pts, SpanKind kind) {
    return kind == SpanKind::Affine ? affine_dimension(pts) : linear_dimension(pts);
}

bool in_span(const std::vector<Exponent>& pts, const Exponent& q, SpanKind kind) {
    if (pts.empty()) return false;
    return kind == SpanKind::Affine ? in_affine_span(pts, q) : in_linear_span(pts, q);
}

void require_spanning(const RealTropPoly& f, SpanKind kind) {
    if (span_dimension(f.support(), kind) != static_cast<long>(f.dim()))
        throw DomainError(kind == SpanKind::Affine ? "support does not affinely span" : "support does not linearly span");
}

void require_member(const RealTropPoly& f, const SignedTropPoint& p) {
    if (p.size() != f.dim()) throw DomainError("point dimension does not match polynomial");
    if (!rt_member(f, p)) throw DomainError("point is not on the hypersurface");
}

Int lcm_of_denominators(const RatVector& v) {
    Int l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

AffineFunctional to_integer_functional(const RatVector& x) {
    Int l = lcm_of_denominators(x);
    std::vector<Int> ints;
    Int g = 0;
    for (const auto& v : x) {
        Int n = Int(v.get_num() * (l / v.get_den()));
        ints.push_back(n);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    AffineFunctional L;
    for (std::size_t i = 0; i < ints.size(); ++i) {
        Int n = g == 0 ? ints[i] : Int(ints[i] / g);
        if (!n.fits_slong_p()) throw DomainError("separating functional does not fit in a machine integer");
        if (i == 0) L.b0 = n.get_si();
        else L.b.push_back(n.get_si());
    }
    return L;
}

LinearConstraint row(const Exponent& e, Rat scale, Rat bound, LinearConstraint::Kind kind) {
    LinearConstraint c;
    c.coeffs.push_back(scale);
    for (long x : e) c.coeffs.push_back(scale * x);
    c.bound = bound;
    c.kind = kind;
    return c;
}

}  // namespace

Flag flag(const RealTropPoly& f, const SignedTropPoint& p, SpanKind span) {
    if (p.size() != f.dim()) throw DomainError("point dimension does not match polynomial");
    require_spanning(f, span);
    Flag out;
    std::vector<Exponent> current;
    while (current.empty() || span_dimension(current, span) < static_cast<long>(f.dim())) {
        std::optional<Rat> best;
        std::vector<Exponent> level;
        for (const auto& [e, c] : f.terms()) {
            if (in_span(current, e, span)) continue;
            Rat v = c.modulus + pairing(e, p);
            if (!best || v < *best) {
                best = v;
                level.clear();
            }
            if (v == *best) level.push_back(e);
        }
        if (level.empty()) throw DomainError("support does not span");
        current.insert(current.end(), level.begin(), level.end());
        std::sort(current.begin(), current.end());
        std::vector<Exponent> plus, minus;
        for (const auto& e : current) {
            Sign s = evaluated_sign(f.terms().at(e).sign, e, p);
            (s == Sign::Pos ? plus : minus).push_back(e);
        }
        out.chain.push_back(current);
        out.plus.push_back(std::move(plus));
        out.minus.push_back(std::move(minus));
    }
    return out;
}

bool separates(const AffineFunctional& L, const std::vector<Exponent>& a, const std::vector<Exponent>& b) {
    bool nonzero = false;
    bool a_nonneg = true, a_nonpos = true, b_nonneg = true, b_nonpos = true;
    for (const auto& e : a) {
        Rat v = L(e);
        if (v != 0) nonzero = true;
        if (v < 0) a_nonneg = false;
        if (v > 0) a_nonpos = false;
    }
    for (const auto& e : b) {
        Rat v = L(e);
        if (v != 0) nonzero = true;
        if (v < 0) b_nonneg = false;
        if (v > 0) b_nonpos = false;
    }
    return nonzero && ((a_nonneg && b_nonpos) || (a_nonpos && b_nonneg));
}

std::optional<AffineFunctional> find_separating_L(const std::vector<Exponent>& fixed,
                                                  const std::vector<Exponent>& plus,
                                                  const std::vector<Exponent>& minus,
                                                  std::size_t dim) {
    using Kind = LinearConstraint::Kind;
    for (const auto* set : {&fixed, &plus, &minus})
        for (const auto& e : *set)
            if (e.size() != dim) throw DomainError("exponent dimension mismatch");
    std::set<Exponent> fixed_set(fixed.begin(), fixed.end());
    for (int orientation : {1, -1}) {
        std::vector<LinearConstraint> base;
        for (const auto& e : fixed) base.push_back(row(e, 1, 0, Kind::Equal));
        for (const auto& e : plus) base.push_back(row(e, orientation, 0, Kind::AtLeast));
        for (const auto& e : minus) base.push_back(row(e, -orientation, 0, Kind::AtLeast));
        std::vector<std::pair<Exponent, int>> witnesses;
        for (const auto& e : plus)
            if (!fixed_set.count(e)) witnesses.push_back({e, orientation});
        for (const auto& e : minus)
            if (!fixed_set.count(e)) witnesses.push_back({e, -orientation});
        for (const auto& [q, s] : witnesses) {
            auto cons = base;
            cons.push_back(row(q, s, 1, Kind::AtLeast));
            if (auto x = fm_solve(dim + 1, cons)) return to_integer_functional(*x);
        }
    }
    return std::nullopt;
}

SingularityVerdict is_singular(const RealTropPoly& f, const SignedTropPoint& p, SpanKind span) {
    require_member(f, p);
    auto [g, q] = positivize(f, p);
    SingularityVerdict v;
    v.flag = flag(g, q, span);
    for (std::size_t i = 0; i < v.flag.levels(); ++i) {
        std::vector<Exponent> fixed = i == 0 ? std::vector<Exponent>{} : v.flag.chain[i - 1];
        if (auto L = find_separating_L(fixed, v.flag.plus[i], v.flag.minus[i], f.dim())) {
            v.singular = false;
            v.level = i;
            v.witness = *L;
            return v;
        }
    }
    v.singular = true;
    return v;
}

bool weight_class_eq(const RealTropPoly& f, const SignedTropPoint& p, const SignedTropPoint& q, SpanKind span) {
    require_member(f, p);
    require_member(f, q);
    return flag(f, p, span).chain == flag(f, q, span).chain;
}

bool euler_intersection_check(const RealTropPoly& f, const SignedTropPoint& p, const std::vector<AffineFunctional>& ls) {
    for (const auto& L : ls) {
        bool vanishes = std::all_of(f.terms().begin(), f.terms().end(), [&](const auto& t) { return L(t.first) == 0; });
        if (vanishes) continue;
        if (!rt_member(euler_derivative(f, L), p)) return false;
    }
    return true;
}

std::vector<AffineFunctional> all_functionals(std::size_t dim, long bound) {
    std::vector<AffineFunctional> out;
    std::vector<long> coeffs(dim + 1, -bound);
    while (true) {
        AffineFunctional L{coeffs[0], std::vector<long>(coeffs.begin() + 1, coeffs.end())};
        if (!L.is_zero()) out.push_back(std::move(L));
        std::size_t k = 0;
        while (k < coeffs.size() && coeffs[k] == bound) coeffs[k++] = -bound;
        if (k == coeffs.size()) break;
        ++coeffs[k];
    }
    return out;
}

namespace {

std::string render_vec(const std::vector<Rat>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + ")";
}

std::string render_dir(const std::vector<long>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

}  // namespace

std::vector<WeightClass> classify_plane_weight_classes(const RealTropPoly& f, const std::array<Sign, 2>& orthant) {
    if (f.dim() != 2) throw DomainError("not bivariate");
    const auto cells = plane_curve_cells(f);
    auto it = std::find_if(cells.begin(), cells.end(), [&](const OrthantCurve& c) { return c.orthant == orthant; });
    if (it == cells.end()) return {};

    std::vector<std::pair<std::string, std::vector<Rat>>> reps;
    for (const auto& v : it->vertices) reps.push_back({"vertex " + render_vec(v.point), v.point});
    for (const auto& s : it->segments) {
        std::vector<Rat> mid{(s.from[0] + s.to[0]) / 2, (s.from[1] + s.to[1]) / 2};
        reps.push_back({"segment " + render_vec(s.from) + " to " + render_vec(s.to), mid});
    }
    for (const auto& r : it->rays) {
        std::vector<Rat> pt{r.from[0] + r.direction[0], r.from[1] + r.direction[1]};
        reps.push_back({"ray from " + render_vec(r.from) + " direction " + render_dir(r.direction), pt});
    }
    for (const auto& l : it->lines)
        reps.push_back({"line through " + render_vec(l.point) + " direction " + render_dir(l.direction), l.point});

    std::vector<WeightClass> out;
    std::vector<std::vector<std::vector<Exponent>>> keys;
    for (const auto& [desc, m] : reps) {
        SignedTropPoint p{{orthant[0], m[0]}, {orthant[1], m[1]}};
        auto chain = flag(f, p).chain;
        auto k = std::find(keys.begin(), keys.end(), chain);
        if (k != keys.end()) {
            out[static_cast<std::size_t>(k - keys.begin())].cells.push_back(desc);
            continue;
        }
        keys.push_back(chain);
        out.push_back({{desc}, p, is_singular(f, p)});
    }
    return out;
}

}  // namespace rtrop
