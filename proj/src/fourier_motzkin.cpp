#include "rtrop/fourier_motzkin.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rtrop {

namespace {

struct Ineq {
    RatVector a;
    Rat b;  // a . x >= b
};

// Positive rescaling making the first nonzero coefficient +-1.
void canonical(Ineq& c) {
    for (const auto& x : c.a) {
        if (x == 0) continue;
        Rat s = x > 0 ? x : Rat(-x);
        for (auto& y : c.a) y /= s;
        c.b /= s;
        return;
    }
}

std::string key(const Ineq& c) {
    std::string k;
    for (const auto& x : c.a) k += x.get_str() + ",";
    return k + ">=" + c.b.get_str();
}

Rat dot_except(const RatVector& a, const RatVector& x, std::size_t skip) {
    Rat acc = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
        if (j != skip) acc += a[j] * x[j];
    return acc;
}

Rat pick_in_interval(const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
    if ((!lo || *lo <= 0) && (!hi || *hi >= 0)) return 0;
    if (lo && *lo > 0) {
        Rat c = rat_ceil(*lo);
        return (!hi || c <= *hi) ? c : *lo;
    }
    Rat f = rat_floor(*hi);
    return (!lo || f >= *lo) ? f : *hi;
}

}  // namespace

std::optional<RatVector> fm_solve(std::size_t vars, const std::vector<LinearConstraint>& constraints) {
    // Equalities: x_v = (b - sum_{j != v} a_j x_j) / a_v, substituted everywhere.
    struct Substitution {
        std::size_t var;
        RatVector expr;  // coefficients on the other variables
        Rat constant;
    };
    std::vector<Substitution> subs;
    std::vector<LinearConstraint> work = constraints;
    for (std::size_t i = 0; i < work.size(); ++i) {
        if (work[i].kind != LinearConstraint::Kind::Equal) continue;
        const auto& eq = work[i];
        std::size_t v = vars;
        for (std::size_t j = 0; j < vars; ++j)
            if (eq.coeffs[j] != 0) {
                v = j;
                break;
            }
        if (v == vars) {
            if (eq.bound != 0) return std::nullopt;
            continue;
        }
        Substitution s{v, RatVector(vars, Rat(0)), eq.bound / eq.coeffs[v]};
        for (std::size_t j = 0; j < vars; ++j)
            if (j != v) s.expr[j] = -eq.coeffs[j] / eq.coeffs[v];
        for (std::size_t k = 0; k < work.size(); ++k) {
            if (k == i || work[k].coeffs[v] == 0) continue;
            Rat c = work[k].coeffs[v];
            work[k].coeffs[v] = 0;
            for (std::size_t j = 0; j < vars; ++j) work[k].coeffs[j] += c * s.expr[j];
            work[k].bound -= c * s.constant;
        }
        work[i].coeffs.assign(vars, Rat(0));
        work[i].bound = 0;
        subs.push_back(std::move(s));
    }
    std::vector<bool> substituted(vars, false);
    for (const auto& s : subs) substituted[s.var] = true;

    std::vector<Ineq> current;
    for (const auto& c : work) {
        if (c.kind == LinearConstraint::Kind::Equal) continue;
        current.push_back({c.coeffs, c.bound});
    }

    // Fourier-Motzkin, keeping each stage for back-substitution.
    std::vector<std::size_t> order;
    std::vector<std::vector<Ineq>> stages;
    for (std::size_t v = 0; v < vars; ++v) {
        if (substituted[v]) continue;
        stages.push_back(current);
        order.push_back(v);
        std::vector<Ineq> pos, neg, next;
        for (auto& c : current) {
            if (c.a[v] > 0) pos.push_back(c);
            else if (c.a[v] < 0) neg.push_back(c);
            else next.push_back(c);
        }
        for (const auto& p : pos)
            for (const auto& n : neg) {
                Rat wp = -n.a[v], wn = p.a[v];
                Ineq c{RatVector(vars), wp * p.b + wn * n.b};
                for (std::size_t j = 0; j < vars; ++j) c.a[j] = wp * p.a[j] + wn * n.a[j];
                c.a[v] = 0;
                next.push_back(std::move(c));
            }
        std::set<std::string> seen;
        current.clear();
        for (auto& c : next) {
            canonical(c);
            bool zero = std::all_of(c.a.begin(), c.a.end(), [](const Rat& x) { return x == 0; });
            if (zero) {
                if (c.b > 0) return std::nullopt;
                continue;
            }
            if (seen.insert(key(c)).second) current.push_back(std::move(c));
        }
    }
    for (const auto& c : current)
        if (c.b > 0) return std::nullopt;

    RatVector x(vars, Rat(0));
    for (std::size_t k = order.size(); k-- > 0;) {
        const std::size_t v = order[k];
        std::optional<Rat> lo, hi;
        for (const auto& c : stages[k]) {
            if (c.a[v] == 0) continue;
            Rat bound = (c.b - dot_except(c.a, x, v)) / c.a[v];
            if (c.a[v] > 0) {
                if (!lo || bound > *lo) lo = bound;
            } else {
                if (!hi || bound < *hi) hi = bound;
            }
        }
        if (lo && hi && *lo > *hi) throw std::logic_error("Fourier-Motzkin back-substitution failed");
        x[v] = pick_in_interval(lo, hi);
    }
    for (std::size_t k = subs.size(); k-- > 0;) {
        const auto& s = subs[k];
        x[s.var] = s.constant + dot_except(s.expr, x, s.var);
    }
    return x;
}

}  // namespace rtrop
