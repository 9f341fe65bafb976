#pragma once

// Independent reference computations shared by the unit and acceptance tests.

#include "support/fixtures.hpp"

#include "rtrop/discriminant.hpp"
#include "rtrop/patchwork.hpp"
#include "rtrop/qlinalg.hpp"
#include "rtrop/univariate.hpp"

#include <array>
#include <set>

namespace oracles {

using namespace rtrop;

using Triple = std::array<std::size_t, 3>;

// Breakpoints of p -> min_l (|a_l| + l p) found by intersecting every pair of
// lines and keeping the points where at least two lines are minimal.
inline std::vector<UnsignedRoot> brute_force_roots(const RealTropPoly& f) {
    std::set<Rat> candidates;
    for (const auto& [e1, c1] : f.terms())
        for (const auto& [e2, c2] : f.terms())
            if (e1[0] < e2[0]) candidates.insert((c1.modulus - c2.modulus) / (e2[0] - e1[0]));
    std::vector<UnsignedRoot> out;
    for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
        Rat best;
        bool first = true;
        long lo = 0, hi = 0;
        for (const auto& [e, c] : f.terms()) {
            Rat v = c.modulus + *it * e[0];
            if (first || v < best) {
                best = v;
                lo = hi = e[0];
                first = false;
            } else if (v == best) {
                hi = e[0];
            }
        }
        if (hi > lo) out.push_back({*it, hi - lo});
    }
    return out;
}

inline RealTropPoly random_univariate(std::mt19937_64& rng, long max_degree) {
    std::uniform_int_distribution<long> deg(1, max_degree);
    std::uniform_int_distribution<int> coin(0, 2);
    while (true) {
        long d = deg(rng);
        RealTropPoly f(1);
        for (long l = 0; l <= d; ++l)
            if (l == 0 || l == d || coin(rng))
                f.set({l}, {fixtures::random_sign(rng), fixtures::random_rat(rng, 4, 2)});
        if (f.size() >= 2) return f;
    }
}

// A triple spans a lower facet iff no lifted point lies strictly below its
// plane: sign(det3(b - a, c - a, q - a)) * orient2d(a, b, c) < 0 means below.
inline std::set<Triple> lower_triples_oracle(const RealTropPoly& f) {
    std::vector<Exponent> pts;
    std::vector<Rat> h;
    for (const auto& [e, c] : f.terms()) {
        pts.push_back(e);
        h.push_back(c.modulus);
    }
    std::set<Triple> out;
    const std::size_t m = pts.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k) {
                long orient = (pts[j][0] - pts[i][0]) * (pts[k][1] - pts[i][1]) -
                              (pts[j][1] - pts[i][1]) * (pts[k][0] - pts[i][0]);
                if (orient == 0) continue;
                bool lower = true;
                for (std::size_t q = 0; q < m && lower; ++q) {
                    RatMatrix d{{Rat(pts[j][0] - pts[i][0]), Rat(pts[j][1] - pts[i][1]), h[j] - h[i]},
                                {Rat(pts[k][0] - pts[i][0]), Rat(pts[k][1] - pts[i][1]), h[k] - h[i]},
                                {Rat(pts[q][0] - pts[i][0]), Rat(pts[q][1] - pts[i][1]), h[q] - h[i]}};
                    Rat det = determinant(d);
                    if ((det < 0 && orient > 0) || (det > 0 && orient < 0)) lower = false;
                }
                if (lower) out.insert({i, j, k});
            }
    return out;
}

inline std::set<Triple> lower_triples_from_cells(const RealTropPoly& f) {
    std::vector<Exponent> pts;
    for (const auto& [e, c] : f.terms()) pts.push_back(e);
    auto s = dual_subdivision(f);
    std::set<Triple> out;
    for (const auto& cell : s.cells) {
        std::vector<std::size_t> idx;
        for (const auto& e : cell) idx.push_back(std::lower_bound(pts.begin(), pts.end(), e) - pts.begin());
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = a + 1; b < idx.size(); ++b)
                for (std::size_t c = b + 1; c < idx.size(); ++c) {
                    const auto &p = pts[idx[a]], &q = pts[idx[b]], &r = pts[idx[c]];
                    long orient = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]);
                    if (orient != 0) out.insert({idx[a], idx[b], idx[c]});
                }
    }
    return out;
}

inline RealTropPoly random_plane_poly(std::mt19937_64& rng, int max_points, long box, long max_modulus) {
    std::uniform_int_distribution<long> coord(0, box);
    std::uniform_int_distribution<int> count(3, max_points);
    std::uniform_int_distribution<long> modulus(0, max_modulus);
    while (true) {
        RealTropPoly f(2);
        int k = count(rng);
        for (int i = 0; i < k; ++i) f.set({coord(rng), coord(rng)}, {fixtures::random_sign(rng), Rat(modulus(rng))});
        std::vector<Exponent> s;
        for (const auto& [e, c] : f.terms()) s.push_back(e);
        if (affine_dimension(s) == 2) return f;
    }
}

inline KPoly random_kpoly(std::mt19937_64& rng, std::size_t dim, int terms, long max_exp) {
    std::uniform_int_distribution<long> e(0, max_exp);
    KPoly f(dim);
    for (int i = 0; i < terms; ++i) {
        Exponent ex(dim);
        for (auto& x : ex) x = e(rng);
        f.add_term(ex, fixtures::random_puiseux(rng, 2, -2, 2));
    }
    return f;
}

inline bool exhaustive_separator(const std::vector<Exponent>& fixed, const std::vector<Exponent>& plus,
                          const std::vector<Exponent>& minus, std::size_t dim, long bound) {
    for (const auto& L : all_functionals(dim, bound)) {
        bool ok = std::all_of(fixed.begin(), fixed.end(), [&](const Exponent& e) { return L(e) == 0; });
        if (ok && separates(L, plus, minus)) return true;
    }
    return false;
}

}  // namespace oracles
