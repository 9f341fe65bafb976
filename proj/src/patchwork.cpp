#include "rtrop/patchwork.hpp"

#include "rtrop/error.hpp"
#include "rtrop/qlinalg.hpp"
#include "rtrop/univariate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace rtrop {

namespace {

// Coordinates on which the projection of the support is injective on its span.
std::vector<std::size_t> spanning_coordinates(const std::vector<Exponent>& support, std::size_t dim) {
    std::vector<std::size_t> coords;
    std::size_t current = 0;
    for (std::size_t j = 0; j < dim; ++j) {
        auto trial = coords;
        trial.push_back(j);
        RatMatrix m;
        for (std::size_t i = 1; i < support.size(); ++i) {
            RatVector row;
            for (auto c : trial) row.emplace_back(support[i][c] - support[0][c]);
            m.push_back(std::move(row));
        }
        std::size_t r = rank(m);
        if (r > current) {
            coords = trial;
            current = r;
        }
    }
    return coords;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n) return;
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

struct P2 {
    long x, y;
    friend bool operator<(const P2& a, const P2& b) { return std::tie(a.x, a.y) < std::tie(b.x, b.y); }
    friend bool operator==(const P2& a, const P2& b) { return a.x == b.x && a.y == b.y; }
};

long cross(const P2& o, const P2& a, const P2& b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

// Counter-clockwise convex hull without collinear points.
std::vector<P2> convex_hull(std::vector<P2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<P2> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

std::vector<long> primitive(long x, long y) {
    long g = std::gcd(std::labs(x), std::labs(y));
    if (g == 0) return {0, 0};
    return {x / g, y / g};
}

std::vector<long> normalized_direction(long x, long y) {
    auto d = primitive(x, y);
    if (d[0] < 0 || (d[0] == 0 && d[1] < 0)) {
        d[0] = -d[0];
        d[1] = -d[1];
    }
    return d;
}

std::vector<Rat> negated(const std::vector<Rat>& v) {
    std::vector<Rat> out;
    for (const auto& x : v) out.push_back(-x);
    return out;
}

bool on_segment(const P2& a, const P2& b, const P2& q) {
    if (cross(a, b, q) != 0) return false;
    return std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= q.y &&
           q.y <= std::max(a.y, b.y);
}

}  // namespace

Subdivision dual_subdivision(const RealTropPoly& f) {
    Subdivision s;
    s.dim = f.dim();
    for (const auto& [e, c] : f.terms()) {
        s.support.push_back(e);
        s.lifting[e] = c.modulus;
    }
    long d = affine_dimension(s.support);
    if (d <= 0) throw DomainError("degenerate support: all exponents coincide");
    s.span_dim = static_cast<std::size_t>(d);
    const auto coords = spanning_coordinates(s.support, s.dim);

    const std::size_t m = s.support.size();
    std::vector<RatVector> proj(m);
    std::vector<Rat> height(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (auto c : coords) proj[i].emplace_back(s.support[i][c]);
        height[i] = s.lifting[s.support[i]];
    }

    std::vector<std::vector<std::size_t>> cell_indices;
    std::vector<std::vector<bool>> membership;
    for_each_subset(m, s.span_dim + 1, [&](const std::vector<std::size_t>& subset) {
        for (const auto& mem : membership) {
            if (std::all_of(subset.begin(), subset.end(), [&](std::size_t i) { return mem[i]; })) return;
        }
        // Plane h(x) = <c, x> + c0 through the lifted subset.
        RatMatrix a;
        RatVector b;
        for (auto i : subset) {
            RatVector row = proj[i];
            row.emplace_back(1);
            a.push_back(std::move(row));
            b.push_back(height[i]);
        }
        if (determinant(a) == 0) return;
        auto sol = solve(a, b);
        RatVector plane = *sol;
        std::vector<bool> mem(m, false);
        std::vector<std::size_t> cell;
        for (std::size_t i = 0; i < m; ++i) {
            Rat h = plane.back();
            for (std::size_t j = 0; j < s.span_dim; ++j) h += plane[j] * proj[i][j];
            if (height[i] < h) return;
            if (height[i] == h) {
                mem[i] = true;
                cell.push_back(i);
            }
        }
        membership.push_back(mem);
        cell_indices.push_back(cell);
        if (s.span_dim == s.dim) {
            s.slopes.emplace_back(plane.begin(), plane.begin() + static_cast<long>(s.dim));
            s.offsets.push_back(plane.back());
        }
    });
    for (const auto& cell : cell_indices) {
        std::vector<Exponent> pts;
        for (auto i : cell) pts.push_back(s.support[i]);
        s.cells.push_back(std::move(pts));
    }
    return s;
}

bool is_triangulation(const Subdivision& s) {
    std::set<Exponent> covered;
    for (const auto& cell : s.cells) {
        if (cell.size() != s.span_dim + 1) return false;
        covered.insert(cell.begin(), cell.end());
    }
    return covered.size() == s.support.size();
}

bool is_patchwork_certified(const RealTropPoly& f) {
    if (f.size() == 1) return true;
    return is_triangulation(dual_subdivision(f));
}

CertifiedMembership certified_member(const RealTropPoly& f, const SignedTropPoint& p) {
    bool member = rt_member(f, p);
    if (!is_patchwork_certified(f)) return {Certified::Uncertified, member};
    return {member ? Certified::InTropV : Certified::NotInTropV, member};
}

const char* to_string(Certified c) {
    switch (c) {
        case Certified::InTropV: return "in-trop-V";
        case Certified::NotInTropV: return "not-in-trop-V";
        case Certified::Uncertified: return "uncertified";
    }
    return "?";
}

std::array<std::array<Sign, 2>, 4> plane_orthants() {
    return {{{Sign::Pos, Sign::Pos}, {Sign::Neg, Sign::Pos}, {Sign::Neg, Sign::Neg}, {Sign::Pos, Sign::Neg}}};
}

bool mixed_signs(const RealTropPoly& f, const std::vector<Exponent>& argmin, const std::array<Sign, 2>& orthant) {
    SignedTropPoint p{{orthant[0], Rat(0)}, {orthant[1], Rat(0)}};
    bool plus = false, minus = false;
    for (const auto& e : argmin) {
        Sign s = evaluated_sign(f.terms().at(e).sign, e, p);
        (s == Sign::Pos ? plus : minus) = true;
    }
    return plus && minus;
}

OrthantCurve unsigned_plane_curve(const RealTropPoly& f) {
    if (f.dim() != 2) throw DomainError("plane curve cells need a bivariate polynomial");
    OrthantCurve out;
    if (f.size() < 2) return out;
    const auto support = [&] {
        std::vector<Exponent> s;
        for (const auto& [e, c] : f.terms()) s.push_back(e);
        return s;
    }();

    if (affine_dimension(support) == 1) {
        const Exponent& base = support.front();
        auto u = primitive(support[1][0] - base[0], support[1][1] - base[1]);
        const long uu = u[0] * u[0] + u[1] * u[1];
        RealTropPoly line(1);
        std::map<long, Exponent> back;
        for (const auto& e : support) {
            long k = ((e[0] - base[0]) * u[0] + (e[1] - base[1]) * u[1]) / uu;
            line.set({k}, f.terms().at(e));
            back[k] = e;
        }
        // Along w, the value is |a| + <w, base> + k <w, u>; breakpoints are in s = <w, u>.
        for (const auto& root : unsigned_roots(line)) {
            std::vector<Exponent> argmin;
            for (const auto& entry : rt_argmin(line, {SignedTrop::pos(root.modulus)})) argmin.push_back(back[entry.exponent[0]]);
            std::sort(argmin.begin(), argmin.end());
            Rat scale = root.modulus / uu;
            out.lines.push_back({{scale * u[0], scale * u[1]}, normalized_direction(-u[1], u[0]), argmin});
        }
        return out;
    }

    const Subdivision s = dual_subdivision(f);
    std::map<std::pair<Exponent, Exponent>, std::vector<std::size_t>> edge_cells;
    std::map<std::pair<Exponent, Exponent>, std::vector<Exponent>> edge_points;
    for (std::size_t i = 0; i < s.cells.size(); ++i) {
        const auto& cell = s.cells[i];
        out.vertices.push_back({negated(s.slopes[i]), cell});
        std::vector<P2> pts;
        for (const auto& e : cell) pts.push_back({e[0], e[1]});
        auto hull = convex_hull(pts);
        for (std::size_t k = 0; k < hull.size(); ++k) {
            P2 a = hull[k], b = hull[(k + 1) % hull.size()];
            if (b < a) std::swap(a, b);
            std::pair<Exponent, Exponent> key{{a.x, a.y}, {b.x, b.y}};
            edge_cells[key].push_back(i);
            if (!edge_points.count(key)) {
                std::vector<Exponent> on;
                for (const auto& e : cell)
                    if (on_segment(a, b, {e[0], e[1]})) on.push_back(e);
                edge_points[key] = on;
            }
        }
    }
    for (const auto& [key, cells] : edge_cells) {
        const auto& argmin = edge_points[key];
        if (cells.size() == 2) {
            out.segments.push_back({negated(s.slopes[cells[0]]), negated(s.slopes[cells[1]]), argmin});
            continue;
        }
        const auto& [a, b] = key;
        auto dir = primitive(-(b[1] - a[1]), b[0] - a[0]);
        for (const auto& e : s.cells[cells[0]]) {
            long side = (e[0] - a[0]) * dir[0] + (e[1] - a[1]) * dir[1];
            if (side < 0) {
                dir[0] = -dir[0];
                dir[1] = -dir[1];
                break;
            }
            if (side > 0) break;
        }
        out.rays.push_back({negated(s.slopes[cells[0]]), dir, argmin});
    }
    return out;
}

std::vector<OrthantCurve> plane_curve_cells(const RealTropPoly& f) {
    const OrthantCurve all = unsigned_plane_curve(f);
    std::vector<OrthantCurve> out;
    for (const auto& orthant : plane_orthants()) {
        OrthantCurve c;
        c.orthant = orthant;
        for (const auto& v : all.vertices)
            if (mixed_signs(f, v.argmin, orthant)) c.vertices.push_back(v);
        for (const auto& v : all.segments)
            if (mixed_signs(f, v.argmin, orthant)) c.segments.push_back(v);
        for (const auto& v : all.rays)
            if (mixed_signs(f, v.argmin, orthant)) c.rays.push_back(v);
        for (const auto& v : all.lines)
            if (mixed_signs(f, v.argmin, orthant)) c.lines.push_back(v);
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace rtrop
