#include "rtrop/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace rtrop {

namespace {

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    std::string s = buf;
    return s == "-0.00" ? "0.00" : s;
}

struct Frame {
    double lo, hi, scale, gap, half;

    double offset(double m) const { return gap + scale * (m - lo); }
    double x(Sign s, double m) const { return half + to_int(s) * offset(m); }
    double y(Sign s, double m) const { return half - to_int(s) * offset(m); }
};

// Liang-Barsky clipping of p + t d, t in [t0, t1], to the square [lo, hi]^2.
bool clip(const double p[2], const double d[2], double& t0, double& t1, double lo, double hi) {
    for (int i = 0; i < 2; ++i) {
        if (d[i] == 0) {
            if (p[i] < lo || p[i] > hi) return false;
            continue;
        }
        double a = (lo - p[i]) / d[i], b = (hi - p[i]) / d[i];
        if (a > b) std::swap(a, b);
        t0 = std::max(t0, a);
        t1 = std::min(t1, b);
    }
    return t0 <= t1;
}

std::string label(const std::vector<Rat>& m, const std::array<Sign, 2>& o) {
    return "(" + m[0].get_str() + "^" + sign_char(o[0]) + ", " + m[1].get_str() + "^" + sign_char(o[1]) + ")";
}

}  // namespace

std::string render_svg(const std::vector<OrthantCurve>& cells, const SvgBox& box) {
    Rat lo = 0, hi = 0;
    bool any = false;
    auto see = [&](const std::vector<Rat>& p) {
        for (const auto& c : p) {
            if (!any || c < lo) lo = c;
            if (!any || c > hi) hi = c;
            any = true;
        }
    };
    for (const auto& c : cells) {
        for (const auto& v : c.vertices) see(v.point);
        for (const auto& l : c.lines) see(l.point);
    }
    lo = box.lo ? *box.lo : rat_floor(lo) - 2;
    hi = box.hi ? *box.hi : rat_ceil(hi) + 2;

    Frame fr{lo.get_d(), hi.get_d(), box.scale, box.gap, 0};
    fr.half = fr.offset(fr.hi) + 20;
    const double size = 2 * fr.half;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(size) << "\" height=\"" << num(size)
       << "\" viewBox=\"0 0 " << num(size) << " " << num(size) << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
    os << "<line x1=\"0.00\" y1=\"" << num(fr.half) << "\" x2=\"" << num(size) << "\" y2=\"" << num(fr.half) << "\"/>\n";
    os << "<line x1=\"" << num(fr.half) << "\" y1=\"0.00\" x2=\"" << num(fr.half) << "\" y2=\"" << num(size) << "\"/>\n";
    os << "</g>\n";

    for (const auto& c : cells) {
        if (c.empty()) continue;
        const auto o = c.orthant;
        os << "<g class=\"orthant\" data-signs=\"" << sign_char(o[0]) << sign_char(o[1]) << "\">\n";
        os << "<g class=\"grid\" stroke=\"#bbbbbb\" stroke-width=\"0.5\" stroke-dasharray=\"3,3\">\n";
        for (long k = rat_ceil(lo).get_num().get_si(); k <= rat_floor(hi).get_num().get_si(); ++k) {
            double kk = static_cast<double>(k);
            os << "<line x1=\"" << num(fr.x(o[0], kk)) << "\" y1=\"" << num(fr.y(o[1], fr.lo)) << "\" x2=\""
               << num(fr.x(o[0], kk)) << "\" y2=\"" << num(fr.y(o[1], fr.hi)) << "\"/>\n";
            os << "<line x1=\"" << num(fr.x(o[0], fr.lo)) << "\" y1=\"" << num(fr.y(o[1], kk)) << "\" x2=\""
               << num(fr.x(o[0], fr.hi)) << "\" y2=\"" << num(fr.y(o[1], kk)) << "\"/>\n";
        }
        os << "</g>\n";

        auto draw = [&](const char* cls, const double p[2], const double d[2], double t0, double t1) {
            if (!clip(p, d, t0, t1, fr.lo, fr.hi)) return;
            os << "<line class=\"" << cls << "\" x1=\"" << num(fr.x(o[0], p[0] + t0 * d[0])) << "\" y1=\""
               << num(fr.y(o[1], p[1] + t0 * d[1])) << "\" x2=\"" << num(fr.x(o[0], p[0] + t1 * d[0])) << "\" y2=\""
               << num(fr.y(o[1], p[1] + t1 * d[1])) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
        };
        const double inf = std::numeric_limits<double>::infinity();
        for (const auto& s : c.segments) {
            double p[2] = {s.from[0].get_d(), s.from[1].get_d()};
            double d[2] = {s.to[0].get_d() - p[0], s.to[1].get_d() - p[1]};
            draw("segment", p, d, 0, 1);
        }
        for (const auto& r : c.rays) {
            double p[2] = {r.from[0].get_d(), r.from[1].get_d()};
            double d[2] = {static_cast<double>(r.direction[0]), static_cast<double>(r.direction[1])};
            draw("ray", p, d, 0, inf);
        }
        for (const auto& l : c.lines) {
            double p[2] = {l.point[0].get_d(), l.point[1].get_d()};
            double d[2] = {static_cast<double>(l.direction[0]), static_cast<double>(l.direction[1])};
            draw("line", p, d, -inf, inf);
        }
        for (const auto& v : c.vertices) {
            double x = fr.x(o[0], v.point[0].get_d()), y = fr.y(o[1], v.point[1].get_d());
            os << "<circle class=\"vertex\" cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"3\" fill=\"black\"/>\n";
            os << "<text class=\"label\" x=\"" << num(x + 5) << "\" y=\"" << num(y - 5)
               << "\" font-size=\"10\" font-family=\"sans-serif\">" << label(v.point, o) << "</text>\n";
        }
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace rtrop
