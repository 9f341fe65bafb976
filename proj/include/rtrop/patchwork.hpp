#pragma once

// Regular subdivisions dual to a real tropical polynomial, the triangulation
// criterion that makes a single polynomial a real tropical basis, and the
// cells of a plane real tropical curve.

#include "rtrop/signed_trop.hpp"

#include <array>
#include <map>
#include <optional>
#include <vector>

namespace rtrop {

struct Subdivision {
    std::size_t dim = 0;             // ambient dimension n
    std::size_t span_dim = 0;        // dimension d of the affine span of the support
    std::vector<Exponent> support;
    std::map<Exponent, Rat> lifting;
    // Full-dimensional lower cells, each sorted, listed once.
    std::vector<std::vector<Exponent>> cells;
    // When d = n, the lower facet of cell i is the graph of l -> <slopes[i], l> + offsets[i].
    std::vector<std::vector<Rat>> slopes;
    std::vector<Rat> offsets;
};

// Throws DomainError when all support points coincide.
Subdivision dual_subdivision(const RealTropPoly& f);

// Every full-dimensional cell is a simplex and every support point is a vertex.
bool is_triangulation(const Subdivision& s);
bool is_patchwork_certified(const RealTropPoly& f);

enum class Certified { InTropV, NotInTropV, Uncertified };

struct CertifiedMembership {
    Certified status = Certified::Uncertified;
    bool member = false;
};

CertifiedMembership certified_member(const RealTropPoly& f, const SignedTropPoint& p);

const char* to_string(Certified c);

// Cells of T_R(f) for n = 2.  Every item records the support points where the
// minimum is attained along it.
struct CurveVertex {
    std::vector<Rat> point;
    std::vector<Exponent> argmin;
};

struct CurveSegment {
    std::vector<Rat> from;
    std::vector<Rat> to;
    std::vector<Exponent> argmin;
};

struct CurveRay {
    std::vector<Rat> from;
    std::vector<long> direction;  // primitive
    std::vector<Exponent> argmin;
};

// Whole line; arises when the support is one-dimensional.
struct CurveLine {
    std::vector<Rat> point;
    std::vector<long> direction;  // primitive
    std::vector<Exponent> argmin;
};

struct OrthantCurve {
    std::array<Sign, 2> orthant{Sign::Pos, Sign::Pos};
    std::vector<CurveVertex> vertices;
    std::vector<CurveSegment> segments;
    std::vector<CurveRay> rays;
    std::vector<CurveLine> lines;

    bool empty() const { return vertices.empty() && segments.empty() && rays.empty() && lines.empty(); }
};

// Orthants in the order (+,+), (-,+), (-,-), (+,-).
std::array<std::array<Sign, 2>, 4> plane_orthants();

// All cells of the unsigned curve, before sign filtering.
OrthantCurve unsigned_plane_curve(const RealTropPoly& f);

std::vector<OrthantCurve> plane_curve_cells(const RealTropPoly& f);

// True iff the monomials of `argmin` have both evaluated signs in the orthant.
bool mixed_signs(const RealTropPoly& f, const std::vector<Exponent>& argmin, const std::array<Sign, 2>& orthant);

}  // namespace rtrop
