#pragma once

// Euler derivatives of real tropical polynomials, flags of a point on a real
// tropical hypersurface, and the separation criterion deciding whether the
// point is a real tropical singularity.

#include "rtrop/patchwork.hpp"
#include "rtrop/signed_trop.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rtrop {

// L(l) = b0 + <b, l>.
struct AffineFunctional {
    long b0 = 0;
    std::vector<long> b;

    Rat operator()(const Exponent& e) const;
    bool is_zero() const;
    friend bool operator==(const AffineFunctional&, const AffineFunctional&) = default;
};

std::string render(const AffineFunctional& L);  // "b0 b1 ... bn"

// Throws DomainError("derivative is zero") when L vanishes on the support.
RealTropPoly euler_derivative(const RealTropPoly& f, const AffineFunctional& L);

std::pair<RealTropPoly, SignedTropPoint> positivize(const RealTropPoly& f, const SignedTropPoint& p);

enum class SpanKind { Affine, Linear };

struct Flag {
    std::vector<std::vector<Exponent>> chain;  // cumulative levels, each sorted
    std::vector<std::vector<Exponent>> plus;
    std::vector<std::vector<Exponent>> minus;

    std::size_t levels() const { return chain.size(); }
    friend bool operator==(const Flag&, const Flag&) = default;
};

Flag flag(const RealTropPoly& f, const SignedTropPoint& p, SpanKind span = SpanKind::Affine);

bool separates(const AffineFunctional& L, const std::vector<Exponent>& a, const std::vector<Exponent>& b);

// L = 0 on fixed, L >= 0 on plus, L <= 0 on minus, and L nonzero somewhere on plus and minus.
std::optional<AffineFunctional> find_separating_L(const std::vector<Exponent>& fixed,
                                                  const std::vector<Exponent>& plus,
                                                  const std::vector<Exponent>& minus,
                                                  std::size_t dim);

struct SingularityVerdict {
    bool singular = false;
    Flag flag;
    std::optional<std::size_t> level;
    std::optional<AffineFunctional> witness;
};

SingularityVerdict is_singular(const RealTropPoly& f, const SignedTropPoint& p, SpanKind span = SpanKind::Affine);

bool weight_class_eq(const RealTropPoly& f, const SignedTropPoint& p, const SignedTropPoint& q,
                     SpanKind span = SpanKind::Affine);

// Functionals vanishing on the whole support are skipped.
bool euler_intersection_check(const RealTropPoly& f, const SignedTropPoint& p, const std::vector<AffineFunctional>& ls);

// Every integer functional in dimension n with coefficients in [-bound, bound].
std::vector<AffineFunctional> all_functionals(std::size_t dim, long bound);

struct WeightClass {
    std::vector<std::string> cells;  // descriptions of the curve cells in the class
    SignedTropPoint representative;
    SingularityVerdict verdict;
};

std::vector<WeightClass> classify_plane_weight_classes(const RealTropPoly& f, const std::array<Sign, 2>& orthant);

}  // namespace rtrop
