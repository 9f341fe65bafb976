#pragma once

#include "rtrop/patchwork.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rtrop {

struct SvgBox {
    // Modulus window drawn in every quadrant; derived from the vertices when unset.
    std::optional<Rat> lo;
    std::optional<Rat> hi;
    double scale = 40.0;  // pixels per unit of modulus
    double gap = 24.0;    // distance between the axes and the window
};

// Four quadrants, one per sign vector, each showing the moduli of the points in
// that orthant.  A coordinate with sign s and modulus m is drawn at
// s * (gap + scale * (m - lo)) from the axis.
std::string render_svg(const std::vector<OrthantCurve>& cells, const SvgBox& box = {});

}  // namespace rtrop
