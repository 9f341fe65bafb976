#pragma once

// Line-oriented text formats for tropical polynomials, Puiseux polynomials,
// signed points, point sets and linear systems.  Blank lines and everything
// after '#' are ignored.  Errors carry 1-based line and column.
//
//   tropical polynomial   (+|-)modulus : e1 ... en
//   Puiseux polynomial    e1 ... en : <Puiseux literal>
//   signed point          (+|-)rat ... (space separated)
//   point set             one point per line, comma separated Puiseux values
//   linear system         one affine form per line: a1, ..., an, a0

#include "rtrop/signed_trop.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace rtrop {

RealTropPoly parse_trop_poly(std::string_view text);
std::string format_trop_poly(const RealTropPoly& f);

KPoly parse_kpoly(std::string_view text);
std::string format_kpoly(const KPoly& f);

SignedTrop parse_signed_trop(std::string_view text);
SignedTropPoint parse_signed_point(std::string_view text);
std::string format_signed_point(const SignedTropPoint& p);

// One signed point per line.
std::vector<SignedTropPoint> parse_signed_points(std::string_view text);
std::string format_signed_points(const std::vector<SignedTropPoint>& points);

std::vector<std::vector<Puiseux>> parse_puiseux_rows(std::string_view text);
std::string format_puiseux_rows(const std::vector<std::vector<Puiseux>>& rows);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace rtrop
