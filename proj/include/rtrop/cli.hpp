#pragma once

#include "rtrop/svg.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace rtrop::cli {

enum ExitCode : int { Success = 0, Rejected = 1, InputError = 2 };

struct JobConfig {
    std::string subcommand;
    std::string poly;     // --poly
    std::string points;   // --points
    std::string system;   // --system
    std::string point;    // --point, inline signed point
    std::string orthant = "++";
    unsigned long nmax = 64;
    long lp_bound = 3;
    std::optional<std::string> svg;
    SvgBox box;
    std::string out_dir;  // empty: RTROP_OUT_DIR, then "rtrop-out"
    std::uint64_t seed = 1;
    std::size_t samples = 0;
    bool json = false;
    bool linear_span = false;

    // Throws std::invalid_argument when a bound is not positive or a required path is missing.
    void validate() const;
};

// Runs one subcommand, writing the report to `out` and diagnostics to `err`.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

std::string resolve_out_dir(const JobConfig& config);

}  // namespace rtrop::cli
