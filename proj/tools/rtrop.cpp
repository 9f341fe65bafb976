#include "rtrop/cli.hpp"
#include "rtrop/puiseux.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
    using rtrop::cli::JobConfig;
    JobConfig config;
    std::string svg_lo, svg_hi;

    CLI::App app{"Exact real tropical geometry over real Puiseux series"};
    app.require_subcommand(1);
    app.add_option("--seed", config.seed, "Seed for sampled outputs")->capture_default_str();
    app.add_option("--nmax", config.nmax, "Largest exponent tried by Polya scans")->capture_default_str();
    app.add_option("--lp-bound", config.lp_bound, "Coefficient bound of the exhaustive separator scan")->capture_default_str();
    app.add_option("--out", config.out_dir, "Output directory (default: $RTROP_OUT_DIR or rtrop-out)");
    app.add_flag("--json", config.json, "Write JSON lines instead of tab separated values");

    struct Spec {
        const char* name;
        const char* help;
        bool poly, point, points, system;
    };
    const Spec specs[] = {
        {"trop", "Signed tropicalization of a Puiseux polynomial", true, false, false, false},
        {"roots", "Real tropical roots of a univariate tropical polynomial", true, false, false, false},
        {"member", "Membership of a signed point in a real tropical hypersurface", true, true, false, false},
        {"basis0d", "Real tropical basis certificate for a finite point set", false, false, true, false},
        {"patchwork", "Dual subdivision, patchworking certificate and plane curve cells", true, false, false, false},
        {"circuits", "Circuit forms of a linear system", false, false, false, true},
        {"linmember", "Membership in the real tropicalization of a linear space", false, true, false, true},
        {"singular", "Real tropical singularity of a hypersurface point", true, true, false, false},
        {"singclasses", "Weight classes of a plane curve in one orthant", true, false, false, false},
        {"polya", "Least Polya exponent of a univariate polynomial", true, false, false, false},
    };
    for (const auto& s : specs) {
        auto* sub = app.add_subcommand(s.name, s.help);
        sub->callback([&config, name = std::string(s.name)] { config.subcommand = name; });
        if (s.poly) sub->add_option("--poly", config.poly, "Polynomial file")->required()->check(CLI::ExistingFile);
        if (s.point) sub->add_option("--point", config.point, "Signed point, e.g. \"+0 -1/2\"")->required();
        if (s.points) sub->add_option("--points", config.points, "Point set file")->required()->check(CLI::ExistingFile);
        if (s.system) sub->add_option("--system", config.system, "Linear system file")->required()->check(CLI::ExistingFile);
        if (std::string(s.name) == "patchwork") {
            sub->add_option("--svg", config.svg, "Write the plane curve as SVG");
            sub->add_option("--svg-lo", svg_lo, "Lower modulus of the drawn window");
            sub->add_option("--svg-hi", svg_hi, "Upper modulus of the drawn window");
            sub->add_option("--svg-scale", config.box.scale, "Pixels per unit")->capture_default_str();
        }
        if (std::string(s.name) == "singclasses")
            sub->add_option("--orthant", config.orthant, "Sign pair such as ++ or -+")->capture_default_str();
        if (std::string(s.name) == "singular") sub->add_flag("--linear-span", config.linear_span, "Use linear spans in the flag");
        if (std::string(s.name) == "circuits")
            sub->add_option("--samples", config.samples, "Also print this many sampled solutions");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : rtrop::cli::InputError;
    }
    try {
        if (!svg_lo.empty()) config.box.lo = rtrop::Rat(svg_lo);
        if (!svg_hi.empty()) config.box.hi = rtrop::Rat(svg_hi);
        if (config.box.lo) config.box.lo->canonicalize();
        if (config.box.hi) config.box.hi->canonicalize();
    } catch (const std::invalid_argument&) {
        std::cerr << "error: --svg-lo and --svg-hi must be rationals\n";
        return rtrop::cli::InputError;
    }
    return rtrop::cli::run(config, std::cout, std::cerr);
}
