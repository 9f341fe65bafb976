#include "rtrop/cli.hpp"

#include "rtrop/discriminant.hpp"
#include "rtrop/error.hpp"
#include "rtrop/linear.hpp"
#include "rtrop/patchwork.hpp"
#include "rtrop/text_format.hpp"
#include "rtrop/univariate.hpp"
#include "rtrop/zero_dim.hpp"

#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <stdexcept>

namespace rtrop::cli {

using Json = nlohmann::ordered_json;

namespace {

// Records go out either as JSON lines or as tab separated values.
class Report {
public:
    Report(std::ostream& out, bool json) : out_(out), json_(json) {}

    void header(const std::string& line) {
        if (!json_) out_ << line << '\n';
    }

    void emit(const Json& record) {
        if (json_) {
            out_ << record.dump() << '\n';
            return;
        }
        bool first = true;
        for (const auto& [key, value] : record.items()) {
            if (!first) out_ << '\t';
            first = false;
            out_ << cell(value);
        }
        out_ << '\n';
    }

private:
    static std::string cell(const Json& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_array()) {
            std::vector<std::string> parts;
            bool compound = false;
            for (const auto& x : v) {
                parts.push_back(cell(x));
                compound = compound || parts.back().find(' ') != std::string::npos;
            }
            std::string s;
            for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? (compound ? "; " : " ") : "") + parts[i];
            return s;
        }
        return v.dump();
    }

    std::ostream& out_;
    bool json_;
};

struct Rejection : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json exponent_json(const Exponent& e) { return Json(e); }

Json exponent_set(const std::vector<Exponent>& es) {
    Json arr = Json::array();
    for (const auto& e : es) arr.push_back(render_exponent(e));
    return arr;
}

Json rat_vec(const std::vector<Rat>& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(render_rat(x));
    return arr;
}

RealTropPoly load_trop(const JobConfig& c) { return parse_trop_poly(read_file(c.poly)); }

SignedTropPoint load_point(const JobConfig& c, std::size_t dim) {
    auto p = parse_signed_point(c.point);
    if (p.size() != dim)
        throw DomainError("point has " + std::to_string(p.size()) + " coordinates, polynomial has " + std::to_string(dim));
    return p;
}

LinearSystem load_system(const JobConfig& c) {
    LinearSystem sys;
    sys.rows = parse_puiseux_rows(read_file(c.system));
    if (sys.rows.empty()) throw DomainError("empty linear system");
    sys.n = sys.rows.front().size() - 1;
    sys.validate();
    return sys;
}

std::array<Sign, 2> parse_orthant(const std::string& s) {
    if (s.size() != 2 || (s[0] != '+' && s[0] != '-') || (s[1] != '+' && s[1] != '-'))
        throw std::invalid_argument("orthant must be two sign characters, e.g. ++ or +-");
    auto sg = [](char ch) { return ch == '+' ? Sign::Pos : Sign::Neg; };
    return {sg(s[0]), sg(s[1])};
}

std::string encode_point(const SignedTropPoint& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += '_';
        s += p[i].sign == Sign::Pos ? 'p' : 'm';
        for (char ch : render_rat(p[i].modulus)) s += ch == '-' ? 'n' : ch == '/' ? 'd' : ch;
    }
    return s;
}

int cmd_trop(const JobConfig& c, Report& r) {
    auto f = tropicalize(parse_kpoly(read_file(c.poly)));
    for (const auto& [e, coeff] : f.terms())
        r.emit({{"sign", std::string(1, sign_char(coeff.sign))}, {"modulus", render_rat(coeff.modulus)}, {"exponent", exponent_json(e)}});
    return Success;
}

int cmd_roots(const JobConfig& c, Report& r) {
    auto f = load_trop(c);
    r.header("modulus\tm\tm_plus\tm_minus");
    for (const auto& root : real_roots(f))
        r.emit({{"modulus", render_rat(root.modulus)}, {"m", root.complex_mult}, {"m_plus", root.real_mult_plus}, {"m_minus", root.real_mult_minus}});
    return Success;
}

int cmd_member(const JobConfig& c, Report& r) {
    auto f = load_trop(c);
    auto p = load_point(c, f.dim());
    bool member = rt_member(f, p);
    r.emit({{"kind", "verdict"}, {"member", member ? "member" : "not member"}});
    r.emit({{"kind", "value"}, {"value", render_rat(rt_eval(f, p))}});
    Json plus = Json::array(), minus = Json::array();
    for (const auto& a : rt_argmin(f, p)) (a.sign == Sign::Pos ? plus : minus).push_back(render_exponent(a.exponent));
    r.emit({{"kind", "argmin+"}, {"exponents", plus}});
    r.emit({{"kind", "argmin-"}, {"exponents", minus}});
    if (f.size() >= 2) r.emit({{"kind", "ideal"}, {"status", to_string(certified_member(f, p).status)}});
    return Success;
}

int cmd_basis0d(const JobConfig& c, Report& r) {
    PointSetK v;
    v.points = parse_puiseux_rows(read_file(c.points));
    if (v.points.empty()) throw DomainError("empty point set");
    v.dim = v.points.front().size();
    v.validate();
    auto cert = build_basis(v);
    bool ok = verify_basis(cert, v);

    namespace fs = std::filesystem;
    fs::path dir = resolve_out_dir(c);
    fs::create_directories(dir);
    for (std::size_t i = 0; i < cert.coord_polys.size(); ++i)
        write_file((dir / ("F" + std::to_string(i + 1) + ".kpoly")).string(), format_kpoly(cert.coord_polys[i]));
    write_file((dir / "F0.kpoly").string(), format_kpoly(cert.f0));
    std::string l;
    for (std::size_t i = 0; i < cert.functional.size(); ++i) l += (i ? " " : "") + std::to_string(cert.functional[i]);
    write_file((dir / "L.txt").string(), l + "\n");
    for (const auto& [point, g] : cert.discards)
        write_file((dir / ("G_" + encode_point(point) + ".kpoly")).string(), format_kpoly(g));
    write_file((dir / "S.points").string(), format_signed_points(cert.candidates));
    write_file((dir / "tropV.points").string(), format_signed_points(cert.trop_v));

    r.emit({{"kind", "directory"}, {"path", dir.string()}});
    r.emit({{"kind", "L"}, {"b", cert.functional}});
    r.emit({{"kind", "candidates"}, {"count", cert.candidates.size()}});
    r.emit({{"kind", "survivors"}, {"count", cert.survivors.size()}});
    Json keys = Json::array();
    for (const auto& [point, g] : cert.discards) keys.push_back(format_signed_point(point));
    r.emit({{"kind", "discards"}, {"count", cert.discards.size()}, {"points", keys}});
    r.emit({{"kind", "verified"}, {"ok", ok}});
    return ok ? Success : Rejected;
}

int cmd_patchwork(const JobConfig& c, Report& r) {
    auto f = load_trop(c);
    r.emit({{"kind", "certified"}, {"ok", is_patchwork_certified(f)}});
    if (f.size() >= 2) {
        auto s = dual_subdivision(f);
        for (const auto& cell : s.cells) r.emit({{"kind", "cell"}, {"points", exponent_set(cell)}});
    }
    if (f.dim() != 2) {
        if (c.svg) throw DomainError("SVG output needs a bivariate polynomial");
        return Success;
    }
    auto cells = plane_curve_cells(f);
    for (const auto& oc : cells) {
        std::string o{sign_char(oc.orthant[0]), sign_char(oc.orthant[1])};
        for (const auto& v : oc.vertices) r.emit({{"kind", "vertex"}, {"orthant", o}, {"point", rat_vec(v.point)}});
        for (const auto& s : oc.segments)
            r.emit({{"kind", "segment"}, {"orthant", o}, {"from", rat_vec(s.from)}, {"to", rat_vec(s.to)}});
        for (const auto& ray : oc.rays)
            r.emit({{"kind", "ray"}, {"orthant", o}, {"from", rat_vec(ray.from)}, {"direction", ray.direction}});
        for (const auto& l : oc.lines)
            r.emit({{"kind", "line"}, {"orthant", o}, {"point", rat_vec(l.point)}, {"direction", l.direction}});
    }
    if (c.svg) {
        write_file(*c.svg, render_svg(cells, c.box));
        r.emit({{"kind", "svg"}, {"path", *c.svg}});
    }
    return Success;
}

int cmd_circuits(const JobConfig& c, Report& r) {
    auto sys = load_system(c);
    for (const auto& form : circuits(sys)) {
        std::string row = format_puiseux_rows({form.coefficients});
        if (!row.empty() && row.back() == '\n') row.pop_back();
        r.emit({{"kind", "circuit"}, {"support", form.support}, {"form", row}});
    }
    if (c.samples > 0) {
        for (const auto& x : sample_solutions(sys, c.samples, c.seed)) {
            std::string row = format_puiseux_rows({x});
            if (!row.empty() && row.back() == '\n') row.pop_back();
            r.emit({{"kind", "sample"}, {"point", row}});
        }
    }
    return Success;
}

int cmd_linmember(const JobConfig& c, Report& r) {
    auto sys = load_system(c);
    auto p = load_point(c, sys.n);
    auto forms = circuits(sys);
    auto verdict = linear_member(forms, p);
    r.emit({{"kind", "verdict"}, {"member", verdict.member ? "member" : "not member"}});
    if (verdict.rejecting) {
        std::string row = format_puiseux_rows({forms[*verdict.rejecting].coefficients});
        if (!row.empty() && row.back() == '\n') row.pop_back();
        r.emit({{"kind", "rejecting"}, {"form", row}});
    }
    return Success;
}

void emit_flag(Report& r, const Flag& fl) {
    for (std::size_t i = 0; i < fl.levels(); ++i)
        r.emit({{"kind", "level"}, {"index", i}, {"plus", exponent_set(fl.plus[i])}, {"minus", exponent_set(fl.minus[i])}});
}

int cmd_singular(const JobConfig& c, Report& r) {
    auto f = load_trop(c);
    auto p = load_point(c, f.dim());
    SpanKind span = c.linear_span ? SpanKind::Linear : SpanKind::Affine;
    auto v = is_singular(f, p, span);
    r.emit({{"kind", "verdict"}, {"verdict", v.singular ? "singular" : "not singular"}});
    emit_flag(r, v.flag);
    if (v.witness) r.emit({{"kind", "witness"}, {"level", *v.level}, {"b0", v.witness->b0}, {"b", v.witness->b}});

    // Bounded exhaustive scan over the same levels; a hit contradicts a singular verdict.
    const auto ls = all_functionals(f.dim(), c.lp_bound);
    bool found = false;
    for (std::size_t i = 0; i < v.flag.levels() && !found; ++i) {
        const std::vector<Exponent> fixed = i == 0 ? std::vector<Exponent>{} : v.flag.chain[i - 1];
        for (const auto& L : ls) {
            bool vanish = std::all_of(fixed.begin(), fixed.end(), [&](const Exponent& e) { return L(e) == 0; });
            if (vanish && separates(L, v.flag.plus[i], v.flag.minus[i])) {
                found = true;
                break;
            }
        }
    }
    bool consistent = !(v.singular && found);
    r.emit({{"kind", "bounded-scan"}, {"bound", c.lp_bound}, {"separator-found", found}, {"consistent", consistent}});
    if (!consistent) throw std::logic_error("bounded scan contradicts the singularity verdict");
    return Success;
}

int cmd_singclasses(const JobConfig& c, Report& r) {
    auto f = load_trop(c);
    auto o = parse_orthant(c.orthant);
    r.header("cells\trepresentative\tverdict\twitness");
    for (const auto& wc : classify_plane_weight_classes(f, o)) {
        Json cells = Json::array();
        for (const auto& d : wc.cells) cells.push_back(d);
        std::string witness = wc.verdict.witness ? render(*wc.verdict.witness) : "-";
        r.emit({{"cells", cells.size() == 1 ? cells[0] : Json(cells.dump())},
                {"representative", format_signed_point(wc.representative)},
                {"verdict", wc.verdict.singular ? "singular" : "not singular"},
                {"witness", witness}});
    }
    return Success;
}

int cmd_polya(const JobConfig& c, Report& r) {
    auto k = parse_kpoly(read_file(c.poly));
    if (k.dim() != 1) throw DomainError("polynomial is not univariate");
    std::vector<Rat> coeffs;
    for (const auto& [e, a] : k.terms()) {
        if (e[0] < 0) throw DomainError("negative exponent in a Polya input");
        if (!a.is_monomial() || a.valuation() != 0) throw DomainError("Polya input needs rational coefficients");
        if (coeffs.size() <= static_cast<std::size_t>(e[0])) coeffs.resize(e[0] + 1, Rat(0));
        coeffs[e[0]] = a.principal();
    }
    PolyaCertificate cert;
    try {
        cert = polya_exponent(UPoly(coeffs), c.nmax);
    } catch (const DomainError& e) {
        throw Rejection(e.what());
    }
    r.emit({{"kind", "N"}, {"value", cert.exponent}});
    r.emit({{"kind", "coefficients"}, {"values", rat_vec(cert.expanded.coeffs())}});
    return Success;
}

}  // namespace

void JobConfig::validate() const {
    if (nmax == 0) throw std::invalid_argument("--nmax must be positive");
    if (lp_bound <= 0) throw std::invalid_argument("--lp-bound must be positive");
    if (box.scale <= 0 || box.gap < 0) throw std::invalid_argument("SVG scale must be positive");
    if (box.lo && box.hi && *box.lo >= *box.hi) throw std::invalid_argument("SVG window is empty");
    auto need = [&](const std::string& v, const char* flag) {
        if (v.empty()) throw std::invalid_argument(std::string("missing ") + flag);
    };
    const std::string& s = subcommand;
    if (s == "trop" || s == "roots" || s == "member" || s == "patchwork" || s == "singular" || s == "singclasses" ||
        s == "polya")
        need(poly, "--poly");
    if (s == "member" || s == "singular" || s == "linmember") need(point, "--point");
    if (s == "basis0d") need(points, "--points");
    if (s == "circuits" || s == "linmember") need(system, "--system");
    if (svg && svg->empty()) throw std::invalid_argument("--svg needs a path");
}

std::string resolve_out_dir(const JobConfig& config) {
    if (!config.out_dir.empty()) return config.out_dir;
    if (const char* env = std::getenv("RTROP_OUT_DIR"); env && *env) return env;
    return "rtrop-out";
}

int run(const JobConfig& config, std::ostream& out, std::ostream& err) {
    Report report(out, config.json);
    try {
        config.validate();
        const std::string& s = config.subcommand;
        if (s == "trop") return cmd_trop(config, report);
        if (s == "roots") return cmd_roots(config, report);
        if (s == "member") return cmd_member(config, report);
        if (s == "basis0d") return cmd_basis0d(config, report);
        if (s == "patchwork") return cmd_patchwork(config, report);
        if (s == "circuits") return cmd_circuits(config, report);
        if (s == "linmember") return cmd_linmember(config, report);
        if (s == "singular") return cmd_singular(config, report);
        if (s == "singclasses") return cmd_singclasses(config, report);
        if (s == "polya") return cmd_polya(config, report);
        throw std::invalid_argument("unknown subcommand '" + s + "'");
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return InputError;
    } catch (const Rejection& e) {
        err << "rejected: " << e.what() << '\n';
        return Rejected;
    } catch (const SearchExhausted& e) {
        err << "rejected: " << e.what() << '\n';
        return Rejected;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return InputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return InputError;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return InputError;
    }
}

}  // namespace rtrop::cli
