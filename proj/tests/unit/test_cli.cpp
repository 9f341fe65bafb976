#include "doctest.h"
#include "support/fixtures.hpp"

#include "rtrop/cli.hpp"
#include "rtrop/error.hpp"
#include "rtrop/svg.hpp"
#include "rtrop/text_format.hpp"
#include "rtrop/zero_dim.hpp"

#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <sstream>

using namespace rtrop;
namespace fs = std::filesystem;

namespace {

std::string data(const char* name) { return std::string(RTROP_DATA_DIR) + "/" + name; }

fs::path scratch(const char* name) {
    fs::path p = fs::temp_directory_path() / (std::string("rtrop-test-") + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

struct Outcome {
    int status;
    std::string out, err;
};

Outcome run_job(const cli::JobConfig& c) {
    std::ostringstream out, err;
    int status = cli::run(c, out, err);
    return {status, out.str(), err.str()};
}

cli::JobConfig job(const char* sub) {
    cli::JobConfig c;
    c.subcommand = sub;
    return c;
}

std::size_t count(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("text formats round-trip") {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<long> ex(-3, 3);
    for (int iter = 0; iter < 200; ++iter) {
        RealTropPoly f(2);
        KPoly k(3);
        std::vector<SignedTropPoint> pts;
        for (int i = 0; i < 5; ++i) {
            f.set({ex(rng), ex(rng)}, {fixtures::random_sign(rng), fixtures::random_rat(rng, 9, 4)});
            k.add_term({ex(rng), ex(rng), ex(rng)}, fixtures::random_puiseux(rng, 3, -2, 3, 2));
            pts.push_back({{fixtures::random_sign(rng), fixtures::random_rat(rng, 9, 4)},
                           {fixtures::random_sign(rng), fixtures::random_rat(rng, 9, 4)}});
        }
        CHECK(parse_trop_poly(format_trop_poly(f)) == f);
        CHECK(parse_kpoly(format_kpoly(k)) == k);
        CHECK(parse_signed_points(format_signed_points(pts)) == pts);
        CHECK(parse_signed_point(format_signed_point(pts[0])) == pts[0]);
        std::vector<std::vector<Puiseux>> rows(3);
        for (auto& r : rows)
            for (int j = 0; j < 3; ++j) r.push_back(fixtures::random_puiseux(rng, 2, -1, 2));
        CHECK(parse_puiseux_rows(format_puiseux_rows(rows)) == rows);
    }
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_trop_poly("+0 : 1 1\n# comment\n+0 : 1\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    try {
        parse_trop_poly("+0 : 1 1\n+x : 0 0\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 2);
    }
    CHECK_THROWS_AS(parse_trop_poly("+0 : 1\n-1 : 1\n"), ParseError);
    CHECK_THROWS_AS(parse_puiseux_rows("1, 2\n3\n"), ParseError);
    CHECK_THROWS_AS(parse_trop_poly("\n# only comments\n\n"), ParseError);
}

TEST_CASE("roots report for the quartic") {
    auto c = job("roots");
    c.poly = data("quartic.trop");
    auto r = run_job(c);
    CHECK(r.status == cli::Success);
    CHECK(r.out == "modulus\tm\tm_plus\tm_minus\n0\t2\t0\t0\n-1\t2\t1\t1\n");
    c.json = true;
    r = run_job(c);
    std::istringstream lines(r.out);
    std::string line;
    std::vector<nlohmann::json> recs;
    while (std::getline(lines, line)) recs.push_back(nlohmann::json::parse(line));
    REQUIRE(recs.size() == 2);
    CHECK(recs[1]["modulus"] == "-1");
    CHECK(recs[1]["m_plus"] == 1);
}

TEST_CASE("basis certificate directory") {
    auto dir = scratch("basis0d");
    auto c = job("basis0d");
    c.points = data("five_points.txt");
    c.out_dir = dir.string();
    auto r = run_job(c);
    CHECK(r.status == cli::Success);
    CHECK(r.out.find("verified\ttrue") != std::string::npos);

    std::size_t discards = 0;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().filename().string().rfind("G_", 0) == 0) ++discards;
    CHECK(discards == 3);

    auto v = fixtures::five_points();
    auto cert = build_basis(v);
    CHECK(parse_kpoly(read_file((dir / "F1.kpoly").string())) == cert.coord_polys[0]);
    CHECK(parse_kpoly(read_file((dir / "F2.kpoly").string())) == cert.coord_polys[1]);
    CHECK(parse_kpoly(read_file((dir / "F0.kpoly").string())) == cert.f0);
    CHECK(parse_kpoly(read_file((dir / "G_m0_p1.kpoly").string())) == cert.discards.at(fixtures::pt("-0 +1")));
    CHECK(parse_kpoly(read_file((dir / "G_m0_m0.kpoly").string())) == cert.discards.at(fixtures::pt("-0 -0")));
    CHECK(parse_kpoly(read_file((dir / "G_p1_m1.kpoly").string())) == cert.discards.at(fixtures::pt("+1 -1")));
    CHECK(parse_signed_points(read_file((dir / "S.points").string())) == cert.candidates);
    CHECK(parse_signed_points(read_file((dir / "tropV.points").string())) == cert.trop_v);
    CHECK(read_file((dir / "L.txt").string()) == "1 2\n");

    // Identical inputs give byte-identical files.
    auto dir2 = scratch("basis0d-again");
    c.out_dir = dir2.string();
    CHECK(run_job(c).status == cli::Success);
    for (const auto& e : fs::directory_iterator(dir))
        CHECK(read_file(e.path().string()) == read_file((dir2 / e.path().filename()).string()));
}

TEST_CASE("output directory resolution") {
    auto c = job("basis0d");
    c.out_dir = "explicit";
    CHECK(cli::resolve_out_dir(c) == "explicit");
    c.out_dir.clear();
    ::setenv("RTROP_OUT_DIR", "/tmp/from-env", 1);
    CHECK(cli::resolve_out_dir(c) == "/tmp/from-env");
    ::unsetenv("RTROP_OUT_DIR");
    CHECK(cli::resolve_out_dir(c) == "rtrop-out");
}

TEST_CASE("singularity subcommands") {
    auto c = job("singular");
    c.poly = data("cubic.trop");
    c.point = "+0 +0";
    auto r = run_job(c);
    CHECK(r.status == cli::Success);
    CHECK(r.out.rfind("verdict\tsingular\n", 0) == 0);
    c.point = "+-1 +-1";
    r = run_job(c);
    CHECK(r.out.rfind("verdict\tnot singular\n", 0) == 0);
    CHECK(r.out.find("witness\t1\t3\t-1 -1") != std::string::npos);
    c.point = "+1 +1";
    CHECK(run_job(c).status == cli::InputError);

    auto s = job("singclasses");
    s.poly = data("cubic.trop");
    r = run_job(s);
    CHECK(r.status == cli::Success);
    CHECK(count(r.out, "\tsingular") == 3);
    CHECK(count(r.out, "\tnot singular") == 1);
    s.orthant = "+x";
    CHECK(run_job(s).status == cli::InputError);
}

TEST_CASE("other subcommands and exit codes") {
    auto p = job("polya");
    p.poly = data("polya.kpoly");
    auto r = run_job(p);
    CHECK(r.status == cli::Success);
    CHECK(r.out.rfind("N\t11\n", 0) == 0);
    p.nmax = 3;
    r = run_job(p);
    CHECK(r.status == cli::Rejected);
    CHECK(r.err.find("rejected") != std::string::npos);

    auto t = job("trop");
    t.poly = data("cubic.kpoly");
    r = run_job(t);
    CHECK(r.status == cli::Success);
    CHECK(count(r.out, "\n") == 10);

    auto m = job("member");
    m.poly = data("conic.trop");
    m.point = "+0 +0";
    r = run_job(m);
    CHECK(r.out.rfind("verdict\tmember\n", 0) == 0);
    m.point = "+0";
    CHECK(run_job(m).status == cli::InputError);
    m.poly = data("missing.trop");
    r = run_job(m);
    CHECK(r.status == cli::InputError);

    auto dir = scratch("bad-input");
    write_file((dir / "bad.trop").string(), "+0 : 1 1\n+x : 0 0\n");
    m.poly = (dir / "bad.trop").string();
    m.point = "+0 +0";
    r = run_job(m);
    CHECK(r.status == cli::InputError);
    CHECK(r.err.find("line 2, column 2") != std::string::npos);

    auto l = job("linmember");
    l.system = data("plane.sys");
    l.point = "+1 +0 -1";
    CHECK(run_job(l).out.rfind("verdict\tmember\n", 0) == 0);
    l.point = "+0 +0 +0";
    CHECK(run_job(l).out.rfind("verdict\tnot member\n", 0) == 0);

    CHECK(run_job(job("nonsense")).status == cli::InputError);
    auto bad = job("roots");
    CHECK(run_job(bad).status == cli::InputError);
    bad.poly = data("quartic.trop");
    bad.lp_bound = 0;
    CHECK(run_job(bad).status == cli::InputError);
}

TEST_CASE("sampling is deterministic for a fixed seed") {
    auto c = job("circuits");
    c.system = data("plane.sys");
    c.samples = 5;
    c.seed = 7;
    auto a = run_job(c), b = run_job(c);
    CHECK(a.status == cli::Success);
    CHECK(a.out == b.out);
    CHECK(count(a.out, "circuit\t") == 3);
    CHECK(count(a.out, "sample\t") == 5);
}

TEST_CASE("SVG rendering") {
    auto conic = render_svg(plane_curve_cells(fixtures::conic()));
    CHECK(count(conic, "class=\"vertex\"") == 7);
    for (const char* lab : {"(0^+, 0^+)", "(0^-, 0^+)", "(1^-, 1^+)", "(0^-, 0^-)", "(1^-, 1^-)", "(0^+, 0^-)", "(1^+, 1^-)"})
        CHECK(count(conic, std::string(">") + lab + "<") == 1);
    CHECK(count(conic, "class=\"segment\"") == 2);
    CHECK(conic.find("stroke-dasharray") != std::string::npos);
    CHECK(conic == render_svg(plane_curve_cells(fixtures::conic())));

    auto line = render_svg(plane_curve_cells(fixtures::hyperplane2()));
    CHECK(count(line, "class=\"orthant\"") == 3);
    CHECK(count(line, "class=\"vertex\"") == 3);

    auto empty = render_svg(plane_curve_cells(parse_trop_poly("+0 : 1 1\n")));
    CHECK(count(empty, "class=\"axes\"") == 1);
    CHECK(count(empty, "class=\"orthant\"") == 0);

    auto dir = scratch("svg");
    auto c = job("patchwork");
    c.poly = data("conic.trop");
    c.svg = (dir / "conic.svg").string();
    auto r = run_job(c);
    CHECK(r.status == cli::Success);
    CHECK(r.out.rfind("certified\tfalse\n", 0) == 0);
    CHECK(read_file(*c.svg) == conic);
}

}
