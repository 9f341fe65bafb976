#include "rtrop/text_format.hpp"

#include "rtrop/error.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace rtrop {

namespace {

struct Line {
    std::size_t number;
    std::size_t column;  // 1-based column of text[0]
    std::string_view text;
};

std::string_view trim(std::string_view s, std::size_t* lead = nullptr) {
    std::size_t b = 0;
    while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    std::size_t e = s.size();
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    if (lead) *lead = b;
    return s.substr(b, e - b);
}

// Non-empty lines with comments removed.
std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string_view raw = text.substr(pos, end - pos);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::size_t lead = 0;
        std::string_view body = trim(raw, &lead);
        if (!body.empty()) out.push_back({number, lead + 1, body});
        pos = end + 1;
    }
    return out;
}

struct Token {
    std::size_t column;
    std::string_view text;
};

std::vector<Token> split_ws(std::string_view s, std::size_t column) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t b = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i > b) out.push_back({column + b, s.substr(b, i - b)});
    }
    return out;
}

std::vector<Token> split_commas(std::string_view s, std::size_t column) {
    std::vector<Token> out;
    std::size_t b = 0;
    while (true) {
        std::size_t e = s.find(',', b);
        std::string_view piece = s.substr(b, e == std::string_view::npos ? std::string_view::npos : e - b);
        std::size_t lead = 0;
        std::string_view body = trim(piece, &lead);
        out.push_back({column + b + lead, body});
        if (e == std::string_view::npos) break;
        b = e + 1;
    }
    return out;
}

long parse_long(const Token& tok, std::size_t line) {
    Rat r;
    try {
        r = parse_rat(tok.text);
    } catch (const ParseError& e) {
        throw e.at_line(line, tok.column - 1);
    }
    if (r.get_den() != 1 || !r.get_num().fits_slong_p()) throw ParseError(line, tok.column, "expected an integer exponent");
    return r.get_num().get_si();
}

Exponent parse_exponent(std::string_view s, std::size_t column, std::size_t line) {
    Exponent e;
    for (const auto& tok : split_ws(s, column)) e.push_back(parse_long(tok, line));
    if (e.empty()) throw ParseError(line, column, "missing exponent vector");
    return e;
}

SignedTrop parse_signed_token(std::string_view s, std::size_t column, std::size_t line) {
    if (s.empty()) throw ParseError(line, column, "missing signed value");
    if (s[0] != '+' && s[0] != '-') throw ParseError(line, column, "signed value must start with '+' or '-'");
    Sign sign = s[0] == '+' ? Sign::Pos : Sign::Neg;
    std::size_t lead = 0;
    std::string_view rest = trim(s.substr(1), &lead);
    if (rest.empty()) throw ParseError(line, column + 1, "missing modulus");
    try {
        return {sign, parse_rat(rest)};
    } catch (const ParseError& e) {
        throw e.at_line(line, column + lead);
    }
}

Puiseux parse_puiseux_at(std::string_view s, std::size_t column, std::size_t line) {
    try {
        return parse_puiseux(s);
    } catch (const ParseError& e) {
        throw e.at_line(line, column - 1);
    }
}

void check_dim(std::size_t& dim, std::size_t got, const Line& l) {
    if (dim == 0) dim = got;
    if (got != dim) throw ParseError(l.number, l.column, "expected " + std::to_string(dim) + " entries, found " + std::to_string(got));
}

}  // namespace

RealTropPoly parse_trop_poly(std::string_view text) {
    std::size_t dim = 0;
    RealTropPoly::Terms terms;
    for (const auto& l : content_lines(text)) {
        auto colon = l.text.find(':');
        if (colon == std::string_view::npos) throw ParseError(l.number, l.column, "expected 'sign modulus : exponents'");
        std::size_t lead = 0;
        auto coeff_text = trim(l.text.substr(0, colon), &lead);
        SignedTrop c = parse_signed_token(coeff_text, l.column + lead, l.number);
        Exponent e = parse_exponent(l.text.substr(colon + 1), l.column + colon + 1, l.number);
        check_dim(dim, e.size(), l);
        if (!terms.emplace(e, c).second) throw ParseError(l.number, l.column, "repeated exponent " + render_exponent(e));
    }
    if (terms.empty()) throw ParseError(1, 1, "empty tropical polynomial");
    return RealTropPoly(dim, std::move(terms));
}

std::string format_trop_poly(const RealTropPoly& f) {
    std::string out;
    for (const auto& [e, c] : f.terms()) out += render(c) + " : " + render_exponent(e) + "\n";
    return out;
}

KPoly parse_kpoly(std::string_view text) {
    std::size_t dim = 0;
    KPoly::Terms terms;
    for (const auto& l : content_lines(text)) {
        auto colon = l.text.find(':');
        if (colon == std::string_view::npos) throw ParseError(l.number, l.column, "expected 'exponents : coefficient'");
        Exponent e = parse_exponent(l.text.substr(0, colon), l.column, l.number);
        check_dim(dim, e.size(), l);
        std::size_t lead = 0;
        auto coeff_text = trim(l.text.substr(colon + 1), &lead);
        Puiseux c = parse_puiseux_at(coeff_text, l.column + colon + 1 + lead, l.number);
        if (terms.count(e)) throw ParseError(l.number, l.column, "repeated exponent " + render_exponent(e));
        if (!c.is_zero()) terms.emplace(e, c);
    }
    if (dim == 0) throw ParseError(1, 1, "empty polynomial");
    return KPoly(dim, std::move(terms));
}

std::string format_kpoly(const KPoly& f) {
    std::string out;
    for (const auto& [e, c] : f.terms()) out += render_exponent(e) + " : " + render(c) + "\n";
    return out;
}

SignedTrop parse_signed_trop(std::string_view text) {
    std::size_t lead = 0;
    return parse_signed_token(trim(text, &lead), lead + 1, 0);
}

SignedTropPoint parse_signed_point(std::string_view text) {
    SignedTropPoint p;
    for (const auto& tok : split_ws(text, 1)) p.push_back(parse_signed_token(tok.text, tok.column, 0));
    if (p.empty()) throw ParseError(0, 1, "empty point");
    return p;
}

std::string format_signed_point(const SignedTropPoint& p) { return render(p); }

std::vector<SignedTropPoint> parse_signed_points(std::string_view text) {
    std::vector<SignedTropPoint> out;
    std::size_t dim = 0;
    for (const auto& l : content_lines(text)) {
        SignedTropPoint p;
        for (const auto& tok : split_ws(l.text, l.column)) p.push_back(parse_signed_token(tok.text, tok.column, l.number));
        check_dim(dim, p.size(), l);
        out.push_back(std::move(p));
    }
    return out;
}

std::string format_signed_points(const std::vector<SignedTropPoint>& points) {
    std::string out;
    for (const auto& p : points) out += render(p) + "\n";
    return out;
}

std::vector<std::vector<Puiseux>> parse_puiseux_rows(std::string_view text) {
    std::vector<std::vector<Puiseux>> out;
    std::size_t dim = 0;
    for (const auto& l : content_lines(text)) {
        std::vector<Puiseux> row;
        for (const auto& tok : split_commas(l.text, l.column)) {
            if (tok.text.empty()) throw ParseError(l.number, tok.column, "empty entry");
            row.push_back(parse_puiseux_at(tok.text, tok.column, l.number));
        }
        check_dim(dim, row.size(), l);
        out.push_back(std::move(row));
    }
    return out;
}

std::string format_puiseux_rows(const std::vector<std::vector<Puiseux>>& rows) {
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ", ";
            out += render(row[i]);
        }
        out += "\n";
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << contents;
}

}  // namespace rtrop
