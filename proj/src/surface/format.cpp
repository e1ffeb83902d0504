#include "dtwist/surface/format.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "dtwist/errors.hpp"

namespace dtwist::surface {

namespace {

struct Line {
    int number = 0;
    int indent = 0;  // 0-based column of the first character of `text`
    std::string text;
};

bool symbol_char(char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '.' || ch == '^' || ch == '/' ||
           ch == '-' || ch == '+';
}

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> tokens(const Line& l, std::size_t from = 0) {
    std::vector<Token> out;
    std::size_t i = from;
    while (i < l.text.size()) {
        if (std::isspace(static_cast<unsigned char>(l.text[i]))) {
            ++i;
            continue;
        }
        const std::size_t s = i;
        while (i < l.text.size() && !std::isspace(static_cast<unsigned char>(l.text[i]))) ++i;
        out.push_back({l.text.substr(s, i - s), l.indent + static_cast<int>(s) + 1});
    }
    return out;
}

void check_symbol(const Token& t, int line) {
    std::string s = t.text;
    if (!s.empty() && s.back() == '\'') s.pop_back();
    if (s.empty()) throw ParseError(line, t.column, "empty edge symbol");
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!symbol_char(s[i]))
            throw ParseError(line, t.column + static_cast<int>(i), std::string("unexpected character '") + s[i] + "'");
}

/// Splits "name = rest"; returns the column offset of rest within l.text.
std::size_t split_assignment(const Line& l, std::string& name) {
    const auto eq = l.text.find('=');
    if (eq == std::string::npos) throw ParseError(l.number, l.indent + 1, "expected 'name = ...'");
    std::string lhs = l.text.substr(0, eq);
    while (!lhs.empty() && std::isspace(static_cast<unsigned char>(lhs.back()))) lhs.pop_back();
    if (lhs.empty()) throw ParseError(l.number, l.indent + 1, "missing name before '='");
    for (std::size_t i = 0; i < lhs.size(); ++i)
        if (!symbol_char(lhs[i]))
            throw ParseError(l.number, l.indent + static_cast<int>(i) + 1, "invalid name");
    name = lhs;
    return eq + 1;
}

}  // namespace

const CellCurve& SurfaceFile::curve(const std::string& n) const {
    for (const auto& c : curves)
        if (c.name == n) return c;
    throw CurveError("no curve named '" + n + "'");
}

const CellInvolution& SurfaceFile::involution(const std::string& n) const {
    for (const auto& c : involutions)
        if (c.name == n) return c;
    throw InvolutionError("no involution named '" + n + "'");
}

std::string SurfaceFile::scenario_value(const std::string& key, const std::string& fallback) const {
    for (const auto& [k, v] : scenario)
        if (k == key) return v;
    return fallback;
}

SurfaceFile parse_surface_file(const std::string& text) {
    enum class Section { None, Faces, Curves, Involutions, Scenario };
    SurfaceFile out;
    std::vector<Line> face_lines, curve_lines, inv_lines;
    Section section = Section::None;
    int faces_header = 0;

    std::istringstream is(text);
    std::string raw;
    for (int number = 1; std::getline(is, raw); ++number) {
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::size_t b = 0;
        while (b < raw.size() && std::isspace(static_cast<unsigned char>(raw[b]))) ++b;
        std::size_t e = raw.size();
        while (e > b && std::isspace(static_cast<unsigned char>(raw[e - 1]))) --e;
        if (b == e) continue;
        Line l{number, static_cast<int>(b), raw.substr(b, e - b)};

        if (l.text.back() == ':' && l.text.find(' ') == std::string::npos) {
            const std::string h = l.text.substr(0, l.text.size() - 1);
            if (h == "faces") {
                section = Section::Faces;
                faces_header = number;
            } else if (h == "curves") {
                section = Section::Curves;
            } else if (h == "involutions") {
                section = Section::Involutions;
            } else if (h == "scenario") {
                section = Section::Scenario;
            } else {
                throw ParseError(number, l.indent + 1, "unknown section '" + h + "'");
            }
            continue;
        }
        if (l.text.rfind("surface", 0) == 0 && (l.text.size() == 7 || std::isspace(static_cast<unsigned char>(l.text[7])))) {
            const auto toks = tokens(l, 7);
            if (toks.size() != 1) throw ParseError(number, l.indent + 1, "expected 'surface <name>'");
            out.name = toks[0].text;
            continue;
        }
        switch (section) {
            case Section::None:
                throw ParseError(number, l.indent + 1, "content before any section header");
            case Section::Faces:
                for (const auto& t : tokens(l)) check_symbol(t, number);
                face_lines.push_back(l);
                break;
            case Section::Curves:
                curve_lines.push_back(l);
                break;
            case Section::Involutions:
                inv_lines.push_back(l);
                break;
            case Section::Scenario: {
                std::string key;
                const std::size_t at = split_assignment(l, key);
                const auto toks = tokens(l, at);
                if (toks.size() != 1) throw ParseError(number, l.indent + static_cast<int>(at) + 1, "expected one value");
                out.scenario.emplace_back(key, toks[0].text);
                break;
            }
        }
    }
    if (face_lines.empty()) throw ParseError(faces_header ? faces_header : 1, 1, "no faces given");

    std::vector<std::string> words;
    for (const auto& l : face_lines) words.push_back(l.text);
    try {
        out.surface = CombinatorialSurface::from_words(words);
    } catch (const SurfaceError& e) {
        throw SurfaceError(e.kind(), "line " + std::to_string(faces_header) + ": " + e.what());
    }

    std::set<std::string> names;
    for (const auto& l : curve_lines) {
        std::string name;
        const std::size_t at = split_assignment(l, name);
        if (!names.insert(name).second) throw ParseError(l.number, l.indent + 1, "duplicate curve '" + name + "'");
        CellCurve c{name, {}};
        const auto toks = tokens(l, at);
        if (toks.empty()) throw ParseError(l.number, l.indent + static_cast<int>(at) + 1, "empty curve");
        for (const auto& t : toks) {
            check_symbol(t, l.number);
            try {
                c.darts.push_back(out.surface.parse_dart(t.text));
            } catch (const SurfaceError& e) {
                throw ParseError(l.number, t.column, e.what());
            }
        }
        try {
            validate_curve(out.surface, c);
        } catch (const CurveError& e) {
            throw ParseError(l.number, toks.front().column, e.what());
        }
        out.curves.push_back(std::move(c));
    }
    names.clear();
    for (const auto& l : inv_lines) {
        std::string name;
        const std::size_t at = split_assignment(l, name);
        if (!names.insert(name).second) throw ParseError(l.number, l.indent + 1, "duplicate involution '" + name + "'");
        try {
            out.involutions.push_back(involution_from_cycles(out.surface, name, l.text.substr(at)));
        } catch (const ParseError& e) {
            const std::string msg = e.what();
            throw ParseError(l.number, l.indent + static_cast<int>(at) + e.column(), msg.substr(msg.find(": ") + 2));
        }
    }
    return out;
}

SurfaceFile load_surface_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_surface_file(ss.str());
}

std::string format_surface_file(const SurfaceFile& file) {
    std::ostringstream os;
    if (!file.name.empty()) os << "surface " << file.name << "\n";
    os << "faces:\n";
    for (const auto& w : file.surface.faces()) {
        os << " ";
        for (Dart d : w) os << ' ' << file.surface.dart_name(d);
        os << "\n";
    }
    if (!file.curves.empty()) {
        os << "curves:\n";
        for (const auto& c : file.curves) os << "  " << c.name << " = " << curve_word(file.surface, c) << "\n";
    }
    if (!file.involutions.empty()) {
        os << "involutions:\n";
        for (const auto& c : file.involutions) os << "  " << c.name << " = " << involution_cycles(file.surface, c) << "\n";
    }
    if (!file.scenario.empty()) {
        os << "scenario:\n";
        for (const auto& [k, v] : file.scenario) os << "  " << k << " = " << v << "\n";
    }
    return os.str();
}

}  // namespace dtwist::surface
