#pragma once

// Text format:
//
//   n m
//   tail head      (m lines, 0-based)
//
// Lines whose first non-blank character is '#' are comments; blank lines
// are ignored. write_digraph emits the canonical form with no comments, so
// parse(write(D)) == D and write(parse(write(D))) == write(D) byte for byte.

#include <charconv>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "nlflow/digraph.hpp"
#include "nlflow/error.hpp"

namespace nlflow {

namespace detail {

/// Non-comment, non-blank lines split into whitespace-separated tokens,
/// with 1-based source line numbers for diagnostics.
struct TokenLine {
    std::size_t line_no;
    std::vector<std::string> tokens;
};

inline std::vector<TokenLine> tokenize_lines(std::istream& in) {
    std::vector<TokenLine> out;
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ss(line);
        TokenLine tl{no, {}};
        std::string tok;
        while (ss >> tok) tl.tokens.push_back(tok);
        out.push_back(std::move(tl));
    }
    return out;
}

inline long long parse_integer(const std::string& tok, std::size_t line_no) {
    long long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size())
        throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" + tok + "'");
    return v;
}

inline std::size_t parse_count(const std::string& tok, std::size_t line_no) {
    auto v = parse_integer(tok, line_no);
    if (v < 0) throw ParseError("line " + std::to_string(line_no) + ": negative value '" + tok + "'");
    return static_cast<std::size_t>(v);
}

}  // namespace detail

inline Digraph read_digraph(std::istream& in) {
    auto lines = detail::tokenize_lines(in);
    if (lines.empty()) throw ParseError("missing header line 'n m'");
    const auto& header = lines.front();
    if (header.tokens.size() != 2)
        throw ParseError("line " + std::to_string(header.line_no) + ": header must be 'n m'");
    auto n = detail::parse_count(header.tokens[0], header.line_no);
    auto m = detail::parse_count(header.tokens[1], header.line_no);
    if (lines.size() - 1 != m)
        throw ParseError("expected " + std::to_string(m) + " arc lines, found " +
                         std::to_string(lines.size() - 1));
    std::vector<Arc> arcs;
    arcs.reserve(m);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l.tokens.size() != 2)
            throw ParseError("line " + std::to_string(l.line_no) + ": arc must be 'tail head'");
        Arc a{detail::parse_count(l.tokens[0], l.line_no), detail::parse_count(l.tokens[1], l.line_no)};
        if (a.tail >= n || a.head >= n)
            throw ParseError("line " + std::to_string(l.line_no) + ": endpoint outside [0," +
                             std::to_string(n) + ")");
        arcs.push_back(a);
    }
    return Digraph(n, std::move(arcs));
}

inline Digraph parse_digraph(const std::string& text) {
    std::istringstream in(text);
    return read_digraph(in);
}

inline void write_digraph(std::ostream& out, const Digraph& d) {
    out << d.vertex_count() << ' ' << d.arc_count() << '\n';
    for (const Arc& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
}

inline std::string to_text(const Digraph& d) {
    std::ostringstream out;
    write_digraph(out, d);
    return out.str();
}

}  // namespace nlflow
