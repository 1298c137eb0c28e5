#include "bsym/code_io.hpp"

#include "bsym/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace bsym {

namespace {

std::uint64_t parse_uint(std::string_view token, std::size_t line) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line, "expected a nonnegative integer, got '" + std::string(token) + "'");
    return v;
}

struct Header {
    std::optional<std::uint64_t> q, n, b;
};

// Returns nothing if the comment is not a parameter header.
std::optional<Header> parse_header(const std::string& text, std::size_t line) {
    std::istringstream ss(text.substr(1));
    std::string tok;
    Header h;
    bool any = false;
    while (ss >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) return std::nullopt;
        const std::string key = tok.substr(0, eq);
        const std::uint64_t value = parse_uint(std::string_view(tok).substr(eq + 1), line);
        if (key == "q") h.q = value;
        else if (key == "n") h.n = value;
        else if (key == "b") h.b = value;
        else return std::nullopt;
        any = true;
    }
    if (!any) return std::nullopt;
    return h;
}

}  // namespace

CodeFile read_code(std::istream& in) {
    std::string text;
    std::size_t line_no = 0;
    std::optional<Header> header;
    std::vector<std::pair<std::size_t, std::vector<Symbol>>> rows;
    bool seen_content = false;

    while (std::getline(in, text)) {
        ++line_no;
        if (!text.empty() && text.back() == '\r') text.pop_back();
        if (text.empty()) continue;
        if (text[0] == '#') {
            if (!seen_content && !header) header = parse_header(text, line_no);
            seen_content = true;
            continue;
        }
        seen_content = true;
        std::vector<Symbol> symbols;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const auto next = text.find(' ', pos);
            const auto token = std::string_view(text).substr(pos, next == std::string::npos ? std::string::npos : next - pos);
            if (token.empty()) throw ParseError(line_no, "symbols must be separated by single spaces");
            const auto v = parse_uint(token, line_no);
            if (v > 0xffffffffu) throw ParseError(line_no, "symbol too large");
            symbols.push_back(static_cast<Symbol>(v));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        rows.emplace_back(line_no, std::move(symbols));
    }

    if (rows.empty()) throw ParseError(line_no, "no codewords");

    std::size_t n = rows.front().second.size();
    if (header && header->n) n = *header->n;
    std::uint64_t q = 2;
    if (header && header->q) {
        q = *header->q;
        if (q < 2) throw ParseError(1, "q must be at least 2");
    } else {
        for (const auto& [ln, s] : rows)
            for (Symbol v : s) q = std::max<std::uint64_t>(q, std::uint64_t{v} + 1);
    }

    CodeFile out{Code(static_cast<std::uint32_t>(q), n), std::nullopt};
    if (header && header->b) out.b = *header->b;
    for (auto& [ln, s] : rows) {
        if (s.size() != n)
            throw ParseError(ln, "expected " + std::to_string(n) + " symbols, got " + std::to_string(s.size()));
        for (Symbol v : s)
            if (v >= q) throw ParseError(ln, "symbol " + std::to_string(v) + " outside alphabet q=" + std::to_string(q));
        Word w(static_cast<std::uint32_t>(q), std::move(s));
        if (out.code.contains(w)) throw ParseError(ln, "duplicate codeword");
        out.code.insert(std::move(w));
    }
    return out;
}

CodeFile read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return read_code(in);
}

void write_code(std::ostream& out, const Code& code, std::optional<std::size_t> b) {
    out << "# q=" << code.q() << " n=" << code.length();
    if (b) out << " b=" << *b;
    out << '\n';
    for (const auto& w : code) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) out << ' ';
            out << w[i];
        }
        out << '\n';
    }
}

}  // namespace bsym
