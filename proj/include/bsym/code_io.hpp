#pragma once

// Code file format: one codeword per line, decimal symbols separated by single
// spaces, '#' starts a comment line. An optional first line
//   # q=<int> n=<int> b=<int>
// pins the parameters; otherwise q = 1 + max symbol (at least 2) and n is the
// common line length.

#include "bsym/metric.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace bsym {

struct CodeFile {
    Code code;
    std::optional<std::size_t> b;  // from the header, if present
};

/// Throws ParseError (with line number) on malformed input.
CodeFile read_code(std::istream& in);
CodeFile read_code_file(const std::string& path);

void write_code(std::ostream& out, const Code& code, std::optional<std::size_t> b = std::nullopt);

}  // namespace bsym
