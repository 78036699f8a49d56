#pragma once

// Text format for exact matrices:
//
//   # comment lines start with '#'
//   m n
//   a11 a12 ... a1n
//   ...
//   am1 ... amn
//
// Entries are integers or "p/q" rationals separated by whitespace. Parsing is
// locale-independent. Rows of an m x 0 matrix are implicit.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "sqzero/matrix.hpp"

namespace sqzero {

/// Throws ParseError on malformed input (bad header, wrong entry count, bad literal).
Matrix parse_matrix(std::string_view text);

/// Canonical rendering: header line, then one line per row, entries separated by
/// single spaces, trailing newline.
std::string format_matrix(const Matrix& m);

Matrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const Matrix& m);

}  // namespace sqzero
