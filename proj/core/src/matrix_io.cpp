#include "sqzero/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "sqzero/errors.hpp"

namespace sqzero {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t parse_count(std::string_view tok, std::size_t line_no) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": invalid dimension '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Matrix parse_matrix(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t rows = 0, cols = 0, row = 0;
  std::vector<Rational> entries;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    std::size_t first = 0;
    while (first < line.size() && is_space(line[first])) ++first;
    if (first == line.size() || line[first] == '#') continue;

    const auto toks = split_tokens(line);
    if (!have_header) {
      if (toks.size() != 2) throw ParseError("line " + std::to_string(line_no) + ": header must be 'm n'");
      rows = parse_count(toks[0], line_no);
      cols = parse_count(toks[1], line_no);
      if (rows != 0 && cols > (std::size_t{1} << 24) / rows) throw ParseError("matrix dimensions too large");
      entries.reserve(rows * cols);
      have_header = true;
      if (cols == 0) row = rows;  // zero-width rows are blank lines

      continue;
    }
    if (row == rows) throw ParseError("line " + std::to_string(line_no) + ": more than " + std::to_string(rows) + " rows");
    if (toks.size() != cols) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(cols) +
                       " entries, found " + std::to_string(toks.size()));
    }
    for (auto tok : toks) {
      try {
        entries.push_back(Rational::parse(tok));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    ++row;
  }
  if (!have_header) throw ParseError("missing 'm n' header");
  if (row != rows) {
    throw ParseError("expected " + std::to_string(rows) + " rows, found " + std::to_string(row));
  }
  return Matrix(rows, cols, std::move(entries));
}

std::string format_matrix(const Matrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += m(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

Matrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_matrix(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_matrix_file(const std::filesystem::path& path, const Matrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << format_matrix(m);
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace sqzero
