#include "matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <vector>

#include "gendirac/report.hpp"

namespace gendirac::cli {

MatrixFileError::MatrixFileError(const std::string& source, std::size_t line, std::size_t column,
                                 const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

struct Token {
  std::size_t column;  // 1-based
  std::string_view text;
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) tokens.push_back({start + 1, line.substr(start, i - start)});
  }
  return tokens;
}

}  // namespace

ComplexMatrix4 parse_matrix(std::istream& in, const std::string& source) {
  ComplexMatrix4 m;
  std::string line;
  std::size_t line_no = 0;
  int row = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split(line);
    if (tokens.empty()) continue;
    if (row == 4) throw MatrixFileError(source, line_no, tokens[0].column, "more than 4 rows");
    if (tokens.size() != 8) {
      const std::size_t column = tokens.size() > 8 ? tokens[8].column : line.size() + 1;
      throw MatrixFileError(source, line_no, column,
                            "expected 8 numbers, found " + std::to_string(tokens.size()));
    }
    for (std::size_t t = 0; t < 8; ++t) {
      const auto text = tokens[t].text;
      double value = 0.0;
      const char* first = text.data();
      if (!text.empty() && text.front() == '+') ++first;
      const auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
      if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
        throw MatrixFileError(source, line_no, tokens[t].column,
                              "not a finite number: '" + std::string(text) + "'");
      }
      const auto col = static_cast<Eigen::Index>(t / 2);
      if (t % 2 == 0) {
        m(row, col).real(value);
      } else {
        m(row, col).imag(value);
      }
    }
    ++row;
  }
  if (row != 4) {
    throw MatrixFileError(source, line_no + 1, 1,
                          "expected 4 rows, found " + std::to_string(row));
  }
  return m;
}

ComplexMatrix4 parse_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MatrixFileError(path.string(), 0, 0, "cannot open file");
  return parse_matrix(in, path.string());
}

void write_matrix(std::ostream& os, const ComplexMatrix4& m) {
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (c > 0) os << ' ';
      os << format_double(m(r, c).real()) << ' ' << format_double(m(r, c).imag());
    }
    os << '\n';
  }
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix4& m) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_matrix(out, m);
}

}  // namespace gendirac::cli
