#pragma once

// Plain-text 4x4 complex matrices: four rows of eight whitespace-separated
// decimals, "re im" pairs in row-major order. Blank lines are ignored.

#include <filesystem>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "gendirac/clifford.hpp"

namespace gendirac::cli {

/// Carries a `path:line:column: message` diagnostic.
class MatrixFileError : public std::runtime_error {
 public:
  MatrixFileError(const std::string& source, std::size_t line, std::size_t column,
                  const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

ComplexMatrix4 parse_matrix(std::istream& in, const std::string& source = "<input>");
ComplexMatrix4 parse_matrix_file(const std::filesystem::path& path);

/// Writes with %.17g so that parse_matrix reproduces the values exactly.
void write_matrix(std::ostream& os, const ComplexMatrix4& m);
void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix4& m);

}  // namespace gendirac::cli
