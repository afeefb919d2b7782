#pragma once

#include <filesystem>
#include <iosfwd>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "mindist/bit_matrix.hpp"

namespace mindist {

/// Rows of a matrix file as text, validated but not yet packed.
struct MatrixText {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::string> lines;
};

/// Matrix file grammar: any number of '#' comment lines, a header "k n", then
/// exactly k rows of exactly n characters from {0,1}. Trailing whitespace is
/// ignored; anything else is an Error{Parse} naming the line.
MatrixText parse_matrix_text(std::istream& in);

template <PackingWord Word>
BasicBitMatrix<Word> read_matrix(std::istream& in) {
  const MatrixText text = parse_matrix_text(in);
  std::vector<std::string_view> views(text.lines.begin(), text.lines.end());
  if (views.empty()) return BasicBitMatrix<Word>(0, text.cols);
  return BasicBitMatrix<Word>::from_strings(views);
}

template <PackingWord Word>
void write_matrix(std::ostream& out, const BasicBitMatrix<Word>& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) out << m.row_string(r) << '\n';
}

template <PackingWord Word>
BasicBitMatrix<Word> read_matrix_file(const std::filesystem::path& path);

/// Writes through a temporary file in the same directory and renames it into
/// place, so a failed write never leaves a partial file behind.
void write_file_atomically(const std::filesystem::path& path, const std::string& contents);

}  // namespace mindist
