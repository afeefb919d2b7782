#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mindist/errors.hpp"

namespace mindist {

template <typename Word>
concept PackingWord = std::same_as<Word, std::uint32_t> || std::same_as<Word, std::uint64_t>;

/// Dense k x n matrix over F2. Each row is packed into ceil(n / bits(Word))
/// words, column j living in bit (j % bits) of word (j / bits). Bits past
/// column n-1 are always zero.
template <PackingWord Word>
class BasicBitMatrix {
 public:
  using word_type = Word;
  static constexpr std::size_t kWordBits = sizeof(Word) * 8;

  BasicBitMatrix() = default;
  BasicBitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, Word{0}) {}

  /// Builds a matrix from strings of '0'/'1'; all strings must have equal length.
  static BasicBitMatrix from_strings(const std::vector<std::string_view>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    BasicBitMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) {
        throw Error(ErrorKind::InvalidDimensions, "rows of unequal length");
      }
      for (std::size_t j = 0; j < cols; ++j) {
        if (rows[i][j] == '1') {
          m.set(i, j, true);
        } else if (rows[i][j] != '0') {
          throw Error(ErrorKind::Parse, "matrix entries must be 0 or 1");
        }
      }
    }
    return m;
  }

  static BasicBitMatrix identity(std::size_t size) {
    BasicBitMatrix m(size, size);
    for (std::size_t i = 0; i < size; ++i) m.set(i, i, true);
    return m;
  }

  static constexpr std::size_t words_for(std::size_t cols) {
    return (cols + kWordBits - 1) / kWordBits;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return stride_; }
  std::size_t row_bytes() const { return stride_ * sizeof(Word); }

  bool get(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & Word{1};
  }

  void set(std::size_t r, std::size_t c, bool value) {
    assert(r < rows_ && c < cols_);
    Word& w = data_[r * stride_ + c / kWordBits];
    const Word bit = Word{1} << (c % kWordBits);
    w = value ? (w | bit) : (w & ~bit);
  }

  void flip(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    data_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits);
  }

  std::span<Word> row(std::size_t r) {
    assert(r < rows_);
    return {data_.data() + r * stride_, stride_};
  }
  std::span<const Word> row(std::size_t r) const {
    assert(r < rows_);
    return {data_.data() + r * stride_, stride_};
  }

  const Word* row_ptr(std::size_t r) const { return data_.data() + r * stride_; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
  }

  /// Appends a row; `bits` must match this matrix's column count and packing.
  void append_row(std::span<const Word> bits) {
    assert(bits.size() == stride_);
    data_.insert(data_.end(), bits.begin(), bits.end());
    ++rows_;
  }

  /// Mask of valid bits in the last word of each row.
  Word tail_mask() const {
    const std::size_t used = cols_ % kWordBits;
    return used == 0 ? ~Word{0} : static_cast<Word>((Word{1} << used) - 1);
  }

  bool padding_is_clear() const {
    if (stride_ == 0) return true;
    const Word mask = tail_mask();
    for (std::size_t r = 0; r < rows_; ++r) {
      if (data_[r * stride_ + stride_ - 1] & ~mask) return false;
    }
    return true;
  }

  std::string row_string(std::size_t r) const {
    std::string out(cols_, '0');
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) out[c] = '1';
    }
    return out;
  }

  friend bool operator==(const BasicBitMatrix&, const BasicBitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

using BitMatrix = BasicBitMatrix<std::uint32_t>;
using BitMatrix64 = BasicBitMatrix<std::uint64_t>;

// ---------------------------------------------------------------------------
// Row kernels. Rows are spans of packed words with zero padding, so the
// column count never enters the inner loops.

template <PackingWord Word>
std::size_t row_weight(std::span<const Word> row) {
  std::size_t weight = 0;
  for (Word w : row) weight += static_cast<std::size_t>(std::popcount(w));
  return weight;
}

/// Weight restricted to columns 0..n-1.
template <PackingWord Word>
std::size_t row_weight(std::span<const Word> row, std::size_t n) {
  constexpr std::size_t bits = sizeof(Word) * 8;
  std::size_t weight = 0;
  const std::size_t full = std::min(row.size(), n / bits);
  for (std::size_t i = 0; i < full; ++i) weight += static_cast<std::size_t>(std::popcount(row[i]));
  if (full < row.size() && n % bits != 0) {
    const Word mask = static_cast<Word>((Word{1} << (n % bits)) - 1);
    weight += static_cast<std::size_t>(std::popcount(static_cast<Word>(row[full] & mask)));
  }
  return weight;
}

/// acc ^= src.
template <PackingWord Word>
void row_xor_accumulate(std::span<Word> acc, std::span<const Word> src) {
  assert(acc.size() == src.size());
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] ^= src[i];
}

/// out = a ^ b.
template <PackingWord Word>
void row_xor(std::span<Word> out, const Word* a, const Word* b) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] ^ b[i];
}

/// wt(a ^ b) without materializing the sum.
template <PackingWord Word>
std::size_t xor_weight(const Word* a, const Word* b, std::size_t words) {
  std::size_t weight = 0;
  for (std::size_t i = 0; i < words; ++i) weight += static_cast<std::size_t>(std::popcount(static_cast<Word>(a[i] ^ b[i])));
  return weight;
}

// ---------------------------------------------------------------------------
// Elimination.

template <PackingWord Word>
struct ReducedMatrix {
  BasicBitMatrix<Word> matrix;
  /// pivots[i] is the pivot column of row i, for i < rank.
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Gauss-Jordan elimination using only `allowed_columns` (in the given order)
/// as pivot candidates. Columns are never moved: the result generates exactly
/// the row space of `m`. Row i < rank holds pivot `pivots[i]`, and that column
/// is zero in every other row. Rows at index >= rank vanish on all allowed
/// columns.
template <PackingWord Word>
ReducedMatrix<Word> reduce_on_columns(const BasicBitMatrix<Word>& m,
                                      std::span<const std::size_t> allowed_columns) {
  ReducedMatrix<Word> out{m, {}, 0};
  BasicBitMatrix<Word>& a = out.matrix;
  std::size_t next = 0;
  for (std::size_t col : allowed_columns) {
    if (next == a.rows()) break;
    if (col >= a.cols()) throw Error(ErrorKind::OutOfRange, "pivot column out of range");
    std::size_t pivot_row = next;
    while (pivot_row < a.rows() && !a.get(pivot_row, col)) ++pivot_row;
    if (pivot_row == a.rows()) continue;
    a.swap_rows(pivot_row, next);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r != next && a.get(r, col)) row_xor_accumulate<Word>(a.row(r), a.row(next));
    }
    out.pivots.push_back(col);
    ++next;
  }
  out.rank = next;
  return out;
}

template <PackingWord Word>
ReducedMatrix<Word> reduce(const BasicBitMatrix<Word>& m) {
  std::vector<std::size_t> all(m.cols());
  for (std::size_t c = 0; c < all.size(); ++c) all[c] = c;
  return reduce_on_columns<Word>(m, all);
}

template <PackingWord Word>
std::size_t rank(const BasicBitMatrix<Word>& m) {
  return reduce(m).rank;
}

/// Rows of `top` followed by rows of `bottom`; column counts must match.
template <PackingWord Word>
BasicBitMatrix<Word> stack_rows(const BasicBitMatrix<Word>& top, const BasicBitMatrix<Word>& bottom) {
  if (top.cols() != bottom.cols()) throw Error(ErrorKind::LengthMismatch, "cannot stack matrices of different lengths");
  BasicBitMatrix<Word> out = top;
  for (std::size_t r = 0; r < bottom.rows(); ++r) out.append_row(bottom.row(r));
  return out;
}

/// Keeps the listed columns, in the listed order.
template <PackingWord Word>
BasicBitMatrix<Word> select_columns(const BasicBitMatrix<Word>& m, std::span<const std::size_t> columns) {
  BasicBitMatrix<Word> out(m.rows(), columns.size());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (m.get(r, columns[j])) out.set(r, j, true);
    }
  }
  return out;
}

/// Same entries, different packing word.
template <PackingWord To, PackingWord From>
BasicBitMatrix<To> repack(const BasicBitMatrix<From>& m) {
  if constexpr (std::same_as<To, From>) {
    return m;
  } else {
    BasicBitMatrix<To> out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (m.get(r, c)) out.set(r, c, true);
      }
    }
    return out;
  }
}

}  // namespace mindist
