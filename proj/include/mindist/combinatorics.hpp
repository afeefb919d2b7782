#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mindist/big_count.hpp"

namespace mindist {

/// Exact C(p, q); 0 when q > p. Throws Error{Overflow} if the value does not
/// fit in BigCount.
BigCount binomial(std::uint64_t p, std::uint64_t q);

/// Strictly increasing row indices drawn from {0, ..., universe - 1}.
struct Combination {
  std::vector<std::size_t> indices;
  std::size_t universe = 0;

  std::size_t size() const { return indices.size(); }
  std::size_t operator[](std::size_t i) const { return indices[i]; }
  std::size_t front() const { return indices.front(); }
  std::size_t back() const { return indices.back(); }

  bool valid() const;

  friend bool operator==(const Combination&, const Combination&) = default;
};

/// (0, 1, ..., g-1). Throws Error{InvalidArity} unless 1 <= g <= k.
Combination first_combination(std::size_t k, std::size_t g);

struct LexStep {
  bool advanced = false;
  /// Leftmost position whose value changed; meaningful only when advanced.
  std::size_t reset_level = 0;
};

/// Advances `c` to its lexicographic successor. Returns advanced == false (and
/// leaves `c` untouched) at the lexicographic maximum.
LexStep next_combination_lex(Combination& c);

/// Advances `c` in the order keyed by (first element, last element, middle
/// elements lexicographically). Returns false at the end of the order.
bool next_combination_unrolled_order(Combination& c);

/// Position of `c` among all |c|-subsets of its universe in lex order.
BigCount rank_lex(const Combination& c);

/// Inverse of rank_lex. Throws Error{OutOfRange} if r >= C(k, g).
Combination unrank_lex(std::size_t k, std::size_t g, BigCount r);

/// C(p, q) - C(p - r - 1, q): the number of q-subsets of {0..p-1} whose first
/// element is <= r, which is also the lex rank of the first one starting after
/// r. r = -1 stands for "no prefix" and yields 0.
BigCount index_of(std::size_t p, std::size_t q, std::ptrdiff_t r);

/// Lex index of the first stored a-combination that cannot start a
/// g-combination of {0..k-1}: C(k, a) - C(g - 1, a).
BigCount left_cutoff(std::size_t k, std::size_t a, std::size_t g);

/// Whether sum_{j=1}^{g-1} C(k, j) < C(k, g).
bool binomial_prefix_sum_below(std::size_t k, std::size_t g);

/// Small table of 64-bit binomials C(p, q) for p <= max_p, q <= max_q, used on
/// hot paths where values are known to be addressable (store indices).
class BinomialTable {
 public:
  BinomialTable() = default;
  BinomialTable(std::size_t max_p, std::size_t max_q);

  std::uint64_t operator()(std::size_t p, std::size_t q) const {
    if (q > p) return 0;
    return table_[p * (max_q_ + 1) + q];
  }

  /// rank_lex restricted to 64 bits; indices must be within the table.
  std::uint64_t rank_lex(const std::size_t* indices, std::size_t g, std::size_t k) const;

 private:
  std::size_t max_q_ = 0;
  std::vector<std::uint64_t> table_;
};

}  // namespace mindist
