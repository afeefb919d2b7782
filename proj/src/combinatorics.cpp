#include "mindist/combinatorics.hpp"

#include <limits>

#include "mindist/errors.hpp"

namespace mindist {

BigCount binomial(std::uint64_t p, std::uint64_t q) {
  if (q > p) return 0;
  if (q > p - q) q = p - q;
  // C(p, i) = C(p, i - 1) * (p - q + i) / i, exact at each step. The product
  // is split through a gcd so the intermediate never exceeds the result by
  // more than a factor of i.
  BigCount result = 1;
  for (std::uint64_t i = 1; i <= q; ++i) {
    BigCount num = p - q + i;
    BigCount den = i;
    BigCount a = result, b = den;
    while (b != 0) {
      BigCount t = a % b;
      a = b;
      b = t;
    }
    const BigCount g1 = a;
    const BigCount reduced_result = result / g1;
    den /= g1;
    num /= den;  // den now divides num, since C(p, i) is integral
    result = checked_mul(reduced_result, num);
  }
  return result;
}

bool Combination::valid() const {
  if (indices.empty() || indices.size() > universe) return false;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= universe) return false;
    if (i > 0 && indices[i] <= indices[i - 1]) return false;
  }
  return true;
}

Combination first_combination(std::size_t k, std::size_t g) {
  if (g == 0 || g > k) {
    throw Error(ErrorKind::InvalidArity, "combination size must satisfy 1 <= g <= k");
  }
  Combination c;
  c.universe = k;
  c.indices.resize(g);
  for (std::size_t i = 0; i < g; ++i) c.indices[i] = i;
  return c;
}

LexStep next_combination_lex(Combination& c) {
  const std::size_t g = c.indices.size();
  const std::size_t k = c.universe;
  std::size_t i = g;
  while (i > 0) {
    --i;
    if (c.indices[i] < k - g + i) {
      ++c.indices[i];
      for (std::size_t j = i + 1; j < g; ++j) c.indices[j] = c.indices[j - 1] + 1;
      return {true, i};
    }
  }
  return {false, 0};
}

namespace {

// Lex successor of idx[from..to) within values (lo, hi), i.e. each value in
// [lo + 1, hi - 1].
bool next_in_range(std::vector<std::size_t>& idx, std::size_t from, std::size_t to, std::size_t hi) {
  const std::size_t len = to - from;
  std::size_t i = len;
  while (i > 0) {
    --i;
    // largest value allowed at position i is hi - (len - i)
    if (idx[from + i] < hi - (len - i)) {
      ++idx[from + i];
      for (std::size_t j = i + 1; j < len; ++j) idx[from + j] = idx[from + j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

bool next_combination_unrolled_order(Combination& c) {
  const std::size_t g = c.indices.size();
  const std::size_t k = c.universe;
  auto& idx = c.indices;
  if (g <= 2) return next_combination_lex(c).advanced;

  // middle elements live strictly between the first and the last one
  if (next_in_range(idx, 1, g - 1, idx[g - 1])) return true;
  if (idx[g - 1] + 1 < k) {
    ++idx[g - 1];
    for (std::size_t j = 1; j + 1 < g; ++j) idx[j] = idx[0] + j;
    return true;
  }
  if (idx[0] + g < k) {
    ++idx[0];
    for (std::size_t j = 1; j < g; ++j) idx[j] = idx[0] + j;
    return true;
  }
  return false;
}

BigCount rank_lex(const Combination& c) {
  const std::size_t g = c.indices.size();
  const std::size_t k = c.universe;
  // rank = C(k,g) - 1 - sum_i C(k-1-c_i, g-i)
  BigCount tail = 0;
  for (std::size_t i = 0; i < g; ++i) tail += binomial(k - 1 - c.indices[i], g - i);
  return binomial(k, g) - 1 - tail;
}

Combination unrank_lex(std::size_t k, std::size_t g, BigCount r) {
  if (g == 0 || g > k) throw Error(ErrorKind::InvalidArity, "combination size must satisfy 1 <= g <= k");
  if (r >= binomial(k, g)) throw Error(ErrorKind::OutOfRange, "rank exceeds number of combinations");
  Combination c;
  c.universe = k;
  c.indices.resize(g);
  std::size_t value = 0;
  for (std::size_t i = 0; i < g; ++i) {
    // skip whole blocks of combinations whose i-th element is `value`
    while (true) {
      const BigCount block = binomial(k - 1 - value, g - 1 - i);
      if (r < block) break;
      r -= block;
      ++value;
    }
    c.indices[i] = value++;
  }
  return c;
}

BigCount index_of(std::size_t p, std::size_t q, std::ptrdiff_t r) {
  if (r < 0) return 0;
  const auto ur = static_cast<std::size_t>(r);
  if (ur + 1 >= p) return binomial(p, q);
  return binomial(p, q) - binomial(p - ur - 1, q);
}

BigCount left_cutoff(std::size_t k, std::size_t a, std::size_t g) {
  return binomial(k, a) - binomial(g - 1, a);
}

bool binomial_prefix_sum_below(std::size_t k, std::size_t g) {
  BigCount sum = 0;
  for (std::size_t j = 1; j < g; ++j) sum = checked_add(sum, binomial(k, j));
  return sum < binomial(k, g);
}

BinomialTable::BinomialTable(std::size_t max_p, std::size_t max_q)
    : max_q_(max_q), table_((max_p + 1) * (max_q + 1), 0) {
  for (std::size_t p = 0; p <= max_p; ++p) {
    for (std::size_t q = 0; q <= max_q && q <= p; ++q) {
      const BigCount value = binomial(p, q);
      if (value > std::numeric_limits<std::uint64_t>::max()) {
        throw Error(ErrorKind::Overflow, "binomial table entry exceeds 64 bits");
      }
      table_[p * (max_q + 1) + q] = static_cast<std::uint64_t>(value);
    }
  }
}

std::uint64_t BinomialTable::rank_lex(const std::size_t* indices, std::size_t g, std::size_t k) const {
  std::uint64_t tail = 0;
  for (std::size_t i = 0; i < g; ++i) tail += (*this)(k - 1 - indices[i], g - i);
  return (*this)(k, g) - 1 - tail;
}

}  // namespace mindist
