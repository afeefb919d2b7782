#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "mindist/big_count.hpp"
#include "mindist/bit_matrix.hpp"
#include "mindist/combinatorics.hpp"
#include "mindist/errors.hpp"

namespace mindist {

inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

/// Outcome of one (Gamma, g) pass.
///
/// `row_additions` counts row XORs, `row_accesses` counts rows read from the
/// Gamma matrix or from a saved-additions store, `combinations` counts the
/// g-subsets whose codeword weight was evaluated. `min_weight` is the minimum
/// weight found, clipped to the upper bound handed in.
struct EnumerationResult {
  std::size_t min_weight = kUnbounded;
  BigCount combinations = 0;
  BigCount row_additions = 0;
  BigCount row_accesses = 0;
  /// False when the pass was stopped before covering every combination.
  bool complete = true;

  friend bool operator==(const EnumerationResult&, const EnumerationResult&) = default;
};

namespace detail {

inline void check_arity(std::size_t g, std::size_t k) {
  if (g == 0 || g > k) {
    throw Error(ErrorKind::InvalidArity,
                "generator count g=" + std::to_string(g) + " outside 1.." + std::to_string(k));
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Single-threaded strategies working directly on Gamma.

/// Every g-subset of rows is summed from scratch: g-1 additions each.
template <PackingWord Word>
EnumerationResult enumerate_basic(const BasicBitMatrix<Word>& gamma, std::size_t g,
                                  std::size_t ubound = kUnbounded) {
  const std::size_t k = gamma.rows();
  detail::check_arity(g, k);
  const std::size_t words = gamma.words_per_row();
  std::vector<Word> acc(words);
  EnumerationResult res;
  res.min_weight = ubound;

  Combination c = first_combination(k, g);
  do {
    const Word* first = gamma.row_ptr(c[0]);
    std::copy(first, first + words, acc.begin());
    for (std::size_t t = 1; t < g; ++t) {
      row_xor_accumulate<Word>(acc, gamma.row(c[t]));
    }
    res.row_accesses += g;
    res.row_additions += g - 1;
    ++res.combinations;
    res.min_weight = std::min(res.min_weight, row_weight<Word>(acc));
  } while (next_combination_lex(c).advanced);
  return res;
}

/// Each (g-1)-prefix that admits an extension is summed once (g-2
/// additions), then extended by every later row with one addition.
template <PackingWord Word>
EnumerationResult enumerate_optimized(const BasicBitMatrix<Word>& gamma, std::size_t g,
                                      std::size_t ubound = kUnbounded) {
  const std::size_t k = gamma.rows();
  detail::check_arity(g, k);
  if (g == 1) return enumerate_basic(gamma, g, ubound);
  const std::size_t words = gamma.words_per_row();
  std::vector<Word> acc(words);
  EnumerationResult res;
  res.min_weight = ubound;

  Combination prefix = first_combination(k, g - 1);
  do {
    if (prefix.back() + 1 >= k) continue;
    const Word* first = gamma.row_ptr(prefix[0]);
    std::copy(first, first + words, acc.begin());
    for (std::size_t t = 1; t + 1 < g; ++t) {
      row_xor_accumulate<Word>(acc, gamma.row(prefix[t]));
    }
    res.row_accesses += g - 1;
    res.row_additions += g - 2;
    for (std::size_t j = prefix.back() + 1; j < k; ++j) {
      res.min_weight = std::min(res.min_weight, xor_weight(acc.data(), gamma.row_ptr(j), words));
    }
    const std::size_t extensions = k - 1 - prefix.back();
    res.row_accesses += extensions;
    res.row_additions += extensions;
    res.combinations += extensions;
  } while (next_combination_lex(prefix).advanced);
  return res;
}

/// Incremental partial sums of the current prefix: level t holds the XOR of
/// the prefix's first t+1 rows.
template <PackingWord Word>
class AdditionStack {
 public:
  AdditionStack(std::size_t depth, std::size_t words) : depth_(depth), words_(words), data_(depth * words) {}

  std::size_t depth() const { return depth_; }
  std::size_t storage_words() const { return data_.size(); }

  const Word* level(std::size_t t) const { return data_.data() + t * words_; }
  const Word* top() const { return level(depth_ - 1); }

  /// Recomputes levels from..depth-1 for `prefix` and returns the number of
  /// row additions performed (level 0 is a copy).
  std::size_t rebuild(const BasicBitMatrix<Word>& gamma, const Combination& prefix, std::size_t from) {
    std::size_t additions = 0;
    for (std::size_t t = from; t < depth_; ++t) {
      Word* out = data_.data() + t * words_;
      const Word* row = gamma.row_ptr(prefix[t]);
      if (t == 0) {
        std::copy(row, row + words_, out);
      } else {
        row_xor<Word>({out, words_}, level(t - 1), row);
        ++additions;
      }
    }
    return additions;
  }

 private:
  std::size_t depth_;
  std::size_t words_;
  std::vector<Word> data_;
};

/// Like the optimized strategy, but the prefix sum is kept on a stack and only
/// the levels at and beyond the leftmost changed position are rebuilt. Rebuilds
/// are deferred past prefixes that have no extension.
template <PackingWord Word>
EnumerationResult enumerate_stack(const BasicBitMatrix<Word>& gamma, std::size_t g,
                                  std::size_t ubound = kUnbounded) {
  const std::size_t k = gamma.rows();
  detail::check_arity(g, k);
  if (g == 1) return enumerate_basic(gamma, g, ubound);
  const std::size_t words = gamma.words_per_row();
  EnumerationResult res;
  res.min_weight = ubound;

  AdditionStack<Word> stack(g - 1, words);
  Combination prefix = first_combination(k, g - 1);
  std::size_t pending = 0;
  while (true) {
    if (prefix.back() + 1 < k) {
      res.row_additions += stack.rebuild(gamma, prefix, pending);
      res.row_accesses += (g - 1) - pending;
      pending = g - 1;
      const Word* top = stack.top();
      for (std::size_t j = prefix.back() + 1; j < k; ++j) {
        res.min_weight = std::min(res.min_weight, xor_weight(top, gamma.row_ptr(j), words));
      }
      const std::size_t extensions = k - 1 - prefix.back();
      res.row_accesses += extensions;
      res.row_additions += extensions;
      res.combinations += extensions;
    }
    const LexStep step = next_combination_lex(prefix);
    if (!step.advanced) break;
    pending = std::min(pending, step.reset_level);
  }
  return res;
}

// ---------------------------------------------------------------------------
// Saved additions.

/// XORs of every l-subset of Gamma's rows for l = 1..s. Level l is a
/// C(k, l) x n matrix whose row r belongs to unrank_lex(k, l, r). Immutable
/// once built; safe to share across threads.
template <PackingWord Word>
class SavedAdditionsStore {
 public:
  /// Total bytes needed for levels 1..s.
  static BigCount required_bytes(std::size_t k, std::size_t n, std::size_t s) {
    const BigCount row_bytes = BasicBitMatrix<Word>::words_for(n) * sizeof(Word);
    BigCount total = 0;
    for (std::size_t l = 1; l <= s; ++l) total = checked_add(total, checked_mul(binomial(k, l), row_bytes));
    return total;
  }

  static SavedAdditionsStore build(const BasicBitMatrix<Word>& gamma, std::size_t s, std::size_t memory_budget) {
    const std::size_t k = gamma.rows();
    if (s == 0 || s > k) {
      throw Error(ErrorKind::InvalidArity, "store depth s=" + std::to_string(s) + " outside 1.." + std::to_string(k));
    }
    const BigCount needed = required_bytes(k, gamma.cols(), s);
    if (needed > memory_budget) {
      throw Error(ErrorKind::BudgetExceeded, "saved-additions store needs " + to_string(needed) +
                                                 " bytes, budget is " + std::to_string(memory_budget));
    }

    SavedAdditionsStore store;
    store.k_ = k;
    store.binomials_ = BinomialTable(k, s);
    store.levels_.push_back(gamma);
    for (std::size_t l = 2; l <= s; ++l) {
      const BasicBitMatrix<Word>& prev = store.levels_.back();
      const BasicBitMatrix<Word>& ones = store.levels_.front();
      BasicBitMatrix<Word> level(store.binomials_(k, l), gamma.cols());
      // l-subsets in lex order are (prefix, j) with the (l-1)-prefix in lex
      // order and j running past the prefix's last element.
      std::size_t out = 0;
      std::size_t prefix_index = 0;
      Combination prefix = first_combination(k, l - 1);
      do {
        for (std::size_t j = prefix.back() + 1; j < k; ++j) {
          row_xor<Word>(level.row(out++), prev.row_ptr(prefix_index), ones.row_ptr(j));
        }
        ++prefix_index;
      } while (next_combination_lex(prefix).advanced);
      store.build_additions_ += out;
      store.levels_.push_back(std::move(level));
    }
    return store;
  }

  std::size_t max_level() const { return levels_.size(); }
  std::size_t k() const { return k_; }
  std::size_t cols() const { return levels_.front().cols(); }
  std::size_t words_per_row() const { return levels_.front().words_per_row(); }

  /// Level l, 1 <= l <= max_level().
  const BasicBitMatrix<Word>& level(std::size_t l) const { return levels_.at(l - 1); }
  const Word* row(std::size_t l, std::size_t index) const { return levels_[l - 1].row_ptr(index); }

  const BinomialTable& binomials() const { return binomials_; }
  /// Row additions spent building levels 2..s (one per stored row).
  BigCount build_additions() const { return build_additions_; }

  std::size_t bytes() const {
    std::size_t total = 0;
    for (const auto& l : levels_) total += l.rows() * l.row_bytes();
    return total;
  }

 private:
  std::size_t k_ = 0;
  std::vector<BasicBitMatrix<Word>> levels_;
  BinomialTable binomials_;
  BigCount build_additions_ = 0;
};

namespace detail {

inline constexpr std::size_t kMaxUnroll = 3;

/// One top-level work unit of a saved-additions pass: either a group of
/// left combinations (lex indices into level s) sharing a last element, or a
/// contiguous slice of level g when g <= s.
struct SavedUnit {
  std::array<std::uint64_t, kMaxUnroll> left{};
  std::uint32_t members = 0;
  std::uint32_t last = 0;
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
};

template <PackingWord Word>
class SavedPass {
 public:
  SavedPass(const SavedAdditionsStore<Word>& store, std::size_t g, std::size_t unroll)
      : store_(store), g_(g), s_(store.max_level()), k_(store.k()), words_(store.words_per_row()),
        unroll_(unroll), binom_(store.binomials()) {}

  /// Work units covering every g-subset exactly once.
  std::vector<SavedUnit> plan() const {
    std::vector<SavedUnit> units;
    if (g_ <= s_) {
      const std::uint64_t total = binom_(k_, g_);
      constexpr std::uint64_t kSlice = 4096;
      for (std::uint64_t b = 0; b < total; b += kSlice) {
        SavedUnit u;
        u.begin = b;
        u.end = std::min(total, b + kSlice);
        units.push_back(u);
      }
      return units;
    }
    const std::size_t tail = g_ - s_;
    const auto admissible = [&](const Combination& e) { return e.front() + g_ <= k_ && e.back() + tail < k_; };
    if (unroll_ == 1) {
      // plain pass: lex order over the admissible range of level s
      const std::uint64_t hi = binom_(k_, s_) - binom_(g_ - 1, s_);
      Combination e = first_combination(k_, s_);
      for (std::uint64_t j = 0; j < hi; ++j) {
        if (admissible(e)) {
          SavedUnit u;
          u.left[0] = j;
          u.members = 1;
          u.last = static_cast<std::uint32_t>(e.back());
          units.push_back(u);
        }
        next_combination_lex(e);
      }
      return units;
    }
    // unrolled pass: first element changes least, then the last one, so runs
    // sharing a last element are consecutive and can be grouped
    Combination e = first_combination(k_, s_);
    do {
      if (!admissible(e)) continue;
      const std::uint64_t j = binom_.rank_lex(e.indices.data(), s_, k_);
      if (!units.empty() && units.back().members < unroll_ && units.back().last == e.back()) {
        units.back().left[units.back().members++] = j;
      } else {
        SavedUnit u;
        u.left[0] = j;
        u.members = 1;
        u.last = static_cast<std::uint32_t>(e.back());
        units.push_back(u);
      }
    } while (next_combination_unrolled_order(e));
    return units;
  }

  void run(const SavedUnit& unit, EnumerationResult& res) {
    if (g_ <= s_) {
      leaf_slice(unit.begin, unit.end, res);
      return;
    }
    group_size_ = unit.members;
    for (std::size_t m = 0; m < group_size_; ++m) {
      parts_[m].clear();
      parts_[m].push_back(store_.row(s_, unit.left[m]));
    }
    descend(g_ - s_, static_cast<std::ptrdiff_t>(unit.last), res);
  }

 private:
  // Weight of the XOR of `parts` and `row`.
  std::size_t combined_weight(const std::vector<const Word*>& parts, const Word* row) const {
    switch (parts.size()) {
      case 0:
        return row_weight<Word>({row, words_});
      case 1:
        return xor_weight(parts[0], row, words_);
      default: {
        std::size_t weight = 0;
        for (std::size_t w = 0; w < words_; ++w) {
          Word x = row[w];
          for (const Word* p : parts) x ^= p[w];
          weight += static_cast<std::size_t>(std::popcount(x));
        }
        return weight;
      }
    }
  }

  void leaf_slice(std::uint64_t begin, std::uint64_t end, EnumerationResult& res) {
    for (std::uint64_t j = begin; j < end; ++j) {
      res.min_weight = std::min(res.min_weight, row_weight<Word>({store_.row(g_, j), words_}));
    }
    res.row_accesses += end - begin;
    res.combinations += end - begin;
  }

  // All level-`level` subsets starting after `last`, combined with each
  // group member's parts.
  void leaf(std::size_t level, std::ptrdiff_t last, EnumerationResult& res) {
    const std::uint64_t lo = binom_(k_, level) - binom_(k_ - static_cast<std::size_t>(last) - 1, level);
    const std::uint64_t hi = binom_(k_, level);
    if (lo >= hi) return;
    const std::size_t t = parts_[0].size();
    const std::uint64_t count = hi - lo;
    std::size_t best = res.min_weight;
    for (std::uint64_t j = lo; j < hi; ++j) {
      const Word* row = store_.row(level, j);
      for (std::size_t m = 0; m < group_size_; ++m) {
        best = std::min(best, combined_weight(parts_[m], row));
      }
    }
    res.min_weight = best;
    res.row_accesses += group_size_ * t + count;
    res.row_additions += static_cast<BigCount>(count) * group_size_ * t;
    res.combinations += static_cast<BigCount>(count) * group_size_;
  }

  void descend(std::size_t remaining, std::ptrdiff_t last, EnumerationResult& res) {
    if (remaining <= s_) {
      leaf(remaining, last, res);
      return;
    }
    const std::size_t tail = remaining - s_;
    const auto first_allowed = static_cast<std::size_t>(last + 1);
    const std::uint64_t lo = binom_(k_, s_) - binom_(k_ - first_allowed, s_);
    const std::uint64_t hi = binom_(k_, s_) - binom_(remaining - 1, s_);
    if (lo >= hi) return;
    Combination e = unrank_lex(k_, s_, lo);
    for (std::uint64_t j = lo; j < hi; ++j) {
      if (e.back() + tail < k_) {
        const Word* row = store_.row(s_, j);
        for (std::size_t m = 0; m < group_size_; ++m) parts_[m].push_back(row);
        descend(tail, static_cast<std::ptrdiff_t>(e.back()), res);
        for (std::size_t m = 0; m < group_size_; ++m) parts_[m].pop_back();
      }
      next_combination_lex(e);
    }
  }

  const SavedAdditionsStore<Word>& store_;
  std::size_t g_;
  std::size_t s_;
  std::size_t k_;
  std::size_t words_;
  std::size_t unroll_;
  const BinomialTable& binom_;
  std::size_t group_size_ = 1;
  std::array<std::vector<const Word*>, kMaxUnroll> parts_;
};

inline void lower_shared(std::atomic<std::size_t>& cell, std::size_t value) {
  std::size_t current = cell.load(std::memory_order_relaxed);
  while (value < current && !cell.compare_exchange_weak(current, value, std::memory_order_relaxed)) {
  }
}

}  // namespace detail

struct SavedPassOptions {
  /// 1 = plain lex order; 2 or 3 = left combinations sharing a last element
  /// are processed together.
  std::size_t unroll = 1;
  std::size_t workers = 1;
  /// Polled at unit boundaries; a stopped pass returns complete == false.
  const std::atomic<bool>* stop = nullptr;
};

/// Saved-additions pass for generator count g. Every g-subset is split into
/// ceil(g/s) stored parts, so each codeword costs floor((g-1)/s) additions.
/// With several workers, top-level units are claimed dynamically through a
/// shared cursor; counters are summed and the minimum does not depend on the
/// schedule.
template <PackingWord Word>
EnumerationResult enumerate_saved_pass(const SavedAdditionsStore<Word>& store, std::size_t g, std::size_t ubound,
                                       const SavedPassOptions& options) {
  detail::check_arity(g, store.k());
  if (options.unroll == 0 || options.unroll > detail::kMaxUnroll) {
    throw Error(ErrorKind::InvalidArity, "unroll factor must be 1, 2 or 3");
  }
  if (options.workers == 0) throw Error(ErrorKind::InvalidArity, "worker count must be at least 1");

  const std::vector<detail::SavedUnit> units = detail::SavedPass<Word>(store, g, options.unroll).plan();
  std::atomic<std::size_t> cursor{0};
  std::atomic<std::size_t> shared_upper{ubound};
  std::atomic<bool> stopped{false};

  const auto work = [&](EnumerationResult& local) {
    detail::SavedPass<Word> pass(store, g, options.unroll);
    local.min_weight = ubound;
    while (true) {
      if (options.stop != nullptr && options.stop->load(std::memory_order_relaxed)) {
        stopped.store(true, std::memory_order_relaxed);
        return;
      }
      const std::size_t i = cursor.fetch_add(1, std::memory_order_relaxed);
      if (i >= units.size()) return;
      local.min_weight = std::min(local.min_weight, shared_upper.load(std::memory_order_relaxed));
      pass.run(units[i], local);
      detail::lower_shared(shared_upper, local.min_weight);
    }
  };

  std::vector<EnumerationResult> locals(options.workers);
  if (options.workers == 1) {
    work(locals[0]);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(options.workers);
    for (std::size_t w = 0; w < options.workers; ++w) {
      threads.emplace_back([&, w] { work(locals[w]); });
    }
  }

  EnumerationResult res;
  res.min_weight = ubound;
  for (const auto& local : locals) {
    res.min_weight = std::min(res.min_weight, local.min_weight);
    res.combinations += local.combinations;
    res.row_additions += local.row_additions;
    res.row_accesses += local.row_accesses;
  }
  res.complete = !stopped.load();
  return res;
}

template <PackingWord Word>
EnumerationResult enumerate_saved(const SavedAdditionsStore<Word>& store, std::size_t g,
                                  std::size_t ubound = kUnbounded) {
  return enumerate_saved_pass(store, g, ubound, SavedPassOptions{});
}

template <PackingWord Word>
EnumerationResult enumerate_saved_unrolled(const SavedAdditionsStore<Word>& store, std::size_t g,
                                           std::size_t ubound, std::size_t unroll) {
  return enumerate_saved_pass(store, g, ubound, SavedPassOptions{.unroll = unroll});
}

template <PackingWord Word>
EnumerationResult enumerate_parallel(const SavedAdditionsStore<Word>& store, std::size_t g, std::size_t ubound,
                                     std::size_t workers, std::size_t unroll = 1) {
  return enumerate_saved_pass(store, g, ubound, SavedPassOptions{.unroll = unroll, .workers = workers});
}

}  // namespace mindist
