#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "mindist/bit_matrix.hpp"

namespace mindist {

/// Systematic re-encodings of one generator matrix over pairwise disjoint
/// information sets. The first `full_rank_count` matrices are systematic on
/// k pivot columns each; an optional trailing remainder matrix has pivot rank
/// `remainder_rank` < k on the columns left over.
template <PackingWord Word>
struct GammaSet {
  std::vector<BasicBitMatrix<Word>> gammas;
  std::vector<std::vector<std::size_t>> pivot_sets;
  std::size_t full_rank_count = 0;
  std::size_t remainder_rank = 0;

  std::size_t size() const { return gammas.size(); }
  bool has_remainder() const { return gammas.size() > full_rank_count; }
};

/// Greedy construction: repeatedly eliminate on the columns not yet used as
/// pivots. Every pass of rank k contributes a full-rank matrix; the first pass
/// of rank 0 < r < k contributes the remainder and stops. `max_full_rank`
/// caps the number of full-rank matrices (no remainder is produced once the
/// cap is hit).
template <PackingWord Word>
GammaSet<Word> build_gamma_set(const BasicBitMatrix<Word>& g,
                               std::size_t max_full_rank = std::numeric_limits<std::size_t>::max()) {
  const std::size_t k = g.rows();
  if (k == 0 || k > g.cols()) {
    throw Error(ErrorKind::InvalidDimensions, "generator matrix must satisfy 0 < k <= n");
  }
  if (rank(g) < k) {
    throw Error(ErrorKind::RankDeficient, "generator matrix does not have full row rank");
  }

  GammaSet<Word> out;
  std::vector<bool> used(g.cols(), false);
  while (out.full_rank_count < max_full_rank) {
    std::vector<std::size_t> free_columns;
    for (std::size_t c = 0; c < g.cols(); ++c) {
      if (!used[c]) free_columns.push_back(c);
    }
    if (free_columns.empty()) break;
    ReducedMatrix<Word> reduced = reduce_on_columns<Word>(g, free_columns);
    if (reduced.rank == 0) break;
    for (std::size_t p : reduced.pivots) used[p] = true;
    const bool full = reduced.rank == k;
    out.gammas.push_back(std::move(reduced.matrix));
    out.pivot_sets.push_back(std::move(reduced.pivots));
    if (!full) {
      out.remainder_rank = reduced.rank;
      break;
    }
    ++out.full_rank_count;
  }
  return out;
}

}  // namespace mindist
