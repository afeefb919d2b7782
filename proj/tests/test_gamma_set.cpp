#include <random>
#include <set>

#include "doctest.h"
#include "mindist/errors.hpp"
#include "mindist/gamma_set.hpp"
#include "oracles.hpp"

using mindist::BitMatrix;

namespace {

const BitMatrix kHamming = BitMatrix::from_strings({"1000110", "0100011", "0010111", "0001101"});

template <typename Word>
void check_gamma_invariants(const mindist::BasicBitMatrix<Word>& g, const mindist::GammaSet<Word>& set) {
  const auto plain = oracle::to_plain(g);
  const std::size_t k = g.rows();
  std::set<std::size_t> seen;
  for (std::size_t j = 0; j < set.size(); ++j) {
    const auto& gamma = set.gammas[j];
    const auto& piv = set.pivot_sets[j];
    const bool full = j < set.full_rank_count;
    CHECK(piv.size() == (full ? k : set.remainder_rank));
    for (std::size_t p : piv) CHECK(seen.insert(p).second);
    // Same code: identical codeword weight multiset.
    CHECK(oracle::weight_multiset(oracle::to_plain(gamma)) == oracle::weight_multiset(plain));
    // Pivot columns form an identity block.
    for (std::size_t i = 0; i < piv.size(); ++i) {
      for (std::size_t r = 0; r < k; ++r) CHECK(gamma.get(r, piv[i]) == (r == i));
    }
  }
}

}  // namespace

TEST_CASE("Hamming code splits into a full set and a rank 3 remainder") {
  const auto set = mindist::build_gamma_set(kHamming);
  CHECK(set.size() == 2);
  CHECK(set.full_rank_count == 1);
  CHECK(set.has_remainder());
  CHECK(set.remainder_rank == 3);
  CHECK(set.pivot_sets[0] == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(set.pivot_sets[1] == std::vector<std::size_t>{4, 5, 6});
  CHECK(set.gammas[0] == kHamming);
  check_gamma_invariants(kHamming, set);
}

TEST_CASE("two disjoint identity blocks give two full-rank matrices") {
  const auto g = BitMatrix::from_strings({"100100", "010010", "001001"});
  const auto set = mindist::build_gamma_set(g);
  CHECK(set.size() == 2);
  CHECK(set.full_rank_count == 2);
  CHECK_FALSE(set.has_remainder());
  CHECK(set.pivot_sets[1] == std::vector<std::size_t>{3, 4, 5});
}

TEST_CASE("rank deficient and malformed generators are rejected") {
  const auto dup = BitMatrix::from_strings({"1100", "1100"});
  CHECK_THROWS_AS(mindist::build_gamma_set(dup), mindist::Error);
  try {
    mindist::build_gamma_set(dup);
  } catch (const mindist::Error& e) {
    CHECK(e.kind() == mindist::ErrorKind::RankDeficient);
  }
  const BitMatrix wide(3, 2);
  CHECK_THROWS_AS(mindist::build_gamma_set(wide), mindist::Error);
}

TEST_CASE("the cap on full-rank matrices suppresses the remainder") {
  const auto set = mindist::build_gamma_set(kHamming, 1);
  CHECK(set.size() == 1);
  CHECK_FALSE(set.has_remainder());
}

TEST_CASE("random generators keep their code in every gamma matrix") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t k = 2 + rng() % 7;
    const std::size_t n = k + 1 + rng() % 25;
    const auto g = oracle::random_full_rank(rng, k, n);
    const auto set = mindist::build_gamma_set(g);
    CHECK(set.size() >= 1);
    check_gamma_invariants(g, set);
    // Leftover columns cannot support another pivot.
    std::vector<std::size_t> rest;
    std::set<std::size_t> used;
    for (const auto& p : set.pivot_sets) used.insert(p.begin(), p.end());
    for (std::size_t c = 0; c < n; ++c) {
      if (!used.count(c)) rest.push_back(c);
    }
    if (!set.has_remainder() && !rest.empty()) {
      CHECK(oracle::rank(oracle::columns(oracle::to_plain(g), rest)) == 0);
    }
  }
}

TEST_CASE("gamma sets agree across packing words") {
  std::mt19937_64 rng(9);
  const auto g = oracle::random_full_rank(rng, 6, 40);
  const auto a = mindist::build_gamma_set(g);
  const auto b = mindist::build_gamma_set(mindist::repack<std::uint64_t>(g));
  CHECK(a.pivot_sets == b.pivot_sets);
  for (std::size_t j = 0; j < a.size(); ++j) CHECK(mindist::repack<std::uint64_t>(a.gammas[j]) == b.gammas[j]);
}
