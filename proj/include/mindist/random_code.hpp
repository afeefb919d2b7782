#pragma once

#include <cstdint>
#include <random>

#include "mindist/bit_matrix.hpp"

namespace mindist {

/// G = (I_k | A) with A filled from std::mt19937_64(seed). Each row of A
/// consumes ceil((n-k)/64) outputs; bit b of output w sets column
/// k + 64 w + b. mt19937_64's output sequence is fixed by the standard, so
/// the matrix depends only on (n, k, seed).
template <PackingWord Word = std::uint32_t>
BasicBitMatrix<Word> random_systematic_code(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k == 0 || k >= n) throw Error(ErrorKind::InvalidDimensions, "random code needs 0 < k < n");
  std::mt19937_64 rng(seed);
  BasicBitMatrix<Word> g(k, n);
  const std::size_t redundancy = n - k;
  for (std::size_t r = 0; r < k; ++r) {
    g.set(r, r, true);
    for (std::size_t base = 0; base < redundancy; base += 64) {
      const std::uint64_t bits = rng();
      for (std::size_t b = 0; b < 64 && base + b < redundancy; ++b) {
        if ((bits >> b) & 1U) g.set(r, k + base + b, true);
      }
    }
  }
  return g;
}

}  // namespace mindist
