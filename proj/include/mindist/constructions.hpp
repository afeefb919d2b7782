#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mindist/bit_matrix.hpp"

namespace mindist {

/// Polynomial over F2; bit i of the coefficient vector is the coefficient of x^i.
class BinaryPolynomial {
 public:
  BinaryPolynomial() = default;

  static BinaryPolynomial from_exponents(std::span<const std::size_t> exponents);
  static BinaryPolynomial from_exponents(std::initializer_list<std::size_t> exponents);
  static BinaryPolynomial monomial(std::size_t exponent);
  static BinaryPolynomial one() { return monomial(0); }

  /// -1 for the zero polynomial.
  long degree() const;
  bool is_zero() const { return words_.empty(); }
  bool coefficient(std::size_t i) const;
  void set_coefficient(std::size_t i, bool value);
  std::vector<std::size_t> exponents() const;

  BinaryPolynomial& operator+=(const BinaryPolynomial& other);
  friend BinaryPolynomial operator+(BinaryPolynomial a, const BinaryPolynomial& b) { return a += b; }
  friend BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b);
  /// Multiplication by x^shift.
  BinaryPolynomial shifted(std::size_t shift) const;

  friend bool operator==(const BinaryPolynomial&, const BinaryPolynomial&) = default;

 private:
  void trim();
  std::vector<std::uint64_t> words_;
};

struct DivisionResult {
  BinaryPolynomial quotient;
  BinaryPolynomial remainder;
};

/// Euclidean division; throws Error{NotADivisor} when dividing by zero.
DivisionResult divide(const BinaryPolynomial& a, const BinaryPolynomial& b);
BinaryPolynomial gcd(BinaryPolynomial a, BinaryPolynomial b);

/// The ring F2[x] / (x^m - 1).
struct ModulusRing {
  std::size_t m = 1;

  explicit ModulusRing(std::size_t length);
  /// x^m - 1 (which is x^m + 1 over F2).
  BinaryPolynomial modulus() const;
  /// Folds exponents modulo m.
  BinaryPolynomial reduce(const BinaryPolynomial& p) const;
};

BinaryPolynomial poly_mul_mod(const BinaryPolynomial& a, const BinaryPolynomial& b, const ModulusRing& ring);

/// gcd(p mod (x^m - 1), x^m - 1) == 1.
bool is_unit(const BinaryPolynomial& p, const ModulusRing& ring);

/// (x^m - 1) / divisor; throws Error{NotADivisor} if the division is not exact.
BinaryPolynomial cofactor(const BinaryPolynomial& divisor, const ModulusRing& ring);

/// Generator of the cyclic code (f): row i is the coefficient vector of x^i f,
/// giving an (m - deg f) x m matrix. Throws Error{NotADivisor} unless f is a
/// nonzero divisor of x^m - 1.
template <PackingWord Word = std::uint32_t>
BasicBitMatrix<Word> cyclic_code_generator(const BinaryPolynomial& f, const ModulusRing& ring) {
  if (f.is_zero() || !divide(ring.modulus(), f).remainder.is_zero()) {
    throw Error(ErrorKind::NotADivisor, "generator polynomial does not divide x^" + std::to_string(ring.m) + " - 1");
  }
  const auto deg = static_cast<std::size_t>(f.degree());
  BasicBitMatrix<Word> g(ring.m - deg, ring.m);
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t e : f.exponents()) g.set(i, i + e, true);
  }
  return g;
}

/// Whether every row of `a` lies in the row space of `b`.
template <PackingWord Word>
bool is_subcode(const BasicBitMatrix<Word>& a, const BasicBitMatrix<Word>& b) {
  if (a.cols() != b.cols()) throw Error(ErrorKind::LengthMismatch, "codes have different lengths");
  return rank(stack_rows(b, a)) == rank(b);
}

template <PackingWord Word>
BinaryPolynomial row_polynomial(const BasicBitMatrix<Word>& g, std::size_t r, std::size_t first_col, std::size_t len) {
  BinaryPolynomial p;
  for (std::size_t c = 0; c < len; ++c) {
    if (g.get(r, first_col + c)) p.set_coefficient(c, true);
  }
  return p;
}

/// Generator of [C1 C2] * (1 p; 0 1): rows (u | u p mod x^m - 1) for u in g1
/// followed by rows (0 | v) for v in g2.
template <PackingWord Word>
BasicBitMatrix<Word> matrix_product_code(const BasicBitMatrix<Word>& g1, const BasicBitMatrix<Word>& g2,
                                         const BinaryPolynomial& p, const ModulusRing& ring) {
  if (g1.cols() != ring.m || g2.cols() != ring.m) {
    throw Error(ErrorKind::LengthMismatch, "component codes must both have length " + std::to_string(ring.m));
  }
  if (!is_unit(p, ring)) {
    throw Error(ErrorKind::NotAUnit, "p is not a unit modulo x^" + std::to_string(ring.m) + " - 1");
  }
  const BinaryPolynomial reduced_p = ring.reduce(p);
  const std::size_t m = ring.m;
  BasicBitMatrix<Word> out(g1.rows() + g2.rows(), 2 * m);
  for (std::size_t r = 0; r < g1.rows(); ++r) {
    const BinaryPolynomial u = row_polynomial(g1, r, 0, m);
    const BinaryPolynomial up = poly_mul_mod(u, reduced_p, ring);
    for (std::size_t e : u.exponents()) out.set(r, e, true);
    for (std::size_t e : up.exponents()) out.set(r, m + e, true);
  }
  for (std::size_t r = 0; r < g2.rows(); ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      if (g2.get(r, c)) out.set(g1.rows() + r, m + c, true);
    }
  }
  return out;
}

/// Appends an overall parity column.
template <PackingWord Word>
BasicBitMatrix<Word> extend_code(const BasicBitMatrix<Word>& g) {
  BasicBitMatrix<Word> out(g.rows(), g.cols() + 1);
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      if (g.get(r, c)) out.set(r, c, true);
    }
    out.set(r, g.cols(), row_weight<Word>(g.row(r)) % 2 == 1);
  }
  return out;
}

/// Deletes the listed (0-based) columns and returns a full-rank generator of
/// the punctured code; the dimension drops if rows become dependent.
template <PackingWord Word>
BasicBitMatrix<Word> puncture_code(const BasicBitMatrix<Word>& g, std::span<const std::size_t> positions) {
  std::vector<bool> drop(g.cols(), false);
  for (std::size_t p : positions) {
    if (p >= g.cols()) throw Error(ErrorKind::OutOfRange, "puncture position " + std::to_string(p) + " out of range");
    drop[p] = true;
  }
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < g.cols(); ++c) {
    if (!drop[c]) keep.push_back(c);
  }
  const ReducedMatrix<Word> reduced = reduce(select_columns<Word>(g, keep));
  BasicBitMatrix<Word> out(0, keep.size());
  for (std::size_t r = 0; r < reduced.rank; ++r) out.append_row(reduced.matrix.row(r));
  return out;
}

}  // namespace mindist
