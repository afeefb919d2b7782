#include "mindist/constructions.hpp"

#include <bit>

namespace mindist {

BinaryPolynomial BinaryPolynomial::from_exponents(std::span<const std::size_t> exponents) {
  BinaryPolynomial p;
  for (std::size_t e : exponents) p.set_coefficient(e, !p.coefficient(e));
  return p;
}

BinaryPolynomial BinaryPolynomial::from_exponents(std::initializer_list<std::size_t> exponents) {
  return from_exponents(std::span<const std::size_t>(exponents.begin(), exponents.size()));
}

BinaryPolynomial BinaryPolynomial::monomial(std::size_t exponent) {
  BinaryPolynomial p;
  p.set_coefficient(exponent, true);
  return p;
}

long BinaryPolynomial::degree() const {
  if (words_.empty()) return -1;
  const std::uint64_t top = words_.back();
  return static_cast<long>((words_.size() - 1) * 64 + 63 - static_cast<std::size_t>(std::countl_zero(top)));
}

bool BinaryPolynomial::coefficient(std::size_t i) const {
  if (i / 64 >= words_.size()) return false;
  return (words_[i / 64] >> (i % 64)) & 1U;
}

void BinaryPolynomial::set_coefficient(std::size_t i, bool value) {
  if (i / 64 >= words_.size()) {
    if (!value) return;
    words_.resize(i / 64 + 1, 0);
  }
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  words_[i / 64] = value ? (words_[i / 64] | bit) : (words_[i / 64] & ~bit);
  trim();
}

std::vector<std::size_t> BinaryPolynomial::exponents() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

BinaryPolynomial& BinaryPolynomial::operator+=(const BinaryPolynomial& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
  trim();
  return *this;
}

BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  BinaryPolynomial out;
  for (std::size_t e : a.exponents()) out += b.shifted(e);
  return out;
}

BinaryPolynomial BinaryPolynomial::shifted(std::size_t shift) const {
  if (is_zero()) return {};
  BinaryPolynomial out;
  const std::size_t word_shift = shift / 64;
  const std::size_t bit_shift = shift % 64;
  out.words_.assign(words_.size() + word_shift + 1, 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out.words_[i + word_shift] |= words_[i] << bit_shift;
    if (bit_shift != 0) out.words_[i + word_shift + 1] |= words_[i] >> (64 - bit_shift);
  }
  out.trim();
  return out;
}

void BinaryPolynomial::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

DivisionResult divide(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::NotADivisor, "division by the zero polynomial");
  DivisionResult out{{}, a};
  const long db = b.degree();
  while (out.remainder.degree() >= db) {
    const auto shift = static_cast<std::size_t>(out.remainder.degree() - db);
    out.quotient.set_coefficient(shift, true);
    out.remainder += b.shifted(shift);
  }
  return out;
}

BinaryPolynomial gcd(BinaryPolynomial a, BinaryPolynomial b) {
  while (!b.is_zero()) {
    BinaryPolynomial r = divide(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

ModulusRing::ModulusRing(std::size_t length) : m(length) {
  if (length == 0) throw Error(ErrorKind::InvalidDimensions, "ring length must be at least 1");
}

BinaryPolynomial ModulusRing::modulus() const { return BinaryPolynomial::from_exponents({m, 0}); }

BinaryPolynomial ModulusRing::reduce(const BinaryPolynomial& p) const {
  BinaryPolynomial out;
  for (std::size_t e : p.exponents()) {
    const std::size_t folded = e % m;
    out.set_coefficient(folded, !out.coefficient(folded));
  }
  return out;
}

BinaryPolynomial poly_mul_mod(const BinaryPolynomial& a, const BinaryPolynomial& b, const ModulusRing& ring) {
  return ring.reduce(ring.reduce(a) * ring.reduce(b));
}

bool is_unit(const BinaryPolynomial& p, const ModulusRing& ring) {
  const BinaryPolynomial reduced = ring.reduce(p);
  if (reduced.is_zero()) return false;
  return gcd(ring.modulus(), reduced) == BinaryPolynomial::one();
}

BinaryPolynomial cofactor(const BinaryPolynomial& divisor, const ModulusRing& ring) {
  DivisionResult d = divide(ring.modulus(), divisor);
  if (!d.remainder.is_zero()) {
    throw Error(ErrorKind::NotADivisor, "polynomial does not divide x^" + std::to_string(ring.m) + " - 1");
  }
  return d.quotient;
}

}  // namespace mindist
