#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mindist/bit_matrix.hpp"
#include "mindist/constructions.hpp"

namespace mindist {

/// Construction script, one key=value per line ('#' starts a comment):
///
///   m=117                     ring length
///   f=...                     cyclic code (f) alone, or
///   f1=... / f2=... / p=...   matrix-product code [(f1) (f2)] * (1 p; 0 1)
///   extend                    append a parity column
///   puncture=234,233          delete 1-based positions of the current code
///
/// Polynomials are comma-separated exponent lists ("67,59,...,2,0"), or
/// "quotient:<exponents>" for (x^m - 1) divided by the listed polynomial.
/// Without f/f1 the script transforms a base matrix supplied by the caller.
struct ConstructionScript {
  struct Operation {
    enum class Kind { Extend, Puncture } kind = Kind::Extend;
    std::vector<std::size_t> positions;  // 1-based
    std::size_t line = 0;
  };
  struct PolynomialSpec {
    std::vector<std::size_t> exponents;
    bool quotient = false;
    std::size_t line = 0;
  };

  std::optional<std::size_t> m;
  std::size_t m_line = 0;
  std::map<std::string, PolynomialSpec> polynomials;  // keys f, f1, f2, p
  std::vector<Operation> operations;
};

ConstructionScript parse_construction_script(std::istream& in);

struct ConstructionOutcome {
  BitMatrix generator;
  std::vector<std::string> warnings;
};

/// Runs the script. Errors carry the offending script line in their message.
ConstructionOutcome run_construction(const ConstructionScript& script, const std::optional<BitMatrix>& base = {});

}  // namespace mindist
