#include "mindist/construction_script.hpp"

#include <istream>
#include <sstream>

namespace mindist {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string at_line(std::size_t line) { return "script line " + std::to_string(line) + ": "; }

std::vector<std::size_t> parse_list(const std::string& text, std::size_t line) {
  std::vector<std::size_t> out;
  std::istringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    item = trim(item);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 9) {
      throw Error(ErrorKind::Parse, at_line(line) + "bad number '" + item + "'");
    }
    out.push_back(static_cast<std::size_t>(std::stoul(item)));
  }
  if (out.empty()) throw Error(ErrorKind::Parse, at_line(line) + "empty list");
  return out;
}

BinaryPolynomial build_polynomial(const ConstructionScript::PolynomialSpec& spec, const ModulusRing& ring) {
  BinaryPolynomial p = BinaryPolynomial::from_exponents(spec.exponents);
  if (!spec.quotient) return p;
  try {
    return cofactor(p, ring);
  } catch (const Error& e) {
    throw Error(e.kind(), at_line(spec.line) + e.what());
  }
}

}  // namespace

ConstructionScript parse_construction_script(std::istream& in) {
  ConstructionScript script;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(raw.substr(0, raw.find('#')));
    if (text.empty()) continue;
    if (text == "extend") {
      script.operations.push_back({ConstructionScript::Operation::Kind::Extend, {}, line});
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::Parse, at_line(line) + "expected key=value");
    const std::string key = trim(text.substr(0, eq));
    std::string value = trim(text.substr(eq + 1));
    if (key == "m") {
      const auto values = parse_list(value, line);
      if (values.size() != 1 || values[0] == 0) throw Error(ErrorKind::Parse, at_line(line) + "m must be one positive number");
      script.m = values[0];
      script.m_line = line;
    } else if (key == "f" || key == "f1" || key == "f2" || key == "p") {
      ConstructionScript::PolynomialSpec spec;
      spec.line = line;
      constexpr std::string_view kQuotient = "quotient:";
      if (value.rfind(kQuotient, 0) == 0) {
        spec.quotient = true;
        value = value.substr(kQuotient.size());
      }
      spec.exponents = parse_list(value, line);
      script.polynomials[key] = std::move(spec);
    } else if (key == "puncture") {
      auto positions = parse_list(value, line);
      for (std::size_t p : positions) {
        if (p == 0) throw Error(ErrorKind::Parse, at_line(line) + "puncture positions are 1-based");
      }
      script.operations.push_back({ConstructionScript::Operation::Kind::Puncture, std::move(positions), line});
    } else {
      throw Error(ErrorKind::Parse, at_line(line) + "unknown key '" + key + "'");
    }
  }
  return script;
}

ConstructionOutcome run_construction(const ConstructionScript& script, const std::optional<BitMatrix>& base) {
  ConstructionOutcome out;
  const auto& polys = script.polynomials;
  const bool product = polys.contains("f1") || polys.contains("f2") || polys.contains("p");
  const bool cyclic = polys.contains("f");

  if (product || cyclic) {
    if (!script.m) throw Error(ErrorKind::Parse, "script: polynomial construction needs m=");
    if (product && cyclic) throw Error(ErrorKind::Parse, "script: use either f= or f1=/f2=/p=, not both");
    const ModulusRing ring(*script.m);
    const auto generator_of = [&](const std::string& key) {
      const auto& spec = polys.at(key);
      try {
        return cyclic_code_generator(build_polynomial(spec, ring), ring);
      } catch (const Error& e) {
        throw Error(e.kind(), at_line(spec.line) + key + ": " + e.what());
      }
    };
    if (cyclic) {
      out.generator = generator_of("f");
    } else {
      for (const char* key : {"f1", "f2", "p"}) {
        if (!polys.contains(key)) throw Error(ErrorKind::Parse, std::string("script: missing ") + key + "=");
      }
      const BitMatrix c1 = generator_of("f1");
      const BitMatrix c2 = generator_of("f2");
      if (!is_subcode(c2, c1)) out.warnings.push_back("C2 = (f2) is not contained in C1 = (f1)");
      if (c1.rows() <= 20 && c2.rows() <= 20) {
        // small enough to check the distance condition directly
        const auto min_weight = [](const BitMatrix& g) {
          std::vector<std::uint32_t> acc(g.words_per_row(), 0);
          std::size_t best = g.cols() + 1;
          for (std::uint64_t i = 1; i < (std::uint64_t{1} << g.rows()); ++i) {
            row_xor_accumulate<std::uint32_t>(acc, g.row(static_cast<std::size_t>(std::countr_zero(i))));
            best = std::min(best, row_weight<std::uint32_t>(acc));
          }
          return best;
        };
        const std::size_t d1 = min_weight(c1);
        const std::size_t d2 = min_weight(c2);
        if (!(d2 > 2 * d1)) {
          out.warnings.push_back("d2 = " + std::to_string(d2) + " is not greater than 2 d1 = " + std::to_string(2 * d1));
        }
      }
      const auto& p_spec = polys.at("p");
      try {
        out.generator = matrix_product_code(c1, c2, build_polynomial(p_spec, ring), ring);
      } catch (const Error& e) {
        throw Error(e.kind(), at_line(p_spec.line) + e.what());
      }
    }
  } else {
    if (!base) throw Error(ErrorKind::Parse, "script: no polynomial construction and no input matrix");
    out.generator = *base;
  }

  for (const auto& op : script.operations) {
    if (op.kind == ConstructionScript::Operation::Kind::Extend) {
      out.generator = extend_code(out.generator);
      continue;
    }
    std::vector<std::size_t> zero_based;
    for (std::size_t p : op.positions) {
      if (p > out.generator.cols()) {
        throw Error(ErrorKind::OutOfRange, at_line(op.line) + "puncture position " + std::to_string(p) +
                                               " exceeds length " + std::to_string(out.generator.cols()));
      }
      zero_based.push_back(p - 1);
    }
    out.generator = puncture_code<std::uint32_t>(out.generator, zero_based);
  }
  return out;
}

}  // namespace mindist
