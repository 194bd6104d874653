#pragma once

// Plain-text algebra definitions, format version 1:
//
//   lie-algebra 1
//   name L(3,4,1,4)          optional
//   field Q                  Q or GF(p)
//   dim 4
//   labels x1 x2 x3 x4       optional, n distinct tokens
//   bracket 1 2 3 1          [x1, x2] has coefficient 1 on x3
//   bracket 1 3 4 1
//
// Indices are 1-based with i < j. '#' starts a comment. field and dim precede labels
// and brackets; each (i, j, k) appears at most once.

#include <string>
#include <string_view>
#include <variant>

#include "lieschur/lie_algebra.hpp"

namespace lieschur {

inline constexpr int algebra_file_version = 1;

using AnyAlgebra = std::variant<LieAlgebra<Rational>, LieAlgebra<ModP>>;

struct AlgebraDocument {
  std::string name;  // empty when the file has no name line
  AnyAlgebra algebra;
};

struct ParseOptions {
  bool allow_char_two = false;
};

/// Throws SyntaxError (with line), JacobiViolation, DuplicateBracket and FieldSpecError
/// variants of lieschur::Error.
AlgebraDocument parse_algebra(std::string_view text, ParseOptions options = {});

/// Canonical text: brackets sorted by (i, j, k), labels written only when customized.
template <class S>
std::string serialize_algebra(const LieAlgebra<S>& L, std::string_view name = {}) {
  std::string out = "lie-algebra " + std::to_string(algebra_file_version) + "\n";
  if (!name.empty()) out += "name " + std::string(name) + "\n";
  out += "field " + L.field().name() + "\n";
  out += "dim " + std::to_string(L.dim()) + "\n";
  bool default_labels = true;
  for (Index i = 0; i < L.dim(); ++i)
    default_labels = default_labels && L.labels()[static_cast<std::size_t>(i)] == "x" + std::to_string(i + 1);
  if (!default_labels) {
    out += "labels";
    for (const auto& l : L.labels()) out += " " + l;
    out += "\n";
  }
  for (const auto& c : L.structure_constants())
    out += "bracket " + std::to_string(c.i + 1) + " " + std::to_string(c.j + 1) + " " +
           std::to_string(c.k + 1) + " " + c.coeff.to_string() + "\n";
  return out;
}

std::string serialize_algebra(const AnyAlgebra& L, std::string_view name = {});

}  // namespace lieschur
