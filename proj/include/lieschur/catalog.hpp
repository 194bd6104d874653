#pragma once

// Built-in algebras. Names: "L(3,4,1,4)", "L(7,5,1,7)", "heisenberg-3",
// "filiform-<n>" (3 <= n <= 64), "abelian-<n>" (1 <= n <= 64).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lieschur/lie_algebra.hpp"

namespace lieschur {

template <class S>
struct CatalogEntry {
  std::string name;
  std::string construction;
  LieAlgebra<S> algebra;
  std::optional<Index> known_multiplier_dim;
  std::string provenance;
};

/// [x1, xi] = x_{i+1} for 2 <= i <= n-1.
template <class F>
LieAlgebra<typename F::Scalar> standard_filiform(const F& field, Index n) {
  if (n < 3) throw Error(Errc::dimension_too_small, "standard filiform needs n >= 3, got " + std::to_string(n));
  std::vector<StructureConstant<typename F::Scalar>> constants;
  for (Index i = 1; i + 1 < n; ++i) constants.push_back({0, i, i + 1, field.one()});
  return LieAlgebra<typename F::Scalar>::build(field, n, constants);
}

template <class F>
LieAlgebra<typename F::Scalar> abelian(const F& field, Index n) {
  if (n < 1) throw Error(Errc::dimension_too_small, "abelian algebra needs n >= 1");
  return LieAlgebra<typename F::Scalar>::build(field, n, std::span<const StructureConstant<typename F::Scalar>>{});
}

/// Names listed by the `catalog` command and swept by the test suites.
std::vector<std::string> catalog_names();

/// Closest known name by edit distance, for "did you mean" diagnostics.
std::string closest_catalog_name(std::string_view name);

namespace detail {

struct ParsedName {
  enum Family { filiform, abelian } family;
  Index n;
};

std::optional<ParsedName> parse_family_name(std::string_view name);

}  // namespace detail

template <class F>
CatalogEntry<typename F::Scalar> catalog_get(const F& field, std::string_view name) {
  if (name == "L(3,4,1,4)")
    return {std::string(name), "[x1,x2]=x3, [x1,x3]=x4", standard_filiform(field, 4), Index{2},
            "published value for the 4-dim maximal-class algebra"};
  if (name == "L(7,5,1,7)")
    return {std::string(name), "[x1,x2]=x3, [x1,x3]=x4, [x1,x4]=x5", standard_filiform(field, 5), Index{3},
            "published value for the 5-dim maximal-class algebra"};
  if (name == "heisenberg-3")
    return {std::string(name), "[x1,x2]=x3", standard_filiform(field, 3), std::nullopt, ""};
  if (const auto parsed = detail::parse_family_name(name)) {
    if (parsed->family == detail::ParsedName::filiform)
      return {std::string(name), "[x1,xi]=x(i+1), 2<=i<=" + std::to_string(parsed->n - 1),
              standard_filiform(field, parsed->n), std::nullopt, ""};
    return {std::string(name), "all brackets zero", abelian(field, parsed->n), std::nullopt, ""};
  }
  throw Error(Errc::unknown_name, "no catalog algebra '" + std::string(name) + "'; did you mean '" +
                                      closest_catalog_name(name) + "'?");
}

template <class F>
std::vector<CatalogEntry<typename F::Scalar>> catalog_entries(const F& field) {
  std::vector<CatalogEntry<typename F::Scalar>> out;
  for (const auto& name : catalog_names()) out.push_back(catalog_get(field, name));
  return out;
}

}  // namespace lieschur
