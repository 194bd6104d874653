#pragma once

// Ideals, series, centers and quotients of a LieAlgebra.

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lieschur/lie_algebra.hpp"
#include "lieschur/subspace.hpp"

namespace lieschur {

template <class S>
Subspace<S> whole_space(const LieAlgebra<S>& L) {
  return Subspace<S>::whole(L.field(), L.dim());
}

template <class S>
Subspace<S> zero_space(const LieAlgebra<S>& L) {
  return Subspace<S>::zero(L.field(), L.dim());
}

/// [A, B]: span of the brackets of basis pairs.
template <class S>
Subspace<S> product_subspace(const LieAlgebra<S>& L, const Subspace<S>& A, const Subspace<S>& B) {
  if (A.ambient() != L.dim() || B.ambient() != L.dim())
    throw Error(Errc::dimension_mismatch, "product_subspace: subspace not in the algebra");
  Matrix<S> products = zeros(L.field(), A.dim() * B.dim(), L.dim());
  for (Index a = 0; a < A.dim(); ++a)
    for (Index b = 0; b < B.dim(); ++b)
      products.row(a * B.dim() + b) =
          L.bracket(A.basis().row(a).transpose(), B.basis().row(b).transpose()).transpose();
  return Subspace<S>(products);
}

template <class S>
Subspace<S> derived_subalgebra(const LieAlgebra<S>& L) {
  const auto all = whole_space(L);
  return product_subspace(L, all, all);
}

/// gamma_1 = L, gamma_{i+1} = [gamma_i, L], down to 0 or to a stable non-zero term.
template <class S>
struct SeriesChain {
  std::vector<Subspace<S>> terms;  // terms[0] = gamma_1
  bool nilpotent = true;

  /// term(i) = gamma_i for 1 <= i <= size; gamma_i = 0 beyond the last term when nilpotent.
  const Subspace<S>& term(std::size_t i) const { return terms.at(i - 1); }

  std::vector<Index> dims() const {
    std::vector<Index> out;
    for (const auto& t : terms) out.push_back(t.dim());
    return out;
  }

  /// Last c with gamma_c != 0; 0 for the zero algebra. Meaningful only when nilpotent.
  Index nilpotency_class() const { return static_cast<Index>(terms.size()) - 1; }
};

template <class S>
SeriesChain<S> lower_central_series(const LieAlgebra<S>& L) {
  SeriesChain<S> chain;
  const auto all = whole_space(L);
  chain.terms.push_back(all);
  while (chain.terms.back().dim() > 0) {
    auto next = product_subspace(L, chain.terms.back(), all);
    if (next.dim() == chain.terms.back().dim()) {
      chain.nilpotent = false;
      return chain;
    }
    chain.terms.push_back(std::move(next));
  }
  return chain;
}

template <class S>
bool is_nilpotent(const LieAlgebra<S>& L) {
  return lower_central_series(L).nilpotent;
}

/// Throws non_nilpotent; the shared guard of every bound-verification entry point.
template <class S>
SeriesChain<S> require_nilpotent(const LieAlgebra<S>& L, const char* where) {
  auto chain = lower_central_series(L);
  if (!chain.nilpotent) {
    auto dims = chain.dims();
    std::string d;
    for (auto x : dims) d += (d.empty() ? "" : ",") + std::to_string(x);
    throw Error(Errc::non_nilpotent,
                std::string(where) + ": lower central series stabilizes at dims (" + d + ")");
  }
  return chain;
}

/// Z(L) as the kernel of x -> ([x,e_1], ..., [x,e_n]); canonical echelon basis.
template <class S>
Subspace<S> center(const LieAlgebra<S>& L) {
  const Index n = L.dim();
  Matrix<S> adjoint = zeros(L.field(), n * n, n);
  for (Index a = 0; a < n; ++a)
    for (Index i = 0; i < n; ++i) {
      const auto col = L.basis_bracket(a, i);
      for (Index k = 0; k < n; ++k) adjoint(i * n + k, a) = col(k);
    }
  return Subspace<S>(kernel_basis(adjoint));
}

struct MaximalClassResult {
  bool value = false;
  std::vector<Index> series_dims;

  explicit operator bool() const noexcept { return value; }
};

/// Class n-1, i.e. series dims (n, n-2, n-3, ..., 1, 0). Requires n >= 3.
template <class S>
MaximalClassResult is_maximal_class(const LieAlgebra<S>& L) {
  const Index n = L.dim();
  if (n < 3)
    throw Error(Errc::dimension_too_small,
                "maximal class needs dimension >= 3, got " + std::to_string(n));
  const auto chain = lower_central_series(L);
  MaximalClassResult out;
  out.series_dims = chain.dims();
  out.value = chain.nilpotent && chain.nilpotency_class() == n - 1;
  return out;
}

/// L/I together with the coordinate maps relating it to L.
template <class S>
struct QuotientPresentation {
  LieAlgebra<S> parent;
  Subspace<S> ideal;
  LieAlgebra<S> quotient;
  Matrix<S> projection;  // dim(L/I) x dim(L): coordinates of v + I
  Matrix<S> section;     // dim(L) x dim(L/I): canonical lift, unit vectors off the pivots
};

/// Witness that [v, e_i] escapes the subspace; empty when it is an ideal.
template <class S>
std::optional<std::pair<Index, Index>> ideal_witness(const LieAlgebra<S>& L, const Subspace<S>& I) {
  for (Index t = 0; t < I.dim(); ++t)
    for (Index i = 0; i < L.dim(); ++i)
      if (!I.contains(L.bracket(I.basis().row(t).transpose(), L.unit(i)))) return std::pair{t, i};
  return std::nullopt;
}

template <class S>
QuotientPresentation<S> quotient(const LieAlgebra<S>& L, const Subspace<S>& I) {
  const Index n = L.dim();
  if (I.ambient() != n) throw Error(Errc::dimension_mismatch, "quotient: subspace not in the algebra");
  if (const auto w = ideal_witness(L, I))
    throw Error(Errc::not_an_ideal, "[b" + std::to_string(w->first + 1) + ", " +
                                        L.labels()[static_cast<std::size_t>(w->second)] + "] = " +
                                        to_string(L.bracket(I.basis().row(w->first).transpose(),
                                                            L.unit(w->second))) +
                                        " leaves the subspace");
  const auto keep = I.complement_indices();
  const Index m = static_cast<Index>(keep.size());

  Matrix<S> projection = zeros(L.field(), m, n);
  Matrix<S> section = zeros(L.field(), n, m);
  for (Index r = 0; r < m; ++r) {
    projection(r, keep[static_cast<std::size_t>(r)]) = L.field().one();
    section(keep[static_cast<std::size_t>(r)], r) = L.field().one();
  }
  // v -> v - sum_t v_{p_t} b_t, read off at the kept columns
  for (Index t = 0; t < I.dim(); ++t) {
    const Index p = I.pivots()[static_cast<std::size_t>(t)];
    for (Index r = 0; r < m; ++r) projection(r, p) = -I.basis()(t, keep[static_cast<std::size_t>(r)]);
  }

  std::vector<StructureConstant<S>> constants;
  std::vector<std::string> labels;
  for (Index a = 0; a < m; ++a) {
    labels.push_back(L.labels()[static_cast<std::size_t>(keep[static_cast<std::size_t>(a)])]);
    for (Index b = a + 1; b < m; ++b) {
      const Vector<S> image = projection * L.bracket(section.col(a), section.col(b));
      for (Index k = 0; k < m; ++k)
        if (!is_zero(image(k))) constants.push_back({a, b, k, image(k)});
    }
  }
  auto Q = LieAlgebra<S>::build(L.field(), m, constants, std::move(labels));
  return {L, I, std::move(Q), std::move(projection), std::move(section)};
}

/// Spans of every subset of the canonical center basis, ordered by subset bitmask
/// (the empty subset first, the full center last). Every subspace of Z(L) is a central
/// ideal; coordinate subsets are the enumerated family.
template <class S>
std::vector<Subspace<S>> central_ideals_enumerate(const LieAlgebra<S>& L) {
  const auto Z = center(L);
  const Index d = Z.dim();
  if (d > 16)
    throw Error(Errc::resource_limit,
                "center of dimension " + std::to_string(d) + " has too many coordinate subsets");
  std::vector<Subspace<S>> out;
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
    Matrix<S> rows = zeros(L.field(), static_cast<Index>(std::popcount(mask)), L.dim());
    Index r = 0;
    for (Index t = 0; t < d; ++t)
      if (mask & (1u << t)) rows.row(r++) = Z.basis().row(t);
    out.emplace_back(rows);
  }
  return out;
}

}  // namespace lieschur
