#pragma once

// Degree-2 homology of the Chevalley-Eilenberg complex with trivial coefficients,
//
//   Lambda^3 L --d3--> Lambda^2 L --d2--> L,
//
// whose dimension is the Schur multiplier of a finite-dimensional nilpotent algebra.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "lieschur/series.hpp"

namespace lieschur {

/// Sorted k-subsets of {0..n-1} in lexicographic order <-> flat positions.
class ExteriorBasis {
public:
  ExteriorBasis(Index n, Index k);

  Index n() const noexcept { return n_; }
  Index degree() const noexcept { return k_; }
  Index size() const noexcept { return size_; }

  /// Position of a strictly increasing subset of length k.
  Index position(std::span<const Index> subset) const;
  std::vector<Index> subset(Index position) const;

private:
  Index n_;
  Index k_;
  Index size_;
  std::vector<std::vector<Index>> binomials_;  // binomials_[a][b] = C(a, b)
};

std::int64_t binomial(std::int64_t n, std::int64_t k);

/// Largest dimension accepted by the homology routines: the dense d3 (C(n,3) x C(n,2)
/// exact entries) would need several gigabytes beyond this.
inline constexpr Index max_homology_dimension = 44;

/// d2: C(n,2) x n, row {i<j} = [e_i, e_j].
/// d3: C(n,3) x C(n,2), row {i<j<k} = [e_i,e_j]^e_k - [e_i,e_k]^e_j + [e_j,e_k]^e_i.
/// Row convention: the composite "d3 then d2" is the matrix product d3 * d2.
template <class S>
struct BoundaryPair {
  Matrix<S> d2;
  Matrix<S> d3;
};

namespace detail {

inline void check_homology_dimension(Index n) {
  if (n > max_homology_dimension)
    throw Error(Errc::resource_limit, "homology refuses dimension " + std::to_string(n) +
                                          " > " + std::to_string(max_homology_dimension));
}

// acc += sign * (v ^ e_last) in Lambda^2 coordinates.
template <class S>
void add_wedge(const ExteriorBasis& pairs, const Vector<S>& v, Index last, const S& sign,
               Vector<S>& acc) {
  for (Index a = 0; a < v.size(); ++a) {
    if (a == last || is_zero(v(a))) continue;
    if (a < last) {
      const Index s[2] = {a, last};
      acc(pairs.position(s)) += sign * v(a);
    } else {
      const Index s[2] = {last, a};
      acc(pairs.position(s)) -= sign * v(a);
    }
  }
}

}  // namespace detail

template <class S>
BoundaryPair<S> boundary_matrices(const LieAlgebra<S>& L) {
  const Index n = L.dim();
  detail::check_homology_dimension(n);
  const ExteriorBasis pairs(n, 2);
  const ExteriorBasis triples(n, 3);
  BoundaryPair<S> out{zeros(L.field(), pairs.size(), n), zeros(L.field(), triples.size(), pairs.size())};

  for (Index p = 0; p < pairs.size(); ++p) {
    const auto s = pairs.subset(p);
    out.d2.row(p) = L.basis_bracket(s[0], s[1]).transpose();
  }
  const S plus = L.field().one();
  const S minus = -plus;
  for (Index t = 0; t < triples.size(); ++t) {
    const auto s = triples.subset(t);
    const Index i = s[0], j = s[1], k = s[2];
    Vector<S> acc = zero_vector(L.field(), pairs.size());
    detail::add_wedge<S>(pairs, out.d2.row(pairs.position(std::array{i, j})).transpose(), k, plus, acc);
    detail::add_wedge<S>(pairs, out.d2.row(pairs.position(std::array{i, k})).transpose(), j, minus, acc);
    detail::add_wedge<S>(pairs, out.d2.row(pairs.position(std::array{j, k})).transpose(), i, plus, acc);
    out.d3.row(t) = acc.transpose();
  }
  return out;
}

/// C(n,2) - rank d2 - rank d3. Throws non_nilpotent.
template <class S>
Index multiplier_dim(const LieAlgebra<S>& L) {
  detail::check_homology_dimension(L.dim());
  require_nilpotent(L, "multiplier_dim");
  const auto b = boundary_matrices(L);
  return b.d2.rows() - rank(b.d2) - rank(b.d3);
}

}  // namespace lieschur
