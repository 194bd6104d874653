#pragma once

// Shared generators and helpers for the test suites.

#include <initializer_list>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "lieschur/catalog.hpp"
#include "lieschur/lie_algebra.hpp"
#include "lieschur/linalg.hpp"
#include "lieschur/psi.hpp"

namespace lieschur::testing {

inline const RationalField Q{};

/// Runs fn and expects a lieschur::Error carrying the given code.
template <class Fn>
void expect_error(Errc code, Fn&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << errc_name(code) << ", nothing thrown";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

template <class F>
Vector<typename F::Scalar> vec(const F& field, std::initializer_list<long> entries) {
  Vector<typename F::Scalar> v(static_cast<Index>(entries.size()));
  Index t = 0;
  for (long e : entries) v(t++) = field.from_int(e);
  return v;
}

template <class F>
Matrix<typename F::Scalar> mat(const F& field, std::initializer_list<std::initializer_list<long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r ? static_cast<Index>(rows.begin()->size()) : 0;
  Matrix<typename F::Scalar> m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long e : row) m(i, j++) = field.from_int(e);
    ++i;
  }
  return m;
}

/// Small random rationals num/den with |num| <= 5, 1 <= den <= 4, about a third zero.
inline Rational random_scalar(const RationalField&, std::mt19937_64& rng, bool sparse = true) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  std::uniform_int_distribution<int> coin(0, 2);
  if (sparse && coin(rng) == 0) return Rational(0);
  return Rational(mpz_class(num(rng)), mpz_class(den(rng)));
}

inline ModP random_scalar(const PrimeField& field, std::mt19937_64& rng, bool = true) {
  std::uniform_int_distribution<long> v(0, static_cast<long>(field.modulus()) - 1);
  return field.from_int(v(rng));
}

template <class F>
Vector<typename F::Scalar> random_vector(const F& field, Index n, std::mt19937_64& rng) {
  Vector<typename F::Scalar> v(n);
  for (Index i = 0; i < n; ++i) v(i) = random_scalar(field, rng, false);
  return v;
}

template <class F>
Matrix<typename F::Scalar> random_matrix(const F& field, Index rows, Index cols, std::mt19937_64& rng) {
  Matrix<typename F::Scalar> m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = random_scalar(field, rng);
  return m;
}

/// Product of random elementary operations with small integer multipliers: invertible
/// over every field, with determinant +-1.
template <class F>
Matrix<typename F::Scalar> random_unimodular(const F& field, Index n, std::mt19937_64& rng) {
  auto m = identity(field, n);
  if (n < 2) return m;
  std::uniform_int_distribution<Index> pick(0, n - 1);
  std::uniform_int_distribution<long> mult(-3, 3);
  for (Index step = 0; step < 4 * n; ++step) {
    const Index a = pick(rng), b = pick(rng);
    if (a == b) {
      m.row(a).swap(m.row((a + 1) % n));
      continue;
    }
    m.row(a) += field.from_int(mult(rng)) * m.row(b);
  }
  return m;
}

/// Random invertible matrix with rational entries (not unimodular).
inline Matrix<Rational> random_invertible(const RationalField& field, Index n, std::mt19937_64& rng) {
  for (;;) {
    Matrix<Rational> m = random_matrix(field, n, n, rng);
    if (rank(m) == n) return m;
  }
}

inline Matrix<ModP> random_invertible(const PrimeField& field, Index n, std::mt19937_64& rng) {
  for (;;) {
    Matrix<ModP> m = random_matrix(field, n, n, rng);
    if (rank(m) == n) return m;
  }
}

/// A solvable, non-nilpotent 2-dim algebra: [x1, x2] = x2.
template <class F>
LieAlgebra<typename F::Scalar> affine_line(const F& field) {
  return LieAlgebra<typename F::Scalar>::build(field, 2, {{0, 1, 1, field.one()}});
}

template <class S>
LieAlgebra<S> direct_sum(const LieAlgebra<S>& a, const LieAlgebra<S>& b) {
  auto constants = a.structure_constants();
  for (auto c : b.structure_constants()) {
    c.i += a.dim();
    c.j += a.dim();
    c.k += a.dim();
    constants.push_back(c);
  }
  return LieAlgebra<S>::build(a.field(), a.dim() + b.dim(), constants);
}

/// Oracle: rank of Psi_i over every basis tuple, no complement restriction, no early exit.
template <class S>
Index image_dim_by_full_enumeration(const LieAlgebra<S>& L, Index i) {
  const PsiEvaluator<S> psi(L);
  const Index n = L.dim();
  std::uint64_t total = 1;
  for (Index t = 0; t <= i; ++t) total *= static_cast<std::uint64_t>(n);
  Matrix<S> rows = zeros(L.field(), static_cast<Index>(total), psi.codomain_dim(i));
  std::vector<Vector<S>> xs(static_cast<std::size_t>(i + 1));
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (auto& x : xs) {
      x = L.unit(static_cast<Index>(rest % static_cast<std::uint64_t>(n)));
      rest /= static_cast<std::uint64_t>(n);
    }
    rows.row(static_cast<Index>(code)) = psi(i, xs).flatten().transpose();
  }
  return rank(rows);
}

/// gl_n on the matrix units E_ab at position a*n + b.
inline LieAlgebra<Rational> general_linear(Index n) {
  std::vector<StructureConstant<Rational>> constants;
  auto unit = [n](Index a, Index b) { return a * n + b; };
  for (Index p = 0; p < n * n; ++p)
    for (Index q = p + 1; q < n * n; ++q) {
      const Index a = p / n, b = p % n, c = q / n, d = q % n;
      // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
      Vector<Rational> v = zero_vector(Q, n * n);
      if (b == c) v(unit(a, d)) += Rational(1);
      if (d == a) v(unit(c, b)) -= Rational(1);
      for (Index k = 0; k < n * n; ++k)
        if (!v(k).is_zero()) constants.push_back({p, q, k, v(k)});
    }
  return LieAlgebra<Rational>::build(Q, n * n, constants);
}

}  // namespace lieschur::testing
