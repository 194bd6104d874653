#pragma once

// Exact dense linear algebra over Q and GF(p).
//
// Row convention throughout: a subspace is the row space of a matrix, and kernels are
// right null spaces returned as rows. Every basis this header returns is in canonical
// reduced row echelon form (leading 1s, zeros above and below each pivot), so outputs
// are deterministic and comparable by ==.

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "lieschur/error.hpp"
#include "lieschur/scalar.hpp"

namespace lieschur {

using Index = Eigen::Index;

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

/// Canonical reduced row echelon form: `rows` has exactly rank rows, `pivots[t]` is the
/// leading column of row t (strictly increasing).
template <class S>
struct Echelon {
  Matrix<S> rows;
  std::vector<Index> pivots;

  Index rank() const noexcept { return static_cast<Index>(pivots.size()); }
};

/// Fraction-free (Bareiss) elimination over the integers, then exact back substitution.
Echelon<Rational> echelon_form(const Matrix<Rational>& m);
/// Classical Gauss-Jordan modulo p. Throws field_mismatch on mixed moduli.
Echelon<ModP> echelon_form(const Matrix<ModP>& m);

namespace detail {

inline Rational one_like(const Matrix<Rational>&) { return Rational(1); }
inline Rational one_like(const Vector<Rational>&) { return Rational(1); }

template <class Derived>
std::uint32_t modulus_of(const Eigen::DenseBase<Derived>& m) {
  std::uint32_t p = 0;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) p = ModP::common_modulus(ModP(0, p), m(i, j));
  return p;
}

inline ModP one_like(const Matrix<ModP>& m) { return ModP(1, modulus_of(m)); }
inline ModP one_like(const Vector<ModP>& v) { return ModP(1, modulus_of(v)); }

}  // namespace detail

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

/// Matrix filled with the field's zero (bound for GF(p)).
template <class F>
Matrix<typename F::Scalar> zeros(const F& field, Index rows, Index cols) {
  return Matrix<typename F::Scalar>::Constant(rows, cols, field.zero());
}

template <class F>
Vector<typename F::Scalar> zero_vector(const F& field, Index n) {
  return Vector<typename F::Scalar>::Constant(n, field.zero());
}

template <class F>
Matrix<typename F::Scalar> identity(const F& field, Index n) {
  auto m = zeros(field, n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

template <class F>
Vector<typename F::Scalar> unit_vector(const F& field, Index n, Index i) {
  auto v = zero_vector(field, n);
  v(i) = field.one();
  return v;
}

template <class S>
Matrix<S> echelon(const Matrix<S>& m) {
  return echelon_form(m).rows;
}

template <class S>
Index rank(const Matrix<S>& m) {
  return echelon_form(m).rank();
}

/// Rows form the canonical basis of {v : m v = 0}; cols(m) - rank(m) of them.
template <class S>
Matrix<S> kernel_basis(const Matrix<S>& m) {
  const auto ech = echelon_form(m);
  const Index cols = m.cols();
  const S one = detail::one_like(m);
  const S zero = one - one;

  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  Matrix<S> basis = Matrix<S>::Constant(cols - ech.rank(), cols, zero);
  Index row = 0;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    basis(row, f) = one;
    for (Index t = 0; t < ech.rank(); ++t) basis(row, ech.pivots[static_cast<std::size_t>(t)]) = -ech.rows(t, f);
    ++row;
  }
  return echelon(basis);
}

/// Echelonized basis of rowspace(a) + rowspace(b).
template <class S>
Matrix<S> row_space_union(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.cols())
    throw Error(Errc::dimension_mismatch, "row_space_union: " + std::to_string(a.cols()) +
                                              " vs " + std::to_string(b.cols()) + " columns");
  Matrix<S> stacked(a.rows() + b.rows(), a.cols());
  stacked << a, b;
  return echelon(stacked);
}

/// Exact inverse; throws invalid_argument if singular or non-square.
template <class S>
Matrix<S> inverse(const Matrix<S>& m) {
  const Index n = m.rows();
  if (m.cols() != n) throw Error(Errc::dimension_mismatch, "inverse of a non-square matrix");
  const S one = detail::one_like(m);
  Matrix<S> augmented = Matrix<S>::Constant(n, 2 * n, one - one);
  augmented.leftCols(n) = m;
  for (Index i = 0; i < n; ++i) augmented(i, n + i) = one;
  const auto ech = echelon_form(augmented);
  if (ech.rank() < n || (n > 0 && ech.pivots[static_cast<std::size_t>(n - 1)] != n - 1))
    throw Error(Errc::invalid_argument, "matrix is singular");
  return ech.rows.rightCols(n);
}

/// Reduces v modulo the row space of a canonical echelon basis: the result vanishes on
/// every pivot column.
template <class S>
Vector<S> reduce_modulo(const Echelon<S>& basis, Vector<S> v) {
  for (Index t = 0; t < basis.rank(); ++t) {
    const S c = v(basis.pivots[static_cast<std::size_t>(t)]);
    if (!is_zero(c)) v -= c * basis.rows.row(t).transpose();
  }
  return v;
}

}  // namespace lieschur
