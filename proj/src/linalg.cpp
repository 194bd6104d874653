#include "lieschur/linalg.hpp"

#include <utility>

namespace lieschur {

namespace {

// Row-major integer work matrix for fraction-free elimination.
struct IntegerMatrix {
  Index rows;
  Index cols;
  std::vector<mpz_class> a;

  mpz_class& operator()(Index i, Index j) { return a[static_cast<std::size_t>(i * cols + j)]; }
  void swap_rows(Index i, Index k) {
    for (Index j = 0; j < cols; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }
};

// Scales every row by the lcm of its denominators; the row space is unchanged.
IntegerMatrix clear_denominators(const Matrix<Rational>& m) {
  IntegerMatrix out{m.rows(), m.cols(), std::vector<mpz_class>(static_cast<std::size_t>(m.size()))};
  for (Index i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (Index j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get().get_den_mpz_t());
    for (Index j = 0; j < m.cols(); ++j) {
      const mpq_class& q = m(i, j).get();
      out(i, j) = q.get_num() * (l / q.get_den());
    }
  }
  return out;
}

}  // namespace

Echelon<Rational> echelon_form(const Matrix<Rational>& m) {
  IntegerMatrix a = clear_denominators(m);
  const Index rows = a.rows;
  const Index cols = a.cols;

  // Bareiss: after step k every active entry is a (k+1)-minor of the input, so the
  // division by the previous pivot is exact.
  std::vector<Index> pivots;
  mpz_class previous = 1;
  mpz_class t;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pivot = r;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) a.swap_rows(pivot, r);
    for (Index i = r + 1; i < rows; ++i) {
      for (Index j = c + 1; j < cols; ++j) {
        t = a(r, c) * a(i, j);
        t -= a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      a(i, c) = 0;
    }
    previous = a(r, c);
    pivots.push_back(c);
    ++r;
  }

  // Back substitution to the canonical reduced form.
  Matrix<Rational> out(r, cols);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < cols; ++j) out(i, j) = Rational(mpq_class(a(i, j)));
  for (Index k = r - 1; k >= 0; --k) {
    const Index p = pivots[static_cast<std::size_t>(k)];
    const Rational lead = out(k, p);
    if (!lead.is_one())
      for (Index j = p; j < cols; ++j) out(k, j) /= lead;
    for (Index s = 0; s < k; ++s) {
      const Rational f = out(s, p);
      if (f.is_zero()) continue;
      for (Index j = p; j < cols; ++j) out(s, j) -= f * out(k, j);
    }
  }
  return {std::move(out), std::move(pivots)};
}

Echelon<ModP> echelon_form(const Matrix<ModP>& m) {
  const std::uint32_t p = detail::modulus_of(m);
  Matrix<ModP> a(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) a(i, j) = p == 0 ? m(i, j) : ModP(m(i, j).value(), p);

  const Index rows = a.rows();
  const Index cols = a.cols();
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pivot = r;
    while (pivot < rows && a(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) a.row(pivot).swap(a.row(r));
    const ModP inv = a(r, c).inverse();
    for (Index j = c; j < cols; ++j) a(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const ModP f = a(i, c);
      for (Index j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {a.topRows(r), std::move(pivots)};
}

}  // namespace lieschur
