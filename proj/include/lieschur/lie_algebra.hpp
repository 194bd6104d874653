#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lieschur/linalg.hpp"

namespace lieschur {

/// One nonzero structure constant: [e_i, e_j] has coefficient `coeff` on e_k, with i < j.
/// Indices are 0-based.
template <class S>
struct StructureConstant {
  Index i;
  Index j;
  Index k;
  S coeff;
};

template <class Derived>
std::string to_string(const Eigen::MatrixBase<Derived>& v) {
  std::ostringstream os;
  os << '(';
  for (Index t = 0; t < v.size(); ++t) os << (t ? ", " : "") << v(t);
  os << ')';
  return os.str();
}

/// Finite-dimensional Lie algebra given by structure constants on a fixed basis.
///
/// Only the products [e_i, e_j] with i < j are stored; antisymmetry is structural.
/// Construction validates the Jacobi identity on every basis triple, so a LieAlgebra
/// value is always a Lie algebra. Immutable after construction.
template <class S>
class LieAlgebra {
public:
  using Scalar = S;
  using FieldType = Field<S>;

  static LieAlgebra build(const FieldType& field, Index n,
                          std::span<const StructureConstant<S>> constants,
                          std::vector<std::string> labels = {}) {
    if (n < 0) throw Error(Errc::index_out_of_range, "negative dimension");
    LieAlgebra L(field, n);
    if (labels.empty()) {
      for (Index i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
    } else if (static_cast<Index>(labels.size()) != n) {
      throw Error(Errc::dimension_mismatch, "expected " + std::to_string(n) + " labels");
    }
    L.labels_ = std::move(labels);

    std::vector<StructureConstant<S>> sorted;
    sorted.reserve(constants.size());
    for (const auto& c : constants) {
      if (c.i < 0 || c.j < 0 || c.k < 0 || c.i >= n || c.j >= n || c.k >= n || c.i >= c.j)
        throw Error(Errc::index_out_of_range,
                    "bracket [" + std::to_string(c.i + 1) + "," + std::to_string(c.j + 1) + "] -> " +
                        std::to_string(c.k + 1) + " in dimension " + std::to_string(n) +
                        " (need 1 <= i < j <= n, 1 <= k <= n)");
      field.check(c.coeff);
      sorted.push_back({c.i, c.j, c.k, field.zero() + c.coeff});
    }
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
      return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    for (std::size_t t = 1; t < sorted.size(); ++t) {
      const auto& a = sorted[t - 1];
      const auto& b = sorted[t];
      if (a.i == b.i && a.j == b.j && a.k == b.k)
        throw Error(Errc::duplicate_bracket, "[" + std::to_string(a.i + 1) + "," +
                                                 std::to_string(a.j + 1) + "] -> " +
                                                 std::to_string(a.k + 1) + " given twice");
    }
    for (const auto& c : sorted) {
      if (is_zero(c.coeff)) continue;
      if (L.products_.empty() || L.products_.back().i != c.i || L.products_.back().j != c.j)
        L.products_.push_back({c.i, c.j, {}});
      L.products_.back().terms.emplace_back(c.k, c.coeff);
    }
    for (std::size_t t = 0; t < L.products_.size(); ++t) {
      const auto& p = L.products_[t];
      L.slot_[static_cast<std::size_t>(p.i * n + p.j)] = static_cast<std::int32_t>(t);
    }
    L.validate_jacobi();
    return L;
  }

  static LieAlgebra build(const FieldType& field, Index n,
                          std::initializer_list<StructureConstant<S>> constants,
                          std::vector<std::string> labels = {}) {
    return build(field, n, std::span<const StructureConstant<S>>(constants.begin(), constants.size()),
                 std::move(labels));
  }

  Index dim() const noexcept { return n_; }
  const FieldType& field() const noexcept { return field_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool is_abelian() const noexcept { return products_.empty(); }

  Vector<S> unit(Index i) const { return unit_vector(field_, n_, i); }
  Vector<S> zero() const { return zero_vector(field_, n_); }

  /// [e_i, e_j] from the table (any i, j).
  Vector<S> basis_bracket(Index i, Index j) const {
    check_index(i);
    check_index(j);
    Vector<S> out = zero();
    if (i == j) return out;
    const bool swapped = i > j;
    const auto slot = slot_[static_cast<std::size_t>(swapped ? j * n_ + i : i * n_ + j)];
    if (slot < 0) return out;
    for (const auto& [k, c] : products_[static_cast<std::size_t>(slot)].terms)
      out(k) = swapped ? -c : c;
    return out;
  }

  /// Bilinear extension of the table.
  Vector<S> bracket(const Vector<S>& x, const Vector<S>& y) const {
    check_size(x);
    check_size(y);
    Vector<S> out = zero();
    std::vector<Index> xs;
    std::vector<Index> ys;
    for (Index a = 0; a < n_; ++a) {
      if (!is_zero(x(a))) xs.push_back(a);
      if (!is_zero(y(a))) ys.push_back(a);
    }
    if (xs.size() * ys.size() <= products_.size()) {
      for (Index a : xs)
        for (Index b : ys) {
          if (a == b) continue;
          const bool swapped = a > b;
          const auto slot = slot_[static_cast<std::size_t>(swapped ? b * n_ + a : a * n_ + b)];
          if (slot < 0) continue;
          const S w = swapped ? -(x(a) * y(b)) : x(a) * y(b);
          for (const auto& [k, c] : products_[static_cast<std::size_t>(slot)].terms) out(k) += w * c;
        }
    } else {
      for (const auto& p : products_) {
        const S w = x(p.i) * y(p.j) - x(p.j) * y(p.i);
        if (is_zero(w)) continue;
        for (const auto& [k, c] : p.terms) out(k) += w * c;
      }
    }
    return out;
  }

  /// All nonzero constants, sorted by (i, j, k).
  std::vector<StructureConstant<S>> structure_constants() const {
    std::vector<StructureConstant<S>> out;
    for (const auto& p : products_)
      for (const auto& [k, c] : p.terms) out.push_back({p.i, p.j, k, c});
    return out;
  }

  /// [[a,b],c] + [[b,c],a] + [[c,a],b]
  Vector<S> jacobi_defect(const Vector<S>& a, const Vector<S>& b, const Vector<S>& c) const {
    return bracket(bracket(a, b), c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b);
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    if (a.n_ != b.n_ || !(a.field_ == b.field_)) return false;
    const auto ca = a.structure_constants();
    const auto cb = b.structure_constants();
    return std::equal(ca.begin(), ca.end(), cb.begin(), cb.end(), [](const auto& x, const auto& y) {
      return x.i == y.i && x.j == y.j && x.k == y.k && x.coeff == y.coeff;
    });
  }

private:
  struct Product {
    Index i;
    Index j;
    std::vector<std::pair<Index, S>> terms;
  };

  LieAlgebra(const FieldType& field, Index n)
      : field_(field), n_(n), slot_(static_cast<std::size_t>(n * n), -1) {}

  void check_index(Index i) const {
    if (i < 0 || i >= n_)
      throw Error(Errc::index_out_of_range, "basis index " + std::to_string(i) + " in dimension " +
                                                std::to_string(n_));
  }
  void check_size(const Vector<S>& v) const {
    if (v.size() != n_)
      throw Error(Errc::dimension_mismatch, "vector of length " + std::to_string(v.size()) +
                                                " in algebra of dimension " + std::to_string(n_));
  }

  void validate_jacobi() const {
    if (products_.empty()) return;
    for (Index i = 0; i < n_; ++i)
      for (Index j = i + 1; j < n_; ++j)
        for (Index k = j + 1; k < n_; ++k) {
          const Vector<S> d = jacobi_defect(unit(i), unit(j), unit(k));
          if (!is_zero(d))
            throw JacobiViolation({static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                                   static_cast<std::size_t>(k)},
                                  to_string(d));
        }
  }

  FieldType field_;
  Index n_ = 0;
  std::vector<std::string> labels_;
  std::vector<Product> products_;
  std::vector<std::int32_t> slot_;  // n*n lookup into products_, upper triangle only
};

/// Same algebra on the basis f_a = sum_r P(r, a) e_r (columns of an invertible P).
template <class S>
LieAlgebra<S> change_basis(const LieAlgebra<S>& L, const Matrix<S>& P) {
  const Index n = L.dim();
  if (P.rows() != n || P.cols() != n)
    throw Error(Errc::dimension_mismatch, "change of basis must be " + std::to_string(n) + "x" +
                                              std::to_string(n));
  const Matrix<S> Pinv = inverse(P);
  std::vector<StructureConstant<S>> constants;
  for (Index a = 0; a < n; ++a)
    for (Index b = a + 1; b < n; ++b) {
      const Vector<S> image = Pinv * L.bracket(P.col(a), P.col(b));
      for (Index k = 0; k < n; ++k)
        if (!is_zero(image(k))) constants.push_back({a, b, k, image(k)});
    }
  return LieAlgebra<S>::build(L.field(), n, constants);
}

}  // namespace lieschur
