#pragma once

#include <string>

#include "lieschur/linalg.hpp"

namespace lieschur {

/// Subspace of an ambient coordinate space, held as a canonical echelon basis.
/// Two subspaces are equal iff their bases are equal.
template <class S>
class Subspace {
public:
  Subspace() = default;

  /// Span of the rows of `generators`.
  explicit Subspace(const Matrix<S>& generators)
      : ambient_(generators.cols()), basis_(echelon_form(generators)) {}

  template <class F>
  static Subspace zero(const F& field, Index ambient) {
    return Subspace(zeros(field, 0, ambient));
  }
  template <class F>
  static Subspace whole(const F& field, Index ambient) {
    return Subspace(identity(field, ambient));
  }

  Index ambient() const noexcept { return ambient_; }
  Index dim() const noexcept { return basis_.rank(); }
  const Matrix<S>& basis() const noexcept { return basis_.rows; }
  const std::vector<Index>& pivots() const noexcept { return basis_.pivots; }
  const Echelon<S>& echelon() const noexcept { return basis_; }

  /// Unit-vector indices complementing the pivots; they span a canonical complement.
  std::vector<Index> complement_indices() const {
    std::vector<Index> out;
    std::size_t t = 0;
    for (Index j = 0; j < ambient_; ++j) {
      if (t < basis_.pivots.size() && basis_.pivots[t] == j) {
        ++t;
        continue;
      }
      out.push_back(j);
    }
    return out;
  }

  bool contains(const Vector<S>& v) const {
    check_ambient(v.size());
    return is_zero(reduce_modulo(basis_, v));
  }

  bool contains(const Subspace& other) const {
    check_ambient(other.ambient());
    for (Index t = 0; t < other.dim(); ++t)
      if (!contains(Vector<S>(other.basis().row(t).transpose()))) return false;
    return true;
  }

  friend Subspace operator+(const Subspace& a, const Subspace& b) {
    a.check_ambient(b.ambient());
    return Subspace(row_space_union(a.basis(), b.basis()), a.ambient_);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_.pivots == b.basis_.pivots &&
           a.basis_.rows == b.basis_.rows;
  }

private:
  Subspace(const Matrix<S>& echelonized, Index ambient)
      : ambient_(ambient), basis_{echelonized, {}} {
    // rows came out of row_space_union, already canonical; recover the pivots
    for (Index t = 0; t < echelonized.rows(); ++t) {
      Index j = 0;
      while (is_zero(echelonized(t, j))) ++j;
      basis_.pivots.push_back(j);
    }
  }

  void check_ambient(Index n) const {
    if (n != ambient_)
      throw Error(Errc::dimension_mismatch, "ambient dimension " + std::to_string(n) +
                                                " vs " + std::to_string(ambient_));
  }

  Index ambient_ = 0;
  Echelon<S> basis_;
};

template <class S>
Index intersection_dim(const Subspace<S>& a, const Subspace<S>& b) {
  return a.dim() + b.dim() - (a + b).dim();
}

/// Coordinates on the quotient outer/inner of two nested subspaces, in a canonical basis
/// of representatives (the echelonized reductions of outer's basis modulo inner).
template <class S>
class QuotientCoordinates {
public:
  QuotientCoordinates(const Subspace<S>& outer, const Subspace<S>& inner) : inner_(inner) {
    Matrix<S> reduced(outer.dim(), outer.ambient());
    for (Index t = 0; t < outer.dim(); ++t)
      reduced.row(t) = reduce_modulo(inner.echelon(), Vector<S>(outer.basis().row(t).transpose())).transpose();
    representatives_ = echelon_form(reduced);
  }

  Index dim() const noexcept { return representatives_.rank(); }
  const Matrix<S>& representatives() const noexcept { return representatives_.rows; }

  /// Coordinates of v + inner for v in outer. Membership of v in outer is not checked.
  Vector<S> operator()(const Vector<S>& v) const {
    const Vector<S> r = reduce_modulo(inner_.echelon(), v);
    Vector<S> out(dim());
    for (Index t = 0; t < dim(); ++t) out(t) = r(representatives_.pivots[static_cast<std::size_t>(t)]);
    return out;
  }

private:
  Subspace<S> inner_;
  Echelon<S> representatives_;
};

}  // namespace lieschur
