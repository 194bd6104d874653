#pragma once

// Normed bracket words, the cyclic identity they satisfy, and the multilinear maps
//
//   Psi_i : L^{i+1} -> gamma_i/gamma_{i+1} (x) L/gamma_2,   2 <= i <= c,
//
// built from the same term schedule: every term [u, x_t] of the identity becomes
// (u + gamma_{i+1}) (x) (x_t + gamma_2).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lieschur/series.hpp"
#include "lieschur/subspace.hpp"

namespace lieschur {

enum class Orientation { left, right };

/// [x1,...,xk]_l = [...[[x1,x2],x3],...,xk];  [x1,...,xk]_r = [x1,[...[x_{k-1},xk]...]].
template <class S>
Vector<S> normed_bracket(const LieAlgebra<S>& L, std::span<const Vector<S>> xs, Orientation o) {
  if (xs.empty()) throw Error(Errc::empty_word, "normed bracket of an empty word");
  if (o == Orientation::left) {
    Vector<S> v = xs.front();
    for (std::size_t t = 1; t < xs.size(); ++t) v = L.bracket(v, xs[t]);
    return v;
  }
  Vector<S> v = xs.back();
  for (std::size_t t = xs.size() - 1; t-- > 0;) v = L.bracket(xs[t], v);
  return v;
}

/// One term sign * [inner, x_outer] of the schedule, with arguments named by 0-based
/// position. inner = word(head) when tail is empty, else [word(head), [tail]_l].
struct ScheduledTerm {
  std::vector<Index> head;
  Orientation head_orientation = Orientation::left;
  std::vector<Index> tail;
  Index outer = 0;
  int sign = 1;
};

using TermSchedule = std::vector<ScheduledTerm>;

/// The i+1 terms for arguments x_1..x_{i+1}, i >= 2 (1-based):
///   [[x_1..x_i]_l, x_{i+1}],  [[x_{i+1}, [x_1..x_{i-1}]_l], x_i],
///   [[[x_{i+3-k}..x_{i+1}]_r, [x_1..x_{i+1-k}]_l], x_{i+2-k}]   for 3 <= k <= i+1.
/// For i = 2 this is the Jacobi identity.
TermSchedule term_schedule(Index i);

template <class S>
Vector<S> scheduled_inner(const LieAlgebra<S>& L, std::span<const Vector<S>> xs, const ScheduledTerm& term) {
  auto gather = [&](const std::vector<Index>& positions) {
    std::vector<Vector<S>> out;
    out.reserve(positions.size());
    for (Index p : positions) out.push_back(xs[static_cast<std::size_t>(p)]);
    return out;
  };
  const auto head = gather(term.head);
  Vector<S> u = normed_bracket<S>(L, head, term.head_orientation);
  if (!term.tail.empty()) {
    const auto tail = gather(term.tail);
    u = L.bracket(u, normed_bracket<S>(L, tail, Orientation::left));
  }
  return u;
}

/// Sum of the schedule's terms at (x_1..x_{i+1}); zero in every Lie algebra for the
/// default schedule. Throws word_too_short for fewer than 4 arguments.
template <class S>
Vector<S> normed_identity_defect(const LieAlgebra<S>& L, std::span<const Vector<S>> xs,
                                 const TermSchedule& schedule) {
  if (xs.size() < 4)
    throw Error(Errc::word_too_short, "identity needs i >= 3, i.e. at least 4 arguments, got " +
                                          std::to_string(xs.size()));
  Vector<S> sum = L.zero();
  for (const auto& term : schedule) {
    const Vector<S> t = L.bracket(scheduled_inner(L, xs, term), xs[static_cast<std::size_t>(term.outer)]);
    if (term.sign > 0)
      sum += t;
    else
      sum -= t;
  }
  return sum;
}

template <class S>
Vector<S> normed_identity_defect(const LieAlgebra<S>& L, std::span<const Vector<S>> xs) {
  if (xs.size() < 4)
    throw Error(Errc::word_too_short, "identity needs i >= 3, i.e. at least 4 arguments, got " +
                                          std::to_string(xs.size()));
  return normed_identity_defect(L, xs, term_schedule(static_cast<Index>(xs.size()) - 1));
}

/// Element of gamma_i/gamma_{i+1} (x) L/gamma_2 as a (left dim) x (right dim) grid.
template <class S>
struct TensorElement {
  Matrix<S> coords;

  Index left_dim() const noexcept { return coords.rows(); }
  Index right_dim() const noexcept { return coords.cols(); }
  bool is_zero() const { return lieschur::is_zero(coords); }
  /// Row-major flattening, the coordinate vector used for span computations.
  Vector<S> flatten() const {
    Vector<S> v(coords.size());
    for (Index a = 0; a < coords.rows(); ++a)
      for (Index b = 0; b < coords.cols(); ++b) v(a * coords.cols() + b) = coords(a, b);
    return v;
  }
};

enum class PsiMode { exact, generators };

struct PsiImage {
  Index dim = 0;
  Index codomain_dim = 0;
  bool exact = true;           // false: certified lower bound only
  std::uint64_t tuples = 0;    // tuples evaluated before stopping
};

inline constexpr std::uint64_t max_psi_tuples = 1'000'000;

/// s, s_1 outside gamma_2 with s_i = [s_{i-1}, s] in gamma_i \ gamma_{i+1} for 2 <= i <= c.
template <class S>
struct GeneratorChain {
  Vector<S> s;
  std::vector<Vector<S>> chain;  // chain[k] = s_{k+1}, for 1 <= k+1 <= c

  const Vector<S>& s1() const { return chain.front(); }
  const Vector<S>& at(Index i) const { return chain.at(static_cast<std::size_t>(i - 1)); }
};

template <class S>
struct WitnessResult {
  bool found = false;
  std::vector<int> pattern;  // 0 = s, 1 = s_1, one entry per argument
  TensorElement<S> value;
  std::uint64_t tuples_examined = 0;
  std::string diagnostic;
};

/// Psi_i evaluation against cached graded quotients of a nilpotent algebra.
template <class S>
class PsiEvaluator {
public:
  explicit PsiEvaluator(LieAlgebra<S> L) : L_(std::move(L)), series_(require_nilpotent(L_, "psi")) {
    const auto zero = zero_space(L_);
    // nilpotent chain: terms = gamma_1 .. gamma_{c+1} = 0
    const auto& gamma2 = series_.terms.size() >= 2 ? series_.term(2) : zero;
    abelianization_.emplace(whole_space(L_), gamma2);
    complement_ = gamma2.complement_indices();
    for (Index i = 2; i <= nilpotency_class(); ++i)
      graded_.emplace_back(series_.term(static_cast<std::size_t>(i)),
                           series_.term(static_cast<std::size_t>(i + 1)));
  }

  const LieAlgebra<S>& algebra() const noexcept { return L_; }
  const SeriesChain<S>& series() const noexcept { return series_; }
  Index nilpotency_class() const { return series_.nilpotency_class(); }
  Index abelianization_dim() const { return abelianization_->dim(); }
  /// Canonical unit vectors spanning a complement of gamma_2.
  const std::vector<Index>& complement() const noexcept { return complement_; }

  Index codomain_dim(Index i) const {
    check_degree(i);
    return graded(i).dim() * abelianization_dim();
  }

  TensorElement<S> operator()(Index i, std::span<const Vector<S>> xs) const {
    check_degree(i);
    return evaluate(i, xs, term_schedule(i));
  }

  TensorElement<S> evaluate(Index i, std::span<const Vector<S>> xs, const TermSchedule& schedule) const {
    check_degree(i);
    if (static_cast<Index>(xs.size()) != i + 1)
      throw Error(Errc::dimension_mismatch, "Psi_" + std::to_string(i) + " takes " +
                                                std::to_string(i + 1) + " arguments, got " +
                                                std::to_string(xs.size()));
    const auto& left = graded(i);
    TensorElement<S> out{zeros(L_.field(), left.dim(), abelianization_dim())};
    for (const auto& term : schedule) {
      const Vector<S> u = left(scheduled_inner(L_, xs, term));
      const Vector<S> x = (*abelianization_)(xs[static_cast<std::size_t>(term.outer)]);
      if (lieschur::is_zero(u) || lieschur::is_zero(x)) continue;
      const Matrix<S> product = u * x.transpose();
      if (term.sign > 0)
        out.coords += product;
      else
        out.coords -= product;
    }
    return out;
  }

  /// dim of the span of Psi_i. Exact mode spans over tuples of the canonical gamma_2
  /// complement, which suffices: each term uses every argument once, so an argument in
  /// gamma_2 either pushes the inner word into gamma_{i+1} or is killed in L/gamma_2.
  PsiImage image_dim(Index i, PsiMode mode) const {
    check_degree(i);
    std::vector<Vector<S>> generators;
    if (mode == PsiMode::exact) {
      for (Index j : complement_) generators.push_back(L_.unit(j));
    } else {
      generators = generator_pair();
    }
    PsiImage out;
    out.codomain_dim = codomain_dim(i);
    out.exact = mode == PsiMode::exact;
    const auto g = static_cast<std::uint64_t>(generators.size());
    const std::uint64_t total = tuple_count(g, i + 1);
    if (total > max_psi_tuples)
      throw Error(Errc::tuple_space_too_large,
                  std::to_string(g) + "^" + std::to_string(i + 1) + " tuples exceed the guard of " +
                      std::to_string(max_psi_tuples));
    if (out.codomain_dim == 0 || g == 0) return out;

    const auto schedule = term_schedule(i);
    Matrix<S> span_rows = zeros(L_.field(), 0, out.codomain_dim);
    Echelon<S> span{span_rows, {}};
    std::vector<Vector<S>> xs(static_cast<std::size_t>(i + 1));
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t rest = code;
      for (Index slot = i; slot >= 0; --slot) {
        xs[static_cast<std::size_t>(slot)] = generators[rest % g];
        rest /= g;
      }
      ++out.tuples;
      const Vector<S> v = reduce_modulo(span, evaluate(i, xs, schedule).flatten());
      if (lieschur::is_zero(v)) continue;
      Matrix<S> grown(span.rank() + 1, out.codomain_dim);
      grown << span.rows, v.transpose();
      span = echelon_form(grown);
      if (span.rank() == out.codomain_dim) break;
    }
    out.dim = span.rank();
    return out;
  }

private:
  static std::uint64_t tuple_count(std::uint64_t g, Index length) {
    std::uint64_t total = 1;
    for (Index t = 0; t < length; ++t) {
      if (g != 0 && total > (max_psi_tuples + 1) / g + 1) return max_psi_tuples + 1;
      total *= g;
    }
    return total;
  }

  std::vector<Vector<S>> generator_pair() const;

  void check_degree(Index i) const {
    if (i < 2 || i > nilpotency_class())
      throw Error(Errc::index_out_of_range, "Psi_" + std::to_string(i) + " needs 2 <= i <= c = " +
                                                std::to_string(nilpotency_class()));
  }

  const QuotientCoordinates<S>& graded(Index i) const {
    return graded_[static_cast<std::size_t>(i - 2)];
  }

  LieAlgebra<S> L_;
  SeriesChain<S> series_;
  std::optional<QuotientCoordinates<S>> abelianization_;
  std::vector<Index> complement_;
  std::vector<QuotientCoordinates<S>> graded_;  // graded_[i-2] : gamma_i -> gamma_i/gamma_{i+1}
};

template <class S>
TensorElement<S> psi(const LieAlgebra<S>& L, Index i, std::span<const Vector<S>> xs) {
  return PsiEvaluator<S>(L)(i, xs);
}

template <class S>
PsiImage psi_image_dim(const LieAlgebra<S>& L, Index i, PsiMode mode) {
  return PsiEvaluator<S>(L).image_dim(i, mode);
}

namespace detail {

// Distinct field elements 0, 1, -1, 2, -2, ... (over GF(p): 0, 1, ..., p-1), at most count.
template <class F>
std::vector<typename F::Scalar> small_scalars(const F& field, std::size_t count) {
  std::vector<typename F::Scalar> out;
  const std::uint64_t p = field.characteristic();
  if (p != 0) {
    for (std::uint64_t t = 0; t < p && out.size() < count; ++t) out.push_back(field.from_int(static_cast<long>(t)));
    return out;
  }
  out.push_back(field.zero());
  for (long t = 1; out.size() < count; ++t) {
    out.push_back(field.from_int(t));
    if (out.size() < count) out.push_back(field.from_int(-t));
  }
  return out;
}

template <class S>
std::optional<GeneratorChain<S>> try_chain(const LieAlgebra<S>& L, const SeriesChain<S>& series,
                                           const Vector<S>& s, const Vector<S>& s1) {
  const Index c = series.nilpotency_class();
  GeneratorChain<S> gc{s, {s1}};
  for (Index i = 2; i <= c; ++i) {
    Vector<S> next = L.bracket(gc.chain.back(), s);
    const bool in_term = series.term(static_cast<std::size_t>(i)).contains(next);
    const bool below = i + 1 <= static_cast<Index>(series.terms.size()) &&
                       series.term(static_cast<std::size_t>(i + 1)).contains(next);
    if (!in_term || below || lieschur::is_zero(next)) return std::nullopt;
    gc.chain.push_back(std::move(next));
  }
  return gc;
}

}  // namespace detail

/// Canonical choice s = first, s_1 = second unit vector outside gamma_2 (echelon order);
/// falls back to s = u_a + t*u_b over small t when the canonical chain degenerates.
template <class S>
GeneratorChain<S> generator_chain(const LieAlgebra<S>& L) {
  if (!is_maximal_class(L))
    throw Error(Errc::not_maximal_class, "generator chain needs a maximal-class algebra");
  const auto series = lower_central_series(L);
  const auto complement = series.term(2).complement_indices();  // two vectors for maximal class
  const Vector<S> u0 = L.unit(complement[0]);
  const Vector<S> u1 = L.unit(complement[1]);

  std::vector<std::pair<Vector<S>, Vector<S>>> candidates{{u0, u1}, {u1, u0}};
  for (const auto& t : detail::small_scalars(L.field(), 33)) {
    if (is_zero(t)) continue;
    candidates.emplace_back(Vector<S>(u0 + t * u1), u1);
    candidates.emplace_back(Vector<S>(u1 + t * u0), u0);
  }
  for (const auto& [s, s1] : candidates)
    if (auto gc = detail::try_chain(L, series, s, s1)) return *gc;
  throw Error(Errc::generator_search_failed,
              "no generator pair yields s_i in gamma_i \\ gamma_{i+1} for all 2 <= i <= c");
}

template <class S>
std::vector<Vector<S>> PsiEvaluator<S>::generator_pair() const {
  if (L_.dim() >= 3 && is_maximal_class(L_)) {
    const auto gc = generator_chain(L_);
    return {gc.s, gc.s1()};
  }
  std::vector<Vector<S>> out;
  for (std::size_t t = 0; t < complement_.size() && t < 2; ++t) out.push_back(L_.unit(complement_[t]));
  return out;
}

/// First tuple over {s, s_1}^{i+1} (lexicographic, s < s_1) with Psi_i != 0, for odd
/// 3 <= i <= c. Exhaustion is returned with a diagnostic, never silently.
template <class S>
WitnessResult<S> odd_witness_search(const LieAlgebra<S>& L, Index i) {
  if (L.field().characteristic() == 2)
    throw Error(Errc::char_two_field, "odd witness search needs characteristic != 2");
  if (i < 3 || i % 2 == 0)
    throw Error(Errc::invalid_argument, "odd witness search needs odd i >= 3, got " + std::to_string(i));
  const auto gc = generator_chain(L);
  const PsiEvaluator<S> evaluator(L);
  if (i > evaluator.nilpotency_class())
    throw Error(Errc::index_out_of_range, "i = " + std::to_string(i) + " exceeds the class " +
                                              std::to_string(evaluator.nilpotency_class()));
  const auto schedule = term_schedule(i);
  const std::uint64_t total = std::uint64_t{1} << (i + 1);
  WitnessResult<S> out;
  std::vector<Vector<S>> xs(static_cast<std::size_t>(i + 1));
  std::vector<int> pattern(static_cast<std::size_t>(i + 1));
  for (std::uint64_t code = 0; code < total; ++code) {
    for (Index slot = 0; slot <= i; ++slot) {
      const int bit = static_cast<int>((code >> (i - slot)) & 1u);
      pattern[static_cast<std::size_t>(slot)] = bit;
      xs[static_cast<std::size_t>(slot)] = bit ? gc.s1() : gc.s;
    }
    ++out.tuples_examined;
    auto value = evaluator.evaluate(i, xs, schedule);
    if (!value.is_zero()) {
      out.found = true;
      out.pattern = pattern;
      out.value = std::move(value);
      return out;
    }
  }
  out.diagnostic = "theorem contradiction: Psi_" + std::to_string(i) +
                   " vanishes on all of {s, s1}^" + std::to_string(i + 1) +
                   " although the maximal-class bound argument requires a nonzero value";
  return out;
}

}  // namespace lieschur
