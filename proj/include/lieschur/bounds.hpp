#pragma once

// Upper bounds on dim M(L) and their verdicts against the homology computation.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lieschur/homology.hpp"
#include "lieschur/psi.hpp"

namespace lieschur {

/// n(n-1)/2, any nilpotent algebra of dimension n.
Index moneyhun_bound(Index n);
/// (n+m-2)(n-m-1)/2 + 1 for non-abelian nilpotent L with dim L^2 = m, 1 <= m <= n-1.
Index derived_subalgebra_bound(Index n, Index m);
/// n/2 for even n, ceil((n+1)/2) for odd n; maximal class, characteristic != 2, n >= 3.
Index maximal_class_bound(Index n);
/// n-2 for maximal class; applied for n >= 4 only (the 3-dim Heisenberg algebra has dim M = 2).
Index prior_maximal_class_bound(Index n);

enum class Verdict { holds, attained, violated, out_of_scope, not_applicable };

std::string_view verdict_name(Verdict v) noexcept;
Verdict parse_verdict(std::string_view name);

/// holds / attained / violated for an actual value against a bound.
inline Verdict judge(Index actual, Index bound) {
  if (actual > bound) return Verdict::violated;
  return actual == bound ? Verdict::attained : Verdict::holds;
}

struct BoundCheck {
  std::optional<Index> value;
  Verdict verdict = Verdict::not_applicable;
};

struct PsiImageRecord {
  Index i = 0;
  Index dim = 0;
  bool exact = true;
};

/// sum_i dim Im Psi_i <= (n-1) - dim M(L) for maximal class.
struct PinchingCheck {
  bool evaluated = false;
  std::vector<PsiImageRecord> images;
  Index sum = 0;
  Index rhs = 0;
  bool holds = true;
  std::string note;
};

/// dim M(L) <= dim M(L/Z) + 1 <= (n-1)/2 + 1 for odd n.
struct OddReductionRecord {
  Index n = 0;
  Index center_dim = 0;
  Index quotient_dim = 0;
  bool quotient_is_maximal_class = false;
  Index dim_multiplier = 0;
  Index quotient_multiplier = 0;
  Index chained_bound = 0;  // (n-1)/2 + 1
  bool step_holds = false;  // dim M(L) <= dim M(L/Z) + 1
  bool quotient_holds = false;  // dim M(L/Z) <= (n-1)/2
  bool holds = false;
};

struct BoundReport {
  std::string algebra_id;
  std::string field;
  Index n = 0;
  Index dim_derived = 0;
  Index nilpotency_class = 0;
  bool is_maximal_class = false;
  std::vector<Index> series_dims;
  Index dim_multiplier = 0;
  BoundCheck moneyhun;
  BoundCheck derived_subalgebra;
  BoundCheck n_minus_2;
  BoundCheck maximal_class;
  std::optional<PinchingCheck> pinching;
  std::optional<OddReductionRecord> odd_reduction;

  bool any_violated() const {
    for (const auto* b : {&moneyhun, &derived_subalgebra, &n_minus_2, &maximal_class})
      if (b->verdict == Verdict::violated) return true;
    if (pinching && pinching->evaluated && !pinching->holds) return true;
    if (odd_reduction && !odd_reduction->holds) return true;
    return false;
  }
};

/// Inequality dim M(L) + dim(L^2 cap K) <= dim M(L/K) + dim M(K) + dim (L/K)^ab * dim K
/// for a central ideal K; dim M(K) = C(dim K, 2) since K is abelian.
struct CentralQuotientRecord {
  Index ideal_dim = 0;
  Index dim_multiplier = 0;
  Index derived_cap_ideal = 0;
  Index quotient_multiplier = 0;
  Index ideal_multiplier = 0;
  Index quotient_abelianization = 0;
  Index lhs = 0;
  Index rhs = 0;
  bool holds = false;
};

template <class S>
CentralQuotientRecord verify_central_quotient_bound(const LieAlgebra<S>& L, const Subspace<S>& K) {
  require_nilpotent(L, "central quotient bound");
  if (!center(L).contains(K))
    throw Error(Errc::not_central_ideal, "subspace of dimension " + std::to_string(K.dim()) +
                                             " is not contained in the center");
  const auto q = quotient(L, K);
  const auto derived = derived_subalgebra(L);
  CentralQuotientRecord r;
  r.ideal_dim = K.dim();
  r.dim_multiplier = multiplier_dim(L);
  r.derived_cap_ideal = intersection_dim(derived, K);
  r.quotient_multiplier = multiplier_dim(q.quotient);
  r.ideal_multiplier = static_cast<Index>(binomial(K.dim(), 2));
  r.quotient_abelianization = q.quotient.dim() - derived_subalgebra(q.quotient).dim();
  r.lhs = r.dim_multiplier + r.derived_cap_ideal;
  r.rhs = r.quotient_multiplier + r.ideal_multiplier + r.quotient_abelianization * K.dim();
  r.holds = r.lhs <= r.rhs;
  return r;
}

template <class S>
OddReductionRecord verify_odd_case_reduction(const LieAlgebra<S>& L) {
  const Index n = L.dim();
  if (n % 2 == 0) throw Error(Errc::invalid_argument, "odd-case reduction needs odd n, got " + std::to_string(n));
  if (!is_maximal_class(L)) throw Error(Errc::not_maximal_class, "odd-case reduction needs maximal class");
  const auto Z = center(L);
  const auto q = quotient(L, Z);
  OddReductionRecord r;
  r.n = n;
  r.center_dim = Z.dim();
  r.quotient_dim = q.quotient.dim();
  r.quotient_is_maximal_class = r.quotient_dim >= 3 && is_maximal_class(q.quotient).value;
  r.dim_multiplier = multiplier_dim(L);
  r.quotient_multiplier = multiplier_dim(q.quotient);
  r.chained_bound = (n - 1) / 2 + 1;
  r.step_holds = r.dim_multiplier <= r.quotient_multiplier + 1;
  r.quotient_holds = r.quotient_multiplier <= (n - 1) / 2;
  r.holds = r.center_dim == 1 && r.step_holds && r.quotient_holds && r.dim_multiplier <= r.chained_bound;
  return r;
}

template <class S>
PinchingCheck pinching_check(const PsiEvaluator<S>& evaluator, Index dim_multiplier) {
  PinchingCheck p;
  const Index n = evaluator.algebra().dim();
  p.rhs = (n - 1) - dim_multiplier;
  try {
    for (Index i = 2; i <= evaluator.nilpotency_class(); ++i) {
      const auto image = evaluator.image_dim(i, PsiMode::exact);
      p.images.push_back({i, image.dim, image.exact});
      p.sum += image.dim;
    }
  } catch (const Error& e) {
    if (!e.is_resource_error()) throw;
    p.images.clear();
    p.sum = 0;
    p.note = e.what();
    return p;
  }
  p.evaluated = true;
  p.holds = p.sum <= p.rhs;
  return p;
}

struct ReportOptions {
  bool pinching = true;
  bool odd_reduction = true;
};

/// All applicable bounds for a nilpotent algebra. Never throws for a valid nilpotent
/// input: inapplicable bounds are marked, and characteristic 2 puts the maximal-class
/// bound out of scope.
template <class S>
BoundReport bound_report(const LieAlgebra<S>& L, std::string id, ReportOptions options = {}) {
  const auto series = require_nilpotent(L, "bound report");
  BoundReport r;
  r.algebra_id = std::move(id);
  r.field = L.field().name();
  r.n = L.dim();
  r.series_dims = series.dims();
  r.nilpotency_class = series.nilpotency_class();
  r.dim_derived = series.terms.size() >= 2 ? series.term(2).dim() : 0;
  r.is_maximal_class = r.n >= 3 && r.nilpotency_class == r.n - 1;
  r.dim_multiplier = multiplier_dim(L);

  const Index d = r.dim_multiplier;
  r.moneyhun = {moneyhun_bound(r.n), judge(d, moneyhun_bound(r.n))};
  if (r.dim_derived >= 1) {
    const Index b = derived_subalgebra_bound(r.n, r.dim_derived);
    r.derived_subalgebra = {b, judge(d, b)};
  }
  if (r.is_maximal_class && r.n >= 4) {
    const Index b = prior_maximal_class_bound(r.n);
    r.n_minus_2 = {b, judge(d, b)};
  }
  if (r.is_maximal_class) {
    const Index b = maximal_class_bound(r.n);
    if (L.field().characteristic() == 2) {
      r.maximal_class = {b, Verdict::out_of_scope};
    } else {
      r.maximal_class = {b, judge(d, b)};
      if (options.pinching) r.pinching = pinching_check(PsiEvaluator<S>(L), d);
      if (options.odd_reduction && r.n % 2 == 1 && r.n >= 5) r.odd_reduction = verify_odd_case_reduction(L);
    }
  }
  return r;
}

/// Strict entry point for the maximal-class bound: rejects characteristic 2. A
/// non-maximal-class input yields the general bounds only.
template <class S>
BoundReport verify_maximal_class_bounds(const LieAlgebra<S>& L, std::string id, ReportOptions options = {}) {
  if (L.field().characteristic() == 2)
    throw Error(Errc::char_two_field, "the maximal-class bound requires characteristic != 2");
  return bound_report(L, std::move(id), options);
}

}  // namespace lieschur
