#include "lieschur/bounds.hpp"

namespace lieschur {

Index moneyhun_bound(Index n) {
  if (n < 0) throw Error(Errc::invalid_argument, "negative dimension");
  return n * (n - 1) / 2;
}

Index derived_subalgebra_bound(Index n, Index m) {
  if (m == 0) throw Error(Errc::abelian_input, "derived-subalgebra bound is stated for non-abelian L");
  if (m < 0 || m > n - 1)
    throw Error(Errc::invalid_argument, "need 1 <= m <= n-1, got n=" + std::to_string(n) +
                                            ", m=" + std::to_string(m));
  return (n + m - 2) * (n - m - 1) / 2 + 1;
}

Index maximal_class_bound(Index n) {
  if (n < 3) throw Error(Errc::dimension_too_small, "maximal class needs n >= 3, got " + std::to_string(n));
  return n % 2 == 0 ? n / 2 : (n + 1) / 2;  // n+1 is even, so the ceiling is exact
}

Index prior_maximal_class_bound(Index n) {
  if (n < 4) throw Error(Errc::dimension_too_small, "n-2 bound applied for n >= 4, got " + std::to_string(n));
  return n - 2;
}

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::attained: return "attained";
    case Verdict::violated: return "violated";
    case Verdict::out_of_scope: return "out-of-scope";
    case Verdict::not_applicable: return "n/a";
  }
  return "n/a";
}

Verdict parse_verdict(std::string_view name) {
  for (auto v : {Verdict::holds, Verdict::attained, Verdict::violated, Verdict::out_of_scope,
                 Verdict::not_applicable})
    if (verdict_name(v) == name) return v;
  throw Error(Errc::syntax_error, "unknown verdict '" + std::string(name) + "'");
}

}  // namespace lieschur
