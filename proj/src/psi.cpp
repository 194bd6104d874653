#include "lieschur/psi.hpp"

namespace lieschur {

namespace {

std::vector<Index> range(Index first, Index last) {  // [first, last], empty if last < first
  std::vector<Index> out;
  for (Index v = first; v <= last; ++v) out.push_back(v);
  return out;
}

}  // namespace

TermSchedule term_schedule(Index i) {
  if (i < 2) throw Error(Errc::word_too_short, "term schedule needs i >= 2");
  // 0-based: argument x_m sits at position m-1.
  TermSchedule s;
  s.push_back({range(0, i - 1), Orientation::left, {}, i, 1});
  s.push_back({{i}, Orientation::left, range(0, i - 2), i - 1, 1});
  for (Index k = 3; k <= i + 1; ++k)
    s.push_back({range(i + 2 - k, i), Orientation::right, range(0, i - k), i + 1 - k, 1});
  return s;
}

}  // namespace lieschur
