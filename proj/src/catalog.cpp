#include "lieschur/catalog.hpp"

#include <algorithm>
#include <charconv>

namespace lieschur {

std::vector<std::string> catalog_names() {
  return {"L(3,4,1,4)", "L(7,5,1,7)", "heisenberg-3", "filiform-6", "filiform-7", "filiform-8",
          "abelian-1",  "abelian-2",  "abelian-3",    "abelian-4",  "abelian-5"};
}

namespace {

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t above = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diagonal + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diagonal = above;
    }
  }
  return row[b.size()];
}

}  // namespace

std::string closest_catalog_name(std::string_view name) {
  std::string best;
  std::size_t best_distance = static_cast<std::size_t>(-1);
  for (const auto& candidate : catalog_names()) {
    const auto d = edit_distance(name, candidate);
    if (d < best_distance) {
      best_distance = d;
      best = candidate;
    }
  }
  return best;
}

namespace detail {

std::optional<ParsedName> parse_family_name(std::string_view name) {
  for (auto [prefix, family, lowest] : {std::tuple{std::string_view("filiform-"), ParsedName::filiform, 3},
                                        std::tuple{std::string_view("abelian-"), ParsedName::abelian, 1}}) {
    if (!name.starts_with(prefix)) continue;
    const auto digits = name.substr(prefix.size());
    Index n = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) return std::nullopt;
    if (n < lowest || n > 64) return std::nullopt;
    return ParsedName{family, n};
  }
  return std::nullopt;
}

}  // namespace detail

}  // namespace lieschur
