#include "lieschur/algebra_file.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

namespace lieschur {

namespace {

struct RawBracket {
  std::size_t line;
  Index i, j, k;
  std::string coeff;
};

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

Index parse_index(std::size_t line, const std::string& token, const char* what) {
  Index v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw SyntaxError(line, std::string(what) + " must be an integer, got '" + token + "'");
  return v;
}

template <class F>
LieAlgebra<typename F::Scalar> assemble(const F& field, Index n, const std::vector<RawBracket>& raw,
                                        std::vector<std::string> labels) {
  std::vector<StructureConstant<typename F::Scalar>> constants;
  for (const auto& b : raw) {
    typename F::Scalar c;
    try {
      c = field.parse(b.coeff);
    } catch (const Error& e) {
      throw SyntaxError(b.line, e.detail(), e.code());
    }
    constants.push_back({b.i - 1, b.j - 1, b.k - 1, c});
  }
  return LieAlgebra<typename F::Scalar>::build(field, n, constants, std::move(labels));
}

}  // namespace

AlgebraDocument parse_algebra(std::string_view text, ParseOptions options) {
  std::string name;
  std::optional<FieldSpec> field;
  std::optional<Index> dim;
  std::vector<std::string> labels;
  std::vector<RawBracket> raw;
  std::map<std::tuple<Index, Index, Index>, std::size_t> seen;
  bool header = false;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto& key = tokens[0];

    if (!header) {
      if (key != "lie-algebra" || tokens.size() != 2)
        throw SyntaxError(line_no, "expected header 'lie-algebra " + std::to_string(algebra_file_version) + "'");
      if (tokens[1] != std::to_string(algebra_file_version))
        throw SyntaxError(line_no, "unsupported format version '" + tokens[1] + "'");
      header = true;
    } else if (key == "name") {
      if (tokens.size() < 2) throw SyntaxError(line_no, "name needs a value");
      if (!name.empty()) throw SyntaxError(line_no, "name given twice");
      const auto first = line.find(tokens[1], line.find(key) + key.size());
      name = std::string(line.substr(first));
      while (!name.empty() && (name.back() == ' ' || name.back() == '\t' || name.back() == '\r')) name.pop_back();
    } else if (key == "field") {
      if (tokens.size() != 2) throw SyntaxError(line_no, "field takes one value, Q or GF(p)");
      if (field) throw SyntaxError(line_no, "field given twice");
      try {
        field = FieldSpec::parse(tokens[1], options.allow_char_two);
      } catch (const Error& e) {
        throw SyntaxError(line_no, e.detail(), e.code());
      }
    } else if (key == "dim") {
      if (tokens.size() != 2) throw SyntaxError(line_no, "dim takes one value");
      if (dim) throw SyntaxError(line_no, "dim given twice");
      dim = parse_index(line_no, tokens[1], "dim");
      if (*dim < 1) throw SyntaxError(line_no, "dim must be at least 1");
    } else if (key == "labels") {
      if (!dim) throw SyntaxError(line_no, "labels before dim");
      if (!labels.empty()) throw SyntaxError(line_no, "labels given twice");
      labels.assign(tokens.begin() + 1, tokens.end());
      if (static_cast<Index>(labels.size()) != *dim)
        throw SyntaxError(line_no, "expected " + std::to_string(*dim) + " labels, got " + std::to_string(labels.size()));
      if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size())
        throw SyntaxError(line_no, "labels must be distinct");
    } else if (key == "bracket") {
      if (!field || !dim) throw SyntaxError(line_no, "bracket before field and dim");
      if (tokens.size() != 5) throw SyntaxError(line_no, "bracket takes i j k coefficient");
      const Index i = parse_index(line_no, tokens[1], "i");
      const Index j = parse_index(line_no, tokens[2], "j");
      const Index k = parse_index(line_no, tokens[3], "k");
      if (i < 1 || j > *dim || k < 1 || k > *dim || i >= j)
        throw SyntaxError(line_no, "need 1 <= i < j <= " + std::to_string(*dim) + " and 1 <= k <= " +
                                       std::to_string(*dim) + ", got " + tokens[1] + " " + tokens[2] + " " +
                                       tokens[3],
                          Errc::index_out_of_range);
      const auto [it, fresh] = seen.emplace(std::tuple{i, j, k}, line_no);
      if (!fresh)
        throw SyntaxError(line_no, "bracket [" + tokens[1] + "," + tokens[2] + "] -> " + tokens[3] +
                                       " already given on line " + std::to_string(it->second),
                          Errc::duplicate_bracket);
      raw.push_back({line_no, i, j, k, tokens[4]});
    } else {
      throw SyntaxError(line_no, "unknown keyword '" + key + "'");
    }
    if (end == text.size()) break;
  }

  line_no = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + (!text.empty() && text.back() != '\n'));
  if (!header) throw SyntaxError(line_no, "empty file, expected header 'lie-algebra 1'");
  if (!field) throw SyntaxError(line_no, "missing field line");
  if (!dim) throw SyntaxError(line_no, "missing dim line");

  if (field->is_rational()) return {name, assemble(RationalField{}, *dim, raw, std::move(labels))};
  const auto prime = PrimeField::make(field->characteristic, options.allow_char_two);
  return {name, assemble(prime, *dim, raw, std::move(labels))};
}

std::string serialize_algebra(const AnyAlgebra& L, std::string_view name) {
  return std::visit([&](const auto& algebra) { return serialize_algebra(algebra, name); }, L);
}

}  // namespace lieschur
