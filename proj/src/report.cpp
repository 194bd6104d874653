#include "lieschur/report.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

namespace lieschur {

namespace {

Json check_json(const BoundCheck& b) {
  Json j;
  j["value"] = b.value ? Json(*b.value) : Json(nullptr);
  j["verdict"] = verdict_name(b.verdict);
  return j;
}

BoundCheck check_from(const Json& j) {
  BoundCheck b;
  if (!j.at("value").is_null()) b.value = j.at("value").get<Index>();
  b.verdict = parse_verdict(j.at("verdict").get<std::string>());
  return b;
}

bool is_judged(Verdict v) { return v == Verdict::holds || v == Verdict::attained || v == Verdict::violated; }

void rejudge_check(BoundCheck& b, Index actual, std::optional<Index> bound) {
  if (!is_judged(b.verdict)) return;
  b.value = bound;
  b.verdict = bound ? judge(actual, *bound) : Verdict::not_applicable;
}

template <class T>
std::optional<Index> guarded(T&& formula) {
  try {
    return formula();
  } catch (const Error&) {
    return std::nullopt;
  }
}

void rejudge_bounds(BoundReport& r) {
  const Index d = r.dim_multiplier;
  rejudge_check(r.moneyhun, d, moneyhun_bound(r.n));
  rejudge_check(r.derived_subalgebra, d, guarded([&] { return derived_subalgebra_bound(r.n, r.dim_derived); }));
  rejudge_check(r.n_minus_2, d, guarded([&] { return prior_maximal_class_bound(r.n); }));
  rejudge_check(r.maximal_class, d, guarded([&] { return maximal_class_bound(r.n); }));
  if (r.pinching && r.pinching->evaluated) {
    auto& p = *r.pinching;
    p.rhs = (r.n - 1) - d;
    p.sum = 0;
    for (const auto& image : p.images) p.sum += image.dim;
    p.holds = p.sum <= p.rhs;
  }
  if (r.odd_reduction) {
    auto& o = *r.odd_reduction;
    o.dim_multiplier = d;
    o.chained_bound = (o.n - 1) / 2 + 1;
    o.step_holds = o.dim_multiplier <= o.quotient_multiplier + 1;
    o.quotient_holds = o.quotient_multiplier <= (o.n - 1) / 2;
    o.holds = o.center_dim == 1 && o.step_holds && o.quotient_holds && o.dim_multiplier <= o.chained_bound;
  }
}

void rejudge_central(CentralQuotientRecord& r) {
  r.ideal_multiplier = static_cast<Index>(binomial(r.ideal_dim, 2));
  r.lhs = r.dim_multiplier + r.derived_cap_ideal;
  r.rhs = r.quotient_multiplier + r.ideal_multiplier + r.quotient_abelianization * r.ideal_dim;
  r.holds = r.lhs <= r.rhs;
}

Index row_bound(const std::string& name, Index n) {
  if (name == "maximal-class") return maximal_class_bound(n);
  if (name == "moneyhun") return moneyhun_bound(n);
  throw Error(Errc::syntax_error, "unknown bound name '" + name + "' in report table");
}

void rejudge_row(FamilyRow& row) {
  row.bound = row_bound(row.bound_name, row.n);
  row.gap = row.bound - row.max_dim_multiplier;
  row.verdict = judge(row.max_dim_multiplier, row.bound);
}

std::string join(const std::vector<Index>& v) {
  std::string out;
  for (std::size_t t = 0; t < v.size(); ++t) out += (t ? " " : "") + std::to_string(v[t]);
  return out;
}

std::string show(const std::optional<Index>& v) { return v ? std::to_string(*v) : "-"; }

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

void human_bounds(std::ostringstream& out, const AlgebraReport& a) {
  const auto& r = a.bounds;
  out << std::left;
  out << std::setw(16) << "algebra" << r.algebra_id << "\n";
  out << std::setw(16) << "field" << r.field << "\n";
  out << std::setw(16) << "dim" << r.n << "\n";
  out << std::setw(16) << "class" << r.nilpotency_class << "\n";
  out << std::setw(16) << "series dims" << join(r.series_dims) << "\n";
  out << std::setw(16) << "maximal class" << (r.is_maximal_class ? "yes" : "no") << "\n";
  out << std::setw(16) << "dim M(L)" << r.dim_multiplier << "\n\n";
  out << std::setw(20) << "bound" << std::setw(8) << "value" << "verdict\n";
  const std::pair<const char*, const BoundCheck*> rows[] = {{"moneyhun", &r.moneyhun},
                                                            {"derived-subalgebra", &r.derived_subalgebra},
                                                            {"n-2", &r.n_minus_2},
                                                            {"maximal-class", &r.maximal_class}};
  for (const auto& [name, b] : rows)
    out << std::setw(20) << name << std::setw(8) << show(b->value) << verdict_name(b->verdict) << "\n";
  if (r.pinching) {
    const auto& p = *r.pinching;
    out << "\npsi images     ";
    if (!p.evaluated) {
      out << "not evaluated: " << p.note << "\n";
    } else {
      for (const auto& image : p.images) out << " i=" << image.i << ":" << image.dim;
      out << "  sum " << p.sum << " <= " << p.rhs << (p.holds ? " holds" : " violated") << "\n";
    }
  }
  if (r.odd_reduction) {
    const auto& o = *r.odd_reduction;
    out << "odd reduction   dim M(L/Z) = " << o.quotient_multiplier << ", " << o.dim_multiplier
        << " <= " << o.quotient_multiplier << " + 1 <= " << o.chained_bound
        << (o.holds ? " holds" : " violated") << "\n";
  }
  if (!a.central_quotients.empty()) {
    out << "\n" << std::setw(8) << "dim K" << std::setw(6) << "lhs" << std::setw(6) << "rhs" << "verdict\n";
    for (const auto& c : a.central_quotients)
      out << std::setw(8) << c.ideal_dim << std::setw(6) << c.lhs << std::setw(6) << c.rhs
          << (c.holds ? (c.lhs == c.rhs ? "attained" : "holds") : "violated") << "\n";
  }
}

}  // namespace

bool ReportDocument::any_violated() const {
  for (const auto& a : algebras) {
    if (a.bounds.any_violated()) return true;
    for (const auto& c : a.central_quotients)
      if (!c.holds) return true;
  }
  return std::any_of(table.begin(), table.end(), [](const FamilyRow& r) { return r.verdict == Verdict::violated; });
}

std::vector<FamilyRow> family_table(const std::vector<AlgebraReport>& algebras) {
  std::map<Index, FamilyRow> rows;
  for (const auto& a : algebras) {
    const auto& r = a.bounds;
    auto [it, fresh] = rows.try_emplace(r.n);
    auto& row = it->second;
    row.n = r.n;
    ++row.algebras;
    row.max_dim_multiplier = fresh ? r.dim_multiplier : std::max(row.max_dim_multiplier, r.dim_multiplier);
    const bool sharp = r.is_maximal_class && r.maximal_class.verdict != Verdict::out_of_scope;
    if (fresh || row.bound_name == "maximal-class") row.bound_name = sharp ? "maximal-class" : "moneyhun";
  }
  std::vector<FamilyRow> out;
  for (auto& [n, row] : rows) {
    rejudge_row(row);
    out.push_back(row);
  }
  return out;
}

void rejudge(ReportDocument& doc) {
  for (auto& a : doc.algebras) {
    rejudge_bounds(a.bounds);
    for (auto& c : a.central_quotients) rejudge_central(c);
  }
  for (auto& row : doc.table) rejudge_row(row);
}

void to_json(Json& j, const BoundReport& r) {
  j = Json::object();
  j["algebra"] = r.algebra_id;
  j["field"] = r.field;
  j["n"] = r.n;
  j["dim_derived"] = r.dim_derived;
  j["nilpotency_class"] = r.nilpotency_class;
  j["maximal_class"] = r.is_maximal_class;
  j["series_dims"] = r.series_dims;
  j["dim_multiplier"] = r.dim_multiplier;
  j["bounds"] = {{"moneyhun", check_json(r.moneyhun)},
                 {"derived_subalgebra", check_json(r.derived_subalgebra)},
                 {"n_minus_2", check_json(r.n_minus_2)},
                 {"maximal_class", check_json(r.maximal_class)}};
  if (r.pinching) {
    const auto& p = *r.pinching;
    Json images = Json::array();
    for (const auto& image : p.images) images.push_back({{"i", image.i}, {"dim", image.dim}, {"exact", image.exact}});
    j["pinching"] = {{"evaluated", p.evaluated}, {"images", images}, {"sum", p.sum},
                     {"rhs", p.rhs},             {"holds", p.holds},  {"note", p.note}};
  } else {
    j["pinching"] = nullptr;
  }
  if (r.odd_reduction) {
    const auto& o = *r.odd_reduction;
    j["odd_reduction"] = {{"n", o.n},
                          {"center_dim", o.center_dim},
                          {"quotient_dim", o.quotient_dim},
                          {"quotient_maximal_class", o.quotient_is_maximal_class},
                          {"dim_multiplier", o.dim_multiplier},
                          {"quotient_multiplier", o.quotient_multiplier},
                          {"chained_bound", o.chained_bound},
                          {"step_holds", o.step_holds},
                          {"quotient_holds", o.quotient_holds},
                          {"holds", o.holds}};
  } else {
    j["odd_reduction"] = nullptr;
  }
}

void from_json(const Json& j, BoundReport& r) {
  r.algebra_id = j.at("algebra").get<std::string>();
  r.field = j.at("field").get<std::string>();
  r.n = j.at("n").get<Index>();
  r.dim_derived = j.at("dim_derived").get<Index>();
  r.nilpotency_class = j.at("nilpotency_class").get<Index>();
  r.is_maximal_class = j.at("maximal_class").get<bool>();
  r.series_dims = j.at("series_dims").get<std::vector<Index>>();
  r.dim_multiplier = j.at("dim_multiplier").get<Index>();
  const auto& b = j.at("bounds");
  r.moneyhun = check_from(b.at("moneyhun"));
  r.derived_subalgebra = check_from(b.at("derived_subalgebra"));
  r.n_minus_2 = check_from(b.at("n_minus_2"));
  r.maximal_class = check_from(b.at("maximal_class"));
  r.pinching.reset();
  if (const auto& p = j.at("pinching"); !p.is_null()) {
    PinchingCheck c;
    c.evaluated = p.at("evaluated").get<bool>();
    for (const auto& image : p.at("images"))
      c.images.push_back({image.at("i").get<Index>(), image.at("dim").get<Index>(), image.at("exact").get<bool>()});
    c.sum = p.at("sum").get<Index>();
    c.rhs = p.at("rhs").get<Index>();
    c.holds = p.at("holds").get<bool>();
    c.note = p.at("note").get<std::string>();
    r.pinching = std::move(c);
  }
  r.odd_reduction.reset();
  if (const auto& o = j.at("odd_reduction"); !o.is_null()) {
    OddReductionRecord c;
    c.n = o.at("n").get<Index>();
    c.center_dim = o.at("center_dim").get<Index>();
    c.quotient_dim = o.at("quotient_dim").get<Index>();
    c.quotient_is_maximal_class = o.at("quotient_maximal_class").get<bool>();
    c.dim_multiplier = o.at("dim_multiplier").get<Index>();
    c.quotient_multiplier = o.at("quotient_multiplier").get<Index>();
    c.chained_bound = o.at("chained_bound").get<Index>();
    c.step_holds = o.at("step_holds").get<bool>();
    c.quotient_holds = o.at("quotient_holds").get<bool>();
    c.holds = o.at("holds").get<bool>();
    r.odd_reduction = c;
  }
}

void to_json(Json& j, const CentralQuotientRecord& r) {
  j = {{"ideal_dim", r.ideal_dim},
       {"dim_multiplier", r.dim_multiplier},
       {"derived_cap_ideal", r.derived_cap_ideal},
       {"quotient_multiplier", r.quotient_multiplier},
       {"ideal_multiplier", r.ideal_multiplier},
       {"quotient_abelianization", r.quotient_abelianization},
       {"lhs", r.lhs},
       {"rhs", r.rhs},
       {"holds", r.holds}};
}

void from_json(const Json& j, CentralQuotientRecord& r) {
  r.ideal_dim = j.at("ideal_dim").get<Index>();
  r.dim_multiplier = j.at("dim_multiplier").get<Index>();
  r.derived_cap_ideal = j.at("derived_cap_ideal").get<Index>();
  r.quotient_multiplier = j.at("quotient_multiplier").get<Index>();
  r.ideal_multiplier = j.at("ideal_multiplier").get<Index>();
  r.quotient_abelianization = j.at("quotient_abelianization").get<Index>();
  r.lhs = j.at("lhs").get<Index>();
  r.rhs = j.at("rhs").get<Index>();
  r.holds = j.at("holds").get<bool>();
}

void to_json(Json& j, const FamilyRow& r) {
  j = {{"n", r.n},       {"algebras", r.algebras}, {"max_dim_multiplier", r.max_dim_multiplier},
       {"bound_name", r.bound_name}, {"bound", r.bound}, {"gap", r.gap},
       {"verdict", verdict_name(r.verdict)}};
}

void from_json(const Json& j, FamilyRow& r) {
  r.n = j.at("n").get<Index>();
  r.algebras = j.at("algebras").get<Index>();
  r.max_dim_multiplier = j.at("max_dim_multiplier").get<Index>();
  r.bound_name = j.at("bound_name").get<std::string>();
  r.bound = j.at("bound").get<Index>();
  r.gap = j.at("gap").get<Index>();
  r.verdict = parse_verdict(j.at("verdict").get<std::string>());
}

void to_json(Json& j, const ReportDocument& doc) {
  j = Json::object();
  j["report_version"] = doc.version;
  j["field"] = doc.field;
  j["family"] = doc.family.empty() ? Json(nullptr) : Json(doc.family);
  Json algebras = Json::array();
  for (const auto& a : doc.algebras) {
    Json section = a.bounds;
    section["central_quotients"] = a.central_quotients;
    algebras.push_back(std::move(section));
  }
  j["algebras"] = std::move(algebras);
  j["table"] = doc.table;
}

void from_json(const Json& j, ReportDocument& doc) {
  doc.version = j.at("report_version").get<int>();
  if (doc.version != report_format_version)
    throw Error(Errc::syntax_error, "unsupported report version " + std::to_string(doc.version));
  doc.field = j.at("field").get<std::string>();
  doc.family = j.at("family").is_null() ? std::string() : j.at("family").get<std::string>();
  doc.algebras.clear();
  for (const auto& section : j.at("algebras"))
    doc.algebras.push_back({section.get<BoundReport>(),
                            section.at("central_quotients").get<std::vector<CentralQuotientRecord>>()});
  doc.table = j.at("table").get<std::vector<FamilyRow>>();
}

std::string to_machine(const ReportDocument& doc) { return Json(doc).dump(2) + "\n"; }

ReportDocument parse_report(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(line_of(text, e.byte == 0 ? 0 : e.byte - 1), "malformed report JSON");
  }
  try {
    return j.get<ReportDocument>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::syntax_error, std::string("report structure: ") + e.what());
  }
}

std::string to_human(const ReportDocument& doc) {
  std::ostringstream out;
  out << std::left;
  if (doc.family.empty()) {
    for (std::size_t t = 0; t < doc.algebras.size(); ++t) {
      if (t) out << "\n";
      human_bounds(out, doc.algebras[t]);
    }
    return out.str();
  }
  out << "family " << doc.family << " over " << doc.field << "\n";
  out << std::setw(5) << "n" << std::setw(8) << "dim M" << std::setw(7) << "bound" << std::setw(5) << "gap"
      << std::setw(15) << "bound name" << "verdict\n";
  for (const auto& r : doc.table)
    out << std::setw(5) << r.n << std::setw(8) << r.max_dim_multiplier << std::setw(7) << r.bound << std::setw(5)
        << r.gap << std::setw(15) << r.bound_name << verdict_name(r.verdict) << "\n";
  return out.str();
}

}  // namespace lieschur
