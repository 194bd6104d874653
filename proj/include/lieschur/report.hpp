#pragma once

// Report documents: bound reports, central-quotient records and per-n aggregate tables,
// with a lossless machine format (JSON) and a derived human-readable table.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lieschur/bounds.hpp"

namespace lieschur {

using Json = nlohmann::ordered_json;

inline constexpr int report_format_version = 1;

struct AlgebraReport {
  BoundReport bounds;
  std::vector<CentralQuotientRecord> central_quotients;
};

/// One line of the per-n aggregate table: the largest observed dim M(L) among the
/// algebras of dimension n against the sharpest applicable bound.
struct FamilyRow {
  Index n = 0;
  Index algebras = 0;
  Index max_dim_multiplier = 0;
  std::string bound_name;  // "maximal-class" or "moneyhun"
  Index bound = 0;
  Index gap = 0;  // bound - max_dim_multiplier
  Verdict verdict = Verdict::holds;
};

struct ReportDocument {
  int version = report_format_version;
  std::string field;
  std::string family;  // empty for a single-algebra document
  std::vector<AlgebraReport> algebras;
  std::vector<FamilyRow> table;

  bool any_violated() const;
};

/// Groups the algebra sections by n, in increasing n.
std::vector<FamilyRow> family_table(const std::vector<AlgebraReport>& algebras);

/// Recomputes every bound value, verdict and derived sum from the stored dimensions, so a
/// document edited by hand is judged on its numbers rather than on its stored verdicts.
void rejudge(ReportDocument& doc);

void to_json(Json& j, const BoundReport& r);
void from_json(const Json& j, BoundReport& r);
void to_json(Json& j, const CentralQuotientRecord& r);
void from_json(const Json& j, CentralQuotientRecord& r);
void to_json(Json& j, const FamilyRow& r);
void from_json(const Json& j, FamilyRow& r);
void to_json(Json& j, const ReportDocument& doc);
void from_json(const Json& j, ReportDocument& doc);

/// Pretty-printed JSON with a trailing newline; byte-identical for equal documents.
std::string to_machine(const ReportDocument& doc);
/// Throws SyntaxError for malformed JSON or a missing or mistyped field.
ReportDocument parse_report(std::string_view text);

std::string to_human(const ReportDocument& doc);

}  // namespace lieschur
