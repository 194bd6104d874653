#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "lieschur/algebra_file.hpp"
#include "lieschur/catalog.hpp"
#include "lieschur/report.hpp"
#include "worker_pool.hpp"

namespace lieschur::cli {

namespace {

struct Options {
  std::string file;
  std::string name;
  std::string family;
  std::optional<Index> max_dim;
  std::string field;
  std::optional<Index> i;
  std::string mode = "exact";
  std::string out;
  std::string format = "human";
  bool unsafe_char_two = false;
};

/// Thrown for usage and input problems that are not library errors.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  int code = exit_ok;
  std::string text;
};

constexpr std::uint64_t lemma_seed = 20240101;
constexpr int lemma_samples = 1000;

bool machine(const Options& o) { return o.format == "machine"; }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

FieldSpec selected_field(const Options& o) {
  return o.field.empty() ? FieldSpec{} : FieldSpec::parse(o.field, o.unsafe_char_two);
}

template <class Fn>
auto with_field(const FieldSpec& spec, bool unsafe, Fn&& fn) {
  if (spec.is_rational()) return fn(RationalField{});
  return fn(PrimeField::make(spec.characteristic, unsafe));
}

std::string file_stem(const std::string& path) {
  const auto slash = path.find_last_of('/');
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  if (const auto dot = base.rfind('.'); dot != std::string::npos && dot > 0) base.resize(dot);
  return base;
}

/// Calls fn(algebra, id) for the single algebra named by --file or --name.
template <class Fn>
Outcome with_algebra(const Options& o, Fn&& fn) {
  if (o.file.empty() == o.name.empty()) throw InputError("give exactly one of --file or --name");
  if (!o.file.empty()) {
    auto doc = [&] {
      try {
        return parse_algebra(read_file(o.file), {o.unsafe_char_two});
      } catch (const Error& e) {
        throw Error(e.code(), o.file + ": " + e.detail());
      }
    }();
    const std::string field = std::visit([](const auto& L) { return L.field().name(); }, doc.algebra);
    if (!o.field.empty() && selected_field(o).name() != field)
      throw InputError("--field " + o.field + " conflicts with 'field " + field + "' in " + o.file);
    const std::string id = doc.name.empty() ? file_stem(o.file) : doc.name;
    return std::visit([&](const auto& L) { return fn(L, id); }, doc.algebra);
  }
  return with_field(selected_field(o), o.unsafe_char_two, [&](const auto& field) {
    const auto entry = catalog_get(field, o.name);
    return fn(entry.algebra, entry.name);
  });
}

std::vector<std::string> family_members(const Options& o) {
  if (!o.max_dim) throw InputError("--family needs --max-dim");
  const Index lo = o.family == "filiform" ? 3 : 1;
  if (*o.max_dim < lo)
    throw InputError("--max-dim must be at least " + std::to_string(lo) + " for family " + o.family);
  std::vector<std::string> names;
  for (Index n = lo; n <= *o.max_dim; ++n) names.push_back(o.family + "-" + std::to_string(n));
  return names;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<Index>& v) {
  std::string out;
  for (std::size_t t = 0; t < v.size(); ++t) out += (t ? " " : "") + std::to_string(v[t]);
  return out;
}

std::string rows(const std::vector<std::pair<std::string, std::string>>& kv) {
  std::ostringstream out;
  for (const auto& [k, v] : kv) out << std::left << std::setw(16) << k << v << "\n";
  return out.str();
}

Outcome cmd_check(const Options& o) {
  return with_algebra(o, [&](const auto& L, const std::string& id) {
    const auto series = lower_central_series(L);
    const bool maximal = L.dim() >= 3 && series.nilpotent && is_maximal_class(L).value;
    const auto z = center(L).dim();
    if (machine(o)) {
      Json j{{"command", "check"},
             {"algebra", id},
             {"field", L.field().name()},
             {"dim", L.dim()},
             {"jacobi", true},
             {"nilpotent", series.nilpotent},
             {"nilpotency_class", series.nilpotent ? Json(series.nilpotency_class()) : Json(nullptr)},
             {"series_dims", series.dims()},
             {"center_dim", z},
             {"maximal_class", maximal}};
      return Outcome{exit_ok, dump(j)};
    }
    return Outcome{exit_ok, rows({{"algebra", id},
                                  {"field", L.field().name()},
                                  {"dim", std::to_string(L.dim())},
                                  {"jacobi", "ok"},
                                  {"nilpotent", yes_no(series.nilpotent)},
                                  {"class", series.nilpotent ? std::to_string(series.nilpotency_class()) : "-"},
                                  {"series dims", join(series.dims())},
                                  {"center dim", std::to_string(z)},
                                  {"maximal class", yes_no(maximal)}})};
  });
}

Outcome cmd_series(const Options& o) {
  return with_algebra(o, [&](const auto& L, const std::string& id) {
    const auto series = lower_central_series(L);
    const auto z = center(L).dim();
    if (machine(o))
      return Outcome{exit_ok, dump(Json{{"command", "series"},
                                        {"algebra", id},
                                        {"series_dims", series.dims()},
                                        {"stabilizes_at_zero", series.nilpotent},
                                        {"center_dim", z}})};
    return Outcome{exit_ok, rows({{"series dims", join(series.dims())},
                                  {"nilpotent", yes_no(series.nilpotent)},
                                  {"center dim", std::to_string(z)}})};
  });
}

Outcome cmd_multiplier(const Options& o) {
  return with_algebra(o, [&](const auto& L, const std::string& id) {
    const Index d = multiplier_dim(L);
    if (machine(o))
      return Outcome{exit_ok, dump(Json{{"command", "multiplier"},
                                        {"algebra", id},
                                        {"field", L.field().name()},
                                        {"dim", L.dim()},
                                        {"dim_multiplier", d}})};
    return Outcome{exit_ok, std::to_string(d) + "\n"};
  });
}

Outcome cmd_psi(const Options& o) {
  const PsiMode mode = o.mode == "generators" ? PsiMode::generators : PsiMode::exact;
  return with_algebra(o, [&](const auto& L, const std::string& id) {
    using S = typename std::decay_t<decltype(L)>::Scalar;
    const PsiEvaluator<S> evaluator(L);
    Index lo = 2, hi = evaluator.nilpotency_class();
    if (o.i) lo = hi = *o.i;
    Json images = Json::array();
    std::ostringstream human;
    human << std::left << std::setw(5) << "i" << std::setw(6) << "dim" << std::setw(11) << "codomain"
          << std::setw(10) << "tuples" << "kind\n";
    for (Index i = lo; i <= hi; ++i) {
      const auto image = evaluator.image_dim(i, mode);
      images.push_back({{"i", i},
                        {"dim", image.dim},
                        {"codomain_dim", image.codomain_dim},
                        {"exact", image.exact},
                        {"tuples", image.tuples}});
      human << std::setw(5) << i << std::setw(6) << image.dim << std::setw(11) << image.codomain_dim
            << std::setw(10) << image.tuples << (image.exact ? "exact" : "lower bound") << "\n";
    }
    if (machine(o))
      return Outcome{exit_ok, dump(Json{{"command", "psi"}, {"algebra", id}, {"mode", o.mode}, {"images", images}})};
    return Outcome{exit_ok, human.str()};
  });
}

Rational random_entry(const RationalField&, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  const long a = num(rng);
  return Rational(a) / Rational(den(rng));
}

ModP random_entry(const PrimeField& field, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(0, static_cast<long>(field.modulus()) - 1);
  return field.from_int(d(rng));
}

Outcome cmd_lemma_test(const Options& o) {
  return with_algebra(o, [&](const auto& L, const std::string& id) {
    using S = typename std::decay_t<decltype(L)>::Scalar;
    const auto series = lower_central_series(L);
    const Index c = series.nilpotent ? series.nilpotency_class() : 5;
    Index lo = 3, hi = std::max<Index>(3, std::min<Index>(5, c));
    if (o.i) {
      if (*o.i < 3) throw Error(Errc::index_out_of_range, "lemma-test needs --i >= 3, got " + std::to_string(*o.i));
      lo = hi = *o.i;
    }
    std::mt19937_64 rng(lemma_seed);
    bool failed = false;
    Json degrees = Json::array();
    std::ostringstream human;
    human << std::left << std::setw(5) << "i" << std::setw(9) << "samples" << std::setw(9) << "nonzero"
          << "verdict\n";
    for (Index i = lo; i <= hi; ++i) {
      int nonzero = 0;
      std::vector<Vector<S>> xs(static_cast<std::size_t>(i + 1), L.zero());
      for (int sample = 0; sample < lemma_samples; ++sample) {
        for (auto& x : xs)
          for (Index a = 0; a < L.dim(); ++a) x(a) = random_entry(L.field(), rng);
        if (!is_zero(normed_identity_defect(L, std::span<const Vector<S>>(xs)))) ++nonzero;
      }
      failed = failed || nonzero > 0;
      const std::string verdict = nonzero ? "violated" : "holds";
      degrees.push_back({{"i", i}, {"samples", lemma_samples}, {"nonzero_defects", nonzero}, {"verdict", verdict}});
      human << std::setw(5) << i << std::setw(9) << lemma_samples << std::setw(9) << nonzero << verdict << "\n";
    }
    const int code = failed ? exit_violated : exit_ok;
    if (machine(o))
      return Outcome{code, dump(Json{{"command", "lemma-test"},
                                     {"algebra", id},
                                     {"seed", lemma_seed},
                                     {"degrees", degrees}})};
    return Outcome{code, human.str()};
  });
}

template <class S>
BoundReport bounds_for(const LieAlgebra<S>& L, const std::string& id) {
  if (L.field().characteristic() == 2) return bound_report(L, id);
  return verify_maximal_class_bounds(L, id);
}

template <class S>
AlgebraReport full_report(const LieAlgebra<S>& L, const std::string& id, bool central) {
  AlgebraReport a{bounds_for(L, id), {}};
  if (central)
    for (const auto& K : central_ideals_enumerate(L)) a.central_quotients.push_back(verify_central_quotient_bound(L, K));
  return a;
}

Outcome emit(const Options& o, ReportDocument doc) {
  const int code = doc.any_violated() ? exit_violated : exit_ok;
  return {code, machine(o) ? to_machine(doc) : to_human(doc)};
}

Outcome bound_document(const Options& o, bool central) {
  if (!o.family.empty()) {
    if (!o.file.empty() || !o.name.empty()) throw InputError("--family excludes --file and --name");
    const auto names = family_members(o);
    const auto spec = selected_field(o);
    ReportDocument doc;
    doc.field = spec.name();
    doc.family = o.family;
    doc.algebras = with_field(spec, o.unsafe_char_two, [&](const auto& field) {
      return parallel_map(names, [&](const std::string& name) {
        return full_report(catalog_get(field, name).algebra, name, central);
      });
    });
    doc.table = family_table(doc.algebras);
    return emit(o, std::move(doc));
  }
  if (!o.file.empty()) {
    const std::string text = read_file(o.file);
    const auto start = text.find_first_not_of(" \t\r\n");
    if (start != std::string::npos && text[start] == '{') {
      auto doc = [&] {
        try {
          return parse_report(text);
        } catch (const Error& e) {
          throw Error(e.code(), o.file + ": " + e.detail());
        }
      }();
      rejudge(doc);
      return emit(o, std::move(doc));
    }
  }
  ReportDocument doc;
  (void)with_algebra(o, [&](const auto& L, const std::string& id) {
    doc.field = L.field().name();
    doc.algebras.push_back(full_report(L, id, central));
    return Outcome{};
  });
  return emit(o, std::move(doc));
}

Outcome cmd_verify_thm13(const Options& o) {
  return with_algebra(o, [&](const auto& L, const std::string& id) {
    const auto ideals = central_ideals_enumerate(L);
    bool failed = false;
    Json records = Json::array();
    std::ostringstream human;
    human << std::left << std::setw(8) << "dim K" << std::setw(8) << "dim M" << std::setw(10) << "L2 cap K"
          << std::setw(10) << "M(L/K)" << std::setw(8) << "M(K)" << std::setw(10) << "ab(L/K)" << std::setw(6)
          << "lhs" << std::setw(6) << "rhs" << "verdict\n";
    for (const auto& K : ideals) {
      const auto r = verify_central_quotient_bound(L, K);
      failed = failed || !r.holds;
      const std::string verdict = !r.holds ? "violated" : r.lhs == r.rhs ? "attained" : "holds";
      Json rec = r;
      rec["verdict"] = verdict;
      records.push_back(std::move(rec));
      human << std::setw(8) << r.ideal_dim << std::setw(8) << r.dim_multiplier << std::setw(10)
            << r.derived_cap_ideal << std::setw(10) << r.quotient_multiplier << std::setw(8) << r.ideal_multiplier
            << std::setw(10) << r.quotient_abelianization << std::setw(6) << r.lhs << std::setw(6) << r.rhs
            << verdict << "\n";
    }
    const int code = failed ? exit_violated : exit_ok;
    if (machine(o))
      return Outcome{code, dump(Json{{"command", "verify-thm13"},
                                     {"algebra", id},
                                     {"field", L.field().name()},
                                     {"records", records}})};
    return Outcome{code, human.str()};
  });
}

Outcome cmd_catalog(const Options& o) {
  return with_field(selected_field(o), o.unsafe_char_two, [&](const auto& field) {
    Json entries = Json::array();
    std::ostringstream human;
    human << std::left << std::setw(14) << "name" << std::setw(5) << "dim" << std::setw(9) << "dim M"
          << "construction\n";
    for (const auto& e : catalog_entries(field)) {
      entries.push_back({{"name", e.name},
                         {"dim", e.algebra.dim()},
                         {"construction", e.construction},
                         {"known_dim_multiplier", e.known_multiplier_dim ? Json(*e.known_multiplier_dim) : Json()},
                         {"provenance", e.provenance}});
      human << std::setw(14) << e.name << std::setw(5) << e.algebra.dim() << std::setw(9)
            << (e.known_multiplier_dim ? std::to_string(*e.known_multiplier_dim) : "-") << e.construction << "\n";
    }
    human << "families: filiform-<n> (3 <= n <= 64), abelian-<n> (1 <= n <= 64)\n";
    if (machine(o))
      return Outcome{exit_ok, dump(Json{{"command", "catalog"}, {"field", field.name()}, {"entries", entries}})};
    return Outcome{exit_ok, human.str()};
  });
}

enum Flag : unsigned {
  source = 1,      // --file, --name
  family = 2,      // --family, --max-dim
  degree = 4,      // --i
  mode = 8,        // --mode
};

CLI::App* add_command(CLI::App& app, Options& o, const std::string& name, const std::string& about,
                      unsigned flags) {
  auto* sub = app.add_subcommand(name, about);
  if (flags & source) {
    sub->add_option("--file", o.file, "algebra definition file (or a machine report, for report/verify-bound)");
    sub->add_option("--name", o.name, "catalog name, e.g. L(3,4,1,4) or filiform-6");
  }
  if (flags & family) {
    sub->add_option("--family", o.family, "sweep a catalog family")->check(CLI::IsMember({"filiform", "abelian"}));
    sub->add_option("--max-dim", o.max_dim, "largest dimension of the sweep")->check(CLI::PositiveNumber);
  }
  if (flags & degree) sub->add_option("--i", o.i, "degree i");
  if (flags & mode) sub->add_option("--mode", o.mode, "exact or generators")->check(CLI::IsMember({"exact", "generators"}));
  sub->add_option("--field", o.field, "Q or GF(p), for catalog inputs");
  sub->add_option("--format", o.format, "human or machine")->check(CLI::IsMember({"human", "machine"}));
  sub->add_option("--out", o.out, "write the report to this path");
  sub->add_flag("--unsafe-char-2", o.unsafe_char_two, "accept characteristic 2");
  return sub;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Schur multipliers and multiplier bounds for nilpotent Lie algebras", "lieschur"};
  app.require_subcommand(1);
  Options o;
  using Command = Outcome (*)(const Options&);
  const std::vector<std::tuple<std::string, std::string, unsigned, Command>> commands = {
      {"check", "validate an algebra and summarize its structure", source, cmd_check},
      {"series", "lower central series and center", source, cmd_series},
      {"multiplier", "dim M(L), the second homology", source, cmd_multiplier},
      {"psi", "image dimensions of the Psi maps", source | degree | mode, cmd_psi},
      {"lemma-test", "randomized check of the normed-bracket identity", source | degree, cmd_lemma_test},
      {"verify-bound", "multiplier bounds and their verdicts",
       source | family, [](const Options& opt) { return bound_document(opt, false); }},
      {"verify-thm13", "central-quotient inequality for every central ideal", source, cmd_verify_thm13},
      {"catalog", "list the built-in algebras", 0, cmd_catalog},
      {"report", "full report: bounds, Psi images, central-quotient records",
       source | family, [](const Options& opt) { return bound_document(opt, true); }},
  };
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const auto& [name, about, flags, fn] : commands) subs.emplace_back(add_command(app, o, name, about, flags), fn);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nrun 'lieschur --help' for usage\n";
    return exit_input_error;
  }

  for (const auto& [sub, fn] : subs) {
    if (!sub->parsed()) continue;
    try {
      const Outcome result = fn(o);
      if (o.out.empty()) {
        out << result.text;
      } else {
        std::ofstream file(o.out, std::ios::binary);
        if (!file || !(file << result.text)) throw InputError("cannot write '" + o.out + "'");
      }
      return result.code;
    } catch (const InputError& e) {
      err << "error: " << e.what() << "\n";
      return exit_input_error;
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return e.is_resource_error() ? exit_resource_guard : exit_input_error;
    }
  }
  return exit_input_error;
}

}  // namespace lieschur::cli
