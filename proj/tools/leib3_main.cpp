// Command-line front end: validate, info, centers, derived, bounds,
// quotient, check-lie, generate, enumerate. Machine-readable JSON on
// non-interactive streams or with --json; exit codes: 0 success, 1 failed
// verdict / not an ideal, 2 parse or usage error, 3 budget refusal.

#include <unistd.h>

#include <iostream>

#include <CLI11.hpp>

#include "leib3/generators.hpp"
#include "leib3/io.hpp"

using namespace leib3;

namespace {

bool g_force_json = false;

bool human_output() { return !g_force_json && isatty(fileno(stdout)); }

void emit(const Json& j) { std::cout << canonical_dump(j); }

void emit_or_write(const Json& j, const std::string& out_path) {
  if (out_path.empty())
    emit(j);
  else
    write_text_file(out_path, canonical_dump(j));
}

CenterKind parse_kind(const std::string& name) {
  if (name == "left") return CenterKind::left;
  if (name == "middle") return CenterKind::middle;
  if (name == "right") return CenterKind::right;
  if (name == "lm") return CenterKind::lm;
  if (name == "full") return CenterKind::full;
  throw UsageError("unknown center kind \"" + name + "\"");
}

int cmd_validate(const std::string& file, std::size_t max_reports) {
  Algebra3 a = read_algebra_file(file);
  std::vector<Violation> violations = a.validate(max_reports);
  const bool valid = a.validity() == Algebra3::Validity::valid;
  if (human_output()) {
    if (valid) {
      std::cout << "valid\n";
    } else {
      std::cout << "invalid (" << violations.size() << " violation(s) shown)\n";
      for (const Violation& v : violations) {
        std::cout << "  at (";
        for (int t = 0; t < 5; ++t) std::cout << (t ? "," : "") << v.quintuple[t];
        std::cout << ") defect " << vec_str(v.defect) << "\n";
      }
    }
  } else {
    emit(violations_to_json(violations, valid));
  }
  return valid ? 0 : 1;
}

int cmd_info(const std::string& file) {
  Algebra3 a = read_algebra_file(file);
  if (!a.is_valid())
    throw InvalidAlgebraError("algebra fails the identity check; run validate");
  Json centers;
  for (CenterKind k : {CenterKind::left, CenterKind::middle, CenterKind::right,
                       CenterKind::lm, CenterKind::full})
    centers[to_string(k)] = center(a, k).dim();
  const BoundReport rep = schur_report(a);
  if (human_output()) {
    std::cout << "field        " << a.field().str() << "\n"
              << "dim          " << a.dim() << "\n"
              << "brackets     " << a.tensor().entry_count() << " stored\n"
              << "centers      ";
    for (auto& [name, d] : centers.items())
      std::cout << name << "=" << d.get<std::size_t>() << " ";
    std::cout << "\nderived dim  " << derived_ideal(a).dim() << "\n"
              << "bounds       thm " << rep.dim_derived << " <= " << rep.bound_thm
              << (rep.holds_thm ? " ok" : " VIOLATED") << ", cor1 "
              << rep.dim_derived << " <= " << rep.bound_cor1
              << (rep.holds_cor1 ? " ok" : " VIOLATED");
    if (rep.bound_cor2)
      std::cout << ", cor2 " << rep.dim_derived << " <= " << *rep.bound_cor2
                << (*rep.holds_cor2 ? " ok" : " VIOLATED");
    std::cout << "\n";
  } else {
    Json out;
    out["field"] = field_to_json(a.field());
    out["dim"] = a.dim();
    out["centers"] = std::move(centers);
    out["derived_dim"] = derived_ideal(a).dim();
    out["report"] = report_to_json(rep);
    emit(out);
  }
  return 0;
}

int cmd_centers(const std::string& file, const std::string& kind,
                const std::string& out_path) {
  Algebra3 a = read_algebra_file(file);
  if (!kind.empty()) {
    emit_or_write(subspace_to_json(center(a, parse_kind(kind))), out_path);
  } else {
    Json out;
    for (CenterKind k : {CenterKind::left, CenterKind::middle, CenterKind::right,
                         CenterKind::lm, CenterKind::full})
      out[to_string(k)] = subspace_to_json(center(a, k));
    emit_or_write(out, out_path);
  }
  return 0;
}

int cmd_derived(const std::string& file, const std::string& out_path) {
  Algebra3 a = read_algebra_file(file);
  emit_or_write(subspace_to_json(derived_ideal(a)), out_path);
  return 0;
}

int cmd_bounds(const std::string& file) {
  Algebra3 a = read_algebra_file(file);
  const BoundReport rep = schur_report(a);
  emit(report_to_json(rep));
  const bool ok =
      rep.holds_thm && rep.holds_cor1 && (!rep.holds_cor2 || *rep.holds_cor2);
  return ok ? 0 : 1;
}

int cmd_quotient(const std::string& file, const std::string& ideal_file,
                 const std::string& out_path, const std::string& proj_path) {
  Algebra3 a = read_algebra_file(file);
  Subspace ideal = read_subspace_file(ideal_file, a.field());
  QuotientResult q = quotient(a, ideal);
  if (!out_path.empty()) write_algebra_file(out_path, q.algebra);
  if (!proj_path.empty())
    write_text_file(proj_path, canonical_dump(matrix_to_json(q.projection)));
  if (out_path.empty() && proj_path.empty()) {
    Json out;
    out["algebra"] = algebra_to_json(q.algebra);
    out["projection"] = matrix_to_json(q.projection);
    emit(out);
  }
  return 0;
}

int cmd_check_lie(const std::string& file) {
  Algebra3 a = read_algebra_file(file);
  const bool lie = a.is_lie3();
  if (human_output())
    std::cout << (lie ? "true" : "false") << "\n";
  else
    emit(Json{{"lie3", lie}});
  return lie ? 0 : 1;
}

int cmd_generate(const std::string& family, const std::string& field_text,
                 std::size_t dim, std::size_t gen_dim, std::size_t cent_dim,
                 std::uint64_t seed, const std::string& lhs, const std::string& rhs,
                 const std::string& out_path) {
  const FieldSpec f = FieldSpec::parse(field_text);
  std::optional<Algebra3> a;
  if (family == "abelian") {
    a = abelian(dim, f);
  } else if (family == "central") {
    a = central_family(CentralFamilySpec{gen_dim, cent_dim, seed, f});
  } else if (family == "filippov4") {
    a = filippov4(f);
  } else if (family == "direct-sum") {
    if (lhs.empty() || rhs.empty())
      throw UsageError("--family direct-sum needs --lhs and --rhs algebra files");
    a = direct_sum(read_algebra_file(lhs), read_algebra_file(rhs));
  } else {
    throw UsageError("unknown family \"" + family + "\"");
  }
  emit_or_write(algebra_to_json(*a), out_path);
  return 0;
}

int cmd_enumerate(const std::string& field_text, std::size_t dim,
                  std::uint64_t budget, const std::string& out_dir, bool serial,
                  bool check_oracle) {
  EnumerateOptions opts;
  opts.budget = budget;
  opts.check_oracle = check_oracle;
  if (!out_dir.empty()) opts.out_dir = out_dir;
  const FieldSpec f = FieldSpec::parse(field_text);
  const EnumerationSummary summary =
      serial ? enumerate_all_serial(f, dim, opts) : enumerate_all(f, dim, opts);
  emit(summary_to_json(summary));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computer algebra for finite-dimensional Leibniz 3-algebras"};
  app.require_subcommand(1);
  app.add_flag("--json", g_force_json, "machine-readable output even on a terminal");

  std::string file, ideal_file, out_path, proj_path, kind, family, field_text = "Q";
  std::string lhs, rhs, out_dir;
  std::size_t max_reports = 100, dim = 0, gen_dim = 0, cent_dim = 0;
  std::uint64_t seed = 0, budget = 1ull << 24;
  bool serial = false, check_oracle = false;

  auto* validate = app.add_subcommand("validate", "check the left Leibniz 3-identity");
  validate->add_option("file", file)->required();
  validate->add_option("--max-reports", max_reports, "violation report cap");

  auto* info = app.add_subcommand("info", "centers, derived ideal, bound report");
  info->add_option("file", file)->required();

  auto* centers = app.add_subcommand("centers", "center subspaces");
  centers->add_option("file", file)->required();
  centers->add_option("--kind", kind, "left|middle|right|lm|full (default: all five)");
  centers->add_option("--out", out_path, "write JSON here instead of stdout");

  auto* derived = app.add_subcommand("derived", "derived ideal [L,L,L]");
  derived->add_option("file", file)->required();
  derived->add_option("--out", out_path);

  auto* bounds = app.add_subcommand("bounds", "dimension-bound report");
  bounds->add_option("file", file)->required();

  auto* quot = app.add_subcommand("quotient", "factor algebra modulo an ideal");
  quot->add_option("file", file)->required();
  quot->add_option("--ideal", ideal_file, "subspace JSON file")->required();
  quot->add_option("--out", out_path, "write the quotient algebra here");
  quot->add_option("--projection-out", proj_path, "write the projection matrix here");

  auto* check_lie = app.add_subcommand("check-lie", "antisymmetry predicate");
  check_lie->add_option("file", file)->required();

  auto* generate = app.add_subcommand("generate", "construct a family instance");
  generate->add_option("--family", family, "abelian|central|filippov4|direct-sum")
      ->required();
  generate->add_option("--field", field_text, "Q or Fp:<p>");
  generate->add_option("--dim", dim, "dimension (abelian)");
  generate->add_option("--gen-dim", gen_dim, "generator coordinates (central)");
  generate->add_option("--cent-dim", cent_dim, "central coordinates (central)");
  generate->add_option("--seed", seed, "draw seed (central)");
  generate->add_option("--lhs", lhs, "left summand file (direct-sum)");
  generate->add_option("--rhs", rhs, "right summand file (direct-sum)");
  generate->add_option("--out", out_path, "write the algebra file here");

  auto* enumerate = app.add_subcommand("enumerate", "exhaustive scan over a prime field");
  enumerate->add_option("--field", field_text, "Fp:<p>")->required();
  enumerate->add_option("--dim", dim)->required();
  enumerate->add_option("--budget", budget, "candidate-count refusal threshold");
  enumerate->add_option("--out-dir", out_dir, "emit witness algebra files here");
  enumerate->add_flag("--serial", serial, "single-threaded reference scan");
  enumerate->add_flag("--check-oracle", check_oracle,
                      "cross-check every candidate against the brute-force oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(file, max_reports);
    if (info->parsed()) return cmd_info(file);
    if (centers->parsed()) return cmd_centers(file, kind, out_path);
    if (derived->parsed()) return cmd_derived(file, out_path);
    if (bounds->parsed()) return cmd_bounds(file);
    if (quot->parsed()) return cmd_quotient(file, ideal_file, out_path, proj_path);
    if (check_lie->parsed()) return cmd_check_lie(file);
    if (generate->parsed())
      return cmd_generate(family, field_text, dim, gen_dim, cent_dim, seed, lhs,
                          rhs, out_path);
    if (enumerate->parsed())
      return cmd_enumerate(field_text, dim, budget, out_dir, serial, check_oracle);
  } catch (const NotAnIdealError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvalidAlgebraError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedFieldError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
