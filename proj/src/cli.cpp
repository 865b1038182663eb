#include "pfsign/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include "pfsign/arith.hpp"
#include "pfsign/encoding.hpp"
#include "pfsign/errors.hpp"
#include "pfsign/partition.hpp"
#include "pfsign/signs.hpp"
#include "pfsign/verify.hpp"

namespace pfsign {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::size_t truncation_from_env() {
  const char* raw = std::getenv("PFSIGN_TRUNCATION");
  if (raw == nullptr || *raw == '\0') return kDefaultTruncation;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || raw[0] == '-' || value < 16) {
    throw UsageError(std::string("PFSIGN_TRUNCATION must be an integer >= 16, got '") + raw + "'");
  }
  return static_cast<std::size_t>(value);
}

void require_registry_name(const std::string& name) {
  const auto names = registry_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw UsageError("unknown function '" + name + "'");
  }
}

// Writes the report to --out when given, else to out.
void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (!cfg.output_path) {
    out << text;
    return;
  }
  std::ofstream file(*cfg.output_path, std::ios::binary);
  if (!file) throw Error("cannot write " + cfg.output_path->string());
  file << text;
}

struct TableArgs {
  std::string id;
  std::size_t n = 0;
};

int cmd_table(const TableArgs& args, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::string name;
  std::optional<int> id;
  if (!args.id.empty() && std::all_of(args.id.begin(), args.id.end(), ::isdigit)) {
    const int numeric = std::atoi(args.id.c_str());
    const auto fn = table_function(numeric);
    if (!fn) throw UsageError("table id must be 1..6 or a function name, got '" + args.id + "'");
    name = std::string(*fn);
    id = numeric;
  } else {
    require_registry_name(args.id);
    name = args.id;
    id = table_for_function(name);
  }

  std::optional<GoldenTable> golden;
  if (id) {
    const auto path = cfg.fixtures_dir / ("table" + std::to_string(*id) + ".csv");
    if (std::filesystem::exists(path)) golden = load_golden(cfg.fixtures_dir, *id);
    else err << "note: no golden data at " << path.string() << "\n";
  }
  const std::size_t n = args.n > 0 ? args.n : (golden ? golden->rows.size() : 10);

  const TableArtifact table = experiment_table(name, n, golden ? &*golden : nullptr);
  emit(cfg, render_table_artifact(table, cfg.output_format), out);

  if (!golden) return kExitOk;
  std::size_t informational = 0, failures = 0;
  for (const auto& m : table.mismatches()) {
    if (m.known_discrepant) {
      ++informational;
      err << "known-discrepant " << m.column << " n=" << m.n << " computed=" << m.computed
          << " printed=" << m.golden << "\n";
    } else {
      ++failures;
      err << "MISMATCH " << m.column << " n=" << m.n << " computed=" << m.computed
          << " golden=" << m.golden << "\n";
    }
  }
  err << "table " << *id << " (" << name << "): " << failures << " mismatches, " << informational
      << " known-discrepant c3 cells differ from the printed values\n";
  return failures == 0 ? kExitOk : kExitFailure;
}

int cmd_verify(const std::string& suite, const RunConfig& cfg, std::ostream& out) {
  const SuiteOutcome outcome = run_suite(suite);
  std::string text;
  for (const auto& c : outcome.checks) text += format_check(c) + "\n";
  for (const auto& n : outcome.notes) text += format_note(n) + "\n";
  emit(cfg, text, out);
  return outcome.all_passed() ? kExitOk : kExitFailure;
}

struct SignsArgs {
  std::string function;
  std::string target;
  std::size_t n = 0;
};

int cmd_signs(const SignsArgs& args, const RunConfig& cfg, std::ostream& out) {
  require_registry_name(args.function);
  const std::size_t n = args.n > 0 ? args.n : cfg.truncation_n;
  const auto f = registry_lookup(args.function, n);

  ArithmeticSequence target = f;
  SignReport report;
  if (args.target == "summatory") {
    target = summatory_sequence(f);
    report = constant_sign_onset(target);
  } else {
    const auto finv = dirichlet_inverse_recursive(f);
    if (args.target == "c1-inv") {
      target = encode(finv, KernelKind::Q).values;
      report = constant_sign_onset(target);
    } else {
      if (n < 2) throw UsageError("c2-inv needs --n >= 2");
      target = encode(finv, KernelKind::QStar).values;
      report = alternation_onset(target);
    }
  }

  TextTable t;
  t.header = {"function", "target",     "property",   "onset",
              "horizon",  "holds_at_horizon", "final_sign", "sign_changes"};
  t.rows.push_back({args.function, args.target, std::string(property_name(report.property)),
                    report.onset ? std::to_string(*report.onset) : "none",
                    std::to_string(report.horizon), report.holds_at_horizon ? "true" : "false",
                    std::to_string(report.final_sign),
                    std::to_string(sign_change_count(target, n))});
  emit(cfg, render(t, cfg.output_format), out);
  return kExitOk;
}

struct AsymptoticsArgs {
  std::string kind;
  std::vector<std::size_t> ns;
  std::string variant = "standard-literature";
};

int cmd_asymptotics(const AsymptoticsArgs& args, const RunConfig& cfg, std::ostream& out) {
  if (args.ns.empty()) throw UsageError("--ns needs at least one value");
  for (std::size_t n : args.ns)
    if (n < 2) throw UsageError("asymptotic estimates need n >= 2");
  const KernelKind kind = *parse_kernel_kind(args.kind);
  std::vector<FormulaVariant> variants;
  if (args.variant == "both") variants = {FormulaVariant::AsPrinted, FormulaVariant::StandardLiterature};
  else variants = {*parse_variant(args.variant)};

  TextTable t;
  t.header = {"kind", "variant", "n", "exact", "estimate", "ratio", "fitted_constant",
              "formula_constant"};
  for (std::size_t n : args.ns) {
    for (FormulaVariant v : variants) {
      const auto r = asymptotic_estimate(kind, n, v);
      t.rows.push_back({args.kind, std::string(variant_name(v)), std::to_string(n),
                        r.exact_value.get_str(), fmt_double(r.estimate), fmt_double(r.ratio),
                        fmt_double(r.fitted_constant), fmt_double(r.formula_constant)});
    }
  }
  emit(cfg, render(t, cfg.output_format), out);
  return kExitOk;
}

struct InverseArgs {
  std::string function;
  std::size_t n = 10;
  std::string method = "recursive";
};

int cmd_inverse(const InverseArgs& args, const RunConfig& cfg, std::ostream& out,
                std::ostream& err) {
  require_registry_name(args.function);
  const auto f = registry_lookup(args.function, args.n);
  TextTable t;
  if (args.method == "partition-formula") {
    t.header = {"n", "formula", "recursive", "integral", "match"};
    const std::size_t top = std::min(args.n, kPartitionFormulaMaxN);
    if (args.n > top) err << "note: partition formula rows stop at n=" << top << "\n";
    for (std::size_t i = 2; i <= top; ++i) {
      const auto r = dirichlet_inverse_partition_formula(f, i);
      t.rows.push_back({std::to_string(i), r.value.get_str(), r.oracle.get_str(),
                        r.integral ? "true" : "false", r.matches ? "true" : "false"});
    }
  } else {
    ArithmeticSequence inv =
        args.method == "recursive" ? dirichlet_inverse_recursive(f)
        : args.method == "neumann" ? dirichlet_inverse_neumann(f)
                                   : dirichlet_inverse_printed_neumann(f);
    t.header = {"n", "f", "finv"};
    for (std::size_t i = 1; i <= args.n; ++i)
      t.rows.push_back({std::to_string(i), f(i).get_str(), inv(i).get_str()});
  }
  emit(cfg, render(t, cfg.output_format), out);
  return kExitOk;
}

struct EncodeArgs {
  std::string function;
  std::string kernel;
  std::size_t n = 10;
  bool inverse = false;
};

int cmd_encode(const EncodeArgs& args, const RunConfig& cfg, std::ostream& out) {
  require_registry_name(args.function);
  const KernelKind kind = *parse_kernel_kind(args.kernel);
  ArithmeticSequence f = registry_lookup(args.function, args.n);
  if (args.inverse) f = dirichlet_inverse_recursive(f);
  const auto c = encode(f, kind);
  const std::string source = args.inverse ? "finv" : "f";
  TextTable t;
  t.header = {"n", source, "c" + std::to_string(encoding_index(kind)) + "_" + source};
  for (std::size_t i = 1; i <= args.n; ++i)
    t.rows.push_back({std::to_string(i), f(i).get_str(), c.values(i).get_str()});
  emit(cfg, render(t, cfg.output_format), out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dirichlet inverses, partition-kernel encodings and sign analysis", "pfsign"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "csv";
  std::string out_path;
  std::string fixtures = default_fixtures_dir().string();
  app.add_option("--format", format, "csv, md or tex")->check(CLI::IsMember({"csv", "md", "tex"}));
  app.add_option("--out", out_path, "write the report to PATH instead of stdout");
  app.add_option("--fixtures", fixtures, "directory holding table<k>.csv golden data");

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "reproduce an appendix-style experiment table");
  table->add_option("--id", table_args.id, "1..6 or a registry function name")->required();
  table->add_option("--n", table_args.n, "rows (default: golden row count, else 10)")
      ->check(CLI::PositiveNumber);

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  {
    std::vector<std::string> names(suite_names().begin(), suite_names().end());
    verify->add_option("--suite", suite)->check(CLI::IsMember(names));
  }

  SignsArgs signs_args;
  auto* signs = app.add_subcommand("signs", "sign onsets and sign-change counts");
  signs->add_option("--f", signs_args.function, "registry function")->required();
  signs->add_option("--target", signs_args.target)
      ->required()
      ->check(CLI::IsMember({"c1-inv", "c2-inv", "summatory"}));
  signs->add_option("--n", signs_args.n, "horizon (default: truncation)")->check(CLI::PositiveNumber);

  AsymptoticsArgs asym_args;
  auto* asym = app.add_subcommand("asymptotics", "compare kernels with their leading asymptotics");
  asym->add_option("--kind", asym_args.kind)->required()->check(CLI::IsMember({"q", "qstar", "p"}));
  asym->add_option("--ns", asym_args.ns, "comma-separated indices")->required()->delimiter(',');
  asym->add_option("--variant", asym_args.variant)
      ->check(CLI::IsMember({"as-printed", "standard-literature", "both"}));

  InverseArgs inv_args;
  auto* inverse = app.add_subcommand("inverse", "Dirichlet inverse of a registry function");
  inverse->add_option("--f", inv_args.function)->required();
  inverse->add_option("--n", inv_args.n)->check(CLI::PositiveNumber);
  inverse->add_option("--method", inv_args.method)
      ->check(CLI::IsMember({"recursive", "neumann", "printed-neumann", "partition-formula"}));

  EncodeArgs enc_args;
  auto* encode_cmd = app.add_subcommand("encode", "partition-kernel encoding of f or f^-1");
  encode_cmd->add_option("--f", enc_args.function)->required();
  encode_cmd->add_option("--kernel", enc_args.kernel)
      ->required()
      ->check(CLI::IsMember({"q", "qstar", "pstar", "p"}));
  encode_cmd->add_option("--n", enc_args.n)->check(CLI::PositiveNumber);
  encode_cmd->add_flag("--inverse", enc_args.inverse, "encode f^-1 instead of f");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    RunConfig cfg;
    cfg.truncation_n = truncation_from_env();
    cfg.output_format = *parse_format(format);
    if (!out_path.empty()) cfg.output_path = out_path;
    cfg.fixtures_dir = fixtures;

    if (table->parsed()) return cmd_table(table_args, cfg, out, err);
    if (verify->parsed()) return cmd_verify(suite, cfg, out);
    if (signs->parsed()) return cmd_signs(signs_args, cfg, out);
    if (asym->parsed()) return cmd_asymptotics(asym_args, cfg, out);
    if (inverse->parsed()) return cmd_inverse(inv_args, cfg, out, err);
    if (encode_cmd->parsed()) return cmd_encode(enc_args, cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const NameError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace pfsign
