#include "tropenum/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tropenum/curve_document.hpp"
#include "tropenum/errors.hpp"
#include "tropenum/gwseries.hpp"
#include "tropenum/pathcount.hpp"
#include "tropenum/svg.hpp"
#include "tropenum/tropoly.hpp"

namespace tropenum {

namespace {

struct CliConfig {
  std::string expr;
  std::string poly_path;
  int degree = 0;
  std::string lambda = "xey";
  std::string json_path;
  std::string svg_path;
  double ray_length = 2.0;
  bool nonzero_only = false;
  std::string method = "both";
  int max_degree = 0;
  unsigned jobs = 1;
};

// Failure of an internal consistency check; maps to exit code 2.
struct Inconsistent {
  std::string message;
};

LambdaPreset preset_of(const CliConfig& cfg) {
  return cfg.lambda == "rowmajor" ? LambdaPreset::RowMajor : LambdaPreset::XMinusEpsY;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream outf(path, std::ios::binary);
  if (!outf || !(outf << text)) throw Error("cannot write '" + path + "'");
}

int cmd_curve(const CliConfig& cfg, std::ostream& out) {
  const TropicalPolynomial poly =
      cfg.expr.empty() ? parse_term_table(read_file(cfg.poly_path)) : parse_expression(cfg.expr);
  const TropicalCurve curve = extract_curve(poly);
  if (const auto bad = check_balancing(curve); !bad.empty())
    throw Inconsistent{"balancing fails at " + std::to_string(bad.size()) + " vertices"};

  const CurveDocument doc = make_document(curve);
  const std::string json_text = write_json(doc);
  if (!cfg.json_path.empty()) write_file(cfg.json_path, json_text);
  if (!cfg.svg_path.empty()) {
    SvgOptions opt;
    opt.ray_length = cfg.ray_length;
    write_file(cfg.svg_path, render_svg(doc, opt));
  }
  if (cfg.json_path.empty() && cfg.svg_path.empty()) out << json_text;
  return kExitOk;
}

int cmd_count(const CliConfig& cfg, std::ostream& out) {
  if (cfg.degree < 1) throw BadDegree(cfg.degree);
  if (cfg.method == "recursion") {
    out << km_N(cfg.degree) << "\n";
    return kExitOk;
  }
  const BigInt by_paths = count_gw(cfg.degree, preset_of(cfg), cfg.jobs);
  if (cfg.method == "paths") {
    out << by_paths << "\n";
    return kExitOk;
  }
  const BigInt by_recursion = km_N(cfg.degree);
  out << by_paths << " " << by_recursion << "\n";
  if (by_paths != by_recursion)
    throw Inconsistent{"lattice paths and recursion disagree at degree " +
                       std::to_string(cfg.degree)};
  return kExitOk;
}

int cmd_welschinger(const CliConfig& cfg, std::ostream& out) {
  if (cfg.degree < 1) throw BadDegree(cfg.degree);
  out << count_welschinger(cfg.degree, preset_of(cfg), cfg.jobs) << "\n";
  return kExitOk;
}

int cmd_paths(const CliConfig& cfg, std::ostream& out) {
  if (cfg.degree < 1) throw BadDegree(cfg.degree);
  const PathDomain domain(cfg.degree, preset_of(cfg));
  MultiplicityEngine engine(domain);
  PathTotals totals;
  std::uint64_t listed = 0;
  out << "# path\tmu_plus\tmu_minus\tmu\tnu_plus\tnu_minus\tnu\n";
  enumerate_paths(domain, [&](const LatticePath& path) {
    const auto m = engine.multiplicity(path);
    ++totals.paths;
    totals.mu += m.mu;
    totals.nu += m.nu;
    if (cfg.nonzero_only && m.mu == 0) return;
    ++listed;
    for (std::size_t k = 0; k < path.size(); ++k) out << (k ? " " : "") << to_string(path[k]);
    out << "\t" << m.mu_plus << "\t" << m.mu_minus << "\t" << m.mu << "\t" << m.nu_plus << "\t"
        << m.nu_minus << "\t" << m.nu << "\n";
  });

  CurveCounter counter(preset_of(cfg), cfg.jobs);
  const int points = 3 * cfg.degree - 1;
  out << "# paths " << totals.paths << ", listed " << listed << "\n";
  out << "# path sums (reducible curves included): mu " << totals.mu << ", nu " << totals.nu
      << "\n";
  out << "# N_d " << counter.irreducible(cfg.degree, points, MultiplicityKind::Complex)
      << ", W_d " << counter.irreducible(cfg.degree, points, MultiplicityKind::Welschinger)
      << "\n";
  return kExitOk;
}

std::string fixed(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

int cmd_report(const CliConfig& cfg, std::ostream& out) {
  if (cfg.max_degree < 1) throw BadDegree(cfg.max_degree);
  InvariantTable table;
  try {
    table = build_table(cfg.max_degree, preset_of(cfg), cfg.jobs);
  } catch (const CrossCheckMismatch& e) {
    throw Inconsistent{e.what()};
  }
  const auto flag = [](bool ok) { return ok ? "ok" : "FAIL"; };
  out << "d\tN_paths\tN_recursion\tW\t3W>=d!\tW<=N\tW=N(mod2)\n";
  for (const auto& r : table.rows)
    out << r.d << "\t" << r.n_paths << "\t" << r.n_recursion << "\t" << r.w << "\t"
        << flag(r.bound_ok) << "\t" << flag(r.dominance_ok) << "\t" << flag(r.parity_ok) << "\n";
  out << "\nd\tlog N_d\t3d log d\t(log N_d - 3d log d)/d\t(log N_d - log W_d)/d\n";
  for (const auto& a : asymptotic_report(table))
    out << a.d << "\t" << fixed(a.log_n) << "\t" << fixed(a.three_d_log_d) << "\t"
        << fixed(a.diff_over_d) << "\t" << (a.log_gap ? fixed(*a.log_gap) : "-") << "\n";
  if (!table.all_ok() || !table.flags_consistent())
    throw Inconsistent{"an invariant check failed"};
  return kExitOk;
}

void add_degree(CLI::App& sub, CliConfig& cfg) {
  sub.add_option("-d,--degree", cfg.degree, "curve degree")->required();
}

void add_lambda(CLI::App& sub, CliConfig& cfg) {
  sub.add_option("--lambda", cfg.lambda, "lattice point order")
      ->check(CLI::IsMember({"xey", "rowmajor"}));
  sub.add_option("-j,--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 256u));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Exact tropical plane curves and enumerative invariants", "tropenum"};
  app.require_subcommand(1);

  auto* curve = app.add_subcommand("curve", "extract a tropical curve; write JSON and/or SVG");
  auto* expr = curve->add_option("--expr", cfg.expr, "polynomial such as 'max(0, x, y)'");
  auto* poly = curve->add_option("--poly", cfg.poly_path, "term-table file")->check(CLI::ExistingFile);
  expr->excludes(poly);
  poly->excludes(expr);
  curve->add_option("--json", cfg.json_path, "write the curve document here");
  curve->add_option("--svg", cfg.svg_path, "write an SVG drawing here");
  curve->add_option("--ray-length", cfg.ray_length, "SVG ray truncation length")
      ->check(CLI::PositiveNumber);

  auto* count = app.add_subcommand("count", "number N_d of rational curves");
  add_degree(*count, cfg);
  add_lambda(*count, cfg);
  count->add_option("--method", cfg.method, "paths, recursion or both")
      ->check(CLI::IsMember({"paths", "recursion", "both"}));

  auto* welsch = app.add_subcommand("welschinger", "Welschinger invariant W_d");
  add_degree(*welsch, cfg);
  add_lambda(*welsch, cfg);

  auto* paths = app.add_subcommand("paths", "list lattice paths with multiplicities");
  add_degree(*paths, cfg);
  add_lambda(*paths, cfg);
  paths->add_flag("--nonzero-only", cfg.nonzero_only, "omit paths with mu = 0");

  auto* report = app.add_subcommand("report", "invariant table and asymptotics");
  report->add_option("--max", cfg.max_degree, "largest degree")->required();
  add_lambda(*report, cfg);

  std::vector<std::string> argv_store{"tropenum"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUserError;
  }
  if (curve->parsed() && cfg.expr.empty() && cfg.poly_path.empty()) {
    err << "error: curve needs exactly one of --expr or --poly\n";
    return kExitUserError;
  }

  try {
    if (curve->parsed()) return cmd_curve(cfg, out);
    if (count->parsed()) return cmd_count(cfg, out);
    if (welsch->parsed()) return cmd_welschinger(cfg, out);
    if (paths->parsed()) return cmd_paths(cfg, out);
    return cmd_report(cfg, out);
  } catch (const Inconsistent& e) {
    err << "internal consistency failure: " << e.message << "\n";
    return kExitInconsistent;
  } catch (const Imbalanced& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const ArithmeticOverflow& e) {
    err << "error: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUserError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInconsistent;
  }
}

}  // namespace tropenum
