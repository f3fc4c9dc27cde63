#include <CLI11.hpp>

#include <iostream>

#include "superalg/reports.hpp"
#include "superalg/verify.hpp"

using namespace superalg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitViolation = 3;
constexpr int kExitUnreliable = 4;

struct CommonOpts {
  std::string example;
  std::string field = "Q";
  unsigned trunc = 0;
  unsigned degree = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::string format = "json";
  std::string out_dir;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool need_example = true) {
  auto* ex = cmd->add_option("--example", o.example, "catalog example name");
  if (need_example) ex->required();
  cmd->add_option("--field", o.field, "coefficient field: Q or Fp:<prime>")->capture_default_str();
  cmd->add_option("--N", o.trunc, "truncation: variable count (letter triples for the Q family)");
  cmd->add_option("--D", o.degree, "maximal total degree");
  cmd->add_option("--seed", o.seed, "seed for all sampled checks")->capture_default_str();
  cmd->add_option("--workers", o.workers, "closure worker threads")->capture_default_str();
  cmd->add_option("--format", o.format, "json|csv|text")->capture_default_str();
  cmd->add_option("--out", o.out_dir, "output directory")->envname("SUPERALG_OUT_DIR");
}

unsigned resolved_trunc(const CommonOpts& o, const ExampleInfo& info) {
  return o.trunc ? o.trunc : info.default_trunc;
}
unsigned resolved_degree(const CommonOpts& o, const ExampleInfo& info) {
  return o.degree ? o.degree : info.default_degree;
}

int cmd_dims(const CommonOpts& o) {
  const ExampleInfo* info = find_example(o.example);
  if (!info || !info->dims_supported) {
    std::cerr << "dims: example '" << o.example << "' has no dimension table\n";
    return kExitUsage;
  }
  FieldSpec field = FieldSpec::parse(o.field);
  DimensionTable table =
      example_dims(o.example, field, resolved_trunc(o, *info), resolved_degree(o, *info), o.workers);
  std::string payload = o.format == "csv" ? dims_csv(table) : dims_json(table, info->grading);
  if (o.format == "text") {
    payload = "algebra " + table.algebra + " field " + table.field + "\n";
    for (unsigned n = 0; n <= table.max_degree; ++n)
      payload += "dim_" + std::to_string(n) + " = " + std::to_string(table.dim_total(n)) +
                 (table.reliable_total(n) ? "" : " (unreliable)") + "\n";
    payload += "width " + std::to_string(table.width()) + "\n";
  }
  std::string ext = o.format == "csv" ? ".csv" : (o.format == "text" ? ".txt" : ".json");
  std::cout << write_text(o.out_dir, "dims_" + o.example + ext, payload) << "\n";
  for (const auto& e : table.components)
    if (!e.reliable) {
      std::cerr << "dims: component " << e.deg.str() << " is not reliable at this truncation\n";
      return kExitUnreliable;
    }
  return kExitOk;
}

// transfer applied to a user-supplied dimension sequence "d1,d2,..."; the
// input algebra is external data, so only the formula side is emitted
int cmd_series_custom(const CommonOpts& o, const std::string& dims, bool bivariate) {
  std::vector<long long> coeffs;
  std::istringstream is(dims);
  std::string tok;
  while (std::getline(is, tok, ',')) coeffs.push_back(std::stoll(tok));
  if (coeffs.empty()) {
    std::cerr << "series: --dims needs at least one coefficient\n";
    return kExitUsage;
  }
  TruncatedSeries hl(1, static_cast<int>(coeffs.size()));
  for (std::size_t k = 0; k < coeffs.size(); ++k) hl.add(static_cast<int>(k + 1), coeffs[k]);
  TruncatedSeries hj = jordan_transfer(hl);
  std::string payload = series_json(hl, "H(L,t) supplied") + series_json(hj, "H(J,t) transfer");
  if (bivariate) payload += series_json(jordan_transfer_bivariate(hl), "H(J,t1,t2) transfer");
  std::cout << write_text(o.out_dir, "series_custom.json", payload) << "\n";
  std::cout << hj.str() << "\n";
  return kExitOk;
}

int cmd_series(const CommonOpts& o, bool bivariate) {
  FieldSpec field = FieldSpec::parse(o.field);
  DimensionTable l_table, j_table;
  if (o.example == "R") {
    unsigned n = o.trunc ? o.trunc : 24;
    unsigned d = o.degree ? o.degree : 20;
    l_table = build_R(field, n, d, o.workers).dimension_table();
    j_table = example_dims("JorR", field, n, 3 * d - 1, o.workers);
  } else if (o.example == "Q") {
    unsigned n = o.trunc ? o.trunc : 8;
    unsigned d = o.degree ? o.degree : 8;
    l_table = build_Q(field, n, d, o.workers).dimension_table();
    j_table = example_dims("JorQ", field, n, 3 * d - 1, o.workers);
  } else if (o.example == "Toy") {
    l_table = example_dims("Toy", field, 0, 2, o.workers);
    TableLieOps toy = TableLieOps::nilpotent_toy(field);
    JordanDouble<TableLieOps> dbl(toy);
    JordanDoublePolicy<TableLieOps> policy{dbl, 0};
    JorToyBasis basis(policy, "JorToy");
    basis.generate({dbl.of(toy.basis_elem(0)), dbl.of(toy.basis_elem(1)), dbl.unit_bar()}, 5,
                   {1, false});
    j_table = basis.dimension_table();
    j_table.unital = true;
  } else {
    std::cerr << "series: supported examples are R, Q, Toy\n";
    return kExitUsage;
  }

  TruncatedSeries hl = hilbert(l_table, 1);
  TruncatedSeries hj_direct = hilbert(j_table, 1);
  TruncatedSeries hj_formula = jordan_transfer(hl);
  int window = std::min<int>(hj_formula.truncation(), static_cast<int>(j_table.max_degree));
  bool match = hj_formula.agrees_to(hj_direct, window);
  TransferConsistency counts = transfer_consistency(l_table, j_table);

  std::string payload = series_json(hl, "H(L,t)") + series_json(hj_direct, "H(J,t) direct") +
                        series_json(hj_formula, "H(J,t) transfer");
  if (bivariate) payload += series_json(jordan_transfer_bivariate(hl), "H(J,t1,t2) transfer");
  payload += std::string("{\"transfer_matches_direct\": ") + (match ? "true" : "false") +
             ", \"window\": " + std::to_string(window) + "}\n";
  std::cout << write_text(o.out_dir, "series_" + o.example + ".json", payload) << "\n";
  for (const auto& line : counts.lines)
    if (line.rfind("FAIL", 0) == 0) std::cout << line << "\n";
  if (!match || !counts.ok) {
    std::cerr << "series: transfer formula and direct dimensions disagree\n";
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_verify(const CommonOpts& o, const std::string& suite) {
  VerifyConfig cfg;
  cfg.field = FieldSpec::parse(o.field);
  cfg.trunc = o.trunc;
  cfg.degree = o.degree;
  cfg.seed = o.seed;
  cfg.workers = o.workers;
  SuiteResult res = run_suite(o.example, suite, cfg);
  std::string payload;
  for (const auto& rep : res.identities) payload += identity_json(rep);
  for (const auto& [label, rep] : res.checks) payload += check_json(rep, label);
  std::string name =
      "verify_" + (o.example.empty() ? std::string("recursion") : o.example) + "_" + suite + ".json";
  std::cout << write_text(o.out_dir, name, payload) << "\n";
  for (const auto& rep : res.identities)
    std::cout << rep.identity << " on " << rep.algebra << " [" << rep.strategy
              << "]: " << rep.verdict() << "\n";
  for (const auto& [label, rep] : res.checks)
    std::cout << label << ": " << (rep.ok ? "ok" : "FAIL") << "\n";
  return res.ok() ? kExitOk : kExitViolation;
}

int cmd_growth(const CommonOpts& o, const std::string& window) {
  const ExampleInfo* info = find_example(o.example);
  if (!info || !info->dims_supported) {
    std::cerr << "growth: example '" << o.example << "' has no dimension table\n";
    return kExitUsage;
  }
  FieldSpec field = FieldSpec::parse(o.field);
  DimensionTable table =
      example_dims(o.example, field, resolved_trunc(o, *info), resolved_degree(o, *info), o.workers);
  auto gamma = table.growth();
  unsigned n0 = std::max(2u, table.max_degree / 2), n1 = table.max_degree;
  if (!window.empty()) {
    auto colon = window.find(':');
    if (colon == std::string::npos) {
      std::cerr << "growth: window must be n0:n1\n";
      return kExitUsage;
    }
    n0 = static_cast<unsigned>(std::stoul(window.substr(0, colon)));
    n1 = static_cast<unsigned>(std::stoul(window.substr(colon + 1)));
  }
  double slope = gk_slope(gamma, n0, n1);
  std::cout << write_text(o.out_dir, "growth_" + o.example + ".json",
                          growth_json(table, gamma, slope, n0, n1))
            << "\n";
  std::cout << "gk slope over [" << n0 << "," << n1 << "] = " << slope << "\n";
  return kExitOk;
}

int cmd_catalog() {
  for (const auto& e : example_catalog()) {
    std::cout << e.name << "\t" << e.summary << "\t(defaults: " << (e.trunc_is_triples ? "triples=" : "N=")
              << e.default_trunc << " D=" << e.default_degree << ")\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the pivot superderivation algebras and their doubles"};
  app.require_subcommand(1);

  CommonOpts dims_o, series_o, verify_o, growth_o;
  std::string suite = "all", window;
  bool bivariate = false;

  auto* dims = app.add_subcommand("dims", "graded dimension table of a catalog algebra");
  add_common(dims, dims_o);

  std::string custom_dims;
  auto* series = app.add_subcommand("series", "Hilbert series and the double-transfer cross-check");
  add_common(series, series_o, false);
  series->add_flag("--bivariate", bivariate, "also emit the two-variable transfer series");
  series->add_option("--dims", custom_dims,
                     "comma-separated dim L_1,L_2,...: apply the transfer to supplied data");

  auto* verify = app.add_subcommand("verify", "run identity suites");
  add_common(verify, verify_o, false);
  verify->add_option("--suite", suite, "lie|poisson|jordan|nil|recursion|all")->capture_default_str();

  auto* growth = app.add_subcommand("growth", "growth function and GK-slope diagnostic");
  add_common(growth, growth_o);
  growth->add_option("--window", window, "slope window n0:n1");

  auto* catalog = app.add_subcommand("catalog", "catalog operations");
  auto* cat_list = catalog->add_subcommand("list", "list the named examples");
  std::string table_example, table_field = "Q", table_out;
  auto* cat_table = catalog->add_subcommand("table", "export a small algebra's structure constants");
  cat_table->add_option("--example", table_example, "H1..H3, KanH1..KanH3, KanL2, M11")->required();
  cat_table->add_option("--field", table_field, "coefficient field")->capture_default_str();
  cat_table->add_option("--out", table_out, "output directory")->envname("SUPERALG_OUT_DIR");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (dims->parsed()) {
      if (dims->count("--D") && dims_o.degree < 1) {
        std::cerr << "dims: --D must be at least 1\n";
        return kExitUsage;
      }
      return cmd_dims(dims_o);
    }
    if (series->parsed()) {
      if (!custom_dims.empty()) return cmd_series_custom(series_o, custom_dims, bivariate);
      if (series_o.example.empty()) {
        std::cerr << "series: need --example or --dims\n";
        return kExitUsage;
      }
      return cmd_series(series_o, bivariate);
    }
    if (verify->parsed()) return cmd_verify(verify_o, suite);
    if (growth->parsed()) return cmd_growth(growth_o, window);
    if (catalog->parsed()) {
      if (cat_table->parsed()) {
        std::string payload = structure_table_json(table_example, FieldSpec::parse(table_field));
        std::cout << write_text(table_out, "table_" + table_example + ".json", payload) << "\n";
        return kExitOk;
      }
      (void)cat_list;
      return cmd_catalog();
    }
  } catch (const structural_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
