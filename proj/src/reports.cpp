#include "superalg/reports.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "superalg/handles.hpp"

namespace superalg {

using nlohmann::json;

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::string dims_json(const DimensionTable& table, const std::string& grading) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["algebra"] = table.algebra;
  j["field"] = table.field;
  j["N"] = table.truncation;
  j["D"] = table.max_degree;
  j["grading"] = grading;
  j["unital"] = table.unital;
  json comps = json::array();
  for (const auto& e : table.components) {
    json c;
    c["deg"] = e.deg.deg;
    c["dim"] = e.dim;
    c["reliable"] = e.reliable;
    comps.push_back(c);
  }
  j["components"] = comps;
  json totals = json::array();
  for (unsigned n = 0; n <= table.max_degree; ++n) totals.push_back(table.dim_total(n));
  j["totals"] = totals;
  j["width"] = table.width();
  auto values = table.value_set(1, table.max_degree);
  j["value_set"] = std::vector<unsigned>(values.begin(), values.end());
  return j.dump(2) + "\n";
}

std::string dims_csv(const DimensionTable& table) {
  std::string out = "deg,dim,reliable\n";
  for (const auto& e : table.components) {
    std::string deg;
    for (std::size_t i = 0; i < e.deg.deg.size(); ++i)
      deg += (i ? " " : "") + std::to_string(e.deg.deg[i]);
    out += deg + "," + std::to_string(e.dim) + "," + (e.reliable ? "1" : "0") + "\n";
  }
  return out;
}

std::string identity_json(const IdentityReport& report) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["identity"] = report.identity;
  j["algebra"] = report.algebra;
  j["strategy"] = report.strategy;
  j["seed"] = report.seed;
  j["tuples"] = report.tuples;
  j["verdict"] = report.verdict();
  json v = json::array();
  for (const auto& w : report.violations) {
    json e;
    e["tuple"] = w.labels;
    e["defect"] = w.defect;
    v.push_back(e);
  }
  j["violations"] = v;
  return j.dump(2) + "\n";
}

std::string series_json(const TruncatedSeries& series, const std::string& label) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["label"] = label;
  j["variables"] = series.variables();
  j["truncation"] = series.truncation();
  json terms = json::array();
  for (const auto& [e, c] : series.coeffs()) {
    json t;
    t["exp"] = series.variables() == 1 ? std::vector<int>{e[0]} : std::vector<int>{e[0], e[1]};
    t["coeff"] = c;
    terms.push_back(t);
  }
  j["terms"] = terms;
  j["text"] = series.str();
  return j.dump(2) + "\n";
}

std::string check_json(const CheckReport& report, const std::string& label) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["check"] = label;
  j["ok"] = report.ok;
  j["lines"] = report.lines;
  return j.dump(2) + "\n";
}

std::string growth_json(const DimensionTable& table, const std::vector<unsigned long>& gamma,
                        double slope, unsigned n0, unsigned n1) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["algebra"] = table.algebra;
  j["field"] = table.field;
  j["N"] = table.truncation;
  j["D"] = table.max_degree;
  j["gamma"] = gamma;
  json ratios = json::array();
  for (unsigned n = 1; n < gamma.size(); ++n)
    ratios.push_back(fixed6(static_cast<double>(gamma[n]) / static_cast<double>(n)));
  j["gamma_over_n"] = ratios;
  j["gk_slope"] = fixed6(slope);
  j["gk_window"] = {n0, n1};
  return j.dump(2) + "\n";
}

namespace {

json grassmann_coords(const GrassmannElement& e, const std::vector<Monomial>& basis) {
  json out = json::array();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Scalar c = e.coeff(basis[i]);
    if (!c.is_zero()) out.push_back({i, c.str()});
  }
  return out;
}

json kantor_coords(const KantorElement& e, const std::vector<Monomial>& basis) {
  // plain half occupies indices 0..n-1, barred half n..2n-1
  json out = json::array();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Scalar c = e.plain.coeff(basis[i]);
    if (!c.is_zero()) out.push_back({i, c.str()});
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Scalar c = e.barred.coeff(basis[i]);
    if (!c.is_zero()) out.push_back({basis.size() + i, c.str()});
  }
  return out;
}

std::string monomial_label(const VarTablePtr& vars, Monomial m) {
  if (m.empty()) return "1";
  std::string s;
  for (unsigned i : m.indices()) s += vars->name(i);
  return s;
}

json poisson_table(const PoissonPtr& structure) {
  const VarTablePtr& vars = structure->vars();
  auto basis = GrassmannPoissonHandle::monomials_to_degree(vars->count(), vars->count());
  json j;
  json labels = json::array();
  for (Monomial m : basis) labels.push_back(monomial_label(vars, m));
  j["basis"] = labels;
  Scalar one = Scalar::one(vars->field());
  json dot = json::array(), br = json::array();
  for (Monomial a : basis) {
    GrassmannElement ea = GrassmannElement::monomial(vars, a, one);
    json dot_row = json::array(), br_row = json::array();
    for (Monomial b : basis) {
      GrassmannElement eb = GrassmannElement::monomial(vars, b, one);
      dot_row.push_back(grassmann_coords(structure->dot(ea, eb), basis));
      br_row.push_back(grassmann_coords(structure->bracket(ea, eb), basis));
    }
    dot.push_back(dot_row);
    br.push_back(br_row);
  }
  j["products"]["dot"] = dot;
  j["products"]["bracket"] = br;
  return j;
}

json kantor_table(const PoissonPtr& structure, const std::string& name) {
  const VarTablePtr& vars = structure->vars();
  auto basis = GrassmannPoissonHandle::monomials_to_degree(vars->count(), vars->count());
  json j;
  json labels = json::array();
  for (Monomial m : basis) labels.push_back(monomial_label(vars, m));
  for (Monomial m : basis) labels.push_back("b(" + monomial_label(vars, m) + ")");
  j["basis"] = labels;
  Scalar one = Scalar::one(vars->field());
  std::vector<KantorElement> elems;
  for (Monomial m : basis) elems.push_back(KantorElement::of(GrassmannElement::monomial(vars, m, one)));
  for (Monomial m : basis) elems.push_back(KantorElement::bar(GrassmannElement::monomial(vars, m, one)));
  json mul = json::array();
  for (const auto& a : elems) {
    json row = json::array();
    for (const auto& b : elems) row.push_back(kantor_coords(kantor_mul(a, b, *structure), basis));
    mul.push_back(row);
  }
  j["products"]["mul"] = mul;
  (void)name;
  return j;
}

json m11_table(FieldSpec field) {
  auto vars = VarTable::plain(1, field);
  Operator d0 = Operator::partial_op(vars, 0);
  Operator x0 = Operator::multiplication(GrassmannElement::variable(vars, 0));
  Operator units[4] = {compose(d0, x0), d0, x0, compose(x0, d0)};  // E11 E12 E21 E22
  json j;
  j["basis"] = {"E11", "E12", "E21", "E22"};
  // coordinates solved from the normal-ordered supports:
  // c11 = coeff(1), c22 = coeff(x d) + c11, c12 = coeff(d), c21 = coeff(x)
  auto coords = [&](const Operator& p) {
    Scalar c11 = Scalar::zero(field), cxd = Scalar::zero(field), c12 = Scalar::zero(field),
           c21 = Scalar::zero(field);
    for (const auto& [t, c] : p.terms()) {
      if (t.left.empty() && t.deriv.empty()) c11 = c;
      if (t.left == Monomial::var(0) && t.deriv == Monomial::var(0)) cxd = c;
      if (t.left.empty() && t.deriv == Monomial::var(0)) c12 = c;
      if (t.left == Monomial::var(0) && t.deriv.empty()) c21 = c;
    }
    Scalar c22 = cxd + c11;
    json out = json::array();
    Scalar cs[4] = {c11, c12, c21, c22};
    for (int i = 0; i < 4; ++i)
      if (!cs[i].is_zero()) out.push_back({i, cs[i].str()});
    return out;
  };
  json mul = json::array();
  for (const auto& a : units) {
    json row = json::array();
    for (const auto& b : units) row.push_back(coords(compose(a, b)));
    mul.push_back(row);
  }
  j["products"]["compose"] = mul;
  return j;
}

}  // namespace

std::string structure_table_json(const std::string& name, FieldSpec field) {
  json j;
  if (name == "H1" || name == "H2" || name == "H3") {
    unsigned n = name[1] - '0';
    j = poisson_table(PairingPoisson::hamiltonian(n, field));
  } else if (name == "KanH1" || name == "KanH2" || name == "KanH3") {
    unsigned n = name[4] - '0';
    j = kantor_table(PairingPoisson::hamiltonian(n, field), name);
  } else if (name == "KanL2") {
    j = kantor_table(PairingPoisson::grassmann_poisson(2, field), name);
  } else if (name == "M11") {
    j = m11_table(field);
  } else {
    throw structural_error("no materialized table for example '" + name + "'");
  }
  j["schema_version"] = kSchemaVersion;
  j["algebra"] = name;
  j["field"] = field.str();
  return j.dump(2) + "\n";
}

std::string write_text(const std::string& dir, const std::string& filename, const std::string& payload) {
  std::filesystem::path p = dir.empty() ? std::filesystem::path(filename)
                                        : std::filesystem::path(dir) / filename;
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw structural_error("cannot write " + p.string());
  out << payload;
  return p.string();
}

}  // namespace superalg
