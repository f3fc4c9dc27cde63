#include "superalg/examples.hpp"

namespace superalg {

const std::vector<ExampleInfo>& example_catalog() {
  static const std::vector<ExampleInfo> catalog = {
      {"R", "Lie superalgebra generated by the pivot derivations v0, v1", 24, 20, false, true, "Z2"},
      {"AR", "associative hull of R: all operator words in v0, v1", 16, 10, false, true, "Z2"},
      {"Q", "Lie superalgebra generated by the letter pivots a0, b0, c0", 8, 8, true, true, "Z3"},
      {"AQ", "associative hull of Q", 8, 6, true, true, "Z3"},
      {"PQ", "Poisson subalgebra generated by the lifted pivots A0, B0, C0", 5, 6, true, true, "Z3"},
      {"JorR", "Jordan double of R, generated by v0, v1 and the bar unit", 24, 59, false, true, "Z3"},
      {"JorQ", "Jordan double of Q", 8, 20, true, true, "Z4"},
      {"M11", "Alg(d0, x0): the 2x2 matrix superalgebra", 1, 4, false, true, "filtration"},
      {"H1", "Hamiltonian Poisson superalgebra on x0, y0", 1, 2, false, false, "-"},
      {"H2", "Hamiltonian Poisson superalgebra on x0, y0, x1, y1", 2, 4, false, false, "-"},
      {"H3", "Hamiltonian Poisson superalgebra, three dual pairs", 3, 6, false, false, "-"},
      {"KanH1", "Kantor double of H1", 1, 2, false, false, "-"},
      {"KanH2", "Kantor double of H2", 2, 4, false, false, "-"},
      {"KanH3", "Kantor double of H3", 3, 6, false, false, "-"},
      {"KanL2", "Kantor double of the self-paired Grassmann algebra on 2 variables", 2, 2, false, false,
       "-"},
      {"WreathH1", "wreath-candidate product on H1 (x) Kan(H1)", 1, 4, false, false, "-"},
      {"Toy", "2-step nilpotent toy Lie superalgebra and its Jordan double", 0, 2, false, true, "Z2"},
      {"ToyBroken", "toy bracket with a wrong sign: negative control, every suite must flag it", 0, 2,
       false, false, "-"},
  };
  return catalog;
}

const ExampleInfo* find_example(const std::string& name) {
  for (const auto& e : example_catalog())
    if (e.name == name) return &e;
  return nullptr;
}

LieBasis build_R(FieldSpec field, unsigned n, unsigned degree, unsigned workers) {
  auto vars = VarTable::plain(n, field);
  LieBasis basis(LieDerivationPolicy{vars}, "R");
  basis.generate({pivot_v(0, vars), pivot_v(1, vars)}, degree, {workers, true});
  return basis;
}

AssocBasis build_AR(FieldSpec field, unsigned n, unsigned degree, unsigned workers) {
  auto vars = VarTable::plain(n, field);
  AssocBasis basis(AssocOperatorPolicy{vars}, "AR");
  basis.generate({derivation_to_operator(pivot_v(0, vars)), derivation_to_operator(pivot_v(1, vars))},
                 degree, {workers, true});
  return basis;
}

LieBasis build_Q(FieldSpec field, unsigned triples, unsigned degree, unsigned workers) {
  auto vars = abc_table(triples, field);
  LieBasis basis(LieDerivationPolicy{vars}, "Q");
  basis.generate({pivot_abc(PivotLetter::a, 0, vars), pivot_abc(PivotLetter::b, 0, vars),
                  pivot_abc(PivotLetter::c, 0, vars)},
                 degree, {workers, true});
  return basis;
}

AssocBasis build_AQ(FieldSpec field, unsigned triples, unsigned degree, unsigned workers) {
  auto vars = abc_table(triples, field);
  AssocBasis basis(AssocOperatorPolicy{vars}, "AQ");
  basis.generate({derivation_to_operator(pivot_abc(PivotLetter::a, 0, vars)),
                  derivation_to_operator(pivot_abc(PivotLetter::b, 0, vars)),
                  derivation_to_operator(pivot_abc(PivotLetter::c, 0, vars))},
                 degree, {workers, true});
  return basis;
}

PoissonBasis build_PQ(FieldSpec field, unsigned triples, unsigned degree, unsigned workers) {
  auto vars = lift_table(triples, field);
  auto pairing = PairingPoisson::lift_pairing(vars);
  PoissonBasis basis(PoissonElementPolicy{pairing}, "PQ");
  basis.generate({poisson_ABC(PivotLetter::a, 0, vars), poisson_ABC(PivotLetter::b, 0, vars),
                  poisson_ABC(PivotLetter::c, 0, vars)},
                 degree, {workers, true});
  return basis;
}

namespace {

JorRBasis build_jordan_double(VarTablePtr vars, std::vector<SuperDerivation> lie_gens, std::string name,
                              unsigned degree, unsigned workers) {
  JordanDouble<DerivationLieOps> dbl(DerivationLieOps{vars});
  JordanDoublePolicy<DerivationLieOps> policy{dbl, vars->count()};
  JorRBasis basis(policy, std::move(name));
  std::vector<JorElem<DerivationLieOps>> gens;
  for (auto& g : lie_gens) gens.push_back(dbl.of(std::move(g)));
  gens.push_back(dbl.unit_bar());
  basis.generate(std::move(gens), degree, {workers, true});
  return basis;
}

}  // namespace

JorRBasis build_JorR(FieldSpec field, unsigned n, unsigned degree, unsigned workers) {
  auto vars = VarTable::plain(n, field);
  return build_jordan_double(vars, {pivot_v(0, vars), pivot_v(1, vars)}, "JorR", degree, workers);
}

JorRBasis build_JorQ(FieldSpec field, unsigned triples, unsigned degree, unsigned workers) {
  auto vars = abc_table(triples, field);
  return build_jordan_double(vars,
                             {pivot_abc(PivotLetter::a, 0, vars), pivot_abc(PivotLetter::b, 0, vars),
                              pivot_abc(PivotLetter::c, 0, vars)},
                             "JorQ", degree, workers);
}

DimensionTable example_dims(const std::string& name, FieldSpec field, unsigned trunc, unsigned degree,
                            unsigned workers) {
  if (name == "R") return build_R(field, trunc, degree, workers).dimension_table();
  if (name == "AR") return build_AR(field, trunc, degree, workers).dimension_table();
  if (name == "Q") return build_Q(field, trunc, degree, workers).dimension_table();
  if (name == "AQ") return build_AQ(field, trunc, degree, workers).dimension_table();
  if (name == "PQ") return build_PQ(field, trunc, degree, workers).dimension_table();
  if (name == "JorR") {
    DimensionTable t = build_JorR(field, trunc, degree, workers).dimension_table();
    t.unital = true;
    return t;
  }
  if (name == "JorQ") {
    DimensionTable t = build_JorQ(field, trunc, degree, workers).dimension_table();
    t.unital = true;
    return t;
  }
  if (name == "Toy") {
    TableLieOps toy = TableLieOps::nilpotent_toy(field);
    DimensionTable t;
    t.algebra = "Toy";
    t.field = field.str();
    t.truncation = 0;
    t.max_degree = std::max(degree, 2u);
    t.rank = 2;
    t.components.push_back({MultiDegree{{1, 0}}, 1, true});
    t.components.push_back({MultiDegree{{0, 1}}, 1, true});
    t.components.push_back({MultiDegree{{1, 1}}, 1, true});
    return t;
  }
  if (name == "M11") {
    auto vars = VarTable::plain(std::max(trunc, 1u), field);
    Operator d0 = Operator::partial_op(vars, 0);
    Operator x0 = Operator::multiplication(GrassmannElement::variable(vars, 0));
    FilteredAssocBasis fb = filtered_assoc_closure(vars, {d0, x0}, std::max(degree, 2u));
    DimensionTable t;
    t.algebra = "M11";
    t.field = field.str();
    t.truncation = vars->count();
    t.max_degree = std::max(degree, 2u);
    t.rank = 1;
    unsigned long prev = 0;
    for (unsigned n = 1; n <= t.max_degree; ++n) {
      unsigned long cur = fb.cumulative_dim[n];
      if (cur > prev) t.components.push_back({MultiDegree{{n}}, static_cast<unsigned>(cur - prev), true});
      prev = cur;
    }
    return t;
  }
  throw structural_error("example '" + name + "' has no dimension table");
}

std::string jor_elem_str(const JordanDouble<DerivationLieOps>& dbl, const JorElem<DerivationLieOps>& e) {
  return dbl.str(e);
}

JorElem<DerivationLieOps> jor_elem_parse(const JordanDouble<DerivationLieOps>& dbl,
                                         const std::string& text) {
  // format: c*1 + (<op>) + c*1b + b(<op>)
  auto fail = [&] { throw structural_error("cannot parse double element '" + text + "'"); };
  auto e = dbl.zero();
  std::size_t p1 = text.find("*1 + (");
  if (p1 == std::string::npos) fail();
  e.one = Scalar::parse(dbl.lie().field(), text.substr(0, p1));
  std::size_t p2 = text.find(") + ", p1);
  if (p2 == std::string::npos) fail();
  std::string op1 = text.substr(p1 + 6, p2 - (p1 + 6));
  std::size_t p3 = text.find("*1b + b(", p2);
  if (p3 == std::string::npos) fail();
  e.onebar = Scalar::parse(dbl.lie().field(), text.substr(p2 + 4, p3 - (p2 + 4)));
  if (text.back() != ')') fail();
  std::string op2 = text.substr(p3 + 8, text.size() - 1 - (p3 + 8));
  const VarTablePtr& vars = dbl.lie().vars;
  auto to_der = [&](const std::string& s) {
    auto d = operator_to_derivation(Operator::parse(vars, s));
    if (!d) throw structural_error("double element L-part is not a superderivation");
    return *d;
  };
  e.ell = to_der(op1);
  e.ellbar = to_der(op2);
  return e;
}

}  // namespace superalg
