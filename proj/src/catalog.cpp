#include "superalg/catalog.hpp"

namespace superalg {

SuperDerivation pivot_v(unsigned i, const VarTablePtr& vars) {
  if (vars->family_count() != 1) throw structural_error("pivot_v lives over a single-family table");
  unsigned n = vars->count();
  if (i >= n) throw structural_error("pivot index exceeds truncation");
  SuperDerivation d(vars);
  Monomial prefix;
  for (unsigned k = 0; i + 2 * k < n; ++k) {
    if (k > 0) {
      prefix.bits |= std::uint64_t(1) << (i + 2 * k - 2);
      prefix.bits |= std::uint64_t(1) << (i + 2 * k - 1);
    }
    d.set_image(i + 2 * k, GrassmannElement::monomial(vars, prefix, Scalar::one(vars->field())));
  }
  return d;
}

VarTablePtr abc_table(unsigned triples, FieldSpec field) {
  return VarTable::interleaved({"x", "y", "z"}, triples, field);
}

VarTablePtr lift_table(unsigned triples, FieldSpec field) {
  return VarTable::interleaved({"x", "y", "z", "X", "Y", "Z"}, triples, field);
}

namespace {

// chain family and coefficient pair per letter: a acts on x with y_m x_m,
// b on y with z_m y_m, c on z with x_m z_m
struct LetterShape {
  unsigned chain;
  unsigned coeff_first;
  unsigned coeff_second;
};

LetterShape letter_shape(PivotLetter letter) {
  switch (letter) {
    case PivotLetter::a: return {0, 1, 0};  // x chain, y x
    case PivotLetter::b: return {1, 2, 1};  // y chain, z y
    default: return {2, 0, 2};              // z chain, x z
  }
}

}  // namespace

SuperDerivation pivot_abc(PivotLetter letter, unsigned i, const VarTablePtr& vars) {
  if (vars->family_count() != 3) throw structural_error("pivot_abc lives over an x,y,z table");
  unsigned triples = vars->members();
  if (i >= triples) throw structural_error("pivot index exceeds truncation");
  LetterShape sh = letter_shape(letter);
  SuperDerivation d(vars);
  GrassmannElement coeff = GrassmannElement::one(vars);
  for (unsigned k = 0; i + k < triples; ++k) {
    if (k > 0) {
      unsigned m = i + k - 1;
      coeff = coeff * GrassmannElement::variable(vars, vars->flat(sh.coeff_first, m));
      coeff = coeff * GrassmannElement::variable(vars, vars->flat(sh.coeff_second, m));
    }
    d.set_image(vars->flat(sh.chain, i + k), coeff);
  }
  return d;
}

GrassmannElement poisson_ABC(PivotLetter letter, unsigned i, const VarTablePtr& vars) {
  if (vars->family_count() != 6) throw structural_error("poisson_ABC lives over the lift carrier");
  unsigned triples = vars->members();
  if (i >= triples) throw structural_error("pivot index exceeds truncation");
  LetterShape sh = letter_shape(letter);
  GrassmannElement out = GrassmannElement::zero(vars);
  GrassmannElement coeff = GrassmannElement::one(vars);
  for (unsigned k = 0; i + k < triples; ++k) {
    if (k > 0) {
      unsigned m = i + k - 1;
      coeff = coeff * GrassmannElement::variable(vars, vars->flat(sh.coeff_first, m));
      coeff = coeff * GrassmannElement::variable(vars, vars->flat(sh.coeff_second, m));
    }
    // capital letter family sits three slots after the small letters
    out += coeff * GrassmannElement::variable(vars, vars->flat(sh.chain + 3, i + k));
  }
  return out;
}

Monomial shift_tau(Monomial m, const VarTable& vars) {
  unsigned stride = vars.family_count();
  Monomial out;
  for (unsigned i : m.indices()) {
    if (i + stride >= vars.count())
      throw structural_error("shift overflows the truncation at " + vars.name(i));
    out.bits |= std::uint64_t(1) << (i + stride);
  }
  return out;
}

GrassmannElement shift_tau(const GrassmannElement& f) {
  GrassmannElement r(f.vars());
  for (const auto& [m, c] : f.terms()) r.add_term(shift_tau(m, *f.vars()), c);
  return r;
}

SuperDerivation shift_tau(const SuperDerivation& d) {
  const VarTable& vars = *d.vars();
  unsigned stride = vars.family_count();
  SuperDerivation r(d.vars());
  for (unsigned i = 0; i < vars.count(); ++i) {
    if (d.image(i).is_zero()) continue;
    if (i + stride >= vars.count())
      throw structural_error("shift overflows the truncation at d" + std::to_string(i));
    r.set_image(i + stride, shift_tau(d.image(i)));
  }
  return r;
}

Operator shift_tau(const Operator& e) {
  Operator r(e.vars());
  for (const auto& [t, c] : e.terms())
    r.add_term({shift_tau(t.left, *e.vars()), shift_tau(t.deriv, *e.vars())}, c);
  return r;
}

GrassmannElement embed(const GrassmannElement& f, const VarTablePtr& into) {
  if (into->family_count() != f.vars()->family_count() || into->count() < f.vars()->count() ||
      into->field() != f.vars()->field())
    throw structural_error("embedding target table is incompatible");
  GrassmannElement r(into);
  for (const auto& [m, c] : f.terms()) r.add_term(m, c);
  return r;
}

SuperDerivation embed(const SuperDerivation& d, const VarTablePtr& into) {
  SuperDerivation r(into);
  for (unsigned i = 0; i < d.vars()->count(); ++i)
    if (!d.image(i).is_zero()) r.set_image(i, embed(d.image(i), into));
  return r;
}

CheckReport recursion_check_R(const VarTablePtr& vars, unsigned count) {
  CheckReport rep;
  for (unsigned i = 0; i < count; ++i) {
    SuperDerivation lhs = pivot_v(i, vars);
    Monomial step = Monomial::of({i, i + 1});
    SuperDerivation rhs = SuperDerivation::partial_derivation(vars, i) +
                          left_multiply(GrassmannElement::monomial(vars, step, Scalar::one(vars->field())),
                                        pivot_v(i + 2, vars));
    rep.record("v" + std::to_string(i) + " = d" + std::to_string(i) + " + x" + std::to_string(i) + "x" +
                   std::to_string(i + 1) + " v" + std::to_string(i + 2),
               lhs == rhs);
  }
  // the shift reproduces the next pivot across truncations
  auto shrunk = VarTable::plain(vars->count() - 1, vars->field());
  for (unsigned i = 0; i < count; ++i) {
    SuperDerivation shifted = shift_tau(embed(pivot_v(i, shrunk), vars));
    rep.record("tau(v" + std::to_string(i) + ") = v" + std::to_string(i + 1), shifted == pivot_v(i + 1, vars));
  }
  return rep;
}

CheckReport recursion_check_Q(const VarTablePtr& vars) {
  CheckReport rep;
  struct Case {
    PivotLetter letter;
    const char* name;
  };
  for (const Case& c : {Case{PivotLetter::a, "a"}, Case{PivotLetter::b, "b"}, Case{PivotLetter::c, "c"}}) {
    LetterShape sh = letter_shape(c.letter);
    SuperDerivation lhs = pivot_abc(c.letter, 0, vars);
    GrassmannElement coeff = GrassmannElement::variable(vars, vars->flat(sh.coeff_first, 0)) *
                             GrassmannElement::variable(vars, vars->flat(sh.coeff_second, 0));
    SuperDerivation rhs =
        SuperDerivation::partial_derivation(vars, vars->flat(sh.chain, 0)) +
        left_multiply(coeff, pivot_abc(c.letter, 1, vars));
    rep.record(std::string(c.name) + "0 recursion", lhs == rhs);
  }
  return rep;
}

CheckReport recursion_check_P(const VarTablePtr& vars) {
  CheckReport rep;
  struct Case {
    PivotLetter letter;
    const char* name;
  };
  for (const Case& c : {Case{PivotLetter::a, "A"}, Case{PivotLetter::b, "B"}, Case{PivotLetter::c, "C"}}) {
    LetterShape sh = letter_shape(c.letter);
    GrassmannElement lhs = poisson_ABC(c.letter, 0, vars);
    GrassmannElement coeff = GrassmannElement::variable(vars, vars->flat(sh.coeff_first, 0)) *
                             GrassmannElement::variable(vars, vars->flat(sh.coeff_second, 0));
    GrassmannElement rhs = GrassmannElement::variable(vars, vars->flat(sh.chain + 3, 0)) +
                           coeff * poisson_ABC(c.letter, 1, vars);
    rep.record(std::string(c.name) + "0 recursion", lhs == rhs);
  }
  return rep;
}

CheckReport pivot_square_check(const VarTablePtr& vars, unsigned count) {
  CheckReport rep;
  Scalar two = Scalar::of_int(vars->field(), 2);
  for (unsigned n = 0; n < count; ++n) {
    SuperDerivation lhs = bracket(pivot_v(n, vars), pivot_v(n, vars));
    SuperDerivation rhs =
        left_multiply(GrassmannElement::variable(vars, n + 1), pivot_v(n + 2, vars)).scaled(two);
    rep.record("[v" + std::to_string(n) + ",v" + std::to_string(n) + "] = 2 x" + std::to_string(n + 1) +
                   " v" + std::to_string(n + 2),
               lhs == rhs);
  }
  return rep;
}

CheckReport m11_check(FieldSpec field) {
  CheckReport rep;
  auto vars = VarTable::plain(1, field);
  Operator d0 = Operator::partial_op(vars, 0);
  Operator x0 = Operator::multiplication(GrassmannElement::variable(vars, 0));
  FilteredAssocBasis basis = filtered_assoc_closure(vars, {d0, x0}, 4);
  rep.record("dim Alg(d0, x0) = 4", basis.rows.size() == 4);

  // matrix-unit correspondence on the basis (1, x0): E11 = d0 x0 in normal
  // form, E22 = x0 d0, E12 = d0, E21 = x0
  Operator units[2][2] = {{compose(d0, x0), d0}, {x0, compose(x0, d0)}};
  rep.record("even part diagonal", *units[0][0].parity() == 0 && *units[1][1].parity() == 0);
  rep.record("odd part off-diagonal", *units[0][1].parity() == 1 && *units[1][0].parity() == 1);
  for (unsigned a = 0; a < 2; ++a)
    for (unsigned b = 0; b < 2; ++b) {
      rep.record("unit E" + std::to_string(a + 1) + std::to_string(b + 1) + " generated",
                 basis.contains(units[a][b]));
      for (unsigned c = 0; c < 2; ++c)
        for (unsigned d = 0; d < 2; ++d) {
          Operator prod = compose(units[a][b], units[c][d]);
          Operator expected = (b == c) ? units[a][d] : Operator::zero(vars);
          rep.record("E" + std::to_string(a + 1) + std::to_string(b + 1) + " E" + std::to_string(c + 1) +
                         std::to_string(d + 1),
                     prod == expected);
        }
    }
  return rep;
}

}  // namespace superalg
