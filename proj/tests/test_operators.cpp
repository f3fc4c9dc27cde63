#include <doctest.h>

#include <random>

#include "superalg/operators.hpp"

using namespace superalg;

namespace {

// dense matrix model of an operator on the monomial basis of a small
// truncation, an oracle independent of the normal-ordering rewriter
struct DenseModel {
  VarTablePtr vars;
  std::vector<Monomial> basis;

  explicit DenseModel(VarTablePtr v) : vars(std::move(v)) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << vars->count()); ++bits)
      basis.push_back(Monomial{bits});
  }

  std::vector<std::vector<Scalar>> matrix(const Operator& op) const {
    std::size_t n = basis.size();
    std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, Scalar::zero(vars->field())));
    for (std::size_t j = 0; j < n; ++j) {
      GrassmannElement img =
          apply(op, GrassmannElement::monomial(vars, basis[j], Scalar::one(vars->field())));
      for (std::size_t i = 0; i < n; ++i) m[i][j] = img.coeff(basis[i]);
    }
    return m;
  }

  std::vector<std::vector<Scalar>> mul(const std::vector<std::vector<Scalar>>& a,
                                       const std::vector<std::vector<Scalar>>& b) const {
    std::size_t n = basis.size();
    std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, Scalar::zero(vars->field())));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) m[i][j] += a[i][k] * b[k][j];
    return m;
  }
};

Operator random_operator(const VarTablePtr& vars, std::mt19937_64& rng, unsigned terms) {
  Operator op(vars);
  std::uint64_t mask = (std::uint64_t(1) << vars->count()) - 1;
  for (unsigned t = 0; t < terms; ++t) {
    Monomial s{rng() & mask}, d{rng() & mask};
    op.add_term({s, d}, Scalar::of_int(vars->field(), static_cast<long>(rng() % 7) - 3));
  }
  return op;
}

}  // namespace

TEST_CASE("normal ordering basics") {
  auto vars = VarTable::plain(4, FieldSpec::rationals());
  Operator d0 = Operator::partial_op(vars, 0);
  Operator x0 = Operator::multiplication(GrassmannElement::variable(vars, 0));

  // d0 x0 = 1 - x0 d0
  Operator dx = compose(d0, x0);
  Operator expect = Operator::identity(vars) - Operator::term(vars, Monomial::var(0), Monomial::var(0),
                                                              Scalar::one(vars->field()));
  CHECK(dx == expect);

  // x0 x0 = 0
  CHECK(compose(x0, x0).is_zero());

  // supercommutator of two odd operators: [d0, x0] = d0 x0 + x0 d0 = 1
  CHECK(supercommutator(d0, x0) == Operator::identity(vars));

  // term actions: apply(d0, x0 x1) = x1 and apply(x0 d1, x1) = x0
  GrassmannElement x0x1 =
      GrassmannElement::monomial(vars, Monomial::of({0, 1}), Scalar::one(vars->field()));
  CHECK(apply(d0, x0x1) == GrassmannElement::variable(vars, 1));
  Operator x0d1 = Operator::term(vars, Monomial::var(0), Monomial::var(1), Scalar::one(vars->field()));
  CHECK(apply(x0d1, GrassmannElement::variable(vars, 1)) == GrassmannElement::variable(vars, 0));
}

TEST_CASE("composition matches the dense matrix oracle") {
  auto vars = VarTable::plain(2, FieldSpec::rationals());
  DenseModel model(vars);

  Operator a = Operator::term(vars, Monomial::var(0), Monomial::var(1), Scalar::one(vars->field()));
  Operator b = Operator::term(vars, Monomial::var(1), Monomial::var(0), Scalar::one(vars->field()));
  CHECK(model.matrix(compose(a, b)) == model.mul(model.matrix(a), model.matrix(b)));

  std::mt19937_64 rng(21);
  for (int t = 0; t < 60; ++t) {
    Operator e = random_operator(vars, rng, 3);
    Operator f = random_operator(vars, rng, 3);
    CHECK(model.matrix(compose(e, f)) == model.mul(model.matrix(e), model.matrix(f)));
  }
}

TEST_CASE("composition is associative and action-compatible") {
  auto vars = VarTable::plain(6, FieldSpec::rationals());
  std::mt19937_64 rng(22);
  for (int t = 0; t < 100; ++t) {
    Operator e = random_operator(vars, rng, 3);
    Operator f = random_operator(vars, rng, 3);
    Operator g = random_operator(vars, rng, 3);
    CHECK(compose(compose(e, f), g) == compose(e, compose(f, g)));
  }

  SUBCASE("apply(compose(E,F), m) = apply(E, apply(F, m)) on the full basis") {
    std::mt19937_64 rng2(23);
    for (int t = 0; t < 10; ++t) {
      Operator e = random_operator(vars, rng2, 4);
      Operator f = random_operator(vars, rng2, 4);
      Operator ef = compose(e, f);
      for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << vars->count()); ++bits) {
        GrassmannElement m = GrassmannElement::monomial(vars, Monomial{bits}, Scalar::one(vars->field()));
        CHECK(apply(ef, m) == apply(e, apply(f, m)));
      }
    }
  }
}

TEST_CASE("supercommutator laws") {
  auto vars = VarTable::plain(5, FieldSpec::rationals());
  std::mt19937_64 rng(24);
  auto random_homog_op = [&](unsigned parity) {
    Operator op(vars);
    std::uint64_t mask = (std::uint64_t(1) << vars->count()) - 1;
    while (op.is_zero() || *op.parity() != parity) {
      op = Operator(vars);
      for (int t = 0; t < 3; ++t) {
        Monomial s{rng() & mask}, d{rng() & mask};
        if (((s.degree() + d.degree()) & 1u) != parity) continue;
        op.add_term({s, d}, Scalar::of_int(vars->field(), static_cast<long>(rng() % 5) - 2));
      }
    }
    return op;
  };

  SUBCASE("super-anticommutativity on 200 homogeneous pairs") {
    for (int t = 0; t < 200; ++t) {
      unsigned pe = rng() & 1, pf = rng() & 1;
      Operator e = random_homog_op(pe);
      Operator f = random_homog_op(pf);
      Operator lhs = supercommutator(e, f);
      Operator rhs = supercommutator(f, e);
      CHECK(lhs == ((pe & pf) ? rhs : -rhs));
    }
  }

  SUBCASE("super Jacobi on 100 homogeneous triples") {
    for (int t = 0; t < 100; ++t) {
      unsigned px = rng() & 1, py = rng() & 1;
      Operator x = random_homog_op(px);
      Operator y = random_homog_op(py);
      Operator z = random_homog_op(rng() & 1);
      Operator lhs = supercommutator(x, supercommutator(y, z));
      Operator rhs = supercommutator(supercommutator(x, y), z);
      Operator tail = supercommutator(y, supercommutator(x, z));
      rhs += (px & py) ? -tail : tail;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("operator text form round-trips") {
  auto vars = VarTable::plain(6, FieldSpec::rationals());
  std::mt19937_64 rng(25);
  for (int t = 0; t < 40; ++t) {
    Operator op = random_operator(vars, rng, 4);
    Operator back = Operator::parse(vars, op.str());
    CHECK(back == op);
    CHECK(back.str() == op.str());
  }
  Operator sample = Operator::parse(vars, "2 * x0^ x3^ d1 d4");
  CHECK(sample.terms().size() == 1);
  CHECK(sample.terms().begin()->first.left == Monomial::of({0, 3}));
  CHECK(sample.terms().begin()->first.deriv == Monomial::of({1, 4}));
}

TEST_CASE("derivations convert to operators and back") {
  auto vars = VarTable::plain(6, FieldSpec::rationals());

  SUBCASE("partials and linear combinations round-trip") {
    SuperDerivation d = SuperDerivation::partial_derivation(vars, 2);
    Operator od = derivation_to_operator(d);
    CHECK(od == Operator::partial_op(vars, 2));
    auto back = operator_to_derivation(od);
    REQUIRE(back.has_value());
    CHECK(*back == d);

    SuperDerivation sum = SuperDerivation::partial_derivation(vars, 0) +
                          SuperDerivation::partial_derivation(vars, 1).scaled(
                              Scalar::of_int(vars->field(), 3));
    auto rt = operator_to_derivation(derivation_to_operator(sum));
    REQUIRE(rt.has_value());
    CHECK(*rt == sum);
  }

  SUBCASE("operator action matches derivation action") {
    std::mt19937_64 rng(26);
    SuperDerivation d(vars);
    d.set_image(0, GrassmannElement::monomial(vars, Monomial::of({1, 2}), Scalar::one(vars->field())));
    d.set_image(3, GrassmannElement::one(vars));
    Operator od = derivation_to_operator(d);
    for (int t = 0; t < 50; ++t) {
      GrassmannElement f(vars);
      for (int k = 0; k < 3; ++k)
        f.add_term(Monomial{rng() % 64}, Scalar::of_int(vars->field(), static_cast<long>(rng() % 5) - 2));
      CHECK(apply(od, f) == d.apply(f));
    }
  }

  SUBCASE("a non-derivation is rejected by the round trip") {
    // x0 d0 d1 applies two partials, which no derivation does
    Operator bad = Operator::term(vars, Monomial::var(0), Monomial::of({0, 1}), Scalar::one(vars->field()));
    CHECK(!operator_to_derivation(bad).has_value());
  }
}

TEST_CASE("mixed-parity derivations act consistently") {
  auto vars = VarTable::plain(5, FieldSpec::rationals());
  SuperDerivation odd = SuperDerivation::partial_derivation(vars, 0);
  SuperDerivation even(vars);
  even.set_image(1, GrassmannElement::variable(vars, 2));  // x1 -> x2, an even derivation
  SuperDerivation mixed = odd + even;
  std::mt19937_64 rng(27);
  for (int t = 0; t < 50; ++t) {
    GrassmannElement f(vars);
    for (int k = 0; k < 3; ++k)
      f.add_term(Monomial{rng() % 32}, Scalar::of_int(vars->field(), static_cast<long>(rng() % 5) - 2));
    CHECK(mixed.apply(f) == odd.apply(f) + even.apply(f));
  }
  CHECK(!mixed.parity().has_value());
  CHECK(mixed.parity_part(0) == even);
  CHECK(mixed.parity_part(1) == odd);
}
