#include <doctest.h>

#include <sstream>

#include "superalg/catalog.hpp"
#include "superalg/examples.hpp"

using namespace superalg;

TEST_CASE("single-generator degenerate algebras") {
  auto vars = VarTable::plain(6, FieldSpec::rationals());

  SUBCASE("Lie({d0}) is one-dimensional, all brackets zero") {
    LieBasis basis(LieDerivationPolicy{vars}, "d0");
    basis.generate({SuperDerivation::partial_derivation(vars, 0)}, 6, {1, true});
    CHECK(basis.dimension_table().dim_total(1) == 1);
    for (unsigned n = 2; n <= 6; ++n) CHECK(basis.dimension_table().dim_total(n) == 0);
  }

  SUBCASE("Alg({x0}) has dims (1,0,0,...)") {
    AssocBasis basis(AssocOperatorPolicy{vars}, "x0");
    basis.generate({Operator::multiplication(GrassmannElement::variable(vars, 0))}, 5, {1, true});
    DimensionTable t = basis.dimension_table();
    CHECK(t.dim_total(1) == 1);
    for (unsigned n = 2; n <= 5; ++n) CHECK(t.dim_total(n) == 0);
  }
}

TEST_CASE("R at small scale: dims, grading, growth") {
  LieBasis basis = build_R(FieldSpec::rationals(), 16, 10, 1);
  DimensionTable t = basis.dimension_table();

  CHECK(t.dim_total(1) == 2);
  for (unsigned n = 2; n <= 10; ++n) {
    unsigned d = t.dim_total(n);
    CHECK(d >= 2);
    CHECK(d <= 4);
  }
  for (const auto& e : t.components) CHECK(e.dim <= 1);  // fine Z^2 grading

  auto gamma = t.growth();
  CHECK(gamma[0] == 0);
  for (unsigned n = 1; n < gamma.size(); ++n) CHECK(gamma[n] >= gamma[n - 1]);

  SUBCASE("gradedness: products of basis rows stay in the components") {
    for (const auto& [m1, c1] : basis.components()) {
      for (const auto& [m2, c2] : basis.components()) {
        if (m1.total() + m2.total() > 9) continue;
        for (const auto& r1 : c1.rows)
          for (const auto& r2 : c2.rows) {
            SuperDerivation prod = bracket(r1, r2);
            if (prod.is_zero()) continue;
            auto [coords, residual] = basis.coordinates(m1 + m2, prod);
            CHECK(residual.empty());
          }
      }
    }
  }

  SUBCASE("stability: dims agree with the N+2 run on reliable components") {
    LieBasis bigger = build_R(FieldSpec::rationals(), 18, 10, 1);
    DimensionTable t2 = bigger.dimension_table();
    for (const auto& e : t.components) {
      if (!e.reliable) continue;
      bool found = false;
      for (const auto& e2 : t2.components)
        if (e2.deg == e.deg) {
          found = true;
          CHECK(e2.dim == e.dim);
        }
      CHECK(found);
    }
  }
}

TEST_CASE("determinism across runs and worker counts") {
  LieBasis one = build_R(FieldSpec::rationals(), 14, 8, 1);
  LieBasis two = build_R(FieldSpec::rationals(), 14, 8, 2);
  LieBasis four = build_R(FieldSpec::rationals(), 14, 8, 4);
  CHECK(one.serialize() == two.serialize());
  CHECK(one.serialize() == four.serialize());

  AssocBasis a1 = build_AR(FieldSpec::rationals(), 12, 6, 1);
  AssocBasis a3 = build_AR(FieldSpec::rationals(), 12, 6, 3);
  CHECK(a1.serialize() == a3.serialize());
}

TEST_CASE("serialized bases reload for caching") {
  auto vars = VarTable::plain(14, FieldSpec::rationals());
  AssocBasis basis = build_AR(FieldSpec::rationals(), 14, 5, 1);
  std::string dump = basis.serialize();

  // rebuild the span from the dumped rows alone and compare dimensions
  AssocOperatorPolicy policy{vars};
  std::map<std::string, unsigned> reloaded_dims;
  std::istringstream in(dump);
  std::string line, current;
  detail::Echelon<OperatorTerm, OperatorTermLess> ech;
  auto flush = [&] {
    if (!current.empty()) reloaded_dims[current] = ech.dim();
    ech = {};
  };
  while (std::getline(in, line)) {
    if (line.rfind("component ", 0) == 0) {
      flush();
      current = line.substr(10, line.find(" dim") - 10);
    } else if (line.rfind("  ", 0) == 0) {
      ech.insert(policy.to_terms(Operator::parse(vars, line.substr(2))));
    }
  }
  flush();
  for (const auto& [m, comp] : basis.components()) {
    REQUIRE(reloaded_dims.count(m.str()) == 1);
    CHECK(reloaded_dims[m.str()] == comp.rows.size());
  }
}

TEST_CASE("periodicity probe") {
  CHECK(periodicity_probe(std::vector<unsigned>(12, 7)) == 1u);
  std::vector<unsigned> two = {2, 3, 2, 3, 2, 3, 2, 3, 2, 3, 2, 3};
  CHECK(periodicity_probe(two) == 2u);
  CHECK_THROWS_AS(periodicity_probe({1, 2, 3}), structural_error);

  LieBasis basis = build_R(FieldSpec::rationals(), 24, 20, 2);
  DimensionTable t = basis.dimension_table();
  std::vector<unsigned> dims;
  for (unsigned n = 1; n <= 20; ++n) dims.push_back(t.dim_total(n));
  CHECK(!periodicity_probe(dims).has_value());
}

TEST_CASE("x0 v1 is outside the computed span of R") {
  // desk-scale membership probe; the window cannot certify non-membership
  // beyond itself, so only the in-window reduction is asserted
  auto vars = VarTable::plain(16, FieldSpec::rationals());
  LieBasis basis = build_R(FieldSpec::rationals(), 16, 10, 1);
  SuperDerivation x0v1 = left_multiply(GrassmannElement::variable(vars, 0), pivot_v(1, vars));
  LieDerivationPolicy policy{vars};
  detail::Echelon<DerTermKey, DerTermKeyLess> all;
  for (const auto& [m, comp] : basis.components())
    for (const auto& row : comp.rows) all.insert(policy.to_terms(row));
  auto v = policy.to_terms(x0v1);
  all.reduce(v);
  CHECK(!v.empty());
}

TEST_CASE("growth over a prime field runs clean") {
  LieBasis basis = build_R(FieldSpec::prime(7), 12, 6, 1);
  DimensionTable t = basis.dimension_table();
  CHECK(t.dim_total(1) == 2);
  CHECK(t.field == "F7");

  SUBCASE("dims agree with the rational run on this window") {
    DimensionTable f5 = build_R(FieldSpec::prime(5), 16, 8, 1).dimension_table();
    DimensionTable qq = build_R(FieldSpec::rationals(), 16, 8, 1).dimension_table();
    for (unsigned n = 1; n <= 8; ++n) CHECK(f5.dim_total(n) == qq.dim_total(n));
  }
}

TEST_CASE("ad-nilpotency probe") {
  auto vars = VarTable::plain(16, FieldSpec::rationals());
  LieBasis basis = build_R(FieldSpec::rationals(), 16, 6, 1);

  std::function<SuperDerivation(const SuperDerivation&, const SuperDerivation&)> br =
      [](const SuperDerivation& a, const SuperDerivation& b) { return bracket(a, b); };
  std::function<bool(const SuperDerivation&)> is_zero = [](const SuperDerivation& d) {
    return d.is_zero();
  };

  SUBCASE("an element bracketing to zero with everything has index 1") {
    // x0 x1 v2 is central enough at tiny degree? use the zero test directly:
    // brackets of v0 with itself only, basis = {v0}
    std::vector<std::pair<SuperDerivation, unsigned>> rows = {{pivot_v(0, vars), 1}};
    SuperDerivation central(vars);  // zero derivation
    AdNilResult r = ad_nil_index<SuperDerivation>(br, is_zero, central, 1, rows, 20, 8);
    CHECK(r.conclusive);
    CHECK(r.index == 1);
  }

  SUBCASE("ad v0 on the computed window is recorded or inconclusive") {
    std::vector<std::pair<SuperDerivation, unsigned>> rows;
    for (const auto& [m, comp] : basis.components())
      if (comp.reliable)
        for (const auto& r : comp.rows) rows.emplace_back(r, m.total());
    AdNilResult r = ad_nil_index<SuperDerivation>(br, is_zero, pivot_v(0, vars), 1, rows, 6, 8);
    // no closed-form index is asserted; the probe must only terminate
    CHECK((r.conclusive || !r.conclusive));
  }
}
