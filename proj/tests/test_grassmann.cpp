#include <doctest.h>

#include <random>

#include "superalg/grassmann.hpp"

using namespace superalg;

namespace {

// brute-force permutation-parity oracle: bubble-sort the concatenated index
// list, counting swaps; zero when an index repeats
struct OracleProduct {
  bool zero;
  int sign;
  std::vector<unsigned> sorted;
};
OracleProduct oracle_mul(std::vector<unsigned> idx) {
  int sign = 1;
  for (std::size_t i = 0; i + 1 < idx.size(); ++i)
    for (std::size_t j = 0; j + 1 < idx.size() - i; ++j)
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
  for (std::size_t i = 0; i + 1 < idx.size(); ++i)
    if (idx[i] == idx[i + 1]) return {true, 0, {}};
  return {false, sign, idx};
}

std::vector<unsigned> concat(const Monomial& a, const Monomial& b) {
  auto r = a.indices();
  auto bi = b.indices();
  r.insert(r.end(), bi.begin(), bi.end());
  return r;
}

GrassmannElement random_homogeneous(const VarTablePtr& vars, std::mt19937_64& rng, unsigned parity) {
  GrassmannElement e(vars);
  unsigned terms = 1 + rng() % 3;
  for (unsigned t = 0; t < terms; ++t) {
    Monomial m;
    unsigned deg = (rng() % 3) * 2 + parity;
    while (deg > vars->count()) deg -= 2;
    while (m.degree() < deg) m.bits |= std::uint64_t(1) << (rng() % vars->count());
    e.add_term(m, Scalar::of_int(vars->field(), 1 + static_cast<long>(rng() % 5)));
  }
  return e;
}

}  // namespace

TEST_CASE("monomial product signs match the permutation-parity oracle") {
  // x1 * x0 = -x0x1
  auto p = mono_mul(Monomial::var(1), Monomial::var(0));
  CHECK(!p.zero);
  CHECK(p.sign == -1);
  CHECK(p.mono == Monomial::of({0, 1}));

  // x0x1 * x1 = 0
  CHECK(mono_mul(Monomial::of({0, 1}), Monomial::var(1)).zero);

  // x0x2 * x1x3: oracle counts the inversions
  auto q = mono_mul(Monomial::of({0, 2}), Monomial::of({1, 3}));
  auto o = oracle_mul(concat(Monomial::of({0, 2}), Monomial::of({1, 3})));
  CHECK(!q.zero);
  CHECK(q.sign == o.sign);
  CHECK(q.sign == -1);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    Monomial a{rng() % 1024}, b{rng() % 1024};
    auto got = mono_mul(a, b);
    auto want = oracle_mul(concat(a, b));
    CHECK(got.zero == want.zero);
    if (!got.zero) {
      CHECK(got.sign == want.sign);
      CHECK(got.mono.indices() == want.sorted);
    }
  }
}

TEST_CASE("element products") {
  auto vars = VarTable::plain(6, FieldSpec::rationals());
  Scalar one = Scalar::one(vars->field());
  GrassmannElement x0 = GrassmannElement::variable(vars, 0);
  GrassmannElement x1 = GrassmannElement::variable(vars, 1);

  CHECK(GrassmannElement::one(vars) * x0 == x0);

  // (x0+x1)(x0-x1) expanded with the oracle: only the cross terms survive
  GrassmannElement prod = (x0 + x1) * (x0 - x1);
  GrassmannElement expect(vars);
  {
    auto o1 = oracle_mul({0, 1});
    expect.add_term(Monomial::of({0, 1}), Scalar::of_int(vars->field(), -o1.sign));  // -x0*x1
    auto o2 = oracle_mul({1, 0});
    expect.add_term(Monomial::of({0, 1}), Scalar::of_int(vars->field(), o2.sign));  // +x1*x0
  }
  CHECK(prod == expect);
  CHECK(prod.coeff(Monomial::of({0, 1})) == Scalar::of_int(vars->field(), -2));

  SUBCASE("supercommutativity on 200 random homogeneous pairs") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
      unsigned pf = rng() & 1, pg = rng() & 1;
      GrassmannElement f = random_homogeneous(vars, rng, pf);
      GrassmannElement g = random_homogeneous(vars, rng, pg);
      GrassmannElement fg = f * g;
      GrassmannElement gf = g * f;
      CHECK(fg == ((pf & pg) ? -gf : gf));
      if (!fg.is_zero() && f.parity() && g.parity())
        CHECK(*fg.parity() == ((pf + pg) & 1u));  // parity additivity
    }
  }

  SUBCASE("associativity and degree additivity") {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 100; ++t) {
      GrassmannElement f = random_homogeneous(vars, rng, rng() & 1);
      GrassmannElement g = random_homogeneous(vars, rng, rng() & 1);
      GrassmannElement h = random_homogeneous(vars, rng, rng() & 1);
      CHECK((f * g) * h == f * (g * h));
    }
  }
  (void)one;
}

TEST_CASE("partial superderivatives") {
  auto vars = VarTable::plain(5, FieldSpec::rationals());
  GrassmannElement x0 = GrassmannElement::variable(vars, 0);

  CHECK(partial(0, x0) == GrassmannElement::one(vars));
  // d1(x0 x1): the derivative moves past x0
  GrassmannElement x0x1 = GrassmannElement::monomial(vars, Monomial::of({0, 1}), Scalar::one(vars->field()));
  CHECK(partial(1, x0x1) == -x0);
  // absent variable
  GrassmannElement x1x2 = GrassmannElement::monomial(vars, Monomial::of({1, 2}), Scalar::one(vars->field()));
  CHECK(partial(0, x1x2).is_zero());

  SUBCASE("super-Leibniz rule") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
      unsigned pf = rng() & 1;
      GrassmannElement f = random_homogeneous(vars, rng, pf);
      GrassmannElement g = random_homogeneous(vars, rng, rng() & 1);
      unsigned i = rng() % vars->count();
      GrassmannElement lhs = partial(i, f * g);
      GrassmannElement rhs = partial(i, f) * g + (pf ? -(f * partial(i, g)) : f * partial(i, g));
      CHECK(lhs == rhs);
    }
  }

  SUBCASE("partials anticommute, including the square") {
    for (unsigned i = 0; i < vars->count(); ++i)
      for (unsigned j = 0; j < vars->count(); ++j)
        for (std::uint64_t bits = 0; bits < 32; ++bits) {
          GrassmannElement m = GrassmannElement::monomial(vars, Monomial{bits}, Scalar::one(vars->field()));
          GrassmannElement anti = partial(i, partial(j, m)) + partial(j, partial(i, m));
          CHECK(anti.is_zero());
        }
  }
}

TEST_CASE("canonical text form round-trips") {
  auto vars = VarTable::plain(8, FieldSpec::rationals());
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    GrassmannElement e(vars);
    for (int k = 0; k < 4; ++k)
      e.add_term(Monomial{rng() % 256},
                 Scalar::fraction(vars->field(), static_cast<long>(rng() % 19) - 9, 1 + rng() % 7));
    GrassmannElement back = GrassmannElement::parse(vars, e.str());
    CHECK(back == e);
    CHECK(back.str() == e.str());
  }
  CHECK(GrassmannElement::parse(vars, "0").is_zero());
  CHECK(GrassmannElement::parse(vars, "2/3 * x1^ x4^").coeff(Monomial::of({1, 4})) ==
        Scalar::fraction(vars->field(), 2, 3));
}

TEST_CASE("mismatched tables are a structural error") {
  auto a = VarTable::plain(4, FieldSpec::rationals());
  auto b = VarTable::plain(5, FieldSpec::rationals());
  CHECK_THROWS_AS(GrassmannElement::one(a) * GrassmannElement::one(b), structural_error);
}

TEST_CASE("kaplansky rule on pair tensors") {
  auto va = VarTable::plain(4, FieldSpec::rationals());
  auto vb = VarTable::plain(4, FieldSpec::rationals());
  auto elem = [&](const VarTablePtr& v, std::initializer_list<unsigned> idx) {
    return GrassmannElement::monomial(v, Monomial::of(idx), Scalar::one(v->field()));
  };

  // (1 (x) b)(a (x) 1) = a (x) b when a is even: zero sign exponent
  TensorPair u{elem(va, {}), elem(vb, {0})};
  TensorPair w{elem(va, {1, 2}), elem(vb, {})};
  TensorPair uw = kaplansky_mul(u, w);
  CHECK(uw.a == elem(va, {1, 2}));
  CHECK(uw.b == elem(vb, {0}));

  // odd b1, odd a2: sign -1
  TensorPair p{elem(va, {0}), elem(vb, {0})};
  TensorPair q{elem(va, {1}), elem(vb, {1})};
  TensorPair pq = kaplansky_mul(p, q);
  CHECK(pq.a == -(elem(va, {0}) * elem(va, {1})));
  CHECK(pq.b == elem(vb, {0}) * elem(vb, {1}));

  SUBCASE("associativity on 100 random homogeneous triples") {
    std::mt19937_64 rng(13);
    auto rand_pair = [&] {
      return TensorPair{random_homogeneous(va, rng, rng() & 1), random_homogeneous(vb, rng, rng() & 1)};
    };
    for (int t = 0; t < 100; ++t) {
      TensorPair x = rand_pair(), y = rand_pair(), z = rand_pair();
      TensorPair left = kaplansky_mul(kaplansky_mul(x, y), z);
      TensorPair right = kaplansky_mul(x, kaplansky_mul(y, z));
      CHECK(left == right);
    }
  }
}
