#pragma once

#include "superalg/poisson.hpp"
#include "superalg/policies.hpp"

namespace superalg {

/// Element of the Kantor double Kan(A) = A + bar(A) of a Poisson superalgebra
/// on a Grassmann carrier. `barred` stores the content a of bar(a); the bar
/// copy carries the opposite parity, |bar(a)| = 1 - |a|.
struct KantorElement {
  GrassmannElement plain;
  GrassmannElement barred;

  static KantorElement zero(const VarTablePtr& vars) {
    return {GrassmannElement::zero(vars), GrassmannElement::zero(vars)};
  }
  static KantorElement of(GrassmannElement a) {
    GrassmannElement z(a.vars());
    return {std::move(a), std::move(z)};
  }
  static KantorElement bar(GrassmannElement a) {
    GrassmannElement z(a.vars());
    return {std::move(z), std::move(a)};
  }

  bool is_zero() const { return plain.is_zero() && barred.is_zero(); }
  KantorElement operator+(const KantorElement& o) const { return {plain + o.plain, barred + o.barred}; }
  KantorElement operator-(const KantorElement& o) const { return {plain - o.plain, barred - o.barred}; }
  KantorElement scaled(const Scalar& c) const { return {plain.scaled(c), barred.scaled(c)}; }
  KantorElement operator-() const { return {-plain, -barred}; }
  bool operator==(const KantorElement& o) const { return plain == o.plain && barred == o.barred; }

  /// Homogeneous part of parity q: plain of parity q, barred content 1-q.
  KantorElement parity_part(unsigned q) const {
    return {plain.parity_part(q & 1u), barred.parity_part((q + 1) & 1u)};
  }
  std::optional<unsigned> parity() const;
  std::string str() const;
};

/// The four-case Kantor product:
///   a . b           = ab
///   bar(a) . b      = (-1)^{|b|} bar(ab)
///   a . bar(b)      = bar(ab)
///   bar(a) . bar(b) = (-1)^{|b|} {a,b}
KantorElement kantor_mul(const KantorElement& u, const KantorElement& v, const GrassmannPoisson& A);

/// D(a) = 0, D(bar(a)) = (-1)^{|a|} a: an odd map with D^2 = 0.
KantorElement d_map(const KantorElement& u);

/// Wreath-candidate product on H (x) J1 where J1 = Kan(P1) and both factors
/// share one carrier (H block below `split`, P1 block above). Under the
/// identification x (x) bar(a) <-> bar(x a) the elements are KantorElements:
///   (x (x) f).(y (x) g) = (-1)^{|f||y|} ( xy (x) f.g
///                          + (-1)^{|f|+1} {x,y} (x) D(f).D(g) ).
KantorElement wreath_mul(const KantorElement& u, const KantorElement& v, const GrassmannPoisson& H,
                         const GrassmannPoisson& P1, unsigned split);

/// Lie structure over superderivation elements (bracket + parity splitting),
/// the L feeding a Jordan double.
struct DerivationLieOps {
  using Elem = SuperDerivation;
  VarTablePtr vars;

  Elem bracket(const Elem& a, const Elem& b) const { return superalg::bracket(a, b); }
  Elem zero() const { return SuperDerivation::zero(vars); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem scaled(const Elem& a, const Scalar& c) const { return a.scaled(c); }
  Elem parity_part(const Elem& a, unsigned p) const { return a.parity_part(p); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  std::string str(const Elem& a) const { return a.str(); }
  FieldSpec field() const { return vars->field(); }

  using Key = DerTermKey;
  using KeyLess = DerTermKeyLess;
  std::map<Key, Scalar, KeyLess> to_terms(const Elem& e) const {
    std::map<Key, Scalar, KeyLess> v;
    for (unsigned i = 0; i < vars->count(); ++i)
      for (const auto& [m, c] : e.image(i).terms()) v.emplace(Key{i, m}, c);
    return v;
  }
  Elem from_terms(const std::map<Key, Scalar, KeyLess>& v) const {
    Elem e(vars);
    for (const auto& [k, c] : v) {
      GrassmannElement g = e.image(k.gen);
      g.add_term(k.mono, c);
      e.set_image(k.gen, std::move(g));
    }
    return e;
  }
  int max_index(const Elem& e) const { return e.max_index(); }
  Elem truncate(const Elem& e, unsigned h) const { return e.truncated_to(h); }
};

/// Finite structure-constant Lie superalgebra: basis 0..n-1 with declared
/// parities and degrees, elements are sparse coordinate vectors. Used for toy
/// inputs and deliberately corrupted negative controls.
struct TableLieOps {
  using Elem = std::map<unsigned, Scalar>;

  FieldSpec field_spec;
  std::vector<unsigned> parities;
  std::vector<unsigned> degrees;
  std::vector<std::string> labels;
  // bracket of basis pairs; missing entry means zero
  std::map<std::pair<unsigned, unsigned>, Elem> table;

  unsigned dim() const { return static_cast<unsigned>(parities.size()); }
  Elem basis_elem(unsigned i) const { return {{i, Scalar::one(field_spec)}}; }

  Elem bracket(const Elem& a, const Elem& b) const;
  Elem zero() const { return {}; }
  Elem add(const Elem& a, const Elem& b) const;
  Elem scaled(const Elem& a, const Scalar& c) const;
  Elem parity_part(const Elem& a, unsigned p) const;
  bool is_zero(const Elem& a) const { return a.empty(); }
  std::string str(const Elem& a) const;
  FieldSpec field() const { return field_spec; }

  using Key = unsigned;
  using KeyLess = std::less<unsigned>;
  std::map<Key, Scalar, KeyLess> to_terms(const Elem& e) const { return e; }
  Elem from_terms(const std::map<Key, Scalar, KeyLess>& v) const { return v; }
  int max_index(const Elem&) const { return 0; }
  Elem truncate(const Elem& e, unsigned) const { return e; }

  /// 2-step nilpotent toy: odd e1, e2 of degree 1, even f = [e1,e2] = [e2,e1]
  /// of degree 2, every other bracket zero.
  static TableLieOps nilpotent_toy(FieldSpec f);
};

/// Element of the Jordan double Jor(L) = <1> + L + <bar 1> + bar(L), the
/// Kantor double of the trivial Poisson algebra P(L) = <1> + L.
template <class LieOps>
struct JorElem {
  Scalar one;
  typename LieOps::Elem ell;
  Scalar onebar;
  typename LieOps::Elem ellbar;
};

/// The trivial Poisson algebra P(L) = <1> + L: the dot is nontrivial only
/// against the unit, the bracket is the Lie bracket and vanishes with 1.
template <class LieOps>
struct TrivialPoisson {
  struct Elem {
    Scalar unit;
    typename LieOps::Elem ell;
  };

  LieOps L;

  Elem unit() const { return {Scalar::one(L.field()), L.zero()}; }
  Elem of(typename LieOps::Elem x) const { return {Scalar::zero(L.field()), std::move(x)}; }

  Elem dot(const Elem& a, const Elem& b) const {
    return {a.unit * b.unit, L.add(L.scaled(b.ell, a.unit), L.scaled(a.ell, b.unit))};
  }
  Elem bracket(const Elem& a, const Elem& b) const {
    return {Scalar::zero(L.field()), L.bracket(a.ell, b.ell)};
  }
  bool is_zero(const Elem& a) const { return a.unit.is_zero() && L.is_zero(a.ell); }
};

/// Jordan double products over an arbitrary Lie structure. The nontrivial
/// cases, with the Kantor signs making the product supercommutative:
///   1 is the unit, x . bar(1) = bar(x), bar(1) . x = (-1)^{|x|} bar(x),
///   bar(x) . bar(y) = (-1)^{|y|} [x,y], bar(1) . bar(1) = 0.
template <class LieOps>
class JordanDouble {
 public:
  using LElem = typename LieOps::Elem;
  using Elem = JorElem<LieOps>;

  explicit JordanDouble(LieOps ops) : L(std::move(ops)) {}

  LieOps L;

  const LieOps& lie() const { return L; }

  Elem zero() const { return {Scalar::zero(L.field()), L.zero(), Scalar::zero(L.field()), L.zero()}; }
  Elem unit() const {
    Elem e = zero();
    e.one = Scalar::one(L.field());
    return e;
  }
  Elem unit_bar() const {
    Elem e = zero();
    e.onebar = Scalar::one(L.field());
    return e;
  }
  Elem of(LElem x) const {
    Elem e = zero();
    e.ell = std::move(x);
    return e;
  }
  Elem bar(LElem x) const {
    Elem e = zero();
    e.ellbar = std::move(x);
    return e;
  }

  bool is_zero(const Elem& e) const {
    return e.one.is_zero() && e.onebar.is_zero() && L.is_zero(e.ell) && L.is_zero(e.ellbar);
  }
  Elem add(const Elem& a, const Elem& b) const {
    return {a.one + b.one, L.add(a.ell, b.ell), a.onebar + b.onebar, L.add(a.ellbar, b.ellbar)};
  }
  Elem sub(const Elem& a, const Elem& b) const { return add(a, scaled(b, -Scalar::one(L.field()))); }
  Elem scaled(const Elem& a, const Scalar& c) const {
    return {a.one * c, L.scaled(a.ell, c), a.onebar * c, L.scaled(a.ellbar, c)};
  }

  /// Parity-q part: 1 even, bar(1) odd, L splits by |x|, bar(L) by 1-|x|.
  Elem parity_part(const Elem& a, unsigned q) const {
    Elem e = zero();
    if ((q & 1u) == 0) e.one = a.one;
    if ((q & 1u) == 1) e.onebar = a.onebar;
    e.ell = L.parity_part(a.ell, q & 1u);
    e.ellbar = L.parity_part(a.ellbar, (q + 1) & 1u);
    return e;
  }

  Elem mul(const Elem& u, const Elem& v) const {
    Elem r = zero();
    // unit action: u.one * v plus v.one * (u without its unit slot)
    r = add(r, scaled(v, u.one));
    Elem u_rest = u;
    u_rest.one = Scalar::zero(L.field());
    r = add(r, scaled(u_rest, v.one));

    // x . bar(1) = bar(x) and bar(1) . x = (-1)^{|x|} bar(x)
    r.ellbar = L.add(r.ellbar, L.scaled(u.ell, v.onebar));
    for (unsigned p = 0; p < 2; ++p) {
      LElem xp = L.parity_part(v.ell, p);
      Scalar c = u.onebar;
      if (p & 1u) c = -c;
      r.ellbar = L.add(r.ellbar, L.scaled(xp, c));
    }
    // bar(x) . bar(y) = (-1)^{|y|} [x,y]; bar(1) cross terms vanish
    for (unsigned p = 0; p < 2; ++p) {
      LElem yp = L.parity_part(v.ellbar, p);
      if (L.is_zero(yp)) continue;
      LElem br = L.bracket(u.ellbar, yp);
      if (p & 1u) br = L.scaled(br, -Scalar::one(L.field()));
      r.ell = L.add(r.ell, br);
    }
    return r;
  }

  /// D(1) = 0, D(x) = 0, D(bar(1)) = 1, D(bar(x)) = (-1)^{|x|} x.
  Elem d_map(const Elem& u) const {
    Elem r = zero();
    r.one = u.onebar;
    r.ell = L.add(L.parity_part(u.ellbar, 0), L.scaled(L.parity_part(u.ellbar, 1), -Scalar::one(L.field())));
    return r;
  }

  std::string str(const Elem& e) const {
    std::string s = e.one.str() + "*1 + (" + L.str(e.ell) + ") + " + e.onebar.str() + "*1b + b(" +
                    L.str(e.ellbar) + ")";
    return s;
  }
};

/// Term key of a Jordan double element: slot (1, L, bar 1, bar L) then the
/// underlying Lie key.
template <class LieOps>
struct JorKey {
  unsigned slot = 0;  // 0: unit, 1: ell, 2: unit bar, 3: ellbar
  typename LieOps::Key inner{};
};

template <class LieOps>
struct JorKeyLess {
  bool operator()(const JorKey<LieOps>& a, const JorKey<LieOps>& b) const {
    if (a.slot != b.slot) return a.slot < b.slot;
    return typename LieOps::KeyLess{}(a.inner, b.inner);
  }
};

/// Closure policy for generating Jor(L) from {generators of L} + {bar 1}.
template <class LieOps>
struct JordanDoublePolicy {
  using Double = JordanDouble<LieOps>;
  using Elem = typename Double::Elem;
  using Key = JorKey<LieOps>;
  using KeyLess = JorKeyLess<LieOps>;
  using Vec = detail::SparseVec<Key, KeyLess>;

  Double dbl;
  unsigned horizon_ = 0;

  unsigned product_count() const { return 1; }
  bool symmetric(unsigned) const { return true; }
  Elem product(unsigned, const Elem& a, const Elem& b) const { return dbl.mul(a, b); }

  Vec to_terms(const Elem& e) const {
    Vec v;
    if (!e.one.is_zero()) v.emplace(Key{0, {}}, e.one);
    for (const auto& [k, c] : dbl.lie().to_terms(e.ell)) v.emplace(Key{1, k}, c);
    if (!e.onebar.is_zero()) v.emplace(Key{2, {}}, e.onebar);
    for (const auto& [k, c] : dbl.lie().to_terms(e.ellbar)) v.emplace(Key{3, k}, c);
    return v;
  }

  Elem from_terms(const Vec& v) const {
    Elem e = dbl.zero();
    std::map<typename LieOps::Key, Scalar, typename LieOps::KeyLess> ell, ellbar;
    for (const auto& [k, c] : v) {
      switch (k.slot) {
        case 0: e.one = c; break;
        case 1: ell.emplace(k.inner, c); break;
        case 2: e.onebar = c; break;
        default: ellbar.emplace(k.inner, c); break;
      }
    }
    e.ell = dbl.lie().from_terms(ell);
    e.ellbar = dbl.lie().from_terms(ellbar);
    return e;
  }

  int max_index(const Elem& e) const {
    return std::max(dbl.lie().max_index(e.ell), dbl.lie().max_index(e.ellbar));
  }
  Elem truncate(const Elem& e, unsigned h) const {
    Elem r = e;
    r.ell = dbl.lie().truncate(e.ell, h);
    r.ellbar = dbl.lie().truncate(e.ellbar, h);
    return r;
  }
  unsigned elem_parity(const Elem& e) const;
  std::string elem_str(const Elem& e) const { return dbl.str(e); }
  unsigned horizon() const { return horizon_; }
  FieldSpec field() const { return dbl.lie().field(); }
};

template <class LieOps>
unsigned JordanDoublePolicy<LieOps>::elem_parity(const Elem& e) const {
  for (unsigned q = 0; q < 2; ++q) {
    Elem p = dbl.parity_part(e, q);
    Elem diff = dbl.sub(e, p);
    if (dbl.is_zero(diff)) return q;
  }
  return 0;
}

using JorR = JordanDouble<DerivationLieOps>;
using JorRBasis = GradedBasis<JordanDoublePolicy<DerivationLieOps>>;
using JorToy = JordanDouble<TableLieOps>;
using JorToyBasis = GradedBasis<JordanDoublePolicy<TableLieOps>>;

}  // namespace superalg
