#pragma once

#include "superalg/generate.hpp"
#include "superalg/operators.hpp"

namespace superalg {

/// Term key of a superderivation: monomial coefficient of one partial.
struct DerTermKey {
  unsigned gen = 0;
  Monomial mono;
  bool operator==(const DerTermKey& o) const { return gen == o.gen && mono == o.mono; }
};

/// (total degree, monomial lex, generator index); pivot is the least term.
struct DerTermKeyLess {
  bool operator()(const DerTermKey& a, const DerTermKey& b) const {
    unsigned da = a.mono.degree(), db = b.mono.degree();
    if (da != db) return da < db;
    if (a.mono != b.mono) return monomial_less(a.mono, b.mono);
    return a.gen < b.gen;
  }
};

/// Lie closure over superderivations of the truncated Grassmann algebra.
struct LieDerivationPolicy {
  using Elem = SuperDerivation;
  using Key = DerTermKey;
  using KeyLess = DerTermKeyLess;
  using Vec = detail::SparseVec<Key, KeyLess>;

  VarTablePtr vars;

  unsigned product_count() const { return 1; }
  bool symmetric(unsigned) const { return true; }
  Elem product(unsigned, const Elem& a, const Elem& b) const { return bracket(a, b); }

  Vec to_terms(const Elem& e) const {
    Vec v;
    for (unsigned i = 0; i < vars->count(); ++i)
      for (const auto& [m, c] : e.image(i).terms()) v.emplace(Key{i, m}, c);
    return v;
  }

  Elem from_terms(const Vec& v) const {
    Elem e(vars);
    for (const auto& [k, c] : v) {
      GrassmannElement g = e.image(k.gen);
      g.add_term(k.mono, c);
      e.set_image(k.gen, std::move(g));
    }
    return e;
  }

  int max_index(const Elem& e) const { return e.max_index(); }
  Elem truncate(const Elem& e, unsigned horizon) const { return e.truncated_to(horizon); }
  unsigned elem_parity(const Elem& e) const { return e.parity().value_or(0); }
  std::string elem_str(const Elem& e) const { return e.str(); }
  unsigned horizon() const { return vars->count(); }
  FieldSpec field() const { return vars->field(); }
};

/// Associative closure over normal-ordered operators (non-unital).
struct AssocOperatorPolicy {
  using Elem = Operator;
  using Key = OperatorTerm;
  using KeyLess = OperatorTermLess;
  using Vec = detail::SparseVec<Key, KeyLess>;

  VarTablePtr vars;

  unsigned product_count() const { return 1; }
  bool symmetric(unsigned) const { return false; }
  Elem product(unsigned, const Elem& a, const Elem& b) const { return compose(a, b); }

  Vec to_terms(const Elem& e) const {
    Vec v;
    for (const auto& [t, c] : e.terms()) v.emplace(t, c);
    return v;
  }

  Elem from_terms(const Vec& v) const {
    Elem e(vars);
    for (const auto& [t, c] : v) e.add_term(t, c);
    return e;
  }

  int max_index(const Elem& e) const { return e.max_index(); }
  Elem truncate(const Elem& e, unsigned horizon) const { return e.truncated_to(horizon); }
  unsigned elem_parity(const Elem& e) const { return e.parity().value_or(0); }
  std::string elem_str(const Elem& e) const { return e.str(); }
  unsigned horizon() const { return vars->count(); }
  FieldSpec field() const { return vars->field(); }
};

using LieBasis = GradedBasis<LieDerivationPolicy>;
using AssocBasis = GradedBasis<AssocOperatorPolicy>;

/// Filtered (non-graded) closure: echelon basis of the span of all products
/// of the generators of length <= max_len. Used where the generated algebra
/// is not graded by word length, e.g. Alg(d_0, x_0).
struct FilteredAssocBasis {
  std::vector<Operator> rows;                    // canonical echelon basis
  std::vector<unsigned long> cumulative_dim;     // gamma(n), index 1..max_len
  bool contains(const Operator& op) const;
};

FilteredAssocBasis filtered_assoc_closure(VarTablePtr vars, const std::vector<Operator>& gens,
                                          unsigned max_len);

}  // namespace superalg
