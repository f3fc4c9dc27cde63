#pragma once

#include "superalg/catalog.hpp"
#include "superalg/doubles.hpp"
#include "superalg/handles.hpp"
#include "superalg/poisson.hpp"

namespace superalg {

/// Named constructions addressable from the CLI and tests.
struct ExampleInfo {
  std::string name;
  std::string summary;
  unsigned default_trunc;   // flat variable count, or letter triples
  unsigned default_degree;  // max total degree
  bool trunc_is_triples;
  bool dims_supported;      // graded (or filtered) dimension table available
  std::string grading;      // Z2 | Z3 | Z4 | filtration | -
};

const std::vector<ExampleInfo>& example_catalog();
const ExampleInfo* find_example(const std::string& name);

/// Closure policy for a Poisson subalgebra: closed under both the dot and
/// the bracket.
struct PoissonElementPolicy {
  using Elem = GrassmannElement;
  using Key = Monomial;
  using KeyLess = MonomialLess;
  using Vec = detail::SparseVec<Key, KeyLess>;

  PoissonPtr structure;

  unsigned product_count() const { return 2; }
  bool symmetric(unsigned) const { return true; }
  Elem product(unsigned k, const Elem& a, const Elem& b) const {
    return k == 0 ? structure->dot(a, b) : structure->bracket(a, b);
  }
  Vec to_terms(const Elem& e) const {
    Vec v;
    for (const auto& [m, c] : e.terms()) v.emplace(m, c);
    return v;
  }
  Elem from_terms(const Vec& v) const {
    Elem e(structure->vars());
    for (const auto& [m, c] : v) e.add_term(m, c);
    return e;
  }
  int max_index(const Elem& e) const { return e.max_index(); }
  Elem truncate(const Elem& e, unsigned h) const { return e.truncated_to(h); }
  unsigned elem_parity(const Elem& e) const { return e.parity().value_or(0); }
  std::string elem_str(const Elem& e) const { return e.str(); }
  unsigned horizon() const { return structure->vars()->count(); }
  FieldSpec field() const { return structure->vars()->field(); }
};
using PoissonBasis = GradedBasis<PoissonElementPolicy>;

LieBasis build_R(FieldSpec field, unsigned n, unsigned degree, unsigned workers);
AssocBasis build_AR(FieldSpec field, unsigned n, unsigned degree, unsigned workers);
LieBasis build_Q(FieldSpec field, unsigned triples, unsigned degree, unsigned workers);
AssocBasis build_AQ(FieldSpec field, unsigned triples, unsigned degree, unsigned workers);
PoissonBasis build_PQ(FieldSpec field, unsigned triples, unsigned degree, unsigned workers);

/// Jordan double of a pivot algebra, generated by the pivots plus the bar
/// unit; `degree` counts letters of X + {bar 1} (Jordan degrees).
JorRBasis build_JorR(FieldSpec field, unsigned n, unsigned degree, unsigned workers);
JorRBasis build_JorQ(FieldSpec field, unsigned triples, unsigned degree, unsigned workers);

/// Dimension table dispatch; M11 yields the filtration table of Alg(d0,x0).
DimensionTable example_dims(const std::string& name, FieldSpec field, unsigned trunc, unsigned degree,
                            unsigned workers);

/// Text round-trip for Jordan double elements over superderivations:
/// `c*1 + (<operator text>) + c*1b + b(<operator text>)`.
std::string jor_elem_str(const JordanDouble<DerivationLieOps>& dbl, const JorElem<DerivationLieOps>& e);
JorElem<DerivationLieOps> jor_elem_parse(const JordanDouble<DerivationLieOps>& dbl, const std::string& text);

}  // namespace superalg
