#pragma once

#include <functional>

#include "superalg/identities.hpp"
#include "superalg/policies.hpp"

namespace superalg {

/// Poisson handle over a Grassmann carrier: samples are the monomials up to
/// a degree cap (all of them for the small Hamiltonian algebras).
class GrassmannPoissonHandle {
 public:
  using Elem = GrassmannElement;

  GrassmannPoissonHandle(PoissonPtr structure, unsigned degree_cap)
      : A_(std::move(structure)), cap_(degree_cap) {}

  std::string name() const { return A_->describe(); }
  const PoissonPtr& structure() const { return A_; }

  std::vector<Sample<Elem>> samples() const {
    std::vector<Sample<Elem>> out;
    const VarTablePtr& vars = A_->vars();
    for (Monomial m : monomials_to_degree(vars->count(), cap_))
      out.push_back({GrassmannElement::monomial(vars, m, Scalar::one(vars->field())),
                     monomial_label(m), m.parity()});
    return out;
  }

  /// All monomials on n variables of degree <= cap, in canonical order.
  static std::vector<Monomial> monomials_to_degree(unsigned n, unsigned cap) {
    std::vector<Monomial> out{Monomial::one()};
    std::vector<Monomial> frontier = out;
    for (unsigned d = 1; d <= std::min(cap, n); ++d) {
      std::vector<Monomial> next;
      for (Monomial m : frontier) {
        unsigned start = m.empty() ? 0 : static_cast<unsigned>(m.max_index()) + 1;
        for (unsigned i = start; i < n; ++i) next.push_back(Monomial{m.bits | (std::uint64_t(1) << i)});
      }
      out.insert(out.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), monomial_less);
    return out;
  }

  Elem bracket(const Elem& a, const Elem& b) const { return A_->bracket(a, b); }
  Elem dot(const Elem& a, const Elem& b) const { return a * b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  std::string str(const Elem& a) const { return a.str(); }

 private:
  std::string monomial_label(Monomial m) const {
    if (m.empty()) return "1";
    std::string s;
    for (unsigned i : m.indices()) s += A_->vars()->name(i);
    return s;
  }
  PoissonPtr A_;
  unsigned cap_;
};

/// Lie handle over the rows of a generated graded basis, up to a total
/// degree cap. Rows are homogeneous in Z2 (parity = total degree of odd
/// generators mod 2, recorded on the component).
class LieBasisHandle {
 public:
  using Elem = SuperDerivation;

  LieBasisHandle(const LieBasis& basis, unsigned degree_cap, std::string name)
      : basis_(&basis), cap_(degree_cap), name_(std::move(name)) {}

  std::string name() const { return name_; }

  std::vector<Sample<Elem>> samples() const {
    std::vector<Sample<Elem>> out;
    for (const auto& [m, comp] : basis_->components()) {
      if (m.total() > cap_) continue;
      for (std::size_t i = 0; i < comp.rows.size(); ++i)
        out.push_back({comp.rows[i], m.str() + "#" + std::to_string(i), comp.parity});
    }
    return out;
  }

  Elem bracket(const Elem& a, const Elem& b) const { return superalg::bracket(a, b); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  std::string str(const Elem& a) const { return a.str(); }

 private:
  const LieBasis* basis_;
  unsigned cap_;
  std::string name_;
};

/// Lie handle over a finite structure-constant table.
class TableLieHandle {
 public:
  using Elem = TableLieOps::Elem;

  TableLieHandle(TableLieOps ops, std::string name) : ops_(std::move(ops)), name_(std::move(name)) {}

  std::string name() const { return name_; }
  const TableLieOps& ops() const { return ops_; }

  std::vector<Sample<Elem>> samples() const {
    std::vector<Sample<Elem>> out;
    for (unsigned i = 0; i < ops_.dim(); ++i)
      out.push_back({ops_.basis_elem(i), ops_.labels[i], ops_.parities[i]});
    return out;
  }

  Elem bracket(const Elem& a, const Elem& b) const { return ops_.bracket(a, b); }
  Elem add(const Elem& a, const Elem& b) const { return ops_.add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const {
    return ops_.add(a, ops_.scaled(b, -Scalar::one(ops_.field())));
  }
  Elem neg(const Elem& a) const { return ops_.scaled(a, -Scalar::one(ops_.field())); }
  bool is_zero(const Elem& a) const { return a.empty(); }
  std::string str(const Elem& a) const { return ops_.str(a); }

 private:
  TableLieOps ops_;
  std::string name_;
};

/// Jordan handle over a Kantor double Kan(A); the product can be swapped for
/// the wreath candidate so the same machinery probes both.
class KantorHandle {
 public:
  using Elem = KantorElement;
  using Product = std::function<Elem(const Elem&, const Elem&)>;

  KantorHandle(PoissonPtr A, unsigned degree_cap, std::string name)
      : A_(std::move(A)), cap_(degree_cap), name_(std::move(name)) {
    prod_ = [this](const Elem& a, const Elem& b) { return kantor_mul(a, b, *A_); };
  }

  /// Same carrier, wreath product over blocks: H below split, P1 above.
  static KantorHandle wreath(PoissonPtr H, PoissonPtr P1, unsigned split, unsigned degree_cap,
                             std::string name) {
    KantorHandle h(P1, degree_cap, std::move(name));
    h.prod_ = [H, P1, split](const Elem& a, const Elem& b) { return wreath_mul(a, b, *H, *P1, split); };
    return h;
  }

  std::string name() const { return name_; }

  std::vector<Sample<Elem>> samples() const {
    std::vector<Sample<Elem>> out;
    const VarTablePtr& vars = A_->vars();
    for (Monomial m : GrassmannPoissonHandle::monomials_to_degree(vars->count(), cap_)) {
      GrassmannElement g = GrassmannElement::monomial(vars, m, Scalar::one(vars->field()));
      out.push_back({Elem::of(g), label(m, false), m.parity()});
      out.push_back({Elem::bar(g), label(m, true), (m.parity() + 1) & 1u});
    }
    return out;
  }
  std::vector<Sample<Elem>> samples_nounit() const {
    std::vector<Sample<Elem>> out;
    for (auto& s : samples())
      if (s.label != "1") out.push_back(s);
    return out;
  }

  Elem prod(const Elem& a, const Elem& b) const { return prod_(a, b); }
  Elem d(const Elem& a) const { return d_map(a); }
  Elem zero() const { return Elem::zero(A_->vars()); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem scale_int(const Elem& a, long c) const { return a.scaled(Scalar::of_int(A_->vars()->field(), c)); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  std::string str(const Elem& a) const { return a.str(); }

 private:
  std::string label(Monomial m, bool bar) const {
    std::string s;
    for (unsigned i : m.indices()) s += A_->vars()->name(i);
    if (s.empty()) s = "1";
    return bar ? "b(" + s + ")" : s;
  }
  PoissonPtr A_;
  unsigned cap_;
  std::string name_;
  Product prod_;
};

/// Homogeneous labeled samples from the rows of a generated graded basis.
inline std::vector<Sample<SuperDerivation>> lie_basis_samples(const LieBasis& basis, unsigned degree_cap) {
  std::vector<Sample<SuperDerivation>> out;
  for (const auto& [m, comp] : basis.components()) {
    if (m.total() > degree_cap) continue;
    for (std::size_t i = 0; i < comp.rows.size(); ++i)
      out.push_back({comp.rows[i], m.str() + "#" + std::to_string(i), comp.parity});
  }
  return out;
}

/// Jordan handle over the double Jor(L), sampling given homogeneous elements
/// of L (plain and barred) plus the bar unit. Products are evaluated
/// structurally, so samples of any degree multiply without a precomputed
/// table.
template <class LieOps>
class JorHandle {
 public:
  using Double = JordanDouble<LieOps>;
  using LElem = typename LieOps::Elem;
  using Elem = typename Double::Elem;

  JorHandle(Double dbl, std::vector<Sample<LElem>> l_samples, std::string name)
      : dbl_(std::move(dbl)), l_samples_(std::move(l_samples)), name_(std::move(name)) {}

  std::string name() const { return name_; }
  const Double& dbl() const { return dbl_; }

  std::vector<Sample<Elem>> samples() const {
    auto out = samples_nounit();
    out.insert(out.begin(), {dbl_.unit(), "1", 0});
    return out;
  }
  /// Samples of the ideal Jor^o = L + <bar 1> + bar(L).
  std::vector<Sample<Elem>> samples_nounit() const {
    std::vector<Sample<Elem>> out;
    out.push_back({dbl_.unit_bar(), "1b", 1});
    for (const auto& s : l_samples_) {
      out.push_back({dbl_.of(s.e), s.label, s.parity});
      out.push_back({dbl_.bar(s.e), "b" + s.label, (s.parity + 1) & 1u});
    }
    return out;
  }

  Elem prod(const Elem& a, const Elem& b) const { return dbl_.mul(a, b); }
  Elem d(const Elem& a) const { return dbl_.d_map(a); }
  Elem zero() const { return dbl_.zero(); }
  Elem add(const Elem& a, const Elem& b) const { return dbl_.add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return dbl_.sub(a, b); }
  Elem neg(const Elem& a) const { return dbl_.scaled(a, -Scalar::one(dbl_.lie().field())); }
  Elem scale_int(const Elem& a, long c) const {
    return dbl_.scaled(a, Scalar::of_int(dbl_.lie().field(), c));
  }
  bool is_zero(const Elem& a) const { return dbl_.is_zero(a); }
  std::string str(const Elem& a) const { return dbl_.str(a); }

  bool in_l_lbar(const Elem& a) const { return a.one.is_zero() && a.onebar.is_zero(); }
  bool in_l(const Elem& a) const { return in_l_lbar(a) && dbl_.lie().is_zero(a.ellbar); }
  JordanDoublePolicy<LieOps> policy() const { return {dbl_, 0}; }

 private:
  Double dbl_;
  std::vector<Sample<LElem>> l_samples_;
  std::string name_;
};

using JorRHandle = JorHandle<DerivationLieOps>;
using JorToyHandle = JorHandle<TableLieOps>;

/// Solvability chain of the ideal without unit: J^2 inside L + bar(L),
/// (J^2)^2 inside L, ((J^2)^2)^2 = 0. Each stage is an echelon spanning set
/// of the pairwise products of the previous one, so the membership claims
/// extend to the whole span by bilinearity.
template <class H>
IdentityReport check_solvability_chain(const H& h) {
  IdentityReport rep{"solvable-length-3", h.name(), "spanning-products", 0, 0, {}};
  auto policy = h.policy();

  auto product_span = [&](const std::vector<typename H::Elem>& a,
                          const std::vector<typename H::Elem>& b) {
    detail::Echelon<typename decltype(policy)::Key, typename decltype(policy)::KeyLess> ech;
    std::vector<typename H::Elem> out;
    for (const auto& x : a)
      for (const auto& y : b) {
        auto p = h.prod(x, y);
        if (h.is_zero(p)) continue;
        if (ech.insert(policy.to_terms(p))) out.push_back(std::move(p));
      }
    return out;
  };

  std::vector<typename H::Elem> l1;
  for (auto& s : h.samples_nounit()) l1.push_back(s.e);
  auto j2 = product_span(l1, l1);
  for (const auto& e : j2) {
    ++rep.tuples;
    if (!h.in_l_lbar(e) && rep.violations.size() < detail::kMaxWitnesses)
      rep.violations.push_back({{"J^2 component"}, h.str(e)});
  }
  auto j4 = product_span(j2, j2);
  for (const auto& e : j4) {
    ++rep.tuples;
    if (!h.in_l(e) && rep.violations.size() < detail::kMaxWitnesses)
      rep.violations.push_back({{"(J^2)^2 component"}, h.str(e)});
  }
  auto j8 = product_span(j4, j4);
  for (const auto& e : j8) {
    ++rep.tuples;
    if (!h.is_zero(e) && rep.violations.size() < detail::kMaxWitnesses)
      rep.violations.push_back({{"((J^2)^2)^2 component"}, h.str(e)});
  }
  return rep;
}

}  // namespace superalg
