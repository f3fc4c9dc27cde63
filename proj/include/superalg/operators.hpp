#pragma once

#include <functional>
#include <map>
#include <optional>

#include "superalg/grassmann.hpp"

namespace superalg {

/// Key of a normal-ordered operator term c * x_S d_T: the monomial of left
/// multiplications and the ascending set of partials applied in fixed order
/// (rightmost, i.e. largest, acts first).
struct OperatorTerm {
  Monomial left;   // x_S
  Monomial deriv;  // d_T
  bool operator==(const OperatorTerm& o) const { return left == o.left && deriv == o.deriv; }
};

/// Term order: total degree, then derivative degree, then lexicographic parts.
struct OperatorTermLess {
  bool operator()(const OperatorTerm& a, const OperatorTerm& b) const {
    unsigned ta = a.left.degree() + a.deriv.degree(), tb = b.left.degree() + b.deriv.degree();
    if (ta != tb) return ta < tb;
    unsigned da = a.deriv.degree(), db = b.deriv.degree();
    if (da != db) return da < db;
    if (a.left != b.left) return monomial_less(a.left, b.left);
    return monomial_less(a.deriv, b.deriv);
  }
};

class SuperDerivation;

/// Normal-ordered endomorphism of the truncated Grassmann algebra: an exact
/// sum of terms x_S d_T with all multiplications left of all derivatives.
/// Composition rewrites with d_i x_j + x_j d_i = delta_ij until ordered, so
/// the term map is a canonical form.
class Operator {
 public:
  using TermMap = std::map<OperatorTerm, Scalar, OperatorTermLess>;

  explicit Operator(VarTablePtr vars) : vars_(std::move(vars)) {}

  static Operator zero(VarTablePtr vars) { return Operator(std::move(vars)); }
  static Operator identity(VarTablePtr vars);
  /// The single partial d_i.
  static Operator partial_op(VarTablePtr vars, unsigned i);
  /// Left multiplication by f.
  static Operator multiplication(const GrassmannElement& f);
  static Operator term(VarTablePtr vars, Monomial left, Monomial deriv, Scalar c);

  const VarTablePtr& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(OperatorTerm t, const Scalar& c);

  Operator operator+(const Operator& o) const;
  Operator operator-(const Operator& o) const;
  Operator& operator+=(const Operator& o);
  Operator scaled(const Scalar& c) const;
  Operator operator-() const;
  bool operator==(const Operator& o) const;
  bool operator!=(const Operator& o) const { return !(*this == o); }

  std::optional<unsigned> parity() const;
  Operator parity_part(unsigned p) const;
  int max_index() const;
  Operator truncated_to(unsigned horizon) const;

  /// Text form `c * x0^ x3^ d1 d4`; round-trips through parse().
  std::string str() const;
  static Operator parse(VarTablePtr vars, const std::string& text);

 private:
  VarTablePtr vars_;
  TermMap terms_;
};

/// Associative product E of F, normal-ordered. Action-compatible with apply.
Operator compose(const Operator& e, const Operator& f);

/// [E,F] = EF - (-1)^{|E||F|} FE, parity parts combined bilinearly.
Operator supercommutator(const Operator& e, const Operator& f);

/// E(f): each term x_S d_T acts by iterated partials then left multiplication.
GrassmannElement apply(const Operator& e, const GrassmannElement& f);

/// Superderivation given by its images on the generators, extended everywhere
/// by the super-Leibniz rule d(ab) = d(a)b + (-1)^{|d||a|} a d(b). Elements
/// may mix parities; the sign rules decompose by the parity of each image
/// term (a derivation of parity p sends the odd generators to parity p+1).
class SuperDerivation {
 public:
  explicit SuperDerivation(VarTablePtr vars);

  static SuperDerivation zero(VarTablePtr vars) { return SuperDerivation(std::move(vars)); }
  /// The odd partial d_i as a derivation.
  static SuperDerivation partial_derivation(VarTablePtr vars, unsigned i);

  const VarTablePtr& vars() const { return vars_; }
  /// Parity when the derivation is homogeneous (zero counts as odd-friendly
  /// nullopt-free even), nullopt when parts mix.
  std::optional<unsigned> parity() const;
  const GrassmannElement& image(unsigned i) const { return images_.at(i); }
  void set_image(unsigned i, GrassmannElement g);

  bool is_zero() const;
  SuperDerivation operator+(const SuperDerivation& o) const;
  SuperDerivation operator-(const SuperDerivation& o) const;
  SuperDerivation scaled(const Scalar& c) const;
  SuperDerivation operator-() const;
  bool operator==(const SuperDerivation& o) const;
  bool operator!=(const SuperDerivation& o) const { return !(*this == o); }

  /// Terms of the given derivation parity: image terms of parity p+1.
  SuperDerivation parity_part(unsigned p) const;

  GrassmannElement apply(const GrassmannElement& f) const;

  int max_index() const;
  SuperDerivation truncated_to(unsigned horizon) const;

  std::string str() const;

 private:
  VarTablePtr vars_;
  std::vector<GrassmannElement> images_;
};

/// [d,e] = de - (-1)^{|d||e|} ed, again a superderivation.
SuperDerivation bracket(const SuperDerivation& d, const SuperDerivation& e);

/// g*d for even g is again a superderivation (image-wise left product);
/// parity |g| + |d|. Requires homogeneous g.
SuperDerivation left_multiply(const GrassmannElement& g, const SuperDerivation& d);

/// The normal-ordered operator sum_i d(x_i) d_i realizing d.
Operator derivation_to_operator(const SuperDerivation& d);

/// Restriction of an operator to generator images. Fails (nullopt) when the
/// operator is not a superderivation, detected by the round-trip check.
std::optional<SuperDerivation> operator_to_derivation(const Operator& op);

}  // namespace superalg
