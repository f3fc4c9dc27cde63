#pragma once

#include <memory>

#include "superalg/grassmann.hpp"

namespace superalg {

/// Poisson superalgebra structure on a Grassmann carrier: the supercommutative
/// dot is the Grassmann product, the bracket is supplied by the concrete
/// structure. Handles are immutable and shareable.
class GrassmannPoisson {
 public:
  virtual ~GrassmannPoisson() = default;
  explicit GrassmannPoisson(VarTablePtr vars) : vars_(std::move(vars)) {}

  const VarTablePtr& vars() const { return vars_; }
  GrassmannElement dot(const GrassmannElement& a, const GrassmannElement& b) const { return a * b; }
  virtual GrassmannElement bracket(const GrassmannElement& a, const GrassmannElement& b) const = 0;
  virtual std::string describe() const = 0;

 protected:
  VarTablePtr vars_;
};

using PoissonPtr = std::shared_ptr<const GrassmannPoisson>;

/// Bracket induced by disjoint dual pairs {u_i, w_i} = 1 plus optional
/// self-paired variables {s_j, s_j} = 1:
///   {f,g} = (-1)^{|f|-1} ( sum_i (df/du_i dg/dw_i + df/dw_i dg/du_i)
///                          + sum_j df/ds_j dg/ds_j ).
/// Covers the Hamiltonian algebras H_n, the lifted carrier with
/// {X_i,x_i} = {Y_i,y_i} = {Z_i,z_i} = 1, and the all-self-paired Grassmann
/// Poisson structures behind the finite-dimensional Kantor doubles.
class PairingPoisson : public GrassmannPoisson {
 public:
  PairingPoisson(VarTablePtr vars, std::vector<std::pair<unsigned, unsigned>> pairs, std::string name,
                 std::vector<unsigned> self_pairs = {});

  /// H_n on x0..x_{n-1}, y0..y_{n-1} interleaved, pairs (x_i, y_i).
  static std::shared_ptr<const PairingPoisson> hamiltonian(unsigned n, FieldSpec field);
  /// Pairing on an existing lift carrier (x,y,z,X,Y,Z families).
  static std::shared_ptr<const PairingPoisson> lift_pairing(VarTablePtr lift_vars);
  /// Grassmann algebra on n variables with every variable self-paired.
  static std::shared_ptr<const PairingPoisson> grassmann_poisson(unsigned n, FieldSpec field);

  GrassmannElement bracket(const GrassmannElement& a, const GrassmannElement& b) const override;
  std::string describe() const override { return name_; }

 private:
  std::vector<std::pair<unsigned, unsigned>> pairs_;
  std::vector<unsigned> self_pairs_;
  std::string name_;
};

/// Tensor product of two Poisson structures living on disjoint index blocks
/// of one carrier (block A = indices below split, block P = the rest):
///   (a(x)v).(b(x)w)   = (-1)^{|v||b|} ab (x) vw
///   {a(x)v, b(x)w}    = (-1)^{|v||b|} ({a,b}(x)vw + ab(x){v,w}).
/// Elements are plain carrier elements; a(x)v is identified with a*v.
class TensorPoisson : public GrassmannPoisson {
 public:
  TensorPoisson(PoissonPtr left, PoissonPtr right, unsigned split);

  GrassmannElement bracket(const GrassmannElement& a, const GrassmannElement& b) const override;
  std::string describe() const override {
    return left_->describe() + " (x) " + right_->describe();
  }

  unsigned split() const { return split_; }
  /// Splits a monomial into its block parts (no sign: block A precedes P).
  std::pair<Monomial, Monomial> split_monomial(Monomial m) const;

 private:
  PoissonPtr left_;
  PoissonPtr right_;
  unsigned split_;
};

/// Combined carrier for H_a (x) H_b: block A = H_a, block P = H_b, and the
/// two pairing structures re-indexed onto the combined table.
struct TensorHamiltonian {
  VarTablePtr vars;
  PoissonPtr tensor;
  unsigned split;
};
TensorHamiltonian tensor_hamiltonian(unsigned a, unsigned b, FieldSpec field);

}  // namespace superalg
