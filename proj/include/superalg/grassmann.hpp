#pragma once

#include <map>
#include <optional>
#include <string>

#include "superalg/monomial.hpp"
#include "superalg/vartable.hpp"

namespace superalg {

/// Element of the truncated Grassmann superalgebra: an exact linear
/// combination of monomials in canonical order, zero coefficients never
/// stored. Equality is term-map equality.
class GrassmannElement {
 public:
  using TermMap = std::map<Monomial, Scalar, MonomialLess>;

  explicit GrassmannElement(VarTablePtr vars) : vars_(std::move(vars)) {}

  static GrassmannElement zero(VarTablePtr vars) { return GrassmannElement(std::move(vars)); }
  static GrassmannElement one(VarTablePtr vars);
  static GrassmannElement monomial(VarTablePtr vars, Monomial m, Scalar c);
  static GrassmannElement variable(VarTablePtr vars, unsigned i);

  const VarTablePtr& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Coefficient of a monomial (zero scalar if absent).
  Scalar coeff(Monomial m) const;

  void add_term(Monomial m, const Scalar& c);

  GrassmannElement operator+(const GrassmannElement& o) const;
  GrassmannElement operator-(const GrassmannElement& o) const;
  GrassmannElement operator*(const GrassmannElement& o) const;  // supercommutative product
  GrassmannElement scaled(const Scalar& c) const;
  GrassmannElement operator-() const;
  GrassmannElement& operator+=(const GrassmannElement& o);
  GrassmannElement& operator-=(const GrassmannElement& o);

  bool operator==(const GrassmannElement& o) const;
  bool operator!=(const GrassmannElement& o) const { return !(*this == o); }

  /// Z2-parity when all terms agree, nullopt otherwise.
  std::optional<unsigned> parity() const;
  bool is_homogeneous() const { return parity().has_value(); }
  /// Terms of the given parity.
  GrassmannElement parity_part(unsigned p) const;
  /// Terms of exact monomial degree d.
  GrassmannElement degree_part(unsigned d) const;
  int max_degree() const;
  int max_index() const;

  /// Drops every term touching an index >= horizon.
  GrassmannElement truncated_to(unsigned horizon) const;

  /// Text form `c * x0^ x2^ + ...`; round-trips through parse().
  std::string str() const;
  static GrassmannElement parse(VarTablePtr vars, const std::string& text);

 private:
  VarTablePtr vars_;
  TermMap terms_;
};

/// Odd partial superderivative: d_i(x_j) = delta_ij extended by the
/// super-Leibniz rule; on a monomial containing i it removes i and picks up
/// the sign (-1)^(number of smaller indices present).
GrassmannElement partial(unsigned i, const GrassmannElement& f);

/// Pure tensor a (x) b with factors over independent tables.
struct TensorPair {
  GrassmannElement a;
  GrassmannElement b;
  bool operator==(const TensorPair& o) const { return a == o.a && b == o.b; }
};

/// Kaplansky product (a1 (x) b1)(a2 (x) b2) = (-1)^{|b1||a2|} a1 a2 (x) b1 b2.
/// Requires b1 and a2 Z2-homogeneous (the bilinear extension is the caller's
/// sum over parity parts).
TensorPair kaplansky_mul(const TensorPair& u, const TensorPair& v);

}  // namespace superalg
