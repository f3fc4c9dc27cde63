#pragma once

#include <array>
#include <map>

#include "superalg/generate.hpp"

namespace superalg {

/// Laurent polynomial in one or two variables with integer coefficients,
/// truncated at a declared total degree. Exponents may be negative during
/// intermediate shifts; arithmetic is exact.
class TruncatedSeries {
 public:
  using Exponent = std::array<int, 2>;

  TruncatedSeries(unsigned vars, int trunc) : vars_(vars), trunc_(trunc) {
    if (vars < 1 || vars > 2) throw structural_error("series support 1 or 2 variables");
  }

  unsigned variables() const { return vars_; }
  int truncation() const { return trunc_; }
  const std::map<Exponent, long long>& coeffs() const { return coeffs_; }

  void add(Exponent e, long long c);
  void add(int e, long long c) { add(Exponent{e, 0}, c); }
  long long coeff(Exponent e) const;
  long long coeff(int e) const { return coeff(Exponent{e, 0}); }
  bool operator==(const TruncatedSeries& o) const {
    return vars_ == o.vars_ && coeffs_ == o.coeffs_;
  }

  /// Equality of coefficients for all total degrees <= cap.
  bool agrees_to(const TruncatedSeries& o, int cap) const;

  /// Human-readable sparse polynomial, e.g. "1 + 3*t + 2*t^2" or t1/t2 form.
  std::string str() const;

 private:
  unsigned vars_;
  int trunc_;
  std::map<Exponent, long long> coeffs_;
};

/// H(L,t) (univariate: coefficient of t^n is the total-degree-n dimension)
/// or the multidegree series in two variables for rank-2 gradings.
TruncatedSeries hilbert(const DimensionTable& table, unsigned variables);

/// Bivariate series of a double's table (t1: degree in the original
/// generators, t2: bar-unit count); the table's last coordinate is the bar
/// count.
TruncatedSeries hilbert_double_bivariate(const DimensionTable& table);

/// H(J,t) = 1 + t + (1/t + 1/t^2) H(L,t^3); input must have zero constant
/// term; the output is reliable to degree 3*trunc(L) - 1.
TruncatedSeries jordan_transfer(const TruncatedSeries& hl);

/// Bivariate form H(J,t1,t2) = 1 + t2 + (1/t2 + 1/t2^2) H(L, t1 t2^2).
TruncatedSeries jordan_transfer_bivariate(const TruncatedSeries& hl);

/// The closed-window count identities between the growth functions:
///   gamma_J(3m) = gamma_J(3m-1) = 2 + 2 gamma_L(m)
///   gamma_J(3m-2) = 2 + 2 gamma_L(m) - dim L_m,
/// checked exactly for all m in the window, plus the literal growth
/// equivalence inequalities gamma_J(n) <= 2 + 2 gamma_L(n) and
/// gamma_L(n) <= gamma_J(3n).
struct TransferConsistency {
  bool ok = true;
  std::vector<std::string> lines;
};
TransferConsistency transfer_consistency(const DimensionTable& l_table, const DimensionTable& j_table);

/// Least-squares slope of (ln n, ln gamma(n)) over [n0, n1]; a diagnostic
/// with its window, never asserted as a dimension.
double gk_slope(const std::vector<unsigned long>& gamma, unsigned n0, unsigned n1);

}  // namespace superalg
