#pragma once

#include "superalg/policies.hpp"

namespace superalg {

/// Pivot superderivation v_i = d_i + x_i x_{i+1} (d_{i+2} + x_{i+2} x_{i+3} (...)),
/// truncated at the innermost level whose derivative index would reach N.
/// Every dropped term touches an index >= N.
SuperDerivation pivot_v(unsigned i, const VarTablePtr& vars);

/// Pivot family letter for the three-letter algebra: a_i acts on the x chain
/// with coefficients y_m x_m, b_i on y with z_m y_m, c_i on z with x_m z_m.
enum class PivotLetter { a, b, c };
SuperDerivation pivot_abc(PivotLetter letter, unsigned i, const VarTablePtr& vars);

/// Variable table for the three-letter algebra: families x,y,z interleaved.
VarTablePtr abc_table(unsigned triples, FieldSpec field);

/// Carrier of the Poisson lift: families x,y,z,X,Y,Z interleaved, with the
/// pairing bracket {X_i,x_i} = {Y_i,y_i} = {Z_i,z_i} = 1.
VarTablePtr lift_table(unsigned triples, FieldSpec field);

/// Lifted pivot A_i = X_i + y_i x_i (X_{i+1} + ...), an element of the
/// completed Poisson carrier, truncated like pivot_abc.
GrassmannElement poisson_ABC(PivotLetter letter, unsigned i, const VarTablePtr& vars);

/// Shift tau: every family index moves up by one (flat index + family
/// stride). Total on inputs whose shifted indices stay below N; throws
/// structural_error on overflow, there is no silent wraparound.
Monomial shift_tau(Monomial m, const VarTable& vars);
GrassmannElement shift_tau(const GrassmannElement& f);
SuperDerivation shift_tau(const SuperDerivation& d);
Operator shift_tau(const Operator& e);

/// Re-reads an element over a larger table with the same family layout.
GrassmannElement embed(const GrassmannElement& f, const VarTablePtr& into);
SuperDerivation embed(const SuperDerivation& d, const VarTablePtr& into);

/// One line per verified identity; ok iff every identity held exactly.
struct CheckReport {
  bool ok = true;
  std::vector<std::string> lines;
  void record(const std::string& what, bool good) {
    ok = ok && good;
    lines.push_back((good ? "ok   " : "FAIL ") + what);
  }
};

/// v_i = d_i + x_i x_{i+1} v_{i+2} for i < count, plus the shift consistency
/// tau(v_i at N-1) = v_{i+1} at N.
CheckReport recursion_check_R(const VarTablePtr& vars, unsigned count);
/// a_0 = d_{x_0} + y_0 x_0 tau(a_0) and the b, c analogues at the given table.
CheckReport recursion_check_Q(const VarTablePtr& vars);
/// A_0 = X_0 + y_0 x_0 tau(A_0) and the B, C analogues over the lift carrier.
CheckReport recursion_check_P(const VarTablePtr& vars);

/// Alg(d_0, x_0) is 4-dimensional and multiplies like the 2x2 matrix units,
/// even part diagonal, odd part off-diagonal.
CheckReport m11_check(FieldSpec field);

/// v_n compose v_n = x_{n+1} v_{n+2} (equivalently [v_n,v_n] = 2 x_{n+1} v_{n+2})
/// for n = 0..count-1; needs N >= n+10 headroom for an exact match.
CheckReport pivot_square_check(const VarTablePtr& vars, unsigned count);

}  // namespace superalg
