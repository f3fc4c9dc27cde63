// Acceptance suite: every criterion below runs at its stated parameters and
// prints one pass/fail line. The exit code is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "superalg/handles.hpp"
#include "superalg/reports.hpp"
#include "superalg/series.hpp"
#include "superalg/verify.hpp"

using namespace superalg;

namespace {

int failures = 0;
std::vector<std::string> notes;

void criterion(int n, const std::string& label, const std::function<bool()>& body) {
  notes.clear();
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string error;
  try {
    ok = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s criterion %2d: %s (%.1fs)\n", ok ? "PASS" : "FAIL", n, label.c_str(), secs);
  for (const auto& note : notes) std::printf("     - %s\n", note.c_str());
  if (!error.empty()) std::printf("     - error: %s\n", error.c_str());
  if (!ok) ++failures;
  std::fflush(stdout);
}

void note(const std::string& s) { notes.push_back(s); }

bool tables_agree_on_reliable(const DimensionTable& base, const DimensionTable& bigger) {
  bool ok = true;
  for (const auto& e : base.components) {
    if (!e.reliable) continue;
    unsigned other = 0;
    for (const auto& e2 : bigger.components)
      if (e2.deg == e.deg) other = e2.dim;
    if (other != e.dim) {
      note("component " + e.deg.str() + " dim " + std::to_string(e.dim) + " vs " +
           std::to_string(other) + " at N+2");
      ok = false;
    }
  }
  return ok;
}

}  // namespace

int main() {
  FieldSpec q = FieldSpec::rationals();

  // shared builds at the acceptance parameters
  LieBasis r24 = build_R(q, 24, 20, 2);
  DimensionTable r_table = r24.dimension_table();
  DimensionTable jor_table = example_dims("JorR", q, 24, 59, 2);

  criterion(1, "fine Z^2 grading of R at N=24, D=20", [&] {
    bool fine = true;
    unsigned comps = 0;
    for (const auto& e : r_table.components) {
      ++comps;
      fine = fine && e.dim <= 1;
    }
    note(std::to_string(comps) + " components, all of dimension <= 1");
    return fine && comps > 0;
  });

  criterion(2, "width of R: dims in {2,3,4} with 4 attained, dim R_1 = 2", [&] {
    bool ok = r_table.dim_total(1) == 2;
    std::set<unsigned> seen = r_table.value_set(2, 20);
    for (unsigned v : seen) ok = ok && (v == 2 || v == 3 || v == 4);
    ok = ok && seen.count(4) == 1;
    std::string dims;
    for (unsigned n = 1; n <= 20; ++n) dims += std::to_string(r_table.dim_total(n)) + " ";
    note("dims 1..20: " + dims);
    return ok;
  });

  criterion(3, "growth of R: gamma(m)/m in [2,4]; ratio at 20 near 3", [&] {
    auto gamma = r_table.growth();
    bool ok = true;
    for (unsigned m = 1; m <= 20; ++m) {
      double ratio = static_cast<double>(gamma[m]) / m;
      ok = ok && ratio >= 2.0 && ratio <= 4.0;
    }
    double r20 = static_cast<double>(gamma[20]) / 20.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "gamma(20)/20 = %.3f", r20);
    note(buf);
    if (r20 < 2.5 || r20 > 3.5) note("warning: ratio outside the diagnostic band [2.5,3.5]");
    return ok;
  });

  criterion(4, "double grading: J_0=1, J_1=L_1+1, J_{3m}=0, J_{3m-2}=J_{3m-1}=L_m, values {0,2,3,4}",
            [&] {
              bool ok = jor_table.dim_total(0) == 1;
              ok = ok && jor_table.dim_total(1) == r_table.dim_total(1) + 1;
              for (unsigned m = 1; 3 * m <= 59; ++m) ok = ok && jor_table.dim_total(3 * m) == 0;
              // J_1 carries the extra bar unit, so the L_m clause starts at m=2
              ok = ok && jor_table.dim_total(2) == r_table.dim_total(1);
              for (unsigned m = 2; 3 * m - 1 <= 59 && m <= 20; ++m) {
                ok = ok && jor_table.dim_total(3 * m - 2) == r_table.dim_total(m);
                ok = ok && jor_table.dim_total(3 * m - 1) == r_table.dim_total(m);
              }
              std::set<unsigned> values = jor_table.value_set(1, 59);
              bool value_set_ok = values == std::set<unsigned>{0, 2, 3, 4};
              if (!value_set_ok) {
                std::string s;
                for (unsigned v : values) s += std::to_string(v) + " ";
                note("value set: " + s);
              }
              return ok && value_set_ok;
            });

  criterion(5, "series transfer equals the direct H(Jor(R),t) to degree 59, count identities exact",
            [&] {
              TruncatedSeries formula = jordan_transfer(hilbert(r_table, 1));
              TruncatedSeries direct = hilbert(jor_table, 1);
              bool match = formula.agrees_to(direct, 59);
              TransferConsistency counts = transfer_consistency(r_table, jor_table);
              if (!counts.ok)
                for (const auto& l : counts.lines)
                  if (l.rfind("FAIL", 0) == 0) note(l);
              return match && counts.ok;
            });

  criterion(6, "identity suites: R Jacobi to degree 8, Jordan quadruples, Leibniz on H1/H2", [&] {
    LieBasisHandle rh(r24, 8, "R");
    IdentityReport anticomm = check_super_anticomm(rh, Strategy::exhaustive());
    IdentityReport jacobi = check_super_jacobi(rh, Strategy::exhaustive());
    note("jacobi triples checked: " + std::to_string(jacobi.tuples));

    auto h2 = PairingPoisson::hamiltonian(2, q);
    KantorHandle kan(h2, 4, "KanH2");
    IdentityReport jordan_kan = check_jordan_super(kan, Strategy::random(1000, 7));

    JordanDouble<DerivationLieOps> dbl(DerivationLieOps{r24.policy().vars});
    JorRHandle jor(dbl, lie_basis_samples(r24, 4), "JorR");
    IdentityReport jordan_jor = check_jordan_super(jor, Strategy::random(1000, 7));

    auto h1 = PairingPoisson::hamiltonian(1, q);
    IdentityReport leib1 = check_leibniz(GrassmannPoissonHandle(h1, 2), Strategy::exhaustive());
    IdentityReport leib2 = check_leibniz(GrassmannPoissonHandle(h2, 4), Strategy::random(1000, 7));

    for (const IdentityReport* r : {&anticomm, &jacobi, &jordan_kan, &jordan_jor, &leib1, &leib2})
      if (!r->holds()) note("counterexample in " + r->identity + " on " + r->algebra);
    return anticomm.holds() && jacobi.holds() && jordan_kan.holds() && jordan_jor.holds() &&
           leib1.holds() && leib2.holds();
  });

  criterion(7, "nil properties: (a^2)^2 = 0, graded nil cube to degree 12, solvable of length 3", [&] {
    JordanDouble<DerivationLieOps> dbl(DerivationLieOps{r24.policy().vars});
    JorRHandle h(dbl, lie_basis_samples(r24, 4), "JorR");  // components to J-degree <= 12
    IdentityReport sq = check_square_square(h, 500, 2026);
    IdentityReport cube = check_homogeneous_nil_cube(h);
    note("nil-cube components checked: " + std::to_string(cube.tuples));
    JorRHandle h8(dbl, lie_basis_samples(r24, 3), "JorR to degree 8");
    IdentityReport chain = check_solvability_chain(h8);
    for (const IdentityReport* r : {&sq, &cube, &chain})
      if (!r->holds()) note("counterexample in " + r->identity);
    return sq.holds() && cube.holds() && chain.holds();
  });

  criterion(8, "pivot identities: recursion for v_i, [v_n,v_n] = 2 x_{n+1} v_{n+2}, letter recursions",
            [&] {
              auto vars16 = VarTable::plain(16, q);
              CheckReport rec = recursion_check_R(vars16, 4);
              CheckReport squares = pivot_square_check(vars16, 5);
              CheckReport rq = recursion_check_Q(abc_table(5, q));
              CheckReport rp = recursion_check_P(lift_table(5, q));
              for (const CheckReport* r : {&rec, &squares, &rq, &rp})
                for (const auto& line : r->lines)
                  if (line.rfind("FAIL", 0) == 0) note(line);
              return rec.ok && squares.ok && rq.ok && rp.ok;
            });

  criterion(9, "associative hull: GK slope in [1.6,2.4] over [5,10]; gamma_A > gamma_R from degree 2",
            [&] {
              AssocBasis a16 = build_AR(q, 16, 10, 2);
              DimensionTable a_table = a16.dimension_table();
              LieBasis r16 = build_R(q, 16, 10, 2);
              DimensionTable r16_table = r16.dimension_table();
              auto ga = a_table.growth();
              auto gr = r16_table.growth();
              bool strict = true;
              for (unsigned d = 2; d <= 10; ++d) strict = strict && ga[d] > gr[d];
              double slope = gk_slope(ga, 5, 10);
              char buf[64];
              std::snprintf(buf, sizeof buf, "gk slope = %.3f", slope);
              note(buf);
              bool slope_ok = slope >= 1.6 && slope <= 2.4;
              if (!slope_ok) note("warning: slope outside the diagnostic band");
              return strict && slope_ok;
            });

  criterion(10, "fine Z^3 grading of Q at 8 letter triples, D=8", [&] {
    LieBasis qb = build_Q(q, 8, 8, 2);
    bool fine = true;
    unsigned comps = 0;
    for (const auto& [m, comp] : qb.components()) {
      ++comps;
      fine = fine && comp.rows.size() <= 1;
    }
    note(std::to_string(comps) + " components");
    return fine && comps > 0;
  });

  criterion(11, "Alg(d0, x0) is 4-dimensional and multiplies like the 2x2 matrix units", [&] {
    CheckReport rep = m11_check(q);
    for (const auto& line : rep.lines)
      if (line.rfind("FAIL", 0) == 0) note(line);
    return rep.ok;
  });

  criterion(12, "D-map superderivation on Kan(H2); wreath = Kantor oracle; Jordan probe on wreath",
            [&] {
              auto h2 = PairingPoisson::hamiltonian(2, q);
              KantorHandle kan(h2, 4, "KanH2");
              IdentityReport dmap = check_d_superderivation(kan, Strategy::exhaustive());
              note("d-map pairs checked: " + std::to_string(dmap.tuples));

              TensorHamiltonian th = tensor_hamiltonian(1, 1, q);
              std::vector<std::pair<unsigned, unsigned>> hp{{th.vars->flat(0, 0), th.vars->flat(1, 0)}};
              std::vector<std::pair<unsigned, unsigned>> pp{{th.vars->flat(0, 1), th.vars->flat(1, 1)}};
              auto H = std::make_shared<const PairingPoisson>(th.vars, hp, "H1");
              auto P1 = std::make_shared<const PairingPoisson>(th.vars, pp, "H1'");
              KantorHandle wreath = KantorHandle::wreath(H, P1, th.split, 4, "H1 (x) Kan(H1)");
              bool oracle = true;
              unsigned long pairs = 0;
              for (const auto& u : wreath.samples())
                for (const auto& v : wreath.samples()) {
                  oracle = oracle && wreath_mul(u.e, v.e, *H, *P1, th.split) ==
                                         kantor_mul(u.e, v.e, *th.tensor);
                  ++pairs;
                }
              note("wreath/Kantor pairs compared: " + std::to_string(pairs));

              IdentityReport probe = check_jordan_super(wreath, Strategy::random(1000, 7));
              if (!probe.holds())
                note("REPORTED: Jordan probe counterexample on the wreath product (not a failure)");
              else
                note("Jordan probe on the wreath product: holds-on-sample (1000 quadruples)");
              return dmap.holds() && oracle;
            });

  criterion(13, "determinism across worker counts and stability under N -> N+2", [&] {
    bool ok = true;

    LieBasis r_again = build_R(q, 24, 20, 1);
    ok = ok && r_again.serialize() == r24.serialize();
    LieBasis r26 = build_R(q, 26, 20, 2);
    ok = ok && tables_agree_on_reliable(r_table, r26.dimension_table());

    AssocBasis a1 = build_AR(q, 16, 10, 1);
    AssocBasis a2 = build_AR(q, 16, 10, 2);
    ok = ok && a1.serialize() == a2.serialize();
    AssocBasis a18 = build_AR(q, 18, 10, 2);
    ok = ok && tables_agree_on_reliable(a1.dimension_table(), a18.dimension_table());

    LieBasis q1 = build_Q(q, 8, 8, 1);
    LieBasis q2 = build_Q(q, 8, 8, 2);
    ok = ok && q1.serialize() == q2.serialize();
    LieBasis q9 = build_Q(q, 9, 8, 2);
    ok = ok && tables_agree_on_reliable(q1.dimension_table(), q9.dimension_table());

    JorRBasis j1 = build_JorR(q, 24, 59, 1);
    JorRBasis j2 = build_JorR(q, 24, 59, 2);
    ok = ok && j1.serialize() == j2.serialize();
    DimensionTable j26 = example_dims("JorR", q, 26, 59, 2);
    DimensionTable j24 = j1.dimension_table();
    ok = ok && tables_agree_on_reliable(j24, j26);

    return ok;
  });

  std::printf("%d of 13 criteria passed\n", 13 - failures);
  return failures;
}
