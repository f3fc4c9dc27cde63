#pragma once

#include "superalg/examples.hpp"

namespace superalg {

/// Parameters of one verification run; all randomness flows from the seed.
struct VerifyConfig {
  FieldSpec field = FieldSpec::rationals();
  unsigned trunc = 0;   // 0 = example default
  unsigned degree = 0;  // 0 = example default
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

struct SuiteResult {
  std::vector<IdentityReport> identities;
  std::vector<std::pair<std::string, CheckReport>> checks;

  bool ok() const {
    for (const auto& r : identities)
      if (!r.holds()) return false;
    for (const auto& [l, c] : checks)
      if (!c.ok) return false;
    return true;
  }
};

/// Runs the named identity suite for the named example. Suites:
///   lie       super-anticommutativity + super Jacobi
///   poisson   the Lie pair + super-Leibniz
///   jordan    supercommutativity + the Jordan superidentity
///   nil       (a^2)^2, graded nil cube, solvability chain (doubles only)
///   recursion the pivot recursions, pivot squares, matrix-unit table
///   all       everything applicable
SuiteResult run_suite(const std::string& example, const std::string& suite, const VerifyConfig& cfg);

}  // namespace superalg
