#include "superalg/series.hpp"

#include <cmath>
#include <sstream>

namespace superalg {

void TruncatedSeries::add(Exponent e, long long c) {
  if (c == 0) return;
  if (vars_ == 1) e[1] = 0;
  auto [it, fresh] = coeffs_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

long long TruncatedSeries::coeff(Exponent e) const {
  if (vars_ == 1) e[1] = 0;
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? 0 : it->second;
}

bool TruncatedSeries::agrees_to(const TruncatedSeries& o, int cap) const {
  if (vars_ != o.vars_) return false;
  for (const auto& [e, c] : coeffs_)
    if (e[0] + e[1] <= cap && o.coeff(e) != c) return false;
  for (const auto& [e, c] : o.coeffs_)
    if (e[0] + e[1] <= cap && coeff(e) != c) return false;
  return true;
}

std::string TruncatedSeries::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << c;
    auto pow = [&](const char* v, int k) {
      if (k == 0) return;
      os << "*" << v;
      if (k != 1) os << "^" << k;
    };
    if (vars_ == 1) {
      pow("t", e[0]);
    } else {
      pow("t1", e[0]);
      pow("t2", e[1]);
    }
  }
  return os.str();
}

TruncatedSeries hilbert(const DimensionTable& table, unsigned variables) {
  if (variables == 2 && table.rank != 2)
    throw structural_error("bivariate hilbert series needs a rank-2 multidegree");
  TruncatedSeries s(variables, static_cast<int>(table.max_degree));
  if (variables == 1) {
    for (unsigned n = 0; n <= table.max_degree; ++n) s.add(static_cast<int>(n), table.dim_total(n));
  } else {
    for (const auto& e : table.components)
      s.add({static_cast<int>(e.deg.deg[0]), static_cast<int>(e.deg.deg[1])}, e.dim);
    if (table.unital) s.add({0, 0}, 1);
  }
  return s;
}

TruncatedSeries hilbert_double_bivariate(const DimensionTable& table) {
  if (table.rank < 2) throw structural_error("double table needs rank >= 2");
  TruncatedSeries s(2, static_cast<int>(table.max_degree));
  for (const auto& e : table.components) {
    unsigned bar = e.deg.deg[table.rank - 1];
    unsigned x = e.deg.total() - bar;
    s.add({static_cast<int>(x), static_cast<int>(bar)}, e.dim);
  }
  if (table.unital) s.add({0, 0}, 1);
  return s;
}

TruncatedSeries jordan_transfer(const TruncatedSeries& hl) {
  if (hl.variables() != 1) throw structural_error("jordan_transfer takes a univariate series");
  if (hl.coeff(0) != 0) throw structural_error("H(L,t) must have zero constant term");
  TruncatedSeries out(1, 3 * hl.truncation() - 1);
  out.add(0, 1);
  out.add(1, 1);
  for (const auto& [e, c] : hl.coeffs()) {
    out.add(3 * e[0] - 1, c);
    out.add(3 * e[0] - 2, c);
  }
  return out;
}

TruncatedSeries jordan_transfer_bivariate(const TruncatedSeries& hl) {
  if (hl.variables() != 1) throw structural_error("jordan_transfer takes a univariate series");
  if (hl.coeff(0) != 0) throw structural_error("H(L,t) must have zero constant term");
  TruncatedSeries out(2, 3 * hl.truncation() - 1);
  out.add({0, 0}, 1);
  out.add({0, 1}, 1);
  for (const auto& [e, c] : hl.coeffs()) {
    int n = e[0];
    out.add({n, 2 * n - 1}, c);
    out.add({n, 2 * n - 2}, c);
  }
  return out;
}

TransferConsistency transfer_consistency(const DimensionTable& l_table, const DimensionTable& j_table) {
  TransferConsistency out;
  auto gamma_l = l_table.growth();
  auto gamma_j = j_table.growth();
  unsigned window_m = std::min(l_table.max_degree, j_table.max_degree / 3);
  auto note = [&](const std::string& what, bool good) {
    out.ok = out.ok && good;
    out.lines.push_back((good ? "ok   " : "FAIL ") + what);
  };
  for (unsigned m = 1; m <= window_m; ++m) {
    unsigned long expect = 2 + 2 * gamma_l[m];
    note("gamma_J(3m)   = 2+2gamma_L(m), m=" + std::to_string(m), gamma_j[3 * m] == expect);
    note("gamma_J(3m-1) = 2+2gamma_L(m), m=" + std::to_string(m), gamma_j[3 * m - 1] == expect);
    note("gamma_J(3m-2) = 2+2gamma_L(m)-dim L_m, m=" + std::to_string(m),
         gamma_j[3 * m - 2] == expect - l_table.dim_total(m));
  }
  for (unsigned n = 1; n <= j_table.max_degree && n <= l_table.max_degree; ++n) {
    note("gamma_J(n) <= 2+2gamma_L(n), n=" + std::to_string(n), gamma_j[n] <= 2 + 2 * gamma_l[n]);
    if (3 * n <= j_table.max_degree)
      note("gamma_L(n) <= gamma_J(3n), n=" + std::to_string(n), gamma_l[n] <= gamma_j[3 * n]);
  }
  return out;
}

double gk_slope(const std::vector<unsigned long>& gamma, unsigned n0, unsigned n1) {
  if (n0 < 2 || n1 <= n0 || n1 >= gamma.size())
    throw structural_error("gk_slope window outside the computed range");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  unsigned count = 0;
  for (unsigned n = n0; n <= n1; ++n) {
    if (gamma[n] == 0) throw structural_error("gk_slope needs positive growth values");
    double x = std::log(static_cast<double>(n));
    double y = std::log(static_cast<double>(gamma[n]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  double denom = count * sxx - sx * sx;
  return (count * sxy - sx * sy) / denom;
}

}  // namespace superalg
