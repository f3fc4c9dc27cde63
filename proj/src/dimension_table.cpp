#include "superalg/generate.hpp"

namespace superalg {

unsigned DimensionTable::dim_total(unsigned n) const {
  unsigned d = (n == 0 && unital) ? 1 : 0;
  for (const auto& e : components)
    if (e.deg.total() == n) d += e.dim;
  return d;
}

unsigned DimensionTable::width() const {
  unsigned w = 0;
  for (unsigned n = 1; n <= max_degree; ++n) w = std::max(w, dim_total(n));
  return w;
}

std::set<unsigned> DimensionTable::value_set(unsigned from, unsigned to) const {
  std::set<unsigned> s;
  for (unsigned n = from; n <= to && n <= max_degree; ++n) s.insert(dim_total(n));
  return s;
}

bool DimensionTable::reliable_total(unsigned n) const {
  if (n > max_degree) return false;
  for (const auto& e : components)
    if (e.deg.total() == n && !e.reliable) return false;
  return true;
}

std::vector<unsigned long> DimensionTable::growth() const {
  std::vector<unsigned long> g(max_degree + 1, 0);
  unsigned long acc = 0;
  for (unsigned n = 0; n <= max_degree; ++n) {
    acc += dim_total(n);
    g[n] = acc;
  }
  return g;
}

std::optional<unsigned> periodicity_probe(const std::vector<unsigned>& dims) {
  if (dims.size() < 9) throw structural_error("periodicity probe needs at least 9 values");
  unsigned len = static_cast<unsigned>(dims.size());
  for (unsigned p = 1; p * 3 <= len; ++p) {
    bool ok = true;
    for (unsigned i = 0; i + p < len && ok; ++i) ok = dims[i] == dims[i + p];
    if (ok) return p;
  }
  return std::nullopt;
}

}  // namespace superalg
