#include "superalg/policies.hpp"

namespace superalg {

FilteredAssocBasis filtered_assoc_closure(VarTablePtr vars, const std::vector<Operator>& gens,
                                          unsigned max_len) {
  FilteredAssocBasis out;
  detail::Echelon<OperatorTerm, OperatorTermLess> ech;
  AssocOperatorPolicy policy{vars};

  // pool of representatives actually multiplied, tagged with word length
  std::vector<Operator> pool;
  std::vector<unsigned> pool_len;

  auto insert = [&](const Operator& e, unsigned lvl) {
    auto v = policy.to_terms(e);
    if (v.empty()) return;
    if (ech.insert(std::move(v))) {
      pool.push_back(e);
      pool_len.push_back(lvl);
    }
  };

  for (const auto& g : gens) insert(g, 1);
  out.cumulative_dim.assign(max_len + 1, 0);
  out.cumulative_dim[1] = ech.dim();
  for (unsigned n = 2; n <= max_len; ++n) {
    // every word of length n is a product of two shorter words whose
    // representatives sit in the pool at smaller lengths
    std::size_t stop = pool.size();
    for (std::size_t i = 0; i < stop; ++i)
      for (std::size_t j = 0; j < stop; ++j) {
        if (pool_len[i] + pool_len[j] != n) continue;
        insert(compose(pool[i], pool[j]), n);
      }
    out.cumulative_dim[n] = ech.dim();
  }
  for (const auto& row : ech.rows()) out.rows.push_back(policy.from_terms(row.vec));
  return out;
}

bool FilteredAssocBasis::contains(const Operator& op) const {
  if (rows.empty()) return op.is_zero();
  AssocOperatorPolicy policy{rows.front().vars()};
  detail::Echelon<OperatorTerm, OperatorTermLess> ech;
  for (const auto& r : rows) ech.insert(policy.to_terms(r));
  auto v = policy.to_terms(op);
  ech.reduce(v);
  return v.empty();
}

}  // namespace superalg
