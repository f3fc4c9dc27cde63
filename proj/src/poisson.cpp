#include "superalg/poisson.hpp"

namespace superalg {

PairingPoisson::PairingPoisson(VarTablePtr vars, std::vector<std::pair<unsigned, unsigned>> pairs,
                               std::string name, std::vector<unsigned> self_pairs)
    : GrassmannPoisson(std::move(vars)),
      pairs_(std::move(pairs)),
      self_pairs_(std::move(self_pairs)),
      name_(std::move(name)) {
  for (auto [u, w] : pairs_)
    if (u >= vars_->count() || w >= vars_->count() || u == w)
      throw structural_error("bad pairing indices");
  for (unsigned s : self_pairs_)
    if (s >= vars_->count()) throw structural_error("bad pairing indices");
}

std::shared_ptr<const PairingPoisson> PairingPoisson::grassmann_poisson(unsigned n, FieldSpec field) {
  auto vars = VarTable::plain(n, field);
  std::vector<unsigned> selfp(n);
  for (unsigned i = 0; i < n; ++i) selfp[i] = i;
  return std::make_shared<const PairingPoisson>(vars, std::vector<std::pair<unsigned, unsigned>>{},
                                                "Lambda" + std::to_string(n), std::move(selfp));
}

std::shared_ptr<const PairingPoisson> PairingPoisson::hamiltonian(unsigned n, FieldSpec field) {
  if (n < 1) throw structural_error("hamiltonian needs n >= 1");
  auto vars = VarTable::interleaved({"x", "y"}, n, field);
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned i = 0; i < n; ++i) pairs.emplace_back(vars->flat(0, i), vars->flat(1, i));
  return std::make_shared<const PairingPoisson>(vars, std::move(pairs), "H" + std::to_string(n));
}

std::shared_ptr<const PairingPoisson> PairingPoisson::lift_pairing(VarTablePtr lift_vars) {
  if (lift_vars->family_count() != 6) throw structural_error("lift pairing expects the x..Z carrier");
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned i = 0; i < lift_vars->members(); ++i)
    for (unsigned fam = 0; fam < 3; ++fam)
      pairs.emplace_back(lift_vars->flat(fam + 3, i), lift_vars->flat(fam, i));
  return std::make_shared<const PairingPoisson>(lift_vars, std::move(pairs), "Hlift");
}

GrassmannElement PairingPoisson::bracket(const GrassmannElement& a, const GrassmannElement& b) const {
  require_compatible(*vars_, *a.vars());
  require_compatible(*vars_, *b.vars());
  GrassmannElement out(vars_);
  for (unsigned p = 0; p < 2; ++p) {
    GrassmannElement fp = a.parity_part(p);
    if (fp.is_zero()) continue;
    // (-1)^{|f|-1}
    bool negate = (p == 0);
    for (auto [u, w] : pairs_) {
      GrassmannElement fu = partial(u, fp), fw = partial(w, fp);
      if (!fu.is_zero()) {
        GrassmannElement gw = partial(w, b);
        if (!gw.is_zero()) out += negate ? -(fu * gw) : fu * gw;
      }
      if (!fw.is_zero()) {
        GrassmannElement gu = partial(u, b);
        if (!gu.is_zero()) out += negate ? -(fw * gu) : fw * gu;
      }
    }
    for (unsigned s : self_pairs_) {
      GrassmannElement fs = partial(s, fp);
      if (fs.is_zero()) continue;
      GrassmannElement gs = partial(s, b);
      if (!gs.is_zero()) out += negate ? -(fs * gs) : fs * gs;
    }
  }
  return out;
}

TensorPoisson::TensorPoisson(PoissonPtr left, PoissonPtr right, unsigned split)
    : GrassmannPoisson(left->vars()), left_(std::move(left)), right_(std::move(right)), split_(split) {
  require_compatible(*left_->vars(), *right_->vars());
  if (split_ == 0 || split_ >= vars_->count()) throw structural_error("tensor split out of range");
}

std::pair<Monomial, Monomial> TensorPoisson::split_monomial(Monomial m) const {
  std::uint64_t mask = (std::uint64_t(1) << split_) - 1;
  return {Monomial{m.bits & mask}, Monomial{m.bits & ~mask}};
}

GrassmannElement TensorPoisson::bracket(const GrassmannElement& f, const GrassmannElement& g) const {
  require_compatible(*vars_, *f.vars());
  require_compatible(*vars_, *g.vars());
  GrassmannElement out(vars_);
  Scalar one = Scalar::one(vars_->field());
  for (const auto& [m, cm] : f.terms()) {
    auto [ma, mp] = split_monomial(m);
    GrassmannElement ea = GrassmannElement::monomial(vars_, ma, one);
    GrassmannElement ep = GrassmannElement::monomial(vars_, mp, one);
    for (const auto& [n, cn] : g.terms()) {
      auto [na, np] = split_monomial(n);
      GrassmannElement fa = GrassmannElement::monomial(vars_, na, one);
      GrassmannElement fp = GrassmannElement::monomial(vars_, np, one);
      Scalar c = cm * cn;
      if (mp.parity() & na.parity() & 1u) c = -c;
      GrassmannElement term = left_->bracket(ea, fa) * ep * fp + ea * fa * right_->bracket(ep, fp);
      out += term.scaled(c);
    }
  }
  return out;
}

TensorHamiltonian tensor_hamiltonian(unsigned a, unsigned b, FieldSpec field) {
  auto vars = VarTable::interleaved({"x", "y"}, a + b, field);
  std::vector<std::pair<unsigned, unsigned>> left_pairs, right_pairs;
  for (unsigned i = 0; i < a; ++i) left_pairs.emplace_back(vars->flat(0, i), vars->flat(1, i));
  for (unsigned i = a; i < a + b; ++i) right_pairs.emplace_back(vars->flat(0, i), vars->flat(1, i));
  auto left = std::make_shared<const PairingPoisson>(vars, std::move(left_pairs), "H" + std::to_string(a));
  auto right = std::make_shared<const PairingPoisson>(vars, std::move(right_pairs), "H" + std::to_string(b));
  TensorHamiltonian out;
  out.vars = vars;
  out.split = 2 * a;
  out.tensor = std::make_shared<const TensorPoisson>(left, right, out.split);
  return out;
}

}  // namespace superalg
