#include "superalg/doubles.hpp"

namespace superalg {

std::optional<unsigned> KantorElement::parity() const {
  std::optional<unsigned> q;
  if (!plain.is_zero()) {
    auto p = plain.parity();
    if (!p) return std::nullopt;
    q = *p;
  }
  if (!barred.is_zero()) {
    auto p = barred.parity();
    if (!p) return std::nullopt;
    unsigned qb = (*p + 1) & 1u;
    if (q && *q != qb) return std::nullopt;
    q = qb;
  }
  if (!q) return 0;
  return q;
}

std::string KantorElement::str() const { return "(" + plain.str() + ") + b(" + barred.str() + ")"; }

KantorElement kantor_mul(const KantorElement& u, const KantorElement& v, const GrassmannPoisson& A) {
  const VarTablePtr& vars = u.plain.vars();
  KantorElement r = KantorElement::zero(vars);

  // a . b = ab
  r.plain += u.plain * v.plain;
  // a . bar(b) = bar(ab)
  r.barred += u.plain * v.barred;
  // bar(a) . b = (-1)^{|b|} bar(ab)
  for (unsigned p = 0; p < 2; ++p) {
    GrassmannElement bp = v.plain.parity_part(p);
    if (bp.is_zero()) continue;
    GrassmannElement ab = u.barred * bp;
    r.barred += (p & 1u) ? -ab : ab;
  }
  // bar(a) . bar(b) = (-1)^{|b|} {a,b}
  for (unsigned p = 0; p < 2; ++p) {
    GrassmannElement bp = v.barred.parity_part(p);
    if (bp.is_zero()) continue;
    GrassmannElement br = A.bracket(u.barred, bp);
    r.plain += (p & 1u) ? -br : br;
  }
  return r;
}

KantorElement d_map(const KantorElement& u) {
  KantorElement r = KantorElement::zero(u.plain.vars());
  r.plain = u.barred.parity_part(0) - u.barred.parity_part(1);
  return r;
}

KantorElement wreath_mul(const KantorElement& u, const KantorElement& v, const GrassmannPoisson& H,
                         const GrassmannPoisson& P1, unsigned split) {
  const VarTablePtr& vars = u.plain.vars();
  Scalar one = Scalar::one(vars->field());
  std::uint64_t mask = (std::uint64_t(1) << split) - 1;
  KantorElement out = KantorElement::zero(vars);

  struct Piece {
    Monomial h, p;
    Scalar c;
    bool bar;
  };
  auto pieces = [&](const KantorElement& e) {
    std::vector<Piece> ps;
    for (const auto& [m, c] : e.plain.terms())
      ps.push_back({Monomial{m.bits & mask}, Monomial{m.bits & ~mask}, c, false});
    for (const auto& [m, c] : e.barred.terms())
      ps.push_back({Monomial{m.bits & mask}, Monomial{m.bits & ~mask}, c, true});
    return ps;
  };

  for (const Piece& pu : pieces(u)) {
    unsigned pf = (pu.p.parity() + (pu.bar ? 1u : 0u)) & 1u;  // |f|
    GrassmannElement fp = GrassmannElement::monomial(vars, pu.p, one);
    KantorElement f = pu.bar ? KantorElement::bar(fp) : KantorElement::of(fp);
    KantorElement Df = d_map(f);
    GrassmannElement x = GrassmannElement::monomial(vars, pu.h, one);
    for (const Piece& pv : pieces(v)) {
      unsigned py = pv.h.parity() & 1u;  // |y|
      GrassmannElement gp = GrassmannElement::monomial(vars, pv.p, one);
      KantorElement g = pv.bar ? KantorElement::bar(gp) : KantorElement::of(gp);
      GrassmannElement y = GrassmannElement::monomial(vars, pv.h, one);

      Scalar c = pu.c * pv.c;
      if (pf & py & 1u) c = -c;

      KantorElement fg = kantor_mul(f, g, P1);
      if (!fg.is_zero()) {
        GrassmannElement xy = x * y;
        if (!xy.is_zero()) {
          out.plain += (xy * fg.plain).scaled(c);
          out.barred += (xy * fg.barred).scaled(c);
        }
      }
      KantorElement dfg = kantor_mul(Df, d_map(g), P1);
      if (!dfg.is_zero()) {
        GrassmannElement br = H.bracket(x, y);
        if (!br.is_zero()) {
          Scalar c2 = (pf & 1u) ? c : -c;  // (-1)^{|f|+1}
          out.plain += (br * dfg.plain).scaled(c2);
          out.barred += (br * dfg.barred).scaled(c2);
        }
      }
    }
  }
  return out;
}

TableLieOps::Elem TableLieOps::bracket(const Elem& a, const Elem& b) const {
  Elem r;
  for (const auto& [i, ci] : a)
    for (const auto& [j, cj] : b) {
      auto it = table.find({i, j});
      if (it == table.end()) continue;
      for (const auto& [k, ck] : it->second) {
        Scalar add = ci * cj * ck;
        auto [jt, fresh] = r.emplace(k, add);
        if (!fresh) {
          jt->second += add;
          if (jt->second.is_zero()) r.erase(jt);
        }
      }
    }
  return r;
}

TableLieOps::Elem TableLieOps::add(const Elem& a, const Elem& b) const {
  Elem r = a;
  for (const auto& [k, c] : b) {
    auto [it, fresh] = r.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) r.erase(it);
    }
  }
  return r;
}

TableLieOps::Elem TableLieOps::scaled(const Elem& a, const Scalar& c) const {
  Elem r;
  if (c.is_zero()) return r;
  for (const auto& [k, s] : a) r.emplace(k, s * c);
  return r;
}

TableLieOps::Elem TableLieOps::parity_part(const Elem& a, unsigned p) const {
  Elem r;
  for (const auto& [k, s] : a)
    if ((parities.at(k) & 1u) == (p & 1u)) r.emplace(k, s);
  return r;
}

std::string TableLieOps::str(const Elem& a) const {
  if (a.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : a) {
    if (!s.empty()) s += " + ";
    s += c.str() + "*" + labels.at(k);
  }
  return s;
}

TableLieOps TableLieOps::nilpotent_toy(FieldSpec f) {
  TableLieOps t;
  t.field_spec = f;
  t.parities = {1, 1, 0};
  t.degrees = {1, 1, 2};
  t.labels = {"e1", "e2", "f"};
  Scalar one = Scalar::one(f);
  // for odd e1, e2 super-anticommutativity gives [e2,e1] = +[e1,e2]
  t.table[{0, 1}] = {{2, one}};
  t.table[{1, 0}] = {{2, one}};
  return t;
}

}  // namespace superalg
