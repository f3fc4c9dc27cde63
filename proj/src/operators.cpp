#include "superalg/operators.hpp"

#include <sstream>

namespace superalg {

Operator Operator::identity(VarTablePtr vars) {
  return term(vars, Monomial::one(), Monomial::one(), Scalar::one(vars->field()));
}

Operator Operator::partial_op(VarTablePtr vars, unsigned i) {
  if (i >= vars->count()) throw structural_error("derivative index out of range");
  return term(vars, Monomial::one(), Monomial::var(i), Scalar::one(vars->field()));
}

Operator Operator::multiplication(const GrassmannElement& f) {
  Operator r(f.vars());
  for (const auto& [m, c] : f.terms()) r.add_term({m, Monomial::one()}, c);
  return r;
}

Operator Operator::term(VarTablePtr vars, Monomial left, Monomial deriv, Scalar c) {
  Operator r(std::move(vars));
  r.add_term({left, deriv}, c);
  return r;
}

void Operator::add_term(OperatorTerm t, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(t, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Operator Operator::operator+(const Operator& o) const {
  Operator r = *this;
  r += o;
  return r;
}

Operator& Operator::operator+=(const Operator& o) {
  require_compatible(*vars_, *o.vars_);
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

Operator Operator::operator-(const Operator& o) const {
  Operator r = *this;
  for (const auto& [t, c] : o.terms_) r.add_term(t, -c);
  return r;
}

Operator Operator::scaled(const Scalar& c) const {
  Operator r(vars_);
  if (c.is_zero()) return r;
  for (const auto& [t, s] : terms_) r.terms_.emplace(t, s * c);
  return r;
}

Operator Operator::operator-() const {
  Operator r(vars_);
  for (const auto& [t, s] : terms_) r.terms_.emplace(t, -s);
  return r;
}

bool Operator::operator==(const Operator& o) const {
  require_compatible(*vars_, *o.vars_);
  return terms_ == o.terms_;
}

std::optional<unsigned> Operator::parity() const {
  std::optional<unsigned> p;
  for (const auto& [t, c] : terms_) {
    unsigned tp = (t.left.degree() + t.deriv.degree()) & 1u;
    if (!p)
      p = tp;
    else if (*p != tp)
      return std::nullopt;
  }
  if (!p) return 0;
  return p;
}

Operator Operator::parity_part(unsigned p) const {
  Operator r(vars_);
  for (const auto& [t, c] : terms_)
    if (((t.left.degree() + t.deriv.degree()) & 1u) == (p & 1u)) r.terms_.emplace(t, c);
  return r;
}

int Operator::max_index() const {
  int d = -1;
  for (const auto& [t, c] : terms_) {
    d = std::max(d, t.left.max_index());
    d = std::max(d, t.deriv.max_index());
  }
  return d;
}

Operator Operator::truncated_to(unsigned horizon) const {
  Operator r(vars_);
  for (const auto& [t, c] : terms_)
    if (t.left.max_index() < static_cast<int>(horizon) && t.deriv.max_index() < static_cast<int>(horizon))
      r.terms_.emplace(t, c);
  return r;
}

std::string Operator::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (unsigned i : t.left.indices()) os << " * " << vars_->name(i) << "^";
    for (unsigned i : t.deriv.indices()) os << " d" << i;
  }
  return os.str();
}

Operator Operator::parse(VarTablePtr vars, const std::string& text) {
  Operator r(vars);
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(" + ", pos);
    std::string part = text.substr(pos, next == std::string::npos ? next : next - pos);
    pos = next == std::string::npos ? text.size() : next + 3;
    if (part.empty() || part == "0") continue;
    std::istringstream is(part);
    std::string tok;
    is >> tok;
    Scalar c = Scalar::parse(vars->field(), tok);
    Monomial left, deriv;
    while (is >> tok) {
      if (tok == "*") continue;
      if (tok.back() == '^') {
        unsigned idx = vars->index_of(tok.substr(0, tok.size() - 1));
        left.bits |= std::uint64_t(1) << idx;
      } else if (tok[0] == 'd') {
        unsigned idx = static_cast<unsigned>(std::stoul(tok.substr(1)));
        if (idx >= vars->count()) throw structural_error("derivative index out of range");
        deriv.bits |= std::uint64_t(1) << idx;
      } else {
        throw structural_error("bad operator token '" + tok + "'");
      }
    }
    r.add_term({left, deriv}, c);
  }
  return r;
}

namespace {

// Normal-ordered expansion of d_T x_{S}: a list of (left, deriv, sign) with
// left a submonomial of S and deriv a submonomial of T. Recursion peels the
// rightmost partial t and either contracts it into S or passes it through
// with the sign (-1)^{|S|}.
struct NoTerm {
  Monomial left;
  Monomial deriv;
  int sign;
};

void normal_order_merge(Monomial derivs, Monomial mono, int sign, std::vector<NoTerm>& out) {
  if (derivs.empty()) {
    out.push_back({mono, Monomial::one(), sign});
    return;
  }
  unsigned t = static_cast<unsigned>(derivs.max_index());
  Monomial rest{derivs.bits & ~(std::uint64_t(1) << t)};
  if (mono.contains(t)) {
    unsigned below = (t == 0) ? 0 : static_cast<unsigned>(std::popcount(mono.bits & ((std::uint64_t(1) << t) - 1)));
    int s = (below & 1u) ? -sign : sign;
    normal_order_merge(rest, Monomial{mono.bits & ~(std::uint64_t(1) << t)}, s, out);
  }
  {
    int s = (mono.degree() & 1u) ? -sign : sign;
    std::size_t first = out.size();
    normal_order_merge(rest, mono, s, out);
    // append d_t at the right of each new term's derivative part
    for (std::size_t k = first; k < out.size(); ++k) {
      Monomial b = out[k].deriv;
      unsigned above = static_cast<unsigned>(std::popcount(b.bits >> (t + 1)));
      if (above & 1u) out[k].sign = -out[k].sign;
      out[k].deriv.bits |= std::uint64_t(1) << t;
    }
  }
}

}  // namespace

Operator compose(const Operator& e, const Operator& f) {
  require_compatible(*e.vars(), *f.vars());
  Operator r(e.vars());
  std::vector<NoTerm> merged;
  for (const auto& [te, ce] : e.terms()) {
    for (const auto& [tf, cf] : f.terms()) {
      merged.clear();
      normal_order_merge(te.deriv, tf.left, 1, merged);
      Scalar base = ce * cf;
      for (const NoTerm& nt : merged) {
        MonoProduct ml = mono_mul(te.left, nt.left);
        if (ml.zero) continue;
        MonoProduct md = mono_mul(nt.deriv, tf.deriv);
        if (md.zero) continue;
        Scalar c = base;
        if (nt.sign * ml.sign * md.sign < 0) c = -c;
        r.add_term({ml.mono, md.mono}, c);
      }
    }
  }
  return r;
}

Operator supercommutator(const Operator& e, const Operator& f) {
  Operator r(e.vars());
  for (unsigned pe = 0; pe < 2; ++pe) {
    Operator ep = e.parity_part(pe);
    if (ep.is_zero()) continue;
    for (unsigned pf = 0; pf < 2; ++pf) {
      Operator fp = f.parity_part(pf);
      if (fp.is_zero()) continue;
      Operator ef = compose(ep, fp);
      Operator fe = compose(fp, ep);
      r += ef;
      r += (pe & pf & 1u) ? fe : -fe;
    }
  }
  return r;
}

GrassmannElement apply(const Operator& e, const GrassmannElement& f) {
  require_compatible(*e.vars(), *f.vars());
  GrassmannElement r(f.vars());
  for (const auto& [t, c] : e.terms()) {
    for (const auto& [m, u] : f.terms()) {
      if ((t.deriv.bits & m.bits) != t.deriv.bits) continue;  // some partial kills the term
      // apply partials right-to-left: largest index first
      int sign = 1;
      Monomial w = m;
      std::uint64_t d = t.deriv.bits;
      while (d) {
        unsigned i = 63 - static_cast<unsigned>(std::countl_zero(d));
        d &= ~(std::uint64_t(1) << i);
        unsigned below = (i == 0) ? 0 : static_cast<unsigned>(std::popcount(w.bits & ((std::uint64_t(1) << i) - 1)));
        if (below & 1u) sign = -sign;
        w.bits &= ~(std::uint64_t(1) << i);
      }
      MonoProduct p = mono_mul(t.left, w);
      if (p.zero) continue;
      Scalar coeff = c * u;
      if (sign * p.sign < 0) coeff = -coeff;
      r.add_term(p.mono, coeff);
    }
  }
  return r;
}

SuperDerivation::SuperDerivation(VarTablePtr vars) : vars_(std::move(vars)) {
  images_.resize(vars_->count(), GrassmannElement::zero(vars_));
}

SuperDerivation SuperDerivation::partial_derivation(VarTablePtr vars, unsigned i) {
  SuperDerivation d(vars);
  d.set_image(i, GrassmannElement::one(d.vars_));
  return d;
}

void SuperDerivation::set_image(unsigned i, GrassmannElement g) {
  require_compatible(*vars_, *g.vars());
  images_.at(i) = std::move(g);
}

std::optional<unsigned> SuperDerivation::parity() const {
  std::optional<unsigned> p;
  for (const auto& g : images_) {
    if (g.is_zero()) continue;
    auto q = g.parity();
    if (!q) return std::nullopt;
    unsigned dp = (*q + 1) & 1u;
    if (p && *p != dp) return std::nullopt;
    p = dp;
  }
  if (!p) return 0;
  return p;
}

bool SuperDerivation::is_zero() const {
  for (const auto& g : images_)
    if (!g.is_zero()) return false;
  return true;
}

SuperDerivation SuperDerivation::operator+(const SuperDerivation& o) const {
  require_compatible(*vars_, *o.vars_);
  SuperDerivation r(vars_);
  for (unsigned i = 0; i < vars_->count(); ++i) r.images_[i] = images_[i] + o.images_[i];
  return r;
}

SuperDerivation SuperDerivation::operator-(const SuperDerivation& o) const { return *this + (-o); }

SuperDerivation SuperDerivation::scaled(const Scalar& c) const {
  SuperDerivation r(vars_);
  for (unsigned i = 0; i < vars_->count(); ++i) r.images_[i] = images_[i].scaled(c);
  return r;
}

SuperDerivation SuperDerivation::operator-() const {
  SuperDerivation r(vars_);
  for (unsigned i = 0; i < vars_->count(); ++i) r.images_[i] = -images_[i];
  return r;
}

bool SuperDerivation::operator==(const SuperDerivation& o) const {
  require_compatible(*vars_, *o.vars_);
  for (unsigned i = 0; i < vars_->count(); ++i)
    if (images_[i] != o.images_[i]) return false;
  return true;
}

SuperDerivation SuperDerivation::parity_part(unsigned p) const {
  SuperDerivation r(vars_);
  for (unsigned i = 0; i < vars_->count(); ++i) r.images_[i] = images_[i].parity_part((p + 1) & 1u);
  return r;
}

GrassmannElement SuperDerivation::apply(const GrassmannElement& f) const {
  require_compatible(*vars_, *f.vars());
  GrassmannElement r(vars_);
  Scalar one = Scalar::one(vars_->field());
  for (const auto& [m, c] : f.terms()) {
    auto idx = m.indices();
    for (std::size_t j = 0; j < idx.size(); ++j) {
      const GrassmannElement& g = images_[idx[j]];
      if (g.is_zero()) continue;
      std::uint64_t prefix_bits = 0, suffix_bits = 0;
      for (std::size_t k = 0; k < j; ++k) prefix_bits |= std::uint64_t(1) << idx[k];
      for (std::size_t k = j + 1; k < idx.size(); ++k) suffix_bits |= std::uint64_t(1) << idx[k];
      GrassmannElement prefix = GrassmannElement::monomial(vars_, Monomial{prefix_bits}, c);
      GrassmannElement suffix = GrassmannElement::monomial(vars_, Monomial{suffix_bits}, one);
      for (unsigned q = 0; q < 2; ++q) {
        // the image part of parity q belongs to the derivation part of
        // parity q+1, which picks up (-1) per odd prefix letter crossed
        GrassmannElement gq = g.parity_part(q);
        if (gq.is_zero()) continue;
        unsigned dp = (q + 1) & 1u;
        GrassmannElement piece = prefix * gq * suffix;
        r += (dp && (j & 1u)) ? -piece : piece;
      }
    }
  }
  return r;
}

int SuperDerivation::max_index() const {
  int d = -1;
  for (unsigned i = 0; i < vars_->count(); ++i) {
    if (images_[i].is_zero()) continue;
    d = std::max(d, static_cast<int>(i));
    d = std::max(d, images_[i].max_index());
  }
  return d;
}

SuperDerivation SuperDerivation::truncated_to(unsigned horizon) const {
  SuperDerivation r(vars_);
  for (unsigned i = 0; i < vars_->count() && i < horizon; ++i)
    r.images_[i] = images_[i].truncated_to(horizon);
  return r;
}

std::string SuperDerivation::str() const { return derivation_to_operator(*this).str(); }

SuperDerivation bracket(const SuperDerivation& d, const SuperDerivation& e) {
  require_compatible(*d.vars(), *e.vars());
  SuperDerivation r(d.vars());
  for (unsigned p = 0; p < 2; ++p) {
    SuperDerivation dp = d.parity_part(p);
    if (dp.is_zero()) continue;
    for (unsigned q = 0; q < 2; ++q) {
      SuperDerivation eq = e.parity_part(q);
      if (eq.is_zero()) continue;
      bool koszul = (p & q & 1u) != 0;
      for (unsigned i = 0; i < d.vars()->count(); ++i) {
        GrassmannElement de = dp.apply(eq.image(i));
        GrassmannElement ed = eq.apply(dp.image(i));
        r.set_image(i, r.image(i) + (koszul ? de + ed : de - ed));
      }
    }
  }
  return r;
}

SuperDerivation left_multiply(const GrassmannElement& g, const SuperDerivation& d) {
  SuperDerivation r(d.vars());
  for (unsigned i = 0; i < d.vars()->count(); ++i) r.set_image(i, g * d.image(i));
  return r;
}

Operator derivation_to_operator(const SuperDerivation& d) {
  Operator r(d.vars());
  for (unsigned i = 0; i < d.vars()->count(); ++i)
    for (const auto& [m, c] : d.image(i).terms()) r.add_term({m, Monomial::var(i)}, c);
  return r;
}

std::optional<SuperDerivation> operator_to_derivation(const Operator& op) {
  SuperDerivation d(op.vars());
  for (unsigned i = 0; i < op.vars()->count(); ++i)
    d.set_image(i, apply(op, GrassmannElement::variable(op.vars(), i)));
  if (derivation_to_operator(d) != op) return std::nullopt;
  return d;
}

}  // namespace superalg
