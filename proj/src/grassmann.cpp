#include "superalg/grassmann.hpp"

#include <sstream>

namespace superalg {

GrassmannElement GrassmannElement::one(VarTablePtr vars) {
  return monomial(vars, Monomial::one(), Scalar::one(vars->field()));
}

GrassmannElement GrassmannElement::monomial(VarTablePtr vars, Monomial m, Scalar c) {
  GrassmannElement e(std::move(vars));
  e.add_term(m, c);
  return e;
}

GrassmannElement GrassmannElement::variable(VarTablePtr vars, unsigned i) {
  if (i >= vars->count()) throw structural_error("variable index out of range");
  return monomial(vars, Monomial::var(i), Scalar::one(vars->field()));
}

Scalar GrassmannElement::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(vars_->field()) : it->second;
}

void GrassmannElement::add_term(Monomial m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GrassmannElement GrassmannElement::operator+(const GrassmannElement& o) const {
  GrassmannElement r = *this;
  r += o;
  return r;
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& o) {
  require_compatible(*vars_, *o.vars_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GrassmannElement GrassmannElement::operator-(const GrassmannElement& o) const {
  GrassmannElement r = *this;
  r -= o;
  return r;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& o) {
  require_compatible(*vars_, *o.vars_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GrassmannElement GrassmannElement::operator*(const GrassmannElement& o) const {
  require_compatible(*vars_, *o.vars_);
  GrassmannElement r(vars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      MonoProduct p = mono_mul(ma, mb);
      if (p.zero) continue;
      Scalar c = ca * cb;
      if (p.sign < 0) c = -c;
      r.add_term(p.mono, c);
    }
  return r;
}

GrassmannElement GrassmannElement::scaled(const Scalar& c) const {
  GrassmannElement r(vars_);
  if (c.is_zero()) return r;
  for (const auto& [m, t] : terms_) r.terms_.emplace(m, t * c);
  return r;
}

GrassmannElement GrassmannElement::operator-() const {
  GrassmannElement r(vars_);
  for (const auto& [m, t] : terms_) r.terms_.emplace(m, -t);
  return r;
}

bool GrassmannElement::operator==(const GrassmannElement& o) const {
  require_compatible(*vars_, *o.vars_);
  return terms_ == o.terms_;
}

std::optional<unsigned> GrassmannElement::parity() const {
  std::optional<unsigned> p;
  for (const auto& [m, c] : terms_) {
    if (!p)
      p = m.parity();
    else if (*p != m.parity())
      return std::nullopt;
  }
  if (!p) return 0;  // zero counts as even
  return p;
}

GrassmannElement GrassmannElement::parity_part(unsigned p) const {
  GrassmannElement r(vars_);
  for (const auto& [m, c] : terms_)
    if (m.parity() == (p & 1u)) r.terms_.emplace(m, c);
  return r;
}

GrassmannElement GrassmannElement::degree_part(unsigned d) const {
  GrassmannElement r(vars_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) r.terms_.emplace(m, c);
  return r;
}

int GrassmannElement::max_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

int GrassmannElement::max_index() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.max_index());
  return d;
}

GrassmannElement GrassmannElement::truncated_to(unsigned horizon) const {
  GrassmannElement r(vars_);
  for (const auto& [m, c] : terms_)
    if (m.max_index() < static_cast<int>(horizon)) r.terms_.emplace(m, c);
  return r;
}

std::string GrassmannElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (unsigned i : m.indices()) os << " * " << vars_->name(i) << "^";
  }
  return os.str();
}

GrassmannElement GrassmannElement::parse(VarTablePtr vars, const std::string& text) {
  GrassmannElement e(vars);
  std::string s = text;
  // split on " + " at top level; a leading "0" is the zero element
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(" + ", pos);
    parts.push_back(s.substr(pos, next == std::string::npos ? next : next - pos));
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  for (const auto& part : parts) {
    if (part.empty() || part == "0") continue;
    std::istringstream is(part);
    std::string tok;
    is >> tok;
    Scalar c = Scalar::parse(vars->field(), tok);
    Monomial m;
    while (is >> tok) {
      if (tok == "*") continue;
      if (tok.back() != '^') throw structural_error("bad variable token '" + tok + "'");
      unsigned idx = vars->index_of(tok.substr(0, tok.size() - 1));
      if (m.contains(idx)) throw structural_error("repeated variable in monomial");
      m.bits |= std::uint64_t(1) << idx;
    }
    e.add_term(m, c);
  }
  return e;
}

GrassmannElement partial(unsigned i, const GrassmannElement& f) {
  if (i >= f.vars()->count()) throw structural_error("derivative index out of range");
  GrassmannElement r(f.vars());
  for (const auto& [m, c] : f.terms()) {
    if (!m.contains(i)) continue;
    unsigned below = (i == 0) ? 0 : static_cast<unsigned>(std::popcount(m.bits & ((std::uint64_t(1) << i) - 1)));
    Monomial rest{m.bits & ~(std::uint64_t(1) << i)};
    r.add_term(rest, (below & 1u) ? -c : c);
  }
  return r;
}

TensorPair kaplansky_mul(const TensorPair& u, const TensorPair& v) {
  auto pb1 = u.b.parity();
  auto pa2 = v.a.parity();
  if (!pb1 || !pa2) throw structural_error("kaplansky_mul requires homogeneous inner factors");
  TensorPair r{u.a * v.a, u.b * v.b};
  if (r.a.is_zero() || r.b.is_zero()) {
    // a vanishing factor collapses the pure tensor to the canonical zero
    return {GrassmannElement::zero(r.a.vars()), GrassmannElement::zero(r.b.vars())};
  }
  if ((*pb1 & *pa2 & 1u) != 0) r.a = -r.a;
  return r;
}

}  // namespace superalg
