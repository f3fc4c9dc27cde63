#pragma once

#include <cstdint>
#include <random>

#include "superalg/doubles.hpp"

namespace superalg {

/// Sampling plan for identity checks. The auto rule: exhaustive when the
/// tuple count stays small, otherwise seeded-random tuples.
struct Strategy {
  enum class Kind { Exhaustive, Random };
  Kind kind = Kind::Exhaustive;
  unsigned count = 1000;
  std::uint64_t seed = 0;

  static Strategy exhaustive() { return {}; }
  static Strategy random(unsigned count, std::uint64_t seed) { return {Kind::Random, count, seed}; }
  /// Exhaustive when sample_size^arity <= 10^4, else random(1000, seed).
  static Strategy automatic(std::size_t sample_size, unsigned arity, std::uint64_t seed);

  std::string str() const;
};

struct Witness {
  std::vector<std::string> labels;
  std::string defect;
};

/// Exact verdict of one identity over one algebra: either zero defect on
/// every tested tuple or explicit counterexample witnesses.
struct IdentityReport {
  std::string identity;
  std::string algebra;
  std::string strategy;
  std::uint64_t seed = 0;
  unsigned long tuples = 0;
  std::vector<Witness> violations;

  bool holds() const { return violations.empty(); }
  std::string verdict() const { return holds() ? "holds-on-sample" : "counterexample"; }
};

template <class Elem>
struct Sample {
  Elem e;
  std::string label;
  unsigned parity = 0;
};

namespace detail {

/// Visits index tuples of the given arity: all of them exhaustively, or
/// `count` seeded draws. mt19937_64 with plain modulo keeps draws identical
/// across platforms.
template <class Fn>
void visit_tuples(std::size_t n, unsigned arity, const Strategy& s, Fn&& fn) {
  if (n == 0) return;
  if (s.kind == Strategy::Kind::Exhaustive) {
    std::vector<std::size_t> idx(arity, 0);
    while (true) {
      fn(idx);
      unsigned pos = 0;
      while (pos < arity) {
        if (++idx[pos] < n) break;
        idx[pos] = 0;
        ++pos;
      }
      if (pos == arity) return;
    }
  } else {
    std::mt19937_64 rng(s.seed);
    std::vector<std::size_t> idx(arity);
    for (unsigned t = 0; t < s.count; ++t) {
      for (auto& i : idx) i = static_cast<std::size_t>(rng() % n);
      fn(idx);
    }
  }
}

constexpr std::size_t kMaxWitnesses = 5;

}  // namespace detail

/// [x,y] + (-1)^{|x||y|} [y,x] = 0.
template <class H>
IdentityReport check_super_anticomm(const H& h, Strategy s) {
  auto samples = h.samples();
  IdentityReport rep{"super-anticommutativity", h.name(), s.str(), s.seed, 0, {}};
  detail::visit_tuples(samples.size(), 2, s, [&](const std::vector<std::size_t>& t) {
    const auto& x = samples[t[0]];
    const auto& y = samples[t[1]];
    auto xy = h.bracket(x.e, y.e);
    auto yx = h.bracket(y.e, x.e);
    auto defect = (x.parity & y.parity & 1u) ? h.sub(xy, yx) : h.add(xy, yx);
    ++rep.tuples;
    if (!h.is_zero(defect) && rep.violations.size() < detail::kMaxWitnesses)
      rep.violations.push_back({{x.label, y.label}, h.str(defect)});
  });
  return rep;
}

/// [x,[y,z]] - [[x,y],z] - (-1)^{|x||y|} [y,[x,z]] = 0.
template <class H>
IdentityReport check_super_jacobi(const H& h, Strategy s) {
  auto samples = h.samples();
  IdentityReport rep{"super-jacobi", h.name(), s.str(), s.seed, 0, {}};
  detail::visit_tuples(samples.size(), 3, s, [&](const std::vector<std::size_t>& t) {
    const auto& x = samples[t[0]];
    const auto& y = samples[t[1]];
    const auto& z = samples[t[2]];
    auto lhs = h.bracket(x.e, h.bracket(y.e, z.e));
    auto r1 = h.bracket(h.bracket(x.e, y.e), z.e);
    auto r2 = h.bracket(y.e, h.bracket(x.e, z.e));
    auto rhs = (x.parity & y.parity & 1u) ? h.sub(r1, r2) : h.add(r1, r2);
    auto defect = h.sub(lhs, rhs);
    ++rep.tuples;
    if (!h.is_zero(defect) && rep.violations.size() < detail::kMaxWitnesses)
      rep.violations.push_back({{x.label, y.label, z.label}, h.str(defect)});
  });
  return rep;
}

/// {a.b, c} - a.{b,c} - (-1)^{|b||c|} {a,c}.b = 0.
template <class H>
IdentityReport check_leibniz(const H& h, Strategy s) {
  auto samples = h.samples();
  IdentityReport rep{"super-leibniz", h.name(), s.str(), s.seed, 0, {}};
  detail::visit_tuples(samples.size(), 3, s, [&](const std::vector<std::size_t>& t) {
    const auto& a = samples[t[0]];
    const auto& b = samples[t[1]];
    const auto& c = samples[t[2]];
    auto lhs = h.bracket(h.dot(a.e, b.e), c.e);
    auto r1 = h.dot(a.e, h.bracket(b.e, c.e));
    auto r2 = h.dot(h.bracket(a.e, c.e), b.e);
    auto rhs = (b.parity & c.parity & 1u) ? h.sub(r1, r2) : h.add(r1, r2);
    auto defect = h.sub(lhs, rhs);
    ++rep.tuples;
    if (!h.is_zero(defect) && rep.violations.size() < detail::kMaxWitnesses)
      rep.violations.push_back({{a.label, b.label, c.label}, h.str(defect)});
  });
  return rep;
}

/// ab - (-1)^{|a||b|} ba = 0 for the (Jordan or dot) product.
template <class H>
IdentityReport check_supercommutativity(const H& h, Strategy s) {
  auto samples = h.samples();
  IdentityReport rep{"supercommutativity", h.name(), s.str(), s.seed, 0, {}};
  detail::visit_tuples(samples.size(), 2, s, [&](const std::vector<std::size_t>& t) {
    const auto& a = samples[t[0]];
    const auto& b = samples[t[1]];
    auto ab = h.prod(a.e, b.e);
    auto ba = h.prod(b.e, a.e);
    auto defect = (a.parity & b.parity & 1u) ? h.add(ab, ba) : h.sub(ab, ba);
    ++rep.tuples;
    if (!h.is_zero(defect) && rep.violations.size() < detail::kMaxWitnesses)
      rep.violations.push_back({{a.label, b.label}, h.str(defect)});
  });
  return rep;
}

/// The graded Jordan superidentity in four homogeneous variables:
///   (ab)(cd) + (-1)^{|b||c|}(ac)(bd) + (-1)^{(|b|+|c|)|d|}(ad)(bc)
///   = ((ab)c)d + (-1)^{|b|(|c|+|d|)+|c||d|}((ad)c)b
///     + (-1)^{|a|(|b|+|c|+|d|)+|c||d|}((bd)c)a.
template <class H>
IdentityReport check_jordan_super(const H& h, Strategy s) {
  auto samples = h.samples();
  IdentityReport rep{"jordan-superidentity", h.name(), s.str(), s.seed, 0, {}};
  detail::visit_tuples(samples.size(), 4, s, [&](const std::vector<std::size_t>& t) {
    const auto& a = samples[t[0]];
    const auto& b = samples[t[1]];
    const auto& c = samples[t[2]];
    const auto& d = samples[t[3]];
    unsigned pa = a.parity & 1u, pb = b.parity & 1u, pc = c.parity & 1u, pd = d.parity & 1u;

    auto sgn = [&](unsigned e, auto&& v) { return (e & 1u) ? h.neg(v) : v; };

    auto lhs = h.prod(h.prod(a.e, b.e), h.prod(c.e, d.e));
    lhs = h.add(lhs, sgn(pb * pc, h.prod(h.prod(a.e, c.e), h.prod(b.e, d.e))));
    lhs = h.add(lhs, sgn((pb + pc) * pd, h.prod(h.prod(a.e, d.e), h.prod(b.e, c.e))));

    auto rhs = h.prod(h.prod(h.prod(a.e, b.e), c.e), d.e);
    rhs = h.add(rhs, sgn(pb * (pc + pd) + pc * pd, h.prod(h.prod(h.prod(a.e, d.e), c.e), b.e)));
    rhs = h.add(rhs, sgn(pa * (pb + pc + pd) + pc * pd, h.prod(h.prod(h.prod(b.e, d.e), c.e), a.e)));

    auto defect = h.sub(lhs, rhs);
    ++rep.tuples;
    if (!h.is_zero(defect) && rep.violations.size() < detail::kMaxWitnesses)
      rep.violations.push_back({{a.label, b.label, c.label, d.label}, h.str(defect)});
  });
  return rep;
}

/// (a^2)^2 = 0 over random mixed elements of the ideal without unit; the
/// combos are seeded exact small-integer combinations of the samples.
template <class H>
IdentityReport check_square_square(const H& h, unsigned count, std::uint64_t seed) {
  auto samples = h.samples_nounit();
  IdentityReport rep{"square-square-zero", h.name(),
                     "random-combos(" + std::to_string(count) + ")", seed, 0, {}};
  std::mt19937_64 rng(seed);
  const long coeffs[] = {1, 2, 3, -1, -2};
  for (unsigned t = 0; t < count && !samples.empty(); ++t) {
    auto a = h.zero();
    std::string label = "a" + std::to_string(t) + " =";
    unsigned parts = 2 + static_cast<unsigned>(rng() % 3);
    for (unsigned j = 0; j < parts; ++j) {
      std::size_t i = static_cast<std::size_t>(rng() % samples.size());
      long c = coeffs[rng() % 5];
      a = h.add(a, h.scale_int(samples[i].e, c));
      label += " " + std::to_string(c) + "*[" + samples[i].label + "]";
    }
    auto sq = h.prod(a, a);
    auto defect = h.prod(sq, sq);
    ++rep.tuples;
    if (!h.is_zero(defect) && rep.violations.size() < detail::kMaxWitnesses)
      rep.violations.push_back({{label}, h.str(defect)});
  }
  return rep;
}

/// a^2 a = a a^2 = 0 for every homogeneous sample (one per graded component).
template <class H>
IdentityReport check_homogeneous_nil_cube(const H& h) {
  auto samples = h.samples_nounit();
  IdentityReport rep{"nil-cube-graded", h.name(), "exhaustive-components", 0, 0, {}};
  for (const auto& a : samples) {
    auto sq = h.prod(a.e, a.e);
    auto d1 = h.prod(sq, a.e);
    auto d2 = h.prod(a.e, sq);
    ++rep.tuples;
    if ((!h.is_zero(d1) || !h.is_zero(d2)) && rep.violations.size() < detail::kMaxWitnesses)
      rep.violations.push_back({{a.label}, h.is_zero(d1) ? h.str(d2) : h.str(d1)});
  }
  return rep;
}

/// D(u.v) - D(u).v - (-1)^{|u|} u.D(v) = 0: D is an odd superderivation.
template <class H>
IdentityReport check_d_superderivation(const H& h, Strategy s) {
  auto samples = h.samples();
  IdentityReport rep{"d-map-superderivation", h.name(), s.str(), s.seed, 0, {}};
  detail::visit_tuples(samples.size(), 2, s, [&](const std::vector<std::size_t>& t) {
    const auto& u = samples[t[0]];
    const auto& v = samples[t[1]];
    auto lhs = h.d(h.prod(u.e, v.e));
    auto r1 = h.prod(h.d(u.e), v.e);
    auto r2 = h.prod(u.e, h.d(v.e));
    auto rhs = (u.parity & 1u) ? h.sub(r1, r2) : h.add(r1, r2);
    auto defect = h.sub(lhs, rhs);
    ++rep.tuples;
    if (!h.is_zero(defect) && rep.violations.size() < detail::kMaxWitnesses)
      rep.violations.push_back({{u.label, v.label}, h.str(defect)});
  });
  return rep;
}

}  // namespace superalg
