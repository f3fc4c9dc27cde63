#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace superalg {

/// Grassmann monomial x_{i1}..x_{ik}, i1 < ... < ik, as an index bitset.
/// The ascending order is the canonical form; the bitset makes disjointness
/// and merge signs cheap.
struct Monomial {
  std::uint64_t bits = 0;

  static Monomial one() { return {}; }
  static Monomial var(unsigned i) { return {std::uint64_t(1) << i}; }
  static Monomial of(std::initializer_list<unsigned> idx) {
    Monomial m;
    for (unsigned i : idx) m.bits |= std::uint64_t(1) << i;
    return m;
  }

  unsigned degree() const { return static_cast<unsigned>(std::popcount(bits)); }
  unsigned parity() const { return degree() & 1u; }
  bool contains(unsigned i) const { return (bits >> i) & 1u; }
  bool empty() const { return bits == 0; }
  int max_index() const { return bits == 0 ? -1 : 63 - std::countl_zero(bits); }

  std::vector<unsigned> indices() const {
    std::vector<unsigned> out;
    out.reserve(degree());
    for (std::uint64_t b = bits; b;) {
      unsigned i = static_cast<unsigned>(std::countr_zero(b));
      out.push_back(i);
      b &= b - 1;
    }
    return out;
  }

  bool operator==(const Monomial& o) const { return bits == o.bits; }
  bool operator!=(const Monomial& o) const { return bits != o.bits; }
};

/// Canonical monomial order: by total degree, then lexicographic on the
/// ascending index sequences. Used for term maps, echelon pivots, printing.
inline bool monomial_less(Monomial a, Monomial b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  while (a.bits && a.bits != b.bits) {
    unsigned ia = static_cast<unsigned>(std::countr_zero(a.bits));
    unsigned ib = static_cast<unsigned>(std::countr_zero(b.bits));
    if (ia != ib) return ia < ib;
    a.bits &= a.bits - 1;
    b.bits &= b.bits - 1;
  }
  return false;
}

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return monomial_less(a, b); }
};

/// Number of pairs (i in a, j in b) with i > j: the parity of the permutation
/// merging the concatenation (a, b) into ascending order.
inline unsigned merge_inversions(Monomial a, Monomial b) {
  unsigned inv = 0;
  for (std::uint64_t bits = a.bits; bits;) {
    unsigned i = static_cast<unsigned>(std::countr_zero(bits));
    std::uint64_t below = (i == 0) ? 0 : (b.bits & ((std::uint64_t(1) << i) - 1));
    inv += static_cast<unsigned>(std::popcount(below));
    bits &= bits - 1;
  }
  return inv;
}

struct MonoProduct {
  bool zero = true;
  int sign = 0;  // +1 or -1 when nonzero
  Monomial mono;
};

/// x_a * x_b: zero when the index sets intersect, otherwise the merged
/// monomial with the inversion-count sign.
inline MonoProduct mono_mul(Monomial a, Monomial b) {
  if (a.bits & b.bits) return {};
  MonoProduct r;
  r.zero = false;
  r.sign = (merge_inversions(a, b) & 1u) ? -1 : 1;
  r.mono = Monomial{a.bits | b.bits};
  return r;
}

}  // namespace superalg
