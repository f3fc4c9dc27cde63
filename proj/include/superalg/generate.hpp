#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "superalg/field.hpp"

namespace superalg {

/// Multidegree in the generators: occurrence counts, one per generator.
struct MultiDegree {
  std::vector<unsigned> deg;

  static MultiDegree unit(unsigned rank, unsigned slot) {
    MultiDegree m;
    m.deg.assign(rank, 0);
    m.deg[slot] = 1;
    return m;
  }

  unsigned total() const {
    unsigned t = 0;
    for (unsigned d : deg) t += d;
    return t;
  }
  MultiDegree operator+(const MultiDegree& o) const {
    MultiDegree r = *this;
    for (std::size_t i = 0; i < deg.size(); ++i) r.deg[i] += o.deg[i];
    return r;
  }
  /// Componentwise difference; nullopt when not componentwise <=.
  std::optional<MultiDegree> minus(const MultiDegree& o) const {
    MultiDegree r = *this;
    for (std::size_t i = 0; i < deg.size(); ++i) {
      if (o.deg[i] > deg[i]) return std::nullopt;
      r.deg[i] -= o.deg[i];
    }
    return r;
  }
  bool operator==(const MultiDegree& o) const { return deg == o.deg; }
  bool operator!=(const MultiDegree& o) const { return deg != o.deg; }
  bool operator<(const MultiDegree& o) const { return deg < o.deg; }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < deg.size(); ++i) s += (i ? "," : "") + std::to_string(deg[i]);
    return s + ")";
  }
};

/// Exact dimension data of a graded basis, decoupled from element types.
struct DimensionTable {
  struct Entry {
    MultiDegree deg;
    unsigned dim = 0;
    bool reliable = true;
  };

  std::string algebra;
  std::string field;
  unsigned truncation = 0;   // N
  unsigned max_degree = 0;   // D
  unsigned rank = 0;         // generators (+1 for doubles)
  bool unital = false;       // degree-0 one-dimensional component adjoined
  std::vector<Entry> components;  // sorted by multidegree

  unsigned dim_total(unsigned n) const;
  /// max over total degrees >= 1 of dim_total
  unsigned width() const;
  std::set<unsigned> value_set(unsigned from, unsigned to) const;
  bool reliable_total(unsigned n) const;
  /// gamma(n) = sum_{k<=n} dim_total(k); counts the unit when unital.
  std::vector<unsigned long> growth() const;
};

/// Exhaustive scan for the smallest period <= len/3 valid on the whole
/// window. nullopt means no period at this length, which is evidence only.
std::optional<unsigned> periodicity_probe(const std::vector<unsigned>& dims);

namespace detail {

template <class Key, class Less>
using SparseVec = std::map<Key, Scalar, Less>;

template <class Key, class Less>
void axpy(SparseVec<Key, Less>& v, const Scalar& c, const SparseVec<Key, Less>& w) {
  if (c.is_zero()) return;
  for (const auto& [k, s] : w) {
    auto [it, fresh] = v.emplace(k, s * c);
    if (!fresh) {
      it->second += s * c;
      if (it->second.is_zero()) v.erase(it);
    }
  }
}

template <class Key, class Less>
void scale(SparseVec<Key, Less>& v, const Scalar& c) {
  for (auto& [k, s] : v) s *= c;
}

/// Reduced echelon set over ordered sparse vectors; pivot = least key.
/// The reduced basis is canonical for the span, independent of insertion
/// order, which is what makes serialized bases byte-identical across runs.
template <class Key, class Less>
class Echelon {
 public:
  struct Row {
    SparseVec<Key, Less> vec;
    Key pivot;
  };

  const std::vector<Row>& rows() const { return rows_; }
  unsigned dim() const { return static_cast<unsigned>(rows_.size()); }

  /// Fully reduces v in place against the rows.
  void reduce(SparseVec<Key, Less>& v) const {
    for (const auto& row : rows_) {
      auto it = v.find(row.pivot);
      if (it == v.end()) continue;
      Scalar c = -it->second;
      axpy(v, c, row.vec);
    }
  }

  /// Coefficients of v along each row's pivot plus the residual.
  std::pair<std::vector<Scalar>, SparseVec<Key, Less>> coordinates(SparseVec<Key, Less> v) const {
    std::vector<Scalar> coords;
    coords.reserve(rows_.size());
    for (const auto& row : rows_) {
      auto it = v.find(row.pivot);
      Scalar c = it == v.end() ? Scalar::zero(field_of(row.vec)) : it->second;
      coords.push_back(c);
      if (!c.is_zero()) axpy(v, -c, row.vec);
    }
    return {std::move(coords), std::move(v)};
  }

  /// Inserts if independent; returns true when the span grew.
  bool insert(SparseVec<Key, Less> v) {
    reduce(v);
    if (v.empty()) return false;
    Row row;
    row.pivot = v.begin()->first;
    Scalar lead = v.begin()->second;
    scale(v, lead.inverse());
    row.vec = std::move(v);
    // back-eliminate the new pivot from existing rows, keep pivot order
    for (auto& r : rows_) {
      auto it = r.vec.find(row.pivot);
      if (it != r.vec.end()) {
        Scalar c = -it->second;
        axpy(r.vec, c, row.vec);
      }
    }
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), row, [](const Row& a, const Row& b) {
      return Less{}(a.pivot, b.pivot);
    });
    rows_.insert(pos, std::move(row));
    return true;
  }

 private:
  static FieldSpec field_of(const SparseVec<Key, Less>& v) {
    return v.empty() ? FieldSpec::rationals() : v.begin()->second.field();
  }
  std::vector<Row> rows_;
};

}  // namespace detail

struct GenerateOptions {
  unsigned workers = 1;
  bool track_reliability = true;
};

/// Deterministic graded closure of the subalgebra generated by homogeneous
/// elements at unit multidegrees, under one or more bilinear products.
/// Components are closed in total-degree order, multidegrees in lexicographic
/// order within one degree; each component is a reduced echelon basis.
template <class Policy>
class GradedBasis {
 public:
  using Elem = typename Policy::Elem;
  using Key = typename Policy::Key;
  using KeyLess = typename Policy::KeyLess;
  using Vec = detail::SparseVec<Key, KeyLess>;
  using Ech = detail::Echelon<Key, KeyLess>;

  struct Component {
    Ech echelon;
    std::vector<Elem> rows;        // materialized, parallel to echelon rows
    bool reliable = true;
    int max_index_touched = -1;
    unsigned parity = 0;
  };

  GradedBasis(Policy policy, std::string algebra_name)
      : policy_(std::move(policy)), name_(std::move(algebra_name)) {}

  const Policy& policy() const { return policy_; }
  const std::string& name() const { return name_; }
  unsigned rank() const { return rank_; }
  unsigned max_degree() const { return max_degree_; }
  const std::map<MultiDegree, Component>& components() const { return components_; }
  const std::vector<Elem>& generators() const { return gens_; }

  const Component* component(const MultiDegree& m) const {
    auto it = components_.find(m);
    return it == components_.end() ? nullptr : &it->second;
  }

  /// Closure under all products up to total degree D.
  void generate(std::vector<Elem> gens, unsigned max_degree, GenerateOptions opt = {});

  /// Coordinates of an element in its component; nonzero residual means the
  /// element is outside the computed span.
  std::pair<std::vector<Scalar>, Vec> coordinates(const MultiDegree& m, const Elem& e) const {
    auto it = components_.find(m);
    if (it == components_.end()) return {{}, policy_.to_terms(e)};
    return it->second.echelon.coordinates(policy_.to_terms(e));
  }

  DimensionTable dimension_table() const;

  /// Canonical text dump; byte-identical across runs and worker counts.
  std::string serialize() const;

 private:
  Component close_component(const MultiDegree& target) const;
  bool shrink_rank_ok(const Component& comp) const;

  Policy policy_;
  std::string name_;
  std::vector<Elem> gens_;
  unsigned rank_ = 0;
  unsigned max_degree_ = 0;
  std::map<MultiDegree, Component> components_;
  std::map<unsigned, std::vector<MultiDegree>> by_total_;
};

template <class Policy>
void GradedBasis<Policy>::generate(std::vector<Elem> gens, unsigned max_degree, GenerateOptions opt) {
  if (max_degree < 1) throw structural_error("max degree must be >= 1");
  gens_ = std::move(gens);
  rank_ = static_cast<unsigned>(gens_.size());
  max_degree_ = max_degree;
  components_.clear();
  by_total_.clear();

  for (unsigned g = 0; g < rank_; ++g) {
    MultiDegree m = MultiDegree::unit(rank_, g);
    Component& comp = components_[m];
    Vec v = policy_.to_terms(gens_[g]);
    if (v.empty()) throw structural_error("zero generator");
    comp.echelon.insert(std::move(v));
    comp.rows.push_back(policy_.from_terms(comp.echelon.rows().front().vec));
    comp.parity = policy_.elem_parity(gens_[g]);
    comp.max_index_touched = policy_.max_index(gens_[g]);
    if (opt.track_reliability) comp.reliable = shrink_rank_ok(comp);
    by_total_[1].push_back(m);
  }

  for (unsigned d = 2; d <= max_degree_; ++d) {
    // candidate targets: sums over existing component pairs
    std::set<MultiDegree> target_set;
    for (unsigned d1 = 1; d1 + 1 <= d && d1 <= d - d1; ++d1) {
      auto it1 = by_total_.find(d1), it2 = by_total_.find(d - d1);
      if (it1 == by_total_.end() || it2 == by_total_.end()) continue;
      for (const auto& m1 : it1->second)
        for (const auto& m2 : it2->second) target_set.insert(m1 + m2);
    }
    std::vector<MultiDegree> targets(target_set.begin(), target_set.end());
    std::vector<Component> results(targets.size());

    auto work = [&](std::size_t i) { results[i] = close_component(targets[i]); };
    unsigned workers = std::max(1u, opt.workers);
    if (workers == 1 || targets.size() <= 1) {
      for (std::size_t i = 0; i < targets.size(); ++i) work(i);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
          for (std::size_t i = next.fetch_add(1); i < targets.size(); i = next.fetch_add(1)) work(i);
        });
      for (auto& t : pool) t.join();
    }

    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (results[i].rows.empty()) continue;
      if (opt.track_reliability && !shrink_rank_ok(results[i])) results[i].reliable = false;
      components_.emplace(targets[i], std::move(results[i]));
      by_total_[d].push_back(targets[i]);
    }
  }
}

template <class Policy>
typename GradedBasis<Policy>::Component GradedBasis<Policy>::close_component(const MultiDegree& target) const {
  Component comp;
  unsigned d = target.total();
  bool inputs_reliable = true;
  int touched = -1;
  for (unsigned k = 0; k < policy_.product_count(); ++k) {
    bool symmetric = policy_.symmetric(k);
    for (unsigned d1 = 1; d1 + 1 <= d; ++d1) {
      unsigned d2 = d - d1;
      if (symmetric && d1 > d2) break;
      auto it1 = by_total_.find(d1);
      if (it1 == by_total_.end()) continue;
      for (const auto& m1 : it1->second) {
        auto m2 = target.minus(m1);
        if (!m2 || m2->total() != d2) continue;
        if (symmetric && d1 == d2 && *m2 < m1) continue;
        auto c1it = components_.find(m1);
        auto c2it = components_.find(*m2);
        if (c1it == components_.end() || c2it == components_.end()) continue;
        const Component& c1 = c1it->second;
        const Component& c2 = c2it->second;
        inputs_reliable = inputs_reliable && c1.reliable && c2.reliable;
        touched = std::max({touched, c1.max_index_touched, c2.max_index_touched});
        bool diagonal = symmetric && m1 == *m2;
        for (std::size_t i = 0; i < c1.rows.size(); ++i) {
          std::size_t jstart = diagonal ? i : 0;
          for (std::size_t j = jstart; j < c2.rows.size(); ++j) {
            Elem prod = policy_.product(k, c1.rows[i], c2.rows[j]);
            Vec v = policy_.to_terms(prod);
            if (v.empty()) continue;
            touched = std::max(touched, policy_.max_index(prod));
            comp.echelon.insert(std::move(v));
          }
        }
      }
    }
  }
  comp.rows.clear();
  comp.rows.reserve(comp.echelon.rows().size());
  for (const auto& row : comp.echelon.rows()) {
    comp.rows.push_back(policy_.from_terms(row.vec));
    touched = std::max(touched, policy_.max_index(comp.rows.back()));
  }
  comp.reliable = inputs_reliable;
  comp.max_index_touched = touched;
  if (!comp.rows.empty()) comp.parity = policy_.elem_parity(comp.rows.front());
  return comp;
}

/// Shrink-window test: the component keeps its rank when every term touching
/// the last two variable indices is dropped. A failure means the component's
/// content depends on the truncation boundary.
template <class Policy>
bool GradedBasis<Policy>::shrink_rank_ok(const Component& comp) const {
  if (policy_.horizon() < 2) return false;
  unsigned h = policy_.horizon() - 2;
  Ech ech;
  unsigned rank = 0;
  for (const auto& e : comp.rows)
    if (ech.insert(policy_.to_terms(policy_.truncate(e, h)))) ++rank;
  return rank == comp.rows.size();
}

template <class Policy>
DimensionTable GradedBasis<Policy>::dimension_table() const {
  DimensionTable t;
  t.algebra = name_;
  t.field = policy_.field().str();
  t.truncation = policy_.horizon();
  t.max_degree = max_degree_;
  t.rank = rank_;
  for (const auto& [m, comp] : components_) {
    t.components.push_back({m, static_cast<unsigned>(comp.rows.size()), comp.reliable});
  }
  return t;
}

template <class Policy>
std::string GradedBasis<Policy>::serialize() const {
  std::ostringstream os;
  os << "algebra " << name_ << "\nfield " << policy_.field().str() << "\nN " << policy_.horizon() << "\nD "
     << max_degree_ << "\nrank " << rank_ << "\n";
  for (const auto& [m, comp] : components_) {
    os << "component " << m.str() << " dim " << comp.rows.size() << " reliable "
       << (comp.reliable ? 1 : 0) << "\n";
    for (const auto& e : comp.rows) os << "  " << policy_.elem_str(e) << "\n";
  }
  return os.str();
}

/// Result of ad-nilpotency probing: the smallest annihilating power, or
/// inconclusive when an iterate escapes the reliable degree window.
struct AdNilResult {
  bool conclusive = false;
  unsigned index = 0;
};

/// Iterates b -> [a,b] over the basis rows whose full iteration stays inside
/// the known degree window; rows that cannot resolve are skipped and counted.
/// Never claims non-nilpotency: a surviving iterate makes the probe
/// inconclusive. bracket_fn must be the Lie product of the ambient algebra.
template <class Elem>
AdNilResult ad_nil_index(const std::function<Elem(const Elem&, const Elem&)>& bracket_fn,
                         const std::function<bool(const Elem&)>& is_zero, const Elem& a, unsigned deg_a,
                         const std::vector<std::pair<Elem, unsigned>>& basis_rows_with_degree,
                         unsigned max_known_degree, unsigned max_power) {
  AdNilResult r;
  unsigned worst = 1;
  bool any = false;
  for (const auto& [b, deg_b] : basis_rows_with_degree) {
    if (deg_b + max_power * deg_a > max_known_degree) continue;  // cannot resolve in the window
    any = true;
    Elem it = b;
    unsigned k = 0;
    while (!is_zero(it)) {
      if (k >= max_power) return {};  // survived all allowed powers
      it = bracket_fn(a, it);
      ++k;
    }
    worst = std::max(worst, std::max(k, 1u));
  }
  if (!any) return {};
  r.conclusive = true;
  r.index = worst;
  return r;
}

}  // namespace superalg
