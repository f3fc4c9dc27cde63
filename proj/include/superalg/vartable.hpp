#pragma once

#include <memory>
#include <string>
#include <vector>

#include "superalg/field.hpp"

namespace superalg {

/// Truncation table for the Grassmann algebra: N anticommuting variables with
/// display names, grouped into letter families (flat index = family_count *
/// member + family). Every element carries the table it was built over; all
/// results are relative to this truncation.
class VarTable {
 public:
  /// Single family x0..x_{count-1}.
  static std::shared_ptr<const VarTable> plain(unsigned count, FieldSpec field);
  /// Interleaved families, e.g. {"x","y","z"} with `members` triples:
  /// flat index of family f, member i is i*families.size()+f.
  static std::shared_ptr<const VarTable> interleaved(std::vector<std::string> families, unsigned members,
                                                     FieldSpec field);

  unsigned count() const { return count_; }
  const FieldSpec& field() const { return field_; }
  unsigned family_count() const { return static_cast<unsigned>(families_.size()); }
  unsigned members() const { return count_ / family_count(); }
  const std::string& name(unsigned flat) const { return names_.at(flat); }
  unsigned family_of(unsigned flat) const { return flat % family_count(); }
  unsigned member_of(unsigned flat) const { return flat / family_count(); }
  unsigned flat(unsigned family, unsigned member) const { return member * family_count() + family; }

  /// Index with the given display name; throws if unknown.
  unsigned index_of(const std::string& name) const;

  bool compatible(const VarTable& o) const {
    return count_ == o.count_ && field_ == o.field_ && families_ == o.families_;
  }

 private:
  VarTable() = default;
  unsigned count_ = 0;
  FieldSpec field_;
  std::vector<std::string> families_;
  std::vector<std::string> names_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

inline void require_compatible(const VarTable& a, const VarTable& b) {
  if (!a.compatible(b)) throw structural_error("elements belong to different variable tables");
}

}  // namespace superalg
