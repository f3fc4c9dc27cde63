#include "superalg/vartable.hpp"

namespace superalg {

std::shared_ptr<const VarTable> VarTable::plain(unsigned count, FieldSpec field) {
  return interleaved({"x"}, count, field);
}

std::shared_ptr<const VarTable> VarTable::interleaved(std::vector<std::string> families, unsigned members,
                                                      FieldSpec field) {
  if (families.empty() || members == 0) throw structural_error("variable table must not be empty");
  auto t = std::shared_ptr<VarTable>(new VarTable());
  t->families_ = std::move(families);
  t->count_ = members * static_cast<unsigned>(t->families_.size());
  if (t->count_ > 62) throw structural_error("truncation size exceeds 62 variables");
  t->field_ = field;
  t->names_.resize(t->count_);
  for (unsigned i = 0; i < t->count_; ++i)
    t->names_[i] = t->families_[t->family_of(i)] + std::to_string(t->member_of(i));
  return t;
}

unsigned VarTable::index_of(const std::string& name) const {
  for (unsigned i = 0; i < count_; ++i)
    if (names_[i] == name) return i;
  throw structural_error("unknown variable name '" + name + "'");
}

}  // namespace superalg
