#include "superalg/identities.hpp"

namespace superalg {

Strategy Strategy::automatic(std::size_t sample_size, unsigned arity, std::uint64_t seed) {
  double tuples = 1;
  for (unsigned i = 0; i < arity; ++i) tuples *= static_cast<double>(sample_size);
  if (tuples <= 1e4) return exhaustive();
  return random(1000, seed);
}

std::string Strategy::str() const {
  if (kind == Kind::Exhaustive) return "exhaustive";
  return "random(" + std::to_string(count) + ",seed=" + std::to_string(seed) + ")";
}

}  // namespace superalg
