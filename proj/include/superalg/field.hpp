#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace superalg {

/// Raised when values from incompatible fields or variable tables are mixed.
struct structural_error : std::runtime_error {
  explicit structural_error(const std::string& what) : std::runtime_error(what) {}
};

/// Coefficient field descriptor: the rationals (p == 0) or a prime field F_p.
/// Characteristics 2 and 3 are rejected so that 2 and 3 stay invertible.
struct FieldSpec {
  unsigned p = 0;

  static FieldSpec rationals() { return FieldSpec{0}; }
  static FieldSpec prime(unsigned p);

  bool is_rational() const { return p == 0; }
  bool operator==(const FieldSpec& o) const { return p == o.p; }
  bool operator!=(const FieldSpec& o) const { return p != o.p; }
  std::string str() const { return p == 0 ? "Q" : "F" + std::to_string(p); }

  /// Parses "Q" or "Fp:<prime>" / "F<prime>".
  static FieldSpec parse(const std::string& s);
};

/// Exact field element. Rational values use arbitrary-precision GMP
/// arithmetic; F_p values are canonical residues. No floating point.
class Scalar {
 public:
  Scalar() : r_(0), p_(0) {}

  static Scalar zero(const FieldSpec& f) { return make(f, 0); }
  static Scalar one(const FieldSpec& f) { return make(f, 1); }
  static Scalar of_int(const FieldSpec& f, long v) { return make(f, v); }
  /// Exact fraction num/den (den reduced into the field; den must be nonzero).
  static Scalar fraction(const FieldSpec& f, long num, long den);
  static Scalar parse(const FieldSpec& f, const std::string& text);

  const FieldSpec field() const { return FieldSpec{p_}; }
  bool is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
  bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical text: "p/q" for non-integer rationals, plain integer otherwise.
  std::string str() const;

 private:
  static Scalar make(const FieldSpec& f, long v);
  void check_same_field(const Scalar& o) const;

  mpq_class q_;     // rational payload (p_ == 0)
  unsigned long r_; // residue payload (p_ > 0)
  unsigned p_;
};

}  // namespace superalg
