#include "superalg/field.hpp"

namespace superalg {

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

unsigned long mod_pow(unsigned long b, unsigned long e, unsigned long p) {
  unsigned long r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = (r * b) % p;
    b = (b * b) % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

FieldSpec FieldSpec::prime(unsigned p) {
  if (p == 2 || p == 3)
    throw structural_error("characteristic " + std::to_string(p) + " is rejected: 2 and 3 must be invertible");
  if (!is_prime(p)) throw structural_error("field modulus " + std::to_string(p) + " is not prime");
  if (p >= (1u << 31)) throw structural_error("field modulus too large");
  return FieldSpec{p};
}

FieldSpec FieldSpec::parse(const std::string& s) {
  if (s == "Q" || s == "q") return rationals();
  std::string body;
  if (s.rfind("Fp:", 0) == 0)
    body = s.substr(3);
  else if (!s.empty() && (s[0] == 'F' || s[0] == 'f'))
    body = s.substr(1);
  else
    throw structural_error("cannot parse field spec '" + s + "' (expect Q or Fp:<prime>)");
  return prime(static_cast<unsigned>(std::stoul(body)));
}

Scalar Scalar::make(const FieldSpec& f, long v) {
  Scalar s;
  s.p_ = f.p;
  if (f.p == 0) {
    s.q_ = v;
  } else {
    long m = v % static_cast<long>(f.p);
    if (m < 0) m += f.p;
    s.r_ = static_cast<unsigned long>(m);
  }
  return s;
}

Scalar Scalar::fraction(const FieldSpec& f, long num, long den) {
  if (den == 0) throw structural_error("zero denominator");
  return of_int(f, num) / of_int(f, den);
}

void Scalar::check_same_field(const Scalar& o) const {
  if (p_ != o.p_) throw structural_error("mixing scalars from different fields");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s;
  s.p_ = p_;
  if (p_ == 0)
    s.q_ = q_ + o.q_;
  else
    s.r_ = (r_ + o.r_) % p_;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  Scalar s;
  s.p_ = p_;
  if (p_ == 0)
    s.q_ = q_ - o.q_;
  else
    s.r_ = (r_ + p_ - o.r_) % p_;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s;
  s.p_ = p_;
  if (p_ == 0)
    s.q_ = q_ * o.q_;
  else
    s.r_ = (r_ * o.r_) % p_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw structural_error("inverse of zero");
  Scalar s;
  s.p_ = p_;
  if (p_ == 0)
    s.q_ = 1 / q_;
  else
    s.r_ = mod_pow(r_, p_ - 2, p_);
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar s;
  s.p_ = p_;
  if (p_ == 0)
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : p_ - r_;
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(o);
  return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  if (p_ == 0) return q_.get_str();
  return std::to_string(r_);
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (f.p == 0) {
      Scalar s;
      s.p_ = 0;
      s.q_ = mpq_class(text);
      s.q_.canonicalize();
      return s;
    }
    return of_int(f, std::stol(text));
  }
  long num = std::stol(text.substr(0, slash));
  long den = std::stol(text.substr(slash + 1));
  return fraction(f, num, den);
}

}  // namespace superalg
