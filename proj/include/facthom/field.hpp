#ifndef FACTHOM_FIELD_HPP
#define FACTHOM_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace facthom {

/// Exact scalar. Over F_p the value is kept as the canonical integer in [0, p).
using Scalar = mpq_class;

/**
 * The base field: the rationals (arbitrary precision) or a prime field F_p.
 *
 * All arithmetic goes through the field so that F_p values stay reduced.
 * Mixing scalars of different fields is a caller error; matrices and
 * complexes check field equality where they meet.
 */
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws InvalidStructure unless p is prime.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const { return p_; }

  /// Canonical representative of an arbitrary rational in this field.
  /// Over F_p a denominator divisible by p throws.
  Scalar reduce(const Scalar& x) const;
  Scalar from_int(long v) const { return reduce(Scalar(v)); }

  Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
  Scalar neg(const Scalar& a) const { return reduce(-a); }
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  /// `p/q` (or `p`) over the rationals, `a mod p` over F_p.
  std::string format(const Scalar& x) const;
  /// Parses an integer or `p/q` literal and reduces it into the field.
  Scalar parse(const std::string& text) const;

  /// `Q` or `F<p>`.
  std::string name() const;

  bool operator==(const Field& other) const { return p_ == other.p_; }

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace facthom

#endif
