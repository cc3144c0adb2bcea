#include "facthom/field.hpp"

#include "facthom/errors.hpp"

namespace facthom {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw InvalidStructure("field characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

Scalar Field::reduce(const Scalar& x) const {
  if (p_ == 0) {
    Scalar r = x;
    r.canonicalize();
    return r;
  }
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class num = x.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = x.get_den() % p;
  if (den == 0) throw Error("denominator divisible by the characteristic " + std::to_string(p_));
  if (den != 1) {
    mpz_class den_inv;
    mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num = (num * den_inv) % p;
  }
  return Scalar(num);
}

Scalar Field::inv(const Scalar& a) const {
  if (a == 0) throw Error("division by zero");
  if (p_ == 0) return Scalar(1) / a;
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class r;
  mpz_class v = reduce(a).get_num();
  mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return Scalar(r);
}

std::string Field::format(const Scalar& x) const {
  if (p_ == 0) return x.get_str();
  return reduce(x).get_str() + " mod " + std::to_string(p_);
}

Scalar Field::parse(const std::string& text) const {
  Scalar value;
  if (text.empty() || value.set_str(text, 10) != 0 || value.get_den() == 0) {
    throw Error("not a rational literal: '" + text + "'");
  }
  return reduce(value);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

}  // namespace facthom
