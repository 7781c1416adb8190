#include "prymcalc/field.hpp"

namespace prymcalc {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw NotInvertible("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::inv() const {
  if (is_zero()) throw NotInvertible("inverse of 0 in QQ");
  return Rational(mpq_class(1) / q_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw NotInvertible("division by 0 in QQ");
  q_ /= o.q_;
  return *this;
}

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p <= 2 || p >= (1U << 31) || !is_prime_u32(p)) {
    throw InvalidArgument("prime field modulus must be an odd prime below 2^31, got " + std::to_string(p));
  }
}

Fp Fp::inv() const {
  if (v_ == 0) throw NotInvertible("inverse of 0 in GF(" + std::to_string(p_) + ")");
  std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  if (x0 < 0) x0 += p_;
  return Fp(static_cast<std::uint32_t>(x0), p_);
}

}  // namespace prymcalc
