#pragma once

// Coefficient fields: the rationals and prime fields GF(p), 2 < p < 2^31.
//
// Every element type K exposes a nested K::Domain that acts as a factory
// (zero/one/from_int) and as the identity of the field for mismatch checks.
// Elements remember their field so generic code never needs a side channel.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <random>
#include <string>

#include "prymcalc/errors.hpp"

namespace prymcalc {

class Rational;
class Fp;

class RationalDomain {
 public:
  Rational zero() const;
  Rational one() const;
  Rational from_int(std::int64_t n) const;
  static constexpr std::uint64_t characteristic() { return 0; }
  std::string describe() const { return "QQ"; }
  bool operator==(const RationalDomain&) const { return true; }
};

/// Exact rational number backed by GMP.
class Rational {
 public:
  using Domain = RationalDomain;
  static constexpr bool is_finite_field = false;

  Rational() = default;
  Rational(std::int64_t n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den);

  Domain domain() const { return {}; }
  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational inv() const;
  std::string to_string() const { return q_.get_str(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

 private:
  mpq_class q_{0};
};

inline Rational RationalDomain::zero() const { return Rational(0); }
inline Rational RationalDomain::one() const { return Rational(1); }
inline Rational RationalDomain::from_int(std::int64_t n) const { return Rational(n); }

bool is_prime_u32(std::uint32_t n);

/// GF(p) for a prime 2 < p < 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t prime() const { return p_; }
  std::uint64_t characteristic() const { return p_; }
  mpz_class order() const { return mpz_class(static_cast<unsigned long>(p_)); }

  Fp zero() const;
  Fp one() const;
  Fp from_int(std::int64_t n) const;
  Fp random(std::mt19937_64& rng) const;
  std::string describe() const { return "GF(" + std::to_string(p_) + ")"; }
  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  friend class Fp;
  struct Trusted {};
  PrimeField(std::uint32_t p, Trusted) : p_(p) {}

  std::uint32_t p_;
};

class Fp {
 public:
  using Domain = PrimeField;
  static constexpr bool is_finite_field = true;

  /// Unchecked: v must already be reduced mod p and p must be a valid prime.
  static Fp raw(std::uint32_t v, std::uint32_t p) { return Fp(v, p); }

  Domain domain() const { return PrimeField(p_, PrimeField::Trusted{}); }
  std::uint32_t value() const { return v_; }
  std::uint32_t prime() const { return p_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp inv() const;
  std::string to_string() const { return std::to_string(v_); }

  Fp& operator+=(const Fp& o) {
    check(o);
    std::uint32_t s = v_ + o.v_;
    v_ = s >= p_ ? s - p_ : s;
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    check(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    check(o);
    v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % p_);
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inv(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend Fp operator-(const Fp& a) { return Fp(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_); }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

 private:
  friend class PrimeField;
  Fp(std::uint32_t v, std::uint32_t p) : v_(v), p_(p) {}
  void check(const Fp& o) const {
    if (o.p_ != p_) throw DomainMismatch("GF(" + std::to_string(p_) + ") vs GF(" + std::to_string(o.p_) + ")");
  }

  std::uint32_t v_;
  std::uint32_t p_;
};

inline Fp PrimeField::zero() const { return Fp(0, p_); }
inline Fp PrimeField::one() const { return Fp(1, p_); }
inline Fp PrimeField::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Fp(static_cast<std::uint32_t>(r), p_);
}
inline Fp PrimeField::random(std::mt19937_64& rng) const {
  return Fp(static_cast<std::uint32_t>(rng() % p_), p_);
}

/// Requirements shared by every coefficient type.
template <class K>
concept FieldElement = requires(const K a, const K b, const typename K::Domain dom) {
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.inv() } -> std::convertible_to<K>;
  { a.domain() } -> std::convertible_to<typename K::Domain>;
  { dom.zero() } -> std::convertible_to<K>;
  { dom.one() } -> std::convertible_to<K>;
  { dom.from_int(std::int64_t{1}) } -> std::convertible_to<K>;
  { dom.characteristic() } -> std::convertible_to<std::uint64_t>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

template <class K>
concept FiniteFieldElement =
    FieldElement<K> && K::is_finite_field && requires(const typename K::Domain dom, std::mt19937_64& rng) {
      { dom.order() } -> std::convertible_to<mpz_class>;
      { dom.random(rng) } -> std::convertible_to<K>;
    };

template <FieldElement K>
K power(K base, std::uint64_t e) {
  K acc = base.domain().one();
  while (e != 0) {
    if (e & 1U) acc *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return acc;
}

template <FieldElement K>
K power(const K& base, const mpz_class& e) {
  if (sgn(e) < 0) return power(base.inv(), mpz_class(-e));
  K acc = base.domain().one();
  const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    acc *= acc;
    if (mpz_tstbit(e.get_mpz_t(), i) != 0) acc *= base;
  }
  return acc;
}

}  // namespace prymcalc
