#pragma once

// Finite extension fields B[s]/(m(s)) for an irreducible monic m over a
// finite field B. Nesting gives towers, e.g. Ext<Ext<Fp>>.

#include <memory>
#include <string>
#include <vector>

#include "prymcalc/ffactor.hpp"

namespace prymcalc {

template <FiniteFieldElement B>
class Ext;

template <FiniteFieldElement B>
class ExtField {
 public:
  using Base = B;

  /// Validates that the modulus is monic, of degree >= 1, and irreducible.
  explicit ExtField(UPoly<B> modulus, std::string var = "s")
      : data_(std::make_shared<const Data>(validated(std::move(modulus)), std::move(var))) {}

  int degree() const { return data_->modulus.degree(); }
  const UPoly<B>& modulus() const { return data_->modulus; }
  const typename B::Domain& base() const { return data_->modulus.domain(); }
  std::uint64_t characteristic() const { return base().characteristic(); }
  mpz_class order() const {
    mpz_class q;
    mpz_pow_ui(q.get_mpz_t(), base().order().get_mpz_t(), static_cast<unsigned long>(degree()));
    return q;
  }

  Ext<B> zero() const;
  Ext<B> one() const;
  Ext<B> from_int(std::int64_t n) const;
  Ext<B> embed(const B& b) const;
  /// The class of s, a root of the modulus.
  Ext<B> generator() const;
  Ext<B> from_coeffs(std::vector<B> c) const;
  Ext<B> random(std::mt19937_64& rng) const;

  std::string describe() const {
    return base().describe() + "[" + data_->var + "]/(" + data_->modulus.to_string(data_->var) + ")";
  }
  bool operator==(const ExtField& o) const { return data_ == o.data_ || data_->modulus == o.data_->modulus; }

 private:
  friend class Ext<B>;
  struct Data {
    Data(UPoly<B> m, std::string v) : modulus(std::move(m)), var(std::move(v)) {}
    UPoly<B> modulus;
    std::string var;
  };
  explicit ExtField(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  static UPoly<B> validated(UPoly<B> m) {
    if (m.degree() < 1) throw InvalidArgument("extension modulus must have degree >= 1");
    if (!m.leading().is_one()) throw InvalidArgument("extension modulus must be monic");
    if (!is_irreducible(m)) throw InvalidArgument("extension modulus must be irreducible: " + m.to_string());
    return m;
  }

  std::shared_ptr<const Data> data_;
};

template <FiniteFieldElement B>
class Ext {
 public:
  using Domain = ExtField<B>;
  static constexpr bool is_finite_field = true;

  Domain domain() const { return Domain(data_); }
  /// Coordinates in the power basis 1, s, ..., s^(k-1).
  const std::vector<B>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& c : c_)
      if (!c.is_zero()) return false;
    return true;
  }
  bool is_one() const {
    if (!c_[0].is_one()) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return false;
    return true;
  }
  /// True when the element lies in the base field.
  bool in_base() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return false;
    return true;
  }

  Ext inv() const {
    if (is_zero()) throw NotInvertible("inverse of 0 in " + domain().describe());
    auto [g, s, t] = xgcd(UPoly<B>(data_->modulus.domain(), c_), data_->modulus);
    if (g.degree() != 0) throw InternalError("extension modulus is reducible");
    return from_poly(s);
  }

  std::string to_string() const { return UPoly<B>(data_->modulus.domain(), c_).to_string(data_->var); }

  Ext& operator+=(const Ext& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Ext& operator-=(const Ext& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Ext& operator*=(const Ext& o) {
    check(o);
    *this = from_poly(UPoly<B>(data_->modulus.domain(), c_) * UPoly<B>(data_->modulus.domain(), o.c_));
    return *this;
  }
  Ext& operator/=(const Ext& o) { return *this *= o.inv(); }

  friend Ext operator+(Ext a, const Ext& b) { return a += b; }
  friend Ext operator-(Ext a, const Ext& b) { return a -= b; }
  friend Ext operator*(Ext a, const Ext& b) { return a *= b; }
  friend Ext operator/(Ext a, const Ext& b) { return a /= b; }
  friend Ext operator-(const Ext& a) {
    Ext r = a;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend bool operator==(const Ext& a, const Ext& b) { return a.domain() == b.domain() && a.c_ == b.c_; }

 private:
  friend class ExtField<B>;
  using Data = typename ExtField<B>::Data;

  Ext(std::shared_ptr<const Data> d, std::vector<B> c) : data_(std::move(d)), c_(std::move(c)) {}

  Ext from_poly(const UPoly<B>& p) const {
    const UPoly<B> r = p.degree() >= data_->modulus.degree() ? p % data_->modulus : p;
    std::vector<B> c(static_cast<std::size_t>(data_->modulus.degree()), data_->modulus.domain().zero());
    for (std::size_t i = 0; i < r.coeffs().size(); ++i) c[i] = r.coeffs()[i];
    return Ext(data_, std::move(c));
  }

  void check(const Ext& o) const {
    if (o.data_ != data_ && !(o.data_->modulus == data_->modulus)) {
      throw DomainMismatch(domain().describe() + " vs " + o.domain().describe());
    }
  }

  std::shared_ptr<const Data> data_;
  std::vector<B> c_;
};

template <FiniteFieldElement B>
Ext<B> ExtField<B>::zero() const {
  return Ext<B>(data_, std::vector<B>(static_cast<std::size_t>(degree()), base().zero()));
}

template <FiniteFieldElement B>
Ext<B> ExtField<B>::one() const {
  return embed(base().one());
}

template <FiniteFieldElement B>
Ext<B> ExtField<B>::from_int(std::int64_t n) const {
  return embed(base().from_int(n));
}

template <FiniteFieldElement B>
Ext<B> ExtField<B>::embed(const B& b) const {
  if (!(b.domain() == base())) throw DomainMismatch("embedding " + b.domain().describe() + " into " + describe());
  auto z = zero();
  z.c_[0] = b;
  return z;
}

template <FiniteFieldElement B>
Ext<B> ExtField<B>::generator() const {
  return zero().from_poly(UPoly<B>::x(base()));
}

template <FiniteFieldElement B>
Ext<B> ExtField<B>::from_coeffs(std::vector<B> c) const {
  return zero().from_poly(UPoly<B>(base(), std::move(c)));
}

template <FiniteFieldElement B>
Ext<B> ExtField<B>::random(std::mt19937_64& rng) const {
  std::vector<B> c;
  c.reserve(static_cast<std::size_t>(degree()));
  for (int i = 0; i < degree(); ++i) c.push_back(base().random(rng));
  return Ext<B>(data_, std::move(c));
}

using GFq = Ext<Fp>;

}  // namespace prymcalc
