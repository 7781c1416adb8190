#pragma once

// Dense univariate polynomials over a field.

#include <algorithm>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include "prymcalc/field.hpp"
#include "prymcalc/modp_kernels.hpp"

namespace prymcalc {

template <FieldElement K>
class UPoly {
 public:
  using Domain = typename K::Domain;

  explicit UPoly(Domain dom) : dom_(std::move(dom)) {}

  /// Coefficients from the constant term upward.
  UPoly(Domain dom, std::vector<K> coeffs) : dom_(std::move(dom)), c_(std::move(coeffs)) {
    for (const auto& c : c_) check_domain(c);
    trim();
  }

  static UPoly constant(const K& c) { return UPoly(c.domain(), {c}); }
  static UPoly monomial(const K& c, std::size_t n) {
    std::vector<K> v(n + 1, c.domain().zero());
    v[n] = c;
    return UPoly(c.domain(), std::move(v));
  }
  static UPoly x(const Domain& dom) { return monomial(dom.one(), 1); }

  const Domain& domain() const { return dom_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : dom_.zero(); }
  K leading() const { return c_.empty() ? dom_.zero() : c_.back(); }

  K eval(const K& at) const {
    K acc = dom_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  /// Order of vanishing at 0; -1 for the zero polynomial.
  int order_at_zero() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return static_cast<int>(i);
    return -1;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly(dom_);
    std::vector<K> d;
    d.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * dom_.from_int(static_cast<std::int64_t>(i)));
    return UPoly(dom_, std::move(d));
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    return *this * leading().inv();
  }

  UPoly& operator+=(const UPoly& o) {
    check_domain(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), dom_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    check_domain(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), dom_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(const UPoly& a) { return a * (-a.dom_.one()); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) { return a.mul(b); }
  friend UPoly operator*(const UPoly& a, const K& s) {
    a.check_domain(s);
    if (s.is_zero()) return UPoly(a.dom_);
    std::vector<K> v = a.c_;
    for (auto& c : v) c *= s;
    return UPoly(a.dom_, std::move(v));
  }
  friend UPoly operator*(const K& s, const UPoly& a) { return a * s; }
  friend UPoly operator/(const UPoly& a, const UPoly& b) { return a.divrem(b).first; }
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return a.divrem(b).second; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.dom_ == b.dom_ && a.c_ == b.c_; }

  /// Euclidean division; throws NotInvertible when the divisor is zero.
  std::pair<UPoly, UPoly> divrem(const UPoly& b) const;

  std::string to_string(std::string_view var = "t") const;

 private:
  template <FieldElement>
  friend class UPoly;

  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  void check_domain(const K& c) const {
    if (!(c.domain() == dom_)) throw DomainMismatch("coefficient over " + c.domain().describe() + ", polynomial over " + dom_.describe());
  }
  void check_domain(const UPoly& o) const {
    if (!(o.dom_ == dom_)) throw DomainMismatch("polynomials over " + dom_.describe() + " and " + o.dom_.describe());
  }

  UPoly mul(const UPoly& b) const;

  Domain dom_;
  std::vector<K> c_;
};

namespace detail {

inline std::vector<std::uint32_t> to_words(const std::vector<Fp>& v) {
  std::vector<std::uint32_t> w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i].value();
  return w;
}

inline std::vector<Fp> from_words(const std::vector<std::uint32_t>& w, std::uint32_t p) {
  std::vector<Fp> v;
  v.reserve(w.size());
  for (auto x : w) v.push_back(Fp::raw(x, p));
  return v;
}

}  // namespace detail

template <FieldElement K>
UPoly<K> UPoly<K>::mul(const UPoly& b) const {
  check_domain(b);
  if (is_zero() || b.is_zero()) return UPoly(dom_);
  if constexpr (std::is_same_v<K, Fp>) {
    const std::uint32_t p = dom_.prime();
    const auto bw = detail::to_words(b.c_);
    std::vector<std::uint32_t> out(c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      kernels::axpy_mod(std::span(out).subspan(i, bw.size()), bw, c_[i].value(), p);
    }
    return UPoly(dom_, detail::from_words(out, p));
  } else {
    std::vector<K> out(c_.size() + b.c_.size() - 1, dom_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += c_[i] * b.c_[j];
    }
    return UPoly(dom_, std::move(out));
  }
}

template <FieldElement K>
std::pair<UPoly<K>, UPoly<K>> UPoly<K>::divrem(const UPoly& b) const {
  check_domain(b);
  if (b.is_zero()) throw NotInvertible("polynomial division by zero");
  if (degree() < b.degree()) return {UPoly(dom_), *this};
  const std::size_t n = b.c_.size() - 1;
  const std::size_t qlen = c_.size() - n;
  const K lead_inv = b.leading().inv();
  if constexpr (std::is_same_v<K, Fp>) {
    const std::uint32_t p = dom_.prime();
    auto r = detail::to_words(c_);
    const auto bw = detail::to_words(b.c_);
    std::vector<std::uint32_t> q(qlen, 0);
    for (std::size_t k = qlen; k-- > 0;) {
      const std::uint32_t top = r[k + n];
      if (top == 0) continue;
      const auto coef = static_cast<std::uint32_t>(static_cast<std::uint64_t>(top) * lead_inv.value() % p);
      q[k] = coef;
      kernels::axpy_mod(std::span(r).subspan(k, n + 1), bw, coef == 0 ? 0 : p - coef, p);
    }
    r.resize(n);
    return {UPoly(dom_, detail::from_words(q, p)), UPoly(dom_, detail::from_words(r, p))};
  } else {
    std::vector<K> r = c_;
    std::vector<K> q(qlen, dom_.zero());
    for (std::size_t k = qlen; k-- > 0;) {
      if (r[k + n].is_zero()) continue;
      const K coef = r[k + n] * lead_inv;
      q[k] = coef;
      for (std::size_t j = 0; j <= n; ++j) r[k + j] -= coef * b.c_[j];
    }
    r.resize(n, dom_.zero());
    return {UPoly(dom_, std::move(q)), UPoly(dom_, std::move(r))};
  }
}

template <FieldElement K>
std::string UPoly<K>::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    std::string coef = c_[i].to_string();
    bool negative = !coef.empty() && coef[0] == '-';
    if (negative) coef.erase(0, 1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    if (i >= 1) mono = std::string(var) + (i > 1 ? "^" + std::to_string(i) : "");
    if (mono.empty()) {
      out += coef;
    } else if (coef == "1") {
      out += mono;
    } else {
      out += coef + "*" + mono;
    }
  }
  return out;
}

/// Monic gcd; gcd(0, 0) = 0.
template <FieldElement K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Returns (g, s, t) with s*a + t*b = g, g monic.
template <FieldElement K>
std::tuple<UPoly<K>, UPoly<K>, UPoly<K>> xgcd(const UPoly<K>& a, const UPoly<K>& b) {
  const auto& dom = a.domain();
  UPoly<K> r0 = a, r1 = b;
  UPoly<K> s0 = UPoly<K>::constant(dom.one()), s1(dom);
  UPoly<K> t0(dom), t1 = UPoly<K>::constant(dom.one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divrem(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    auto t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const K li = r0.leading().inv();
  return {r0 * li, s0 * li, t0 * li};
}

template <FieldElement K>
UPoly<K> mulmod(const UPoly<K>& a, const UPoly<K>& b, const UPoly<K>& m) {
  return (a * b) % m;
}

template <FieldElement K>
UPoly<K> powmod(UPoly<K> base, const mpz_class& e, const UPoly<K>& m) {
  UPoly<K> acc = UPoly<K>::constant(m.domain().one()) % m;
  base = base % m;
  const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    acc = mulmod(acc, acc, m);
    if (mpz_tstbit(e.get_mpz_t(), i) != 0) acc = mulmod(acc, base, m);
  }
  return acc;
}

/// f / gcd(f, f'), made monic. Requires characteristic 0 or above deg f.
template <FieldElement K>
UPoly<K> squarefree_part(const UPoly<K>& f) {
  const auto ch = f.domain().characteristic();
  if (ch != 0 && static_cast<std::uint64_t>(std::max(f.degree(), 0)) >= ch) {
    throw InvalidArgument("squarefree part needs characteristic above the degree");
  }
  if (f.degree() <= 0) return f.is_zero() ? f : UPoly<K>::constant(f.domain().one());
  return (f / gcd(f, f.derivative())).monic();
}

/// Newton interpolation through (xs[i], ys[i]); xs must be pairwise distinct.
template <FieldElement K>
UPoly<K> interpolate(std::span<const K> xs, std::span<const K> ys) {
  if (xs.size() != ys.size() || xs.empty()) throw InvalidArgument("interpolation needs matching, nonempty samples");
  const auto dom = xs.front().domain();
  const std::size_t n = xs.size();
  std::vector<K> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const K den = xs[i] - xs[i - level];
      if (den.is_zero()) throw InvalidArgument("interpolation nodes must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / den;
    }
  }
  // Horner on the Newton form.
  UPoly<K> acc = UPoly<K>::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    acc = acc * UPoly<K>(dom, {-xs[i], dom.one()}) + UPoly<K>::constant(dd[i]);
  }
  return acc;
}

}  // namespace prymcalc
