#pragma once

// Binary quartics A u^4 + B u^3 v + C u^2 v^2 + D u v^3 + E v^4: the
// discriminant, the square-detecting seminvariant, and perfect-square
// witnesses.

#include <array>
#include <optional>
#include <string>
#include <type_traits>

#include "prymcalc/gfq.hpp"
#include "prymcalc/multipoly.hpp"
#include "prymcalc/resultant.hpp"

namespace prymcalc {

/// Five coefficients over a common ring: a field element or a MultiPoly.
template <class R>
struct QuarticCoeffs {
  R a, b, c, d, e;

  std::array<R, 5> as_array() const { return {a, b, c, d, e}; }

  template <class Fn>
  auto map(Fn f) const -> QuarticCoeffs<decltype(f(a))> {
    return {f(a), f(b), f(c), f(d), f(e)};
  }

  friend bool operator==(const QuarticCoeffs& x, const QuarticCoeffs& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d && x.e == y.e;
  }
};

namespace detail {

template <class R>
R times(const R& x, std::int64_t n) {
  return x * x.domain().from_int(n);
}

}  // namespace detail

/// Discriminant of the quartic (16 terms, degree 6). Vanishes exactly when
/// the quartic has a repeated root in P^1 (counting a double root at
/// infinity when A = B = 0).
template <class R>
R disc_delta(const QuarticCoeffs<R>& q) {
  using detail::times;
  const R &A = q.a, &B = q.b, &C = q.c, &D = q.d, &E = q.e;
  const R A2 = A * A, B2 = B * B, C2 = C * C, D2 = D * D, E2 = E * E;
  const R A3 = A2 * A, B3 = B2 * B, C3 = C2 * C, D3 = D2 * D, E3 = E2 * E;
  R r = times(A3 * E3, 256);
  r -= times(A2 * B * D * E2, 192);
  r -= times(A2 * C2 * E2, 128);
  r += times(A2 * C * D2 * E, 144);
  r -= times(A2 * D2 * D2, 27);
  r += times(A * B2 * C * E2, 144);
  r -= times(A * B2 * D2 * E, 6);
  r -= times(A * B * C2 * D * E, 80);
  r += times(A * B * C * D3, 18);
  r += times(A * C2 * C2 * E, 16);
  r -= times(A * C3 * D2, 4);
  r -= times(B2 * B2 * E2, 27);
  r += times(B3 * C * D * E, 18);
  r -= times(B3 * D3, 4);
  r -= times(B2 * C3 * E, 4);
  r += B2 * C2 * D2;
  return r;
}

/// 64A^3E - 16A^2C^2 + 16AB^2C - 16A^2BD - 3B^4.
template <class R>
R sem_d(const QuarticCoeffs<R>& q) {
  using detail::times;
  const R &A = q.a, &B = q.b, &C = q.c, &D = q.d, &E = q.e;
  const R A2 = A * A, B2 = B * B;
  R r = times(A2 * A * E, 64);
  r -= times(A2 * C * C, 16);
  r += times(A * B2 * C, 16);
  r -= times(A2 * B * D, 16);
  r -= times(B2 * B2, 3);
  return r;
}

/// f = scale * (m0 u^2 + m1 uv + m2 v^2)^2 with the first nonzero m_i equal
/// to 1. Existence is equivalent to f being a square over the algebraic
/// closure; the coefficients of m are then already in the base field.
template <FieldElement K>
struct ClosureSquare {
  K scale;
  std::array<K, 3> monic;
};

namespace detail {

template <FieldElement K>
void require_odd_characteristic(const typename K::Domain& dom) {
  if (dom.characteristic() == 2) throw InvalidArgument("square witnesses need characteristic != 2");
}

template <FieldElement K>
std::array<K, 5> square_coefficients(const std::array<K, 3>& m) {
  const K two = m[0].domain().from_int(2);
  return {m[0] * m[0], two * m[0] * m[1], m[1] * m[1] + two * m[0] * m[2], two * m[1] * m[2], m[2] * m[2]};
}

inline std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x.value() < 0) return std::nullopt;
  const mpz_class num = x.numerator(), den = x.denominator();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

}  // namespace detail

template <FieldElement K>
std::optional<ClosureSquare<K>> closure_square(const QuarticCoeffs<K>& q) {
  const auto dom = q.a.domain();
  detail::require_odd_characteristic<K>(dom);
  const auto f = q.as_array();
  int lead = 0;
  while (lead < 5 && f[static_cast<std::size_t>(lead)].is_zero()) ++lead;
  if (lead == 5) return ClosureSquare<K>{dom.one(), {dom.zero(), dom.zero(), dom.zero()}};
  if (lead % 2 == 1) return std::nullopt;

  // Match coefficients of (sum_{j >= a} m_j u^(2-j) v^j)^2 with m_a = 1.
  const int a = lead / 2;
  const K scale = f[static_cast<std::size_t>(lead)];
  std::array<K, 3> m{dom.zero(), dom.zero(), dom.zero()};
  m[static_cast<std::size_t>(a)] = dom.one();
  const K two = dom.from_int(2);
  for (int j = a + 1; j <= 2; ++j) {
    // coefficient index a + j: 2 m_a m_j + sum_{a < i < j, i + l = a + j} m_i m_l
    K known = dom.zero();
    for (int i = a + 1; i < j; ++i) known += m[static_cast<std::size_t>(i)] * m[static_cast<std::size_t>(a + j - i)];
    m[static_cast<std::size_t>(j)] = (f[static_cast<std::size_t>(a + j)] / scale - known) / two;
  }
  const auto sq = detail::square_coefficients(m);
  for (std::size_t i = 0; i < 5; ++i)
    if (!(scale * sq[i] == f[i])) return std::nullopt;
  return ClosureSquare<K>{scale, m};
}

/// Quadratic (q0, q1, q2) over the coefficient field itself with
/// (q0 u^2 + q1 uv + q2 v^2)^2 equal to the quartic, if one exists.
template <FieldElement K>
std::optional<std::array<K, 3>> perfect_square_witness(const QuarticCoeffs<K>& q) {
  const auto cs = closure_square(q);
  if (!cs) return std::nullopt;
  std::optional<K> root;
  if constexpr (std::is_same_v<K, Rational>) {
    root = detail::rational_sqrt(cs->scale);
  } else {
    root = field_sqrt(cs->scale);
  }
  if (!root) return std::nullopt;
  return std::array<K, 3>{*root * cs->monic[0], *root * cs->monic[1], *root * cs->monic[2]};
}

/// Witness over the field obtained by adjoining sqrt(scale): degree 2 when
/// scale is a non-residue, degree 1 (the field itself) otherwise.
template <FiniteFieldElement K>
struct ExtensionWitness {
  ExtField<K> field;
  std::array<Ext<K>, 3> q;

  /// Squares the witness and compares with the quartic embedded in the field.
  bool verifies(const QuarticCoeffs<K>& f) const {
    const auto sq = detail::square_coefficients(q);
    const auto target = f.as_array();
    for (std::size_t i = 0; i < 5; ++i)
      if (!(sq[i] == field.embed(target[i]))) return false;
    return true;
  }
};

template <FiniteFieldElement K>
std::optional<ExtensionWitness<K>> closure_witness(const QuarticCoeffs<K>& q) {
  const auto cs = closure_square(q);
  if (!cs) return std::nullopt;
  const auto dom = q.a.domain();
  const auto root = field_sqrt(cs->scale);
  UPoly<K> modulus = root ? UPoly<K>(dom, {-*root, dom.one()}) : UPoly<K>(dom, {-cs->scale, dom.zero(), dom.one()});
  ExtField<K> field(std::move(modulus));
  const auto s = field.generator();
  return ExtensionWitness<K>{field, {s * field.embed(cs->monic[0]), s * field.embed(cs->monic[1]), s * field.embed(cs->monic[2])}};
}

/// The quartic as a binary form in (u, v).
template <FieldElement K>
BinaryForm<K> quartic_form(const QuarticCoeffs<K>& q, const std::string& first = "u", const std::string& second = "v") {
  return BinaryForm<K>::from_coefficients(q.a.domain(), {q.a, q.b, q.c, q.d, q.e}, first, second);
}

/// Res(f, df/du) / A for A != 0: the classical discriminant normalization.
template <FieldElement K>
K discriminant_via_resultant(const QuarticCoeffs<K>& q) {
  if (q.a.is_zero()) throw InvalidArgument("resultant normalization needs A != 0");
  const auto f = quartic_form(q);
  const auto r = sylvester_resultant(f, form_derivative(f, "u"));
  return r.constant_term() / q.a;
}


}  // namespace prymcalc
