#pragma once

// Finite-field algorithms: square roots, distinct-degree and equal-degree
// factorization (Cantor-Zassenhaus, odd characteristic), irreducibility.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "prymcalc/upoly.hpp"

namespace prymcalc {

template <FiniteFieldElement K>
bool is_square(const K& a) {
  if (a.is_zero()) return true;
  const mpz_class q = a.domain().order();
  return power(a, mpz_class((q - 1) / 2)).is_one();
}

/// Square root in the field itself, or nullopt when a is a non-residue.
/// Tonelli-Shanks with a fast path for q = 3 (mod 4). Deterministic.
template <FiniteFieldElement K>
std::optional<K> field_sqrt(const K& a) {
  const auto dom = a.domain();
  if (a.is_zero()) return a;
  const mpz_class q = dom.order();
  if (!is_square(a)) return std::nullopt;
  if (mpz_class(q % 4) == 3) return power(a, mpz_class((q + 1) / 4));

  // q - 1 = 2^s * m with m odd
  mpz_class m = q - 1;
  unsigned s = 0;
  while (mpz_even_p(m.get_mpz_t()) != 0) {
    m /= 2;
    ++s;
  }
  // Deterministic non-residue search.
  std::mt19937_64 rng(0x5eed);
  K z = dom.from_int(2);
  while (z.is_zero() || is_square(z)) z = dom.random(rng);

  K c = power(z, m);
  K t = power(a, m);
  K r = power(a, mpz_class((m + 1) / 2));
  unsigned mm = s;
  while (!t.is_one()) {
    unsigned i = 0;
    K t2 = t;
    while (!t2.is_one()) {
      t2 *= t2;
      ++i;
      if (i == mm) throw InternalError("Tonelli-Shanks did not converge");
    }
    K b = c;
    for (unsigned j = 0; j + i + 1 < mm; ++j) b *= b;
    mm = i;
    c = b * b;
    t *= c;
    r *= b;
  }
  return r;
}

namespace detail {

template <FiniteFieldElement K>
UPoly<K> random_poly_below(const typename K::Domain& dom, int n, std::mt19937_64& rng) {
  std::vector<K> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v.push_back(dom.random(rng));
  return UPoly<K>(dom, std::move(v));
}

template <FiniteFieldElement K>
void equal_degree_split(const UPoly<K>& f, int d, std::mt19937_64& rng, std::vector<UPoly<K>>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const auto& dom = f.domain();
  const mpz_class q = dom.order();
  if (mpz_even_p(q.get_mpz_t()) != 0) throw InvalidArgument("equal-degree splitting needs odd characteristic");
  mpz_class qd;
  mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
  const mpz_class e = (qd - 1) / 2;
  for (int attempt = 0; attempt < 200; ++attempt) {
    auto a = random_poly_below<K>(dom, f.degree(), rng);
    if (a.degree() < 1) continue;
    auto g = gcd(a, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(f / g, d, rng, out);
      return;
    }
    auto b = powmod(a, e, f) - UPoly<K>::constant(dom.one());
    g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(f / g, d, rng, out);
      return;
    }
  }
  throw InternalError("equal-degree splitting failed after 200 attempts");
}

}  // namespace detail

/// Distinct-degree factorization of a squarefree monic polynomial.
/// Returns (product of all irreducible factors of degree d, d) pairs.
template <FiniteFieldElement K>
std::vector<std::pair<UPoly<K>, int>> distinct_degree_factor(const UPoly<K>& f_in) {
  std::vector<std::pair<UPoly<K>, int>> out;
  const auto& dom = f_in.domain();
  const mpz_class q = dom.order();
  UPoly<K> f = f_in.monic();
  const UPoly<K> x = UPoly<K>::x(dom);
  UPoly<K> h = x % f;
  int d = 0;
  while (f.degree() >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, q, f);
    auto g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

/// Complete factorization of a squarefree polynomial into monic
/// irreducibles, sorted by (degree, coefficients). Seeded, hence reproducible.
template <FiniteFieldElement K>
std::vector<UPoly<K>> factor_squarefree(const UPoly<K>& f, std::uint64_t seed = 1) {
  if (f.is_zero()) throw InvalidArgument("cannot factor the zero polynomial");
  if (f.degree() > 0 && gcd(f, f.derivative()).degree() > 0) throw InvalidArgument("input is not squarefree");
  std::mt19937_64 rng(seed);
  std::vector<UPoly<K>> out;
  for (auto& [g, d] : distinct_degree_factor(f)) detail::equal_degree_split(g, d, rng, out);
  std::sort(out.begin(), out.end(), [](const UPoly<K>& a, const UPoly<K>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
      const auto sa = a.coeffs()[i].to_string(), sb = b.coeffs()[i].to_string();
      if (sa != sb) return sa.size() != sb.size() ? sa.size() < sb.size() : sa < sb;
    }
    return false;
  });
  return out;
}

template <FiniteFieldElement K>
bool is_irreducible(const UPoly<K>& f) {
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  if (gcd(f, f.derivative()).degree() > 0) return false;
  const auto ddf = distinct_degree_factor(f);
  return ddf.size() == 1 && ddf.front().second == f.degree();
}

/// Distinct roots lying in the field itself.
template <FiniteFieldElement K>
std::vector<K> roots_in_field(const UPoly<K>& f, std::uint64_t seed = 1) {
  std::vector<K> out;
  if (f.degree() <= 0) return out;
  const auto& dom = f.domain();
  const UPoly<K> x = UPoly<K>::x(dom);
  auto sf = squarefree_part(f);
  auto lin = gcd(powmod(x, dom.order(), sf) - x, sf);
  if (lin.degree() <= 0) return out;
  std::mt19937_64 rng(seed);
  std::vector<UPoly<K>> factors;
  detail::equal_degree_split(lin, 1, rng, factors);
  for (const auto& g : factors) out.push_back(-g.coeff(0));
  return out;
}

}  // namespace prymcalc
