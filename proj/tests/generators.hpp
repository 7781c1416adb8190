#pragma once

// Seeded random generators shared by the property tests.

#include <random>
#include <string>
#include <vector>

#include "prymcalc/gfq.hpp"
#include "prymcalc/multipoly.hpp"
#include "prymcalc/resultant.hpp"

namespace prymcalc::testing {

inline Rational random_rational(std::mt19937_64& rng, int range = 9) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, 4);
  return Rational(mpz_class(num(rng)), mpz_class(den(rng)));
}

inline Rational random_element(const RationalDomain&, std::mt19937_64& rng) { return random_rational(rng); }
inline Fp random_element(const PrimeField& f, std::mt19937_64& rng) { return f.random(rng); }
template <class B>
Ext<B> random_element(const ExtField<B>& f, std::mt19937_64& rng) {
  return f.random(rng);
}

/// Random polynomial with up to `terms` terms of total degree <= max_deg.
template <class K>
MultiPoly<K> random_poly(const typename K::Domain& dom, const std::vector<std::string>& vars, int max_deg, int terms,
                         std::mt19937_64& rng) {
  MultiPoly<K> p(dom, vars);
  std::uniform_int_distribution<int> expo(0, max_deg);
  for (int t = 0; t < terms; ++t) {
    Exponents e{};
    int budget = max_deg;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      const int x = std::min(budget, expo(rng));
      e[i] = static_cast<std::uint16_t>(x);
      budget -= x;
    }
    p.add_term(e, random_element(dom, rng));
  }
  return p;
}

/// Random pure binary form of the given degree over a field.
template <class K>
BinaryForm<K> random_form(const typename K::Domain& dom, int degree, std::mt19937_64& rng, const std::string& a = "u",
                          const std::string& b = "v") {
  std::vector<K> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_element(dom, rng));
  if (c.front().is_zero()) c.front() = dom.one();
  return BinaryForm<K>::from_coefficients(dom, c, a, b);
}

/// Multiply two pure forms in the same pair.
template <class K>
BinaryForm<K> form_product(const BinaryForm<K>& f, const BinaryForm<K>& g) {
  return BinaryForm<K>(f.poly() * g.poly(), f.first(), f.second(), f.degree() + g.degree());
}

}  // namespace prymcalc::testing
