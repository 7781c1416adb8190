#pragma once

// Determinants of square matrices over the supported fields.

#include <type_traits>
#include <vector>

#include "prymcalc/field.hpp"
#include "prymcalc/modp_kernels.hpp"

namespace prymcalc {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Fraction-free Bareiss elimination over the integers.
mpz_class bareiss_determinant(Matrix<mpz_class> m);

/// Gaussian elimination mod p on residues in [0, p), via the word kernels.
std::uint32_t determinant_mod_p(Matrix<std::uint32_t> m, std::uint32_t p);

/// Determinant over an arbitrary field by Gaussian elimination.
template <FieldElement K>
K gaussian_determinant(Matrix<K> m, const typename K::Domain& dom) {
  const std::size_t n = m.size();
  K det = dom.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return dom.zero();
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const K inv = m[col][col].inv();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const K f = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

template <FieldElement K>
K determinant(const Matrix<K>& m, const typename K::Domain& dom) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw InvalidArgument("determinant of a non-square matrix");
  if (m.empty()) return dom.one();
  if constexpr (std::is_same_v<K, Rational>) {
    // Clear each row's denominators, run Bareiss, divide back out.
    Matrix<mpz_class> z(m.size());
    mpz_class scale = 1;
    for (std::size_t r = 0; r < m.size(); ++r) {
      mpz_class l = 1;
      for (const auto& e : m[r]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.denominator().get_mpz_t());
      scale *= l;
      z[r].reserve(m.size());
      for (const auto& e : m[r]) z[r].push_back(e.numerator() * (l / e.denominator()));
    }
    return Rational(bareiss_determinant(std::move(z)), scale);
  } else if constexpr (std::is_same_v<K, Fp>) {
    Matrix<std::uint32_t> w(m.size());
    for (std::size_t r = 0; r < m.size(); ++r) {
      w[r].reserve(m.size());
      for (const auto& e : m[r]) w[r].push_back(e.value());
    }
    return Fp::raw(determinant_mod_p(std::move(w), dom.prime()), dom.prime());
  } else {
    return gaussian_determinant(m, dom);
  }
}

}  // namespace prymcalc
