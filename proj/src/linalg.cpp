#include "prymcalc/linalg.hpp"

#include <span>

namespace prymcalc {

mpz_class bareiss_determinant(Matrix<mpz_class> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw InvalidArgument("determinant of a non-square matrix");
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m[k][k]) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && sgn(m[piv][k]) == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::uint32_t determinant_mod_p(Matrix<std::uint32_t> m, std::uint32_t p) {
  const std::size_t n = m.size();
  std::uint64_t det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = det == 0 ? 0 : p - det;
    }
    const std::uint32_t pv = m[col][col];
    det = det * pv % p;
    const std::uint32_t inv = Fp::raw(pv, p).inv().value();
    const std::span<const std::uint32_t> pivot_row(m[col].data() + col, n - col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const std::uint32_t a = m[r][col];
      if (a == 0) continue;
      const auto f = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * inv % p);
      kernels::axpy_mod(std::span(m[r].data() + col, n - col), pivot_row, p - f, p);
    }
  }
  return static_cast<std::uint32_t>(det);
}

}  // namespace prymcalc
