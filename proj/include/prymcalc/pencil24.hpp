#pragma once

// Pencils F0 + t F1 of (3,4)-curves on P^1 x P^1 over GF(p), and the count
// of members with a vertical bitangent: a fiber [x0:y0] whose quartic in
// (u, v) is a square over the algebraic closure.

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "prymcalc/quartic.hpp"

namespace prymcalc {

/// Coefficient (i, j) multiplies x^(3-i) y^i u^(4-j) v^j.
struct Curve34 {
  std::uint32_t prime = 0;
  std::array<std::uint32_t, 20> c{};

  static std::size_t index(int i, int j) { return static_cast<std::size_t>(i * 5 + j); }
  Fp coeff(int i, int j) const { return Fp::raw(c[index(i, j)], prime); }
  void set(int i, int j, const Fp& v) { c[index(i, j)] = v.value(); }
  bool is_zero() const;
  /// True when one curve is a scalar multiple of the other (including zero).
  bool proportional_to(const Curve34& o) const;

  friend bool operator==(const Curve34&, const Curve34&) = default;
};

struct PencilSample {
  Curve34 f0, f1;
  int rejections = 0;
};

/// Seeded random pencil passing the genericity screens: A != 0 at
/// [x:y] = [1:0] and [0:1] for both F0 and F1, F1 not proportional to F0,
/// and R(t) not identically zero. Requires p > 1000.
PencilSample random_pencil(std::uint32_t p, std::uint64_t seed);

/// disc_delta and sem_d of F0 + t F1 as forms in (x, y) with coefficients in
/// t: degrees 18 and 12 in (x, y), at most 6 and 4 in t.
std::pair<BinaryForm<Fp>, BinaryForm<Fp>> bitangent_conditions(const Curve34& f0, const Curve34& f1);

/// R(t) = Res_(x,y)(Delta, d).
UPoly<Fp> pencil_resultant(const Curve34& f0, const Curve34& f1, unsigned threads = 1);

struct FiberCheck {
  std::string point;             // [x0:y0] as printed in the extension
  int point_degree = 1;          // degree of the root of the gcd over GF(p)[t]/(m)
  bool square = false;
  bool witness_verified = false; // squaring the witness gives the fiber back
  int witness_field_degree = 0;  // 1, or 2 when a square root was adjoined
};

struct FactorSummary {
  std::string factor;            // m(t)
  int degree = 0;
  int multiplicity = 0;          // in the raw resultant
  int gcd_degree = 0;            // degree of gcd(Delta_theta, d_theta) in (x, y)
  bool degenerate = false;       // both conditions vanish identically
  bool validated = false;
  std::vector<FiberCheck> fibers;
};

struct PencilCountReport {
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  int rejections = 0;
  int validated_count = 0;       // sum of deg m over validated factors
  int raw_degree = 0;            // deg R
  int squarefree_degree = 0;
  int extraneous_factors = 0;
  int extraneous_degree = 0;
  std::vector<FactorSummary> factors;
  FactorSummary infinity;        // the member F1 alone, counted separately
  bool all_witnesses_verified() const;
};

/// Counts members of F0 + t F1 (t finite) with a vertical bitangent,
/// validating every factor of the squarefree resultant in its residue field.
PencilCountReport pencil_intersection_count(const Curve34& f0, const Curve34& f1, std::uint64_t seed = 1);

/// random_pencil followed by pencil_intersection_count.
PencilCountReport run_pencil_trial(std::uint32_t p, std::uint64_t seed);

}  // namespace prymcalc
