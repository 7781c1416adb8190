#pragma once

// Randomized comparison of "square over the closure" against
// "disc_delta = 0 and sem_d = 0" for quartics with A != 0.

#include <cstdint>
#include <string>
#include <vector>

#include "prymcalc/quartic.hpp"

namespace prymcalc {

struct QuarticFuzzStratum {
  std::string field;
  std::size_t squares = 0;      // sampled as c * m^2
  std::size_t generic = 0;      // sampled uniformly with A != 0
  std::size_t witnessed = 0;    // closure witness found
  std::size_t invariants_vanish = 0;
  std::size_t disagreements = 0;
  std::vector<std::string> examples;  // first few disagreements, as "(A,B,C,D,E)"
};

struct QuarticFuzzReport {
  QuarticFuzzStratum prime_field;
  QuarticFuzzStratum rationals;
  // (0,0,1,0,1): both invariants vanish, no square. Expected.
  bool boundary_invariants_vanish = false;
  bool boundary_is_square = true;
  // (1,0,6,16,9) = (u+v)^2 (u^2 - 2uv + 9v^2): A != 0, both invariants
  // vanish, still not a square. Evaluated over the rationals.
  bool nondegenerate_invariants_vanish = false;
  bool nondegenerate_is_square = true;

  bool passed() const {
    return prime_field.disagreements == 0 && rationals.disagreements == 0 && boundary_invariants_vanish &&
           !boundary_is_square;
  }
};

struct QuarticFuzzOptions {
  std::uint32_t prime = 10007;
  std::size_t prime_count = 10000;
  std::size_t rational_count = 1000;
  std::int64_t rational_bound = 12;  // integer coefficients in [-bound, bound]
  std::uint64_t seed = 1;
};

QuarticFuzzReport run_quartic_fuzz(const QuarticFuzzOptions& opt);

/// "(a,b,c,d,e)" for reports.
template <class K>
std::string to_string(const QuarticCoeffs<K>& q) {
  return "(" + q.a.to_string() + "," + q.b.to_string() + "," + q.c.to_string() + "," + q.d.to_string() + "," +
         q.e.to_string() + ")";
}

}  // namespace prymcalc
