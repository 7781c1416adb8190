#include "prymcalc/quartic_fuzz.hpp"

#include <random>

namespace prymcalc {
namespace {

template <FieldElement K, class Sample>
void run_stratum(QuarticFuzzStratum& s, std::size_t count, Sample sample) {
  for (std::size_t i = 0; i < count; ++i) {
    const bool square = i % 2 == 0;
    const QuarticCoeffs<K> q = sample(square);
    (square ? s.squares : s.generic)++;
    const bool witness = closure_square(q).has_value();
    const bool vanish = disc_delta(q).is_zero() && sem_d(q).is_zero();
    s.witnessed += witness ? 1 : 0;
    s.invariants_vanish += vanish ? 1 : 0;
    if (witness != vanish) {
      ++s.disagreements;
      if (s.examples.size() < 8) s.examples.push_back(to_string(q));
    }
  }
}

template <FieldElement K>
QuarticCoeffs<K> scaled_square(const K& scale, const K& m0, const K& m1, const K& m2) {
  const K two = scale.domain().from_int(2);
  return {scale * m0 * m0, scale * two * m0 * m1, scale * (m1 * m1 + two * m0 * m2), scale * two * m1 * m2,
          scale * m2 * m2};
}

}  // namespace

QuarticFuzzReport run_quartic_fuzz(const QuarticFuzzOptions& opt) {
  QuarticFuzzReport rep;
  std::mt19937_64 rng(opt.seed);

  const PrimeField fp(opt.prime);
  rep.prime_field.field = fp.describe();
  auto nonzero_fp = [&] {
    for (;;) {
      const Fp x = fp.random(rng);
      if (!x.is_zero()) return x;
    }
  };
  run_stratum<Fp>(rep.prime_field, opt.prime_count, [&](bool square) {
    // Draws are sequenced so a seed means the same sample on every compiler.
    const Fp x0 = nonzero_fp();
    const Fp x1 = square ? nonzero_fp() : fp.random(rng);
    const Fp x2 = fp.random(rng), x3 = fp.random(rng);
    if (square) return scaled_square(x0, x1, x2, x3);
    const Fp x4 = fp.random(rng);
    return QuarticCoeffs<Fp>{x0, x1, x2, x3, x4};
  });

  const RationalDomain qq;
  rep.rationals.field = qq.describe();
  std::uniform_int_distribution<std::int64_t> dist(-opt.rational_bound, opt.rational_bound);
  auto small = [&] { return Rational(dist(rng)); };
  auto small_nonzero = [&] {
    for (;;) {
      const auto x = dist(rng);
      if (x != 0) return Rational(x);
    }
  };
  std::uniform_int_distribution<long> den(1, 5);
  auto small_fraction = [&] { return Rational(mpz_class(static_cast<long>(dist(rng))), mpz_class(den(rng))); };
  run_stratum<Rational>(rep.rationals, opt.rational_count, [&](bool square) {
    const Rational x0 = small_nonzero();
    if (square) {
      const Rational m0 = small_nonzero(), m1 = small_fraction(), m2 = small();
      return scaled_square(x0, m0, m1, m2);
    }
    const Rational x1 = small(), x2 = small(), x3 = small(), x4 = small();
    return QuarticCoeffs<Rational>{x0, x1, x2, x3, x4};
  });

  const QuarticCoeffs<Fp> boundary{fp.zero(), fp.zero(), fp.one(), fp.zero(), fp.one()};
  rep.boundary_invariants_vanish = disc_delta(boundary).is_zero() && sem_d(boundary).is_zero();
  rep.boundary_is_square = closure_square(boundary).has_value();

  const QuarticCoeffs<Rational> nondeg{1, 0, 6, 16, 9};
  rep.nondegenerate_invariants_vanish = disc_delta(nondeg).is_zero() && sem_d(nondeg).is_zero();
  rep.nondegenerate_is_square = closure_square(nondeg).has_value();
  return rep;
}

}  // namespace prymcalc
