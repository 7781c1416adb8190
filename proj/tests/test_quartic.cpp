#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "prymcalc/quartic_fuzz.hpp"

using namespace prymcalc;

namespace {

const RationalDomain QQ;
using QC = QuarticCoeffs<Rational>;

QC qc(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t e) { return {a, b, c, d, e}; }

QuarticCoeffs<Fp> to_fp(const PrimeField& f, const QC& q) {
  return q.map([&](const Rational& x) { return f.from_int(x.numerator().get_si()); });
}

// A * prod (u - r_i v), expanded by hand.
template <class K>
QuarticCoeffs<K> from_roots(const K& a, const std::array<K, 4>& r) {
  std::vector<K> c{a};  // coefficients in descending u-degree
  for (const auto& ri : r) {
    std::vector<K> next(c.size() + 1, a.domain().zero());
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i];
      next[i + 1] -= c[i] * ri;
    }
    c = next;
  }
  return {c[0], c[1], c[2], c[3], c[4]};
}

// Oracle: A^6 prod_{i<j} (r_i - r_j)^2.
template <class K>
K delta_from_roots(const K& a, const std::array<K, 4>& r) {
  K acc = power(a, 6);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) acc *= (r[i] - r[j]) * (r[i] - r[j]);
  return acc;
}

template <class K>
QuarticCoeffs<K> square_of(const std::array<K, 3>& m) {
  const K two = m[0].domain().from_int(2);
  return {m[0] * m[0], two * m[0] * m[1], m[1] * m[1] + two * m[0] * m[2], two * m[1] * m[2], m[2] * m[2]};
}

// f(u + lambda v, v), coefficients in descending u-degree.
template <class K>
QuarticCoeffs<K> shear(const QuarticCoeffs<K>& q, const K& lambda) {
  const auto f = q.as_array();
  const auto dom = lambda.domain();
  std::array<K, 5> out{dom.zero(), dom.zero(), dom.zero(), dom.zero(), dom.zero()};
  const std::int64_t binom[5][5] = {{1}, {1, 1}, {1, 2, 1}, {1, 3, 3, 1}, {1, 4, 6, 4, 1}};
  for (int i = 0; i < 5; ++i) {
    const int k = 4 - i;  // u-power of term i
    // (u + lambda v)^k v^i = sum_j C(k,j) lambda^(k-j) u^j v^(4-j)
    for (int j = 0; j <= k; ++j)
      out[static_cast<std::size_t>(4 - j)] += f[static_cast<std::size_t>(i)] * dom.from_int(binom[k][j]) * power(lambda, static_cast<std::uint64_t>(k - j));
  }
  return {out[0], out[1], out[2], out[3], out[4]};
}

}  // namespace

TEST_SUITE("invariants") {
  TEST_CASE("disc_delta examples") {
    CHECK(disc_delta(qc(1, 0, 2, 0, 1)) == Rational(0));
    CHECK(disc_delta(qc(1, 0, 0, 0, 1)) == Rational(256));
    CHECK(disc_delta(qc(1, 0, -1, 0, 0)) == Rational(0));
  }

  TEST_CASE("sem_d examples") {
    CHECK(sem_d(qc(1, 0, 2, 0, 1)) == Rational(0));
    CHECK(sem_d(qc(1, 0, -1, 0, 0)) == Rational(-16));
  }

  TEST_CASE("sem_d on the alpha section is -16 alpha^2 - 32 alpha") {
    const std::vector<std::string> vars{"alpha"};
    const auto one = MultiPoly<Rational>::constant(QQ, vars, Rational(1));
    const auto al = MultiPoly<Rational>::variable(QQ, vars, "alpha");
    const QuarticCoeffs<MultiPoly<Rational>> q{one, one * Rational(-2), one - al, al * Rational(2), -al};
    const auto d = sem_d(q);
    CHECK(d.to_string() == "-16*alpha^2 - 32*alpha");
    CHECK(disc_delta(q).is_zero());
  }

  TEST_CASE("disc_delta matches the root-difference product") {
    std::mt19937_64 rng(11);
    const PrimeField f(10007);
    for (int t = 0; t < 200; ++t) {
      Fp a = f.random(rng);
      if (a.is_zero()) a = f.one();
      const std::array<Fp, 4> r{f.random(rng), f.random(rng), f.random(rng), f.random(rng)};
      CHECK(disc_delta(from_roots(a, r)) == delta_from_roots(a, r));
    }
    std::uniform_int_distribution<int> small(-6, 6);
    for (int t = 0; t < 50; ++t) {
      const Rational a(small(rng) == 0 ? 3 : 2);
      const std::array<Rational, 4> r{Rational(small(rng)), Rational(small(rng)), Rational(mpz_class(small(rng)), mpz_class(3)), Rational(small(rng))};
      CHECK(disc_delta(from_roots(a, r)) == delta_from_roots(a, r));
    }
  }

  TEST_CASE("disc_delta equals Res(f, df/du) / A") {
    std::mt19937_64 rng(5);
    const PrimeField f(31991);
    for (int t = 0; t < 100; ++t) {
      QuarticCoeffs<Fp> q{f.random(rng), f.random(rng), f.random(rng), f.random(rng), f.random(rng)};
      if (q.a.is_zero()) q.a = f.one();
      CHECK(disc_delta(q) == discriminant_via_resultant(q));
    }
    std::uniform_int_distribution<int> small(-9, 9);
    for (int t = 0; t < 40; ++t) {
      QC q = qc(small(rng), small(rng), small(rng), small(rng), small(rng));
      if (q.a.is_zero()) q.a = Rational(7);
      CHECK(disc_delta(q) == discriminant_via_resultant(q));
    }
    CHECK_THROWS_AS(discriminant_via_resultant(qc(0, 1, 2, 3, 4)), InvalidArgument);
  }

  TEST_CASE("a -27 B^4 C^2 term in place of -27 B^4 E^2 breaks vanishing on squares") {
    // u^2 (u - v)^2 has a double root, so the discriminant must vanish.
    const QC q = qc(1, -2, 1, 0, 0);
    CHECK(disc_delta(q) == Rational(0));
    const Rational b4 = power(q.b, 4);
    const Rational variant = disc_delta(q) + Rational(27) * b4 * q.e * q.e - Rational(27) * b4 * q.c * q.c;
    CHECK(variant == Rational(-432));
  }

  TEST_CASE("polynomial and pointwise evaluation agree") {
    std::mt19937_64 rng(3);
    const PrimeField f(10007);
    const std::vector<std::string> vars{"x", "y"};
    using P = MultiPoly<Fp>;
    auto rnd = [&] {
      P p(f, vars);
      for (int i = 0; i <= 3; ++i) p.add_term(Exponents{static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(3 - i)}, f.random(rng));
      return p;
    };
    const QuarticCoeffs<P> q{rnd(), rnd(), rnd(), rnd(), rnd()};
    const auto delta = disc_delta(q);
    const auto d = sem_d(q);
    CHECK(delta.total_degree() == 18);
    CHECK(d.total_degree() == 12);
    for (int t = 0; t < 20; ++t) {
      const std::array<Fp, 2> pt{f.random(rng), f.random(rng)};
      const auto at = q.map([&](const P& p) { return p.evaluate(pt); });
      CHECK(delta.evaluate(pt) == disc_delta(at));
      CHECK(d.evaluate(pt) == sem_d(at));
    }
  }
}

TEST_SUITE("square witness") {
  TEST_CASE("examples") {
    const auto w = perfect_square_witness(qc(1, -2, 1, 0, 0));
    REQUIRE(w.has_value());
    CHECK((*w)[0] == Rational(1));
    CHECK((*w)[1] == Rational(-1));
    CHECK((*w)[2] == Rational(0));
    CHECK_FALSE(perfect_square_witness(qc(1, 0, 0, 0, 1)).has_value());
    CHECK_FALSE(perfect_square_witness(qc(0, 0, 1, 0, 1)).has_value());
    CHECK_FALSE(closure_square(qc(0, 0, 1, 0, 1)).has_value());
  }

  TEST_CASE("rational square roots are required in-field but not over the closure") {
    CHECK(perfect_square_witness(qc(4, 0, 8, 0, 4)).has_value());
    CHECK_FALSE(perfect_square_witness(qc(2, 0, 4, 0, 2)).has_value());
    CHECK_FALSE(perfect_square_witness(qc(-1, 0, -2, 0, -1)).has_value());
    const auto cs = closure_square(qc(2, 0, 4, 0, 2));
    REQUIRE(cs.has_value());
    CHECK(cs->scale == Rational(2));
    CHECK(cs->monic[2] == Rational(1));
    const auto w = perfect_square_witness(QC{Rational(mpz_class(9), mpz_class(4)), 0, 0, 0, 0});
    REQUIRE(w.has_value());
    CHECK((*w)[0] == Rational(mpz_class(3), mpz_class(2)));
  }

  TEST_CASE("leading zeros: v^2 (a u + b v)^2 style and odd order") {
    CHECK(closure_square(qc(0, 0, 1, 2, 1)).has_value());   // v^2 (u + v)^2
    CHECK(closure_square(qc(0, 0, 0, 0, 5)).has_value());   // 5 v^4
    CHECK_FALSE(closure_square(qc(0, 1, 0, 0, 0)).has_value());
    CHECK_FALSE(closure_square(qc(0, 0, 0, 1, 0)).has_value());
    CHECK(closure_square(qc(0, 0, 0, 0, 0)).has_value());
  }

  TEST_CASE("random squares are recognized and reproduced") {
    std::mt19937_64 rng(17);
    const PrimeField f(10007);
    for (int t = 0; t < 500; ++t) {
      const std::array<Fp, 3> m{f.random(rng), f.random(rng), f.random(rng)};
      const auto q = square_of(m);
      const auto w = perfect_square_witness(q);
      REQUIRE(w.has_value());
      CHECK(square_of(*w) == q);
    }
  }

  TEST_CASE("closure witness adjoins a square root when needed") {
    const PrimeField f(10007);
    // 10007 = 3 mod 4, so -1 is a non-residue.
    const Fp nr = f.from_int(-1);
    REQUIRE_FALSE(is_square(nr));
    const std::array<Fp, 3> m{f.one(), f.from_int(3), f.from_int(-5)};
    const auto q = square_of(m).map([&](const Fp& c) { return nr * c; });
    CHECK_FALSE(perfect_square_witness(q).has_value());
    const auto w = closure_witness(q);
    REQUIRE(w.has_value());
    CHECK(w->field.degree() == 2);
    CHECK(w->verifies(q));

    const auto q2 = square_of(m).map([&](const Fp& c) { return f.from_int(4) * c; });
    const auto w2 = closure_witness(q2);
    REQUIRE(w2.has_value());
    CHECK(w2->field.degree() == 1);
    CHECK(w2->verifies(q2));
    CHECK_FALSE(closure_witness(to_fp(f, qc(1, 0, 0, 0, 1))).has_value());
  }

  TEST_CASE("closure witness over an extension field") {
    const PrimeField f(10007);
    const ExtField<Fp> k(UPoly<Fp>(f, {f.one(), f.zero(), f.one()}));  // s^2 + 1
    std::mt19937_64 rng(23);
    int adjoined = 0;
    for (int t = 0; t < 40; ++t) {
      const std::array<Ext<Fp>, 3> m{k.one(), k.random(rng), k.random(rng)};
      const auto c = k.random(rng);
      if (c.is_zero()) continue;
      const auto q = square_of(m).map([&](const Ext<Fp>& x) { return c * x; });
      const auto w = closure_witness(q);
      REQUIRE(w.has_value());
      CHECK(w->verifies(q));
      adjoined += w->field.degree() == 2 ? 1 : 0;
    }
    CHECK(adjoined > 0);
  }

  TEST_CASE("characteristic 2 cannot be constructed") { CHECK_THROWS_AS(PrimeField(2), InvalidArgument); }

  TEST_CASE("shearing u -> u + lambda v keeps squares square") {
    std::mt19937_64 rng(29);
    const PrimeField f(31991);
    for (int t = 0; t < 100; ++t) {
      const std::array<Fp, 3> m{f.random(rng), f.random(rng), f.random(rng)};
      const auto q = shear(square_of(m), f.random(rng));
      CHECK(perfect_square_witness(q).has_value());
      CHECK(disc_delta(q).is_zero());
      CHECK(sem_d(q).is_zero());
    }
    // Shear preserves the discriminant itself.
    const QC q = qc(3, -1, 4, 1, -5);
    CHECK(disc_delta(shear(q, Rational(7))) == disc_delta(q));
  }
}

TEST_SUITE("square criterion") {
  TEST_CASE("squares have vanishing invariants") {
    std::mt19937_64 rng(31);
    const PrimeField f(10007);
    for (int t = 0; t < 10000; ++t) {
      const auto q = square_of(std::array<Fp, 3>{f.random(rng), f.random(rng), f.random(rng)});
      REQUIRE(disc_delta(q).is_zero());
      REQUIRE(sem_d(q).is_zero());
    }
    std::uniform_int_distribution<int> small(-20, 20);
    for (int t = 0; t < 10000; ++t) {
      const Rational c(small(rng));
      const auto q = square_of(std::array<Rational, 3>{Rational(small(rng)), Rational(mpz_class(small(rng)), mpz_class(7)), Rational(small(rng))})
                         .map([&](const Rational& x) { return c * x; });
      REQUIRE(disc_delta(q).is_zero());
      REQUIRE(sem_d(q).is_zero());
    }
  }

  TEST_CASE("fuzz with A != 0 finds no disagreement") {
    const auto rep = run_quartic_fuzz({});
    CHECK(rep.prime_field.squares == 5000);
    CHECK(rep.prime_field.disagreements == 0);
    CHECK(rep.rationals.disagreements == 0);
    CHECK(rep.prime_field.witnessed == rep.prime_field.squares);
    CHECK(rep.boundary_invariants_vanish);
    CHECK_FALSE(rep.boundary_is_square);
    CHECK(rep.passed());
  }

  TEST_CASE("A = B = 0 forces both invariants to vanish") {
    std::mt19937_64 rng(37);
    const PrimeField f(10007);
    for (int t = 0; t < 200; ++t) {
      const QuarticCoeffs<Fp> q{f.zero(), f.zero(), f.random(rng), f.random(rng), f.random(rng)};
      CHECK(disc_delta(q).is_zero());
      CHECK(sem_d(q).is_zero());
    }
  }

  TEST_CASE("the converse also fails with A != 0") {
    // (u + v)^2 (u^2 - 2uv + 9v^2)
    const QC q = qc(1, 0, 6, 16, 9);
    CHECK(disc_delta(q) == Rational(0));
    CHECK(sem_d(q) == Rational(0));
    CHECK_FALSE(closure_square(q).has_value());
    const auto rep = run_quartic_fuzz({.prime_count = 0, .rational_count = 0});
    CHECK(rep.nondegenerate_invariants_vanish);
    CHECK_FALSE(rep.nondegenerate_is_square);
  }

  TEST_CASE("exhaustive over GF(13) with A = 1") {
    const PrimeField f(13);
    int squares = 0, vanish = 0, converse_failures = 0;
    for (int b = 0; b < 13; ++b)
      for (int c = 0; c < 13; ++c)
        for (int d = 0; d < 13; ++d)
          for (int e = 0; e < 13; ++e) {
            const QuarticCoeffs<Fp> q{f.one(), f.from_int(b), f.from_int(c), f.from_int(d), f.from_int(e)};
            const bool sq = closure_square(q).has_value();
            const bool v = disc_delta(q).is_zero() && sem_d(q).is_zero();
            squares += sq ? 1 : 0;
            vanish += v ? 1 : 0;
            if (sq) CHECK(v);
            if (v && !sq) ++converse_failures;
          }
    CHECK(squares == 13 * 13);  // monic squares m^2 with m = u^2 + m1 uv + m2 v^2
    CHECK(converse_failures == vanish - squares);
    CHECK(converse_failures > 0);
  }
}
