#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "prymcalc/ffactor.hpp"
#include "prymcalc/gfq.hpp"
#include "prymcalc/resultant.hpp"

using namespace prymcalc;
using prymcalc::testing::form_product;
using prymcalc::testing::random_form;
using prymcalc::testing::random_poly;

namespace {

using QPoly = MultiPoly<Rational>;
const RationalDomain QQ;

QPoly var(const std::vector<std::string>& vars, const std::string& name) { return QPoly::variable(QQ, vars, name); }
QPoly cst(const std::vector<std::string>& vars, std::int64_t c) { return QPoly::constant(QQ, vars, Rational(c)); }

// Independent determinant by cofactor expansion along the first row.
Rational laplace_det(const Matrix<Rational>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Rational acc(0);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<Rational> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(row);
    }
    const Rational term = m[0][j] * laplace_det(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

BinaryForm<Rational> qform(const std::vector<std::int64_t>& c) {
  std::vector<Rational> r(c.begin(), c.end());
  return BinaryForm<Rational>::from_coefficients(QQ, r, "u", "v");
}

}  // namespace

TEST_SUITE("fields") {
  TEST_CASE("prime field construction is validated") {
    CHECK_THROWS_AS(PrimeField(2), InvalidArgument);
    CHECK_THROWS_AS(PrimeField(15), InvalidArgument);
    CHECK_THROWS_AS(PrimeField(2147483659U), InvalidArgument);
    CHECK_NOTHROW(PrimeField(2147483647U));
  }

  TEST_CASE("prime field arithmetic and errors") {
    PrimeField f(10007);
    const Fp a = f.from_int(-1);
    CHECK(a.value() == 10006);
    CHECK((a * a).is_one());
    CHECK((f.from_int(3) * f.from_int(3).inv()).is_one());
    CHECK_THROWS_AS(f.zero().inv(), NotInvertible);
    CHECK_THROWS_AS(f.one() + PrimeField(31991).one(), DomainMismatch);
  }

  TEST_CASE("square roots in GF(p)") {
    for (std::uint32_t p : {10007U, 31991U, 13U, 17U, 65537U}) {
      PrimeField f(p);
      std::mt19937_64 rng(p);
      for (int i = 0; i < 50; ++i) {
        const Fp x = f.random(rng);
        const auto r = field_sqrt(x * x);
        REQUIRE(r.has_value());
        CHECK(*r * *r == x * x);
      }
      int nonsquares = 0;
      for (std::int64_t k = 1; k < 40; ++k)
        if (!field_sqrt(f.from_int(k)).has_value()) ++nonsquares;
      CHECK(nonsquares > 0);
    }
  }

  TEST_CASE("extension field arithmetic") {
    PrimeField f(10007);
    // 10007 = 3 mod 4, so s^2 + 1 is irreducible.
    ExtField<Fp> k(UPoly<Fp>(f, {f.one(), f.zero(), f.one()}));
    const auto s = k.generator();
    CHECK((s * s + k.one()).is_zero());
    CHECK((s.inv() * s).is_one());
    CHECK(k.order() == mpz_class(10007) * 10007);
    // Frobenius: s^p = -s
    CHECK(power(s, std::uint64_t{10007}) == -s);
    CHECK_THROWS_AS(ExtField<Fp>(UPoly<Fp>(f, {-f.one(), f.zero(), f.one()})), InvalidArgument);
    CHECK_THROWS_AS(ExtField<Fp>(UPoly<Fp>(f, {f.one(), f.zero(), f.from_int(2)})), InvalidArgument);
  }

  TEST_CASE("square roots in an extension field, including q = 1 mod 4") {
    PrimeField f(10007);
    ExtField<Fp> k(UPoly<Fp>(f, {f.one(), f.zero(), f.one()}));
    std::mt19937_64 rng(9);
    for (int i = 0; i < 20; ++i) {
      const auto x = k.random(rng);
      const auto r = field_sqrt(x * x);
      REQUIRE(r.has_value());
      CHECK(*r * *r == x * x);
    }
    // Every element of GF(p) is a square in GF(p^2).
    CHECK(field_sqrt(k.from_int(5)).has_value());
    CHECK(field_sqrt(k.from_int(-1)).has_value());
  }
}

TEST_SUITE("upoly") {
  TEST_CASE("division, gcd and interpolation") {
    using P = UPoly<Rational>;
    const P x = P::x(QQ);
    const P one = P::constant(Rational(1));
    const P f = (x - one) * (x - one) * (x + one);
    const P g = (x - one) * (x + one * Rational(2));
    CHECK(gcd(f, g) == x - one);
    auto [q, r] = f.divrem(g);
    CHECK(q * g + r == f);
    CHECK(r.degree() < g.degree());
    CHECK(squarefree_part(f) == (x - one) * (x + one));
    std::vector<Rational> xs{0, 1, 2, 3}, ys;
    for (const auto& t : xs) ys.push_back(f.eval(t));
    CHECK(interpolate<Rational>(xs, ys) == f);
    CHECK_THROWS_AS(f.divrem(P(QQ)), NotInvertible);
  }

  TEST_CASE("to_string") {
    using P = UPoly<Rational>;
    P p(QQ, {Rational(0), Rational(-32), Rational(-16)});
    CHECK(p.to_string("alpha") == "-16*alpha^2 - 32*alpha");
    CHECK(p.order_at_zero() == 1);
  }

  TEST_CASE("factorization over GF(p)") {
    PrimeField f(10007);
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 5; ++rep) {
      UPoly<Fp> prod = UPoly<Fp>::constant(f.one());
      for (int d : {1, 1, 2, 3, 5}) {
        std::vector<Fp> c;
        for (int i = 0; i < d; ++i) c.push_back(f.random(rng));
        c.push_back(f.one());
        prod = prod * UPoly<Fp>(f, c);
      }
      const auto sf = squarefree_part(prod);
      const auto factors = factor_squarefree(sf, 5);
      UPoly<Fp> back = UPoly<Fp>::constant(f.one());
      int total = 0;
      for (const auto& g : factors) {
        CHECK(is_irreducible(g));
        CHECK(g.leading().is_one());
        back = back * g;
        total += g.degree();
      }
      CHECK(back == sf);
      CHECK(total == sf.degree());
    }
  }

  TEST_CASE("roots in the field") {
    PrimeField f(10007);
    const auto x = UPoly<Fp>::x(f);
    const auto c = [&](std::int64_t n) { return UPoly<Fp>::constant(f.from_int(n)); };
    const auto p = (x - c(3)) * (x - c(5)) * (x - c(5)) * (x * x + c(1));
    auto roots = roots_in_field(p);
    std::vector<std::uint32_t> vals;
    for (const auto& r : roots) vals.push_back(r.value());
    std::sort(vals.begin(), vals.end());
    CHECK(vals == std::vector<std::uint32_t>{3, 5});
  }
}

TEST_SUITE("multipoly") {
  TEST_CASE("poly_arith examples") {
    const std::vector<std::string> xy{"x", "y"};
    const auto x = var(xy, "x"), y = var(xy, "y");
    CHECK((x + y) + (x - y) == cst(xy, 2) * x);
    CHECK(((x + y) * cst(xy, 0)).is_zero());

    const std::vector<std::string> uva{"u", "v", "alpha"};
    const auto u = var(uva, "u"), v = var(uva, "v"), a = var(uva, "alpha");
    const auto lhs = (u - v).pow(2) * (u * u - a * v * v);
    const auto rhs = u.pow(4) - cst(uva, 2) * u.pow(3) * v + (cst(uva, 1) - a) * u * u * v * v +
                     cst(uva, 2) * a * u * v.pow(3) - a * v.pow(4);
    CHECK(lhs == rhs);
  }

  TEST_CASE("domain and variable mismatches are typed errors") {
    PrimeField f(10007), g(31991);
    const auto p = MultiPoly<Fp>::variable(f, {"x"}, "x");
    const auto q = MultiPoly<Fp>::variable(g, {"x"}, "x");
    CHECK_THROWS_AS(p + q, DomainMismatch);
    CHECK_THROWS_AS(p * q, DomainMismatch);
    CHECK_THROWS_AS(var({"x", "y"}, "x") - var({"y", "x"}, "x"), DomainMismatch);
    CHECK_THROWS_AS(QPoly(QQ, {"x", "x"}), InvalidArgument);
  }

  TEST_CASE("partial_derivative examples") {
    const std::vector<std::string> uv{"u", "v"};
    const auto u = var(uv, "u"), v = var(uv, "v");
    CHECK((u.pow(4) - cst(uv, 2) * u.pow(3) * v).derivative("u") == cst(uv, 4) * u.pow(3) - cst(uv, 6) * u * u * v);
    CHECK(cst({"x"}, 7).derivative("x").is_zero());
    CHECK((u - v).pow(4).derivative("u") == cst(uv, 4) * (u - v).pow(3));
    CHECK_THROWS_AS(u.derivative("w"), InvalidArgument);
  }

  TEST_CASE("textual serialization") {
    const std::vector<std::string> vars{"x", "y", "u", "v"};
    const auto p = cst(vars, 3) * var(vars, "x").pow(2) * var(vars, "y") -
                   QPoly::constant(QQ, vars, Rational(mpz_class(1), mpz_class(2))) * var(vars, "u") *
                       var(vars, "v").pow(3);
    // graded lex: the degree-4 term leads
    CHECK(p.to_string() == "-1/2*u*v^3 + 3*x^2*y");
    CHECK(QPoly(QQ, vars).to_string() == "0");
    CHECK((cst(vars, -1) * var(vars, "u")).to_string() == "-u");
  }

  TEST_CASE("specialize and evaluate agree") {
    std::mt19937_64 rng(5);
    const std::vector<std::string> vars{"x", "y", "a"};
    for (int rep = 0; rep < 20; ++rep) {
      const auto p = random_poly<Rational>(QQ, vars, 5, 8, rng);
      const std::vector<Rational> pt{Rational(2), Rational(-3), Rational(mpz_class(1), mpz_class(3))};
      const auto s = p.specialize("a", pt[2]);
      const std::vector<Rational> pt2{pt[0], pt[1]};
      CHECK(s.evaluate(pt2) == p.evaluate(pt));
    }
  }

  TEST_CASE("ring axioms over every supported domain") {
    std::mt19937_64 rng(2024);
    const std::vector<std::string> vars{"x", "y", "t"};
    auto check_axioms = [&](const auto& dom, auto tag) {
      using K = decltype(tag);
      for (int rep = 0; rep < 25; ++rep) {
        const auto a = random_poly<K>(dom, vars, 4, 6, rng);
        const auto b = random_poly<K>(dom, vars, 4, 6, rng);
        const auto c = random_poly<K>(dom, vars, 4, 6, rng);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a * b == b * a);
        REQUIRE((a + b) - b == a);
      }
    };
    check_axioms(QQ, Rational{});
    PrimeField f(10007);
    check_axioms(f, f.zero());
    std::int64_t c0 = 1;
    while (!is_irreducible(UPoly<Fp>(f, {f.from_int(c0), f.one(), f.zero(), f.one()}))) ++c0;
    ExtField<Fp> k(UPoly<Fp>(f, {f.from_int(c0), f.one(), f.zero(), f.one()}));
    check_axioms(k, k.zero());
  }
}

TEST_SUITE("resultant") {
  TEST_CASE("Res(au+bv, cu+dv) = ad - bc") {
    const std::vector<std::string> vars{"u", "v", "a", "b", "c", "d"};
    const auto f = var(vars, "a") * var(vars, "u") + var(vars, "b") * var(vars, "v");
    const auto g = var(vars, "c") * var(vars, "u") + var(vars, "d") * var(vars, "v");
    const auto r = sylvester_resultant(BinaryForm<Rational>(f, "u", "v", 1), BinaryForm<Rational>(g, "u", "v", 1));
    const std::vector<std::string> rest{"a", "b", "c", "d"};
    CHECK(r == var(rest, "a") * var(rest, "d") - var(rest, "b") * var(rest, "c"));
  }

  TEST_CASE("Res_u(u^2 - t, u - 1) = 1 - t") {
    const std::vector<std::string> vars{"u", "v", "t"};
    const auto u = var(vars, "u"), v = var(vars, "v"), t = var(vars, "t");
    const auto r = sylvester_resultant(BinaryForm<Rational>(u * u - t * v * v, "u", "v", 2),
                                       BinaryForm<Rational>(u - v, "u", "v", 1));
    CHECK(r == cst({"t"}, 1) - var({"t"}, "t"));
  }

  TEST_CASE("Res((u-v)^2, (u+v)^2) = 16 against a cofactor-expansion oracle") {
    const auto f = qform({1, -2, 1});
    const auto g = qform({1, 2, 1});
    const Matrix<Rational> syl{{Rational(1), Rational(-2), Rational(1), Rational(0)},
                               {Rational(0), Rational(1), Rational(-2), Rational(1)},
                               {Rational(1), Rational(2), Rational(1), Rational(0)},
                               {Rational(0), Rational(1), Rational(2), Rational(1)}};
    const Rational oracle = laplace_det(syl);
    CHECK(oracle == Rational(16));
    CHECK(sylvester_resultant(f, g).constant_term() == oracle);
  }

  TEST_CASE("zero forms are rejected") {
    const auto f = qform({1, -2, 1});
    const auto z = BinaryForm<Rational>(QPoly(QQ, {"u", "v"}), "u", "v", 2);
    CHECK_THROWS_AS(sylvester_resultant(f, z), InvalidArgument);
  }

  TEST_CASE("Bareiss and Gaussian elimination agree with cofactor expansion") {
    std::mt19937_64 rng(8);
    for (int rep = 0; rep < 20; ++rep) {
      Matrix<Rational> m(5, std::vector<Rational>(5));
      for (auto& row : m)
        for (auto& e : row) e = prymcalc::testing::random_rational(rng);
      const Rational oracle = laplace_det(m);
      CHECK(determinant(m, QQ) == oracle);
      CHECK(gaussian_determinant(m, QQ) == oracle);
    }
  }

  TEST_CASE("multiplicativity Res(f*g, h) = Res(f,h) Res(g,h)") {
    std::mt19937_64 rng(77);
    PrimeField fp(10007);
    for (int rep = 0; rep < 30; ++rep) {
      const auto f = random_form<Rational>(QQ, 1 + rep % 3, rng);
      const auto g = random_form<Rational>(QQ, 1 + rep % 2, rng);
      const auto h = random_form<Rational>(QQ, 2 + rep % 3, rng);
      CHECK(sylvester_resultant(form_product(f, g), h) == sylvester_resultant(f, h) * sylvester_resultant(g, h));
      const auto a = random_form<Fp>(fp, 2 + rep % 3, rng);
      const auto b = random_form<Fp>(fp, 3, rng);
      const auto c = random_form<Fp>(fp, 1 + rep % 4, rng);
      CHECK(sylvester_resultant(form_product(a, b), c) == sylvester_resultant(a, c) * sylvester_resultant(b, c));
    }
  }

  TEST_CASE("specialization commutes with the resultant") {
    std::mt19937_64 rng(99);
    const std::vector<std::string> vars{"u", "v", "a"};
    for (int rep = 0; rep < 10; ++rep) {
      auto make = [&](int deg) {
        QPoly p(QQ, vars);
        for (int i = 0; i <= deg; ++i) {
          Exponents e{};
          e[0] = static_cast<std::uint16_t>(deg - i);
          e[1] = static_cast<std::uint16_t>(i);
          e[2] = 0;
          p.add_term(e, prymcalc::testing::random_rational(rng));
          e[2] = static_cast<std::uint16_t>(1 + rep % 3);
          p.add_term(e, prymcalc::testing::random_rational(rng));
        }
        return BinaryForm<Rational>(p, "u", "v", deg);
      };
      const auto f = make(3), g = make(2);
      const auto r = sylvester_resultant(f, g);
      for (std::int64_t a0 : {-3, 0, 2, 7}) {
        const Rational av(a0);
        const auto fs = BinaryForm<Rational>(f.poly().specialize("a", av), "u", "v", 3);
        const auto gs = BinaryForm<Rational>(g.poly().specialize("a", av), "u", "v", 2);
        if (fs.is_zero() || gs.is_zero()) continue;
        const std::vector<Rational> pt{av};
        CHECK(r.evaluate(pt) == sylvester_resultant(fs, gs).constant_term());
      }
    }
  }

  TEST_CASE("interpolation nodes are independent of the sample offset") {
    const std::vector<std::string> vars{"x", "y", "a"};
    std::mt19937_64 rng(4);
    QPoly f(QQ, vars), g(QQ, vars);
    for (int i = 0; i <= 3; ++i) {
      Exponents e{static_cast<std::uint16_t>(3 - i), static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(i % 2)};
      f.add_term(e, prymcalc::testing::random_rational(rng));
    }
    for (int i = 0; i <= 2; ++i) {
      Exponents e{static_cast<std::uint16_t>(2 - i), static_cast<std::uint16_t>(i), 2};
      g.add_term(e, prymcalc::testing::random_rational(rng));
    }
    const BinaryForm<Rational> bf(f, "x", "y", 3), bg(g, "x", "y", 2);
    CHECK(sylvester_resultant(bf, bg) == sylvester_resultant(bf, bg, {.first_sample = 50}));
  }
}

TEST_SUITE("binary gcd") {
  TEST_CASE("gcd((u-v)^2(u+v), (u-v)(u+2v)) = u - v") {
    const auto g = binary_gcd(qform({1, -1, -1, 1}), qform({1, 1, -2}));
    CHECK(g == qform({1, -1}));
  }

  TEST_CASE("gcd(u^2+v^2, u+v) = 1") {
    const auto g = binary_gcd(qform({1, 0, 1}), qform({1, 1}));
    CHECK(g.degree() == 0);
    CHECK(g == qform({1}));
  }

  TEST_CASE("common roots at infinity are restored") {
    // v*(u - v) and v^2*u share v: the root [1:0].
    const auto g = binary_gcd(qform({0, 1, -1}), qform({0, 0, 1, 0}));
    CHECK(g == qform({0, 1}));
    // both have a root at [1:0] and at [1:1]
    const auto h = binary_gcd(qform({0, 1, -1}), qform({0, 1, -1, 0}));
    CHECK(h == qform({0, 1, -1}));
  }

  TEST_CASE("both zero is rejected") {
    const auto z = BinaryForm<Rational>(QPoly(QQ, {"u", "v"}), "u", "v", 3);
    CHECK_THROWS_AS(binary_gcd(z, z), InvalidArgument);
    CHECK(binary_gcd(z, qform({2, 2})) == qform({1, 1}));
  }

  TEST_CASE("gcd divides both inputs") {
    std::mt19937_64 rng(31);
    PrimeField f(10007);
    for (int rep = 0; rep < 30; ++rep) {
      const auto common = random_form<Fp>(f, 1 + rep % 3, rng);
      const auto a = form_product(common, random_form<Fp>(f, 2, rng));
      const auto b = form_product(common, random_form<Fp>(f, 3, rng));
      const auto g = binary_gcd(a, b);
      CHECK(g.degree() >= common.degree());
      const auto ga = dehomogenize(g).affine;
      CHECK((dehomogenize(a).affine % ga).is_zero());
      CHECK((dehomogenize(b).affine % ga).is_zero());
    }
  }

  TEST_CASE("squarefree_part examples") {
    CHECK(squarefree_part(qform({1, -1, -1, 1})) == qform({1, 0, -1}));
    CHECK(squarefree_part(qform({1, 0, -1})) == qform({1, 0, -1}));
    CHECK(squarefree_part(qform({2, 0, -2})) == qform({1, 0, -1}));
    // u^2 (u - v)^2 -> u (u - v)
    CHECK(squarefree_part(qform({1, -2, 1, 0, 0})) == qform({1, -1, 0}));
    // v^2 (u^2 + v^2): root at infinity kept once
    CHECK(squarefree_part(qform({0, 0, 1, 0, 1})) == qform({0, 1, 0, 1}));
  }

  TEST_CASE("squarefree part rejects small characteristic") {
    PrimeField f(3);
    std::vector<Fp> c(5, f.one());
    CHECK_THROWS_AS(squarefree_part(BinaryForm<Fp>::from_coefficients(f, c, "u", "v")), InvalidArgument);
  }

  TEST_CASE("squarefree part of a square-free-part has no repeated factor") {
    std::mt19937_64 rng(12);
    PrimeField f(10007);
    for (int rep = 0; rep < 20; ++rep) {
      const auto a = random_form<Fp>(f, 2, rng);
      const auto b = random_form<Fp>(f, 1, rng);
      const auto sq = squarefree_part(form_product(form_product(a, a), b));
      const auto d = dehomogenize(sq).affine;
      CHECK(gcd(d, d.derivative()).degree() == 0);
    }
  }
}
