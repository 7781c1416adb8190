#include "prymcalc/pencil24.hpp"

#include <random>

namespace prymcalc {
namespace {

const std::vector<std::string> kXYT{"x", "y", "t"};

using K1 = Ext<Fp>;
using K2 = Ext<K1>;

// Fiber quartic of a F0 + b F1 over [x0:y0], all in L.
template <class L, class Lift>
QuarticCoeffs<L> fiber(const Curve34& f0, const Curve34& f1, const L& a, const L& b, const L& x0, const L& y0,
                       Lift lift) {
  std::array<L, 5> q{x0.domain().zero(), x0.domain().zero(), x0.domain().zero(), x0.domain().zero(), x0.domain().zero()};
  for (int i = 0; i <= 3; ++i) {
    const L mono = power(x0, static_cast<std::uint64_t>(3 - i)) * power(y0, static_cast<std::uint64_t>(i));
    for (int j = 0; j <= 4; ++j) q[static_cast<std::size_t>(j)] += (a * lift(f0.coeff(i, j)) + b * lift(f1.coeff(i, j))) * mono;
  }
  return {q[0], q[1], q[2], q[3], q[4]};
}

template <class L>
FiberCheck check_fiber(const QuarticCoeffs<L>& q, std::string point, int point_degree) {
  FiberCheck fc;
  fc.point = std::move(point);
  fc.point_degree = point_degree;
  const auto w = closure_witness(q);
  fc.square = w.has_value();
  if (w) {
    fc.witness_verified = w->verifies(q);
    fc.witness_field_degree = w->field.degree();
  }
  return fc;
}

// Validates the factor m of R for the pencil F0 + t F1 with conditions
// (delta, d) in (x, y, t).
FactorSummary validate_factor(const UPoly<Fp>& m, int multiplicity, const Curve34& f0, const Curve34& f1,
                              const BinaryForm<Fp>& delta, const BinaryForm<Fp>& d, std::uint64_t seed) {
  FactorSummary fs;
  fs.factor = m.to_string("t");
  fs.degree = m.degree();
  fs.multiplicity = multiplicity;

  const ExtField<Fp> k1(m, "t");
  const K1 theta = k1.generator();
  const K1 one = k1.one();
  auto lift1 = [&](const Fp& c) { return k1.embed(c); };
  auto at_theta = [&](const BinaryForm<Fp>& f) {
    auto p = f.poly().map_coefficients<K1>(k1, lift1).specialize("t", theta);
    return BinaryForm<K1>(std::move(p), "x", "y", f.degree());
  };
  const auto dt = at_theta(delta);
  const auto ddt = at_theta(d);

  if (dt.is_zero() && ddt.is_zero()) {
    // Every fiber satisfies both conditions; report the one over [1:0].
    fs.degenerate = true;
    fs.gcd_degree = dt.degree();
    auto fc = check_fiber(fiber(f0, f1, one, theta, one, k1.zero(), lift1), "[1:0]", 1);
    fs.validated = fc.square;
    fs.fibers.push_back(std::move(fc));
    return fs;
  }

  const auto g = binary_gcd(dt, ddt);
  fs.gcd_degree = g.degree();
  if (g.degree() == 0) return fs;

  const auto dh = dehomogenize(g);
  if (dh.mult_at_infinity > 0) {
    fs.fibers.push_back(check_fiber(fiber(f0, f1, one, theta, one, k1.zero(), lift1), "[1:0]", 1));
  }
  if (dh.affine.degree() > 0) {
    for (const auto& h : factor_squarefree(squarefree_part(dh.affine), seed)) {
      if (h.degree() == 1) {
        const K1 x0 = -h.coeff(0);
        fs.fibers.push_back(check_fiber(fiber(f0, f1, one, theta, x0, one, lift1), "[" + x0.to_string() + ":1]", 1));
      } else {
        const ExtField<K1> k2(h, "x");
        const K2 x0 = k2.generator();
        auto lift2 = [&](const Fp& c) { return k2.embed(k1.embed(c)); };
        fs.fibers.push_back(check_fiber(fiber(f0, f1, k2.one(), k2.embed(theta), x0, k2.one(), lift2),
                                        "[root of " + h.to_string("x") + ":1]", h.degree()));
      }
    }
  }
  for (const auto& fc : fs.fibers) fs.validated = fs.validated || fc.square;
  return fs;
}

}  // namespace

bool Curve34::is_zero() const {
  for (auto v : c)
    if (v != 0) return false;
  return true;
}

bool Curve34::proportional_to(const Curve34& o) const {
  if (prime != o.prime) throw DomainMismatch("curves over different primes");
  if (is_zero() || o.is_zero()) return true;
  // Rank of the 2 x 20 matrix is 1 iff all 2 x 2 minors vanish.
  const std::uint64_t p = prime;
  for (std::size_t i = 0; i < 20; ++i)
    for (std::size_t j = i + 1; j < 20; ++j)
      if ((std::uint64_t{c[i]} * o.c[j]) % p != (std::uint64_t{c[j]} * o.c[i]) % p) return false;
  return true;
}

std::pair<BinaryForm<Fp>, BinaryForm<Fp>> bitangent_conditions(const Curve34& f0, const Curve34& f1) {
  if (f0.prime != f1.prime) throw DomainMismatch("curves over different primes");
  const PrimeField fp(f0.prime);
  std::array<MultiPoly<Fp>, 5> q{MultiPoly<Fp>(fp, kXYT), MultiPoly<Fp>(fp, kXYT), MultiPoly<Fp>(fp, kXYT),
                                 MultiPoly<Fp>(fp, kXYT), MultiPoly<Fp>(fp, kXYT)};
  for (int i = 0; i <= 3; ++i) {
    for (int j = 0; j <= 4; ++j) {
      const auto xi = static_cast<std::uint16_t>(3 - i), yi = static_cast<std::uint16_t>(i);
      q[static_cast<std::size_t>(j)].add_term(Exponents{xi, yi, 0}, f0.coeff(i, j));
      q[static_cast<std::size_t>(j)].add_term(Exponents{xi, yi, 1}, f1.coeff(i, j));
    }
  }
  const QuarticCoeffs<MultiPoly<Fp>> qc{q[0], q[1], q[2], q[3], q[4]};
  return {BinaryForm<Fp>(disc_delta(qc), "x", "y", 18), BinaryForm<Fp>(sem_d(qc), "x", "y", 12)};
}

UPoly<Fp> pencil_resultant(const Curve34& f0, const Curve34& f1, unsigned threads) {
  const auto [delta, d] = bitangent_conditions(f0, f1);
  if (delta.is_zero() || d.is_zero()) return UPoly<Fp>(PrimeField(f0.prime));
  return as_univariate(sylvester_resultant(delta, d, {.first_sample = 0, .threads = threads}));
}

PencilSample random_pencil(std::uint32_t p, std::uint64_t seed) {
  if (p <= 1000) throw InvalidArgument("random pencils need p > 1000, got " + std::to_string(p));
  const PrimeField fp(p);
  std::mt19937_64 rng(seed);
  auto draw = [&] {
    Curve34 f{p, {}};
    for (auto& v : f.c) v = fp.random(rng).value();
    return f;
  };
  auto a_ok = [](const Curve34& f) { return f.c[Curve34::index(0, 0)] != 0 && f.c[Curve34::index(3, 0)] != 0; };
  PencilSample s;
  for (; s.rejections < 100; ++s.rejections) {
    s.f0 = draw();
    s.f1 = draw();
    if (!a_ok(s.f0) || !a_ok(s.f1) || s.f0.proportional_to(s.f1)) continue;
    if (pencil_resultant(s.f0, s.f1).is_zero()) continue;
    return s;
  }
  throw InternalError("100 consecutive pencils failed the genericity screens at p = " + std::to_string(p));
}

bool PencilCountReport::all_witnesses_verified() const {
  auto ok = [](const FactorSummary& f) {
    for (const auto& fc : f.fibers)
      if (fc.square && !fc.witness_verified) return false;
    return true;
  };
  for (const auto& f : factors)
    if (!ok(f)) return false;
  return ok(infinity);
}

PencilCountReport pencil_intersection_count(const Curve34& f0, const Curve34& f1, std::uint64_t seed) {
  if (f0.prime != f1.prime) throw DomainMismatch("curves over different primes");
  if (f0.proportional_to(f1)) throw InvalidArgument("degenerate pencil: F1 is proportional to F0");
  PencilCountReport rep;
  rep.prime = f0.prime;
  rep.seed = seed;

  const auto [delta, d] = bitangent_conditions(f0, f1);
  if (delta.is_zero() || d.is_zero()) throw InvalidArgument("a bitangent condition vanishes on the whole pencil");
  const auto r = as_univariate(sylvester_resultant(delta, d, {.first_sample = 0, .threads = 1}));
  if (r.is_zero()) throw InvalidArgument("R(t) vanishes identically; pencil fails the genericity screen");
  rep.raw_degree = r.degree();
  const auto sf = squarefree_part(r);
  rep.squarefree_degree = sf.degree();

  for (const auto& m : factor_squarefree(sf.monic(), seed)) {
    int mult = 0;
    for (auto rest = r;; ++mult) {
      auto [quo, rem] = rest.divrem(m);
      if (!rem.is_zero()) break;
      rest = quo;
    }
    auto fs = validate_factor(m, mult, f0, f1, delta, d, seed);
    if (fs.validated) {
      rep.validated_count += fs.degree;
    } else {
      ++rep.extraneous_factors;
      rep.extraneous_degree += fs.degree;
    }
    rep.factors.push_back(std::move(fs));
  }

  // t = infinity is s = 0 on the reversed pencil F1 + s F0.
  const PrimeField fp(f0.prime);
  const auto [rdelta, rd] = bitangent_conditions(f1, f0);
  const UPoly<Fp> s = UPoly<Fp>::x(fp);
  rep.infinity = validate_factor(s, 0, f1, f0, rdelta, rd, seed);
  rep.infinity.factor = "1/t";
  return rep;
}

PencilCountReport run_pencil_trial(std::uint32_t p, std::uint64_t seed) {
  const auto s = random_pencil(p, seed);
  auto rep = pencil_intersection_count(s.f0, s.f1, seed);
  rep.rejections = s.rejections;
  return rep;
}

}  // namespace prymcalc
