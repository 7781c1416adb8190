#include "prymcalc/transversality.hpp"

#include <array>
#include <map>
#include <numeric>

namespace prymcalc {
namespace {

const RationalDomain kQQ;
const std::vector<std::string> kXYA{"x", "y", "alpha"};
const std::vector<std::string> kXYUVA{"x", "y", "u", "v", "alpha"};
const std::vector<std::string> kXYUV{"x", "y", "u", "v"};

QPoly mono(const std::vector<std::string>& vars, std::int64_t c, std::initializer_list<std::pair<const char*, int>> powers) {
  QPoly p(kQQ, vars);
  Exponents e{};
  for (const auto& [name, k] : powers) e[p.index_of(name)] = static_cast<std::uint16_t>(k);
  p.add_term(e, Rational(c));
  return p;
}

}  // namespace

FamilyCoeffs family_coeffs() {
  const auto& v = kXYA;
  const QPoly x3 = mono(v, 1, {{"x", 3}});
  const QPoly ax3 = mono(v, 1, {{"x", 3}, {"alpha", 1}});
  return {x3 + mono(v, 1, {{"y", 3}}),
          x3 * Rational(-2),
          x3 - ax3,
          ax3 * Rational(2),
          -ax3 + mono(v, 1, {{"x", 2}, {"y", 1}}) + mono(v, 1, {{"y", 3}})};
}

QPoly p_alpha() {
  const auto c = family_coeffs().as_array();
  QPoly p(kQQ, kXYUVA);
  for (int j = 0; j <= 4; ++j) p += c[static_cast<std::size_t>(j)].embed(kXYUVA) * mono(kXYUVA, 1, {{"u", 4 - j}, {"v", j}});
  return p;
}

QPoly p_zero() { return p_alpha().specialize("alpha", Rational(0)); }

BinaryForm<Rational> delta_alpha() { return BinaryForm<Rational>(disc_delta(family_coeffs()), "x", "y", 18); }

BinaryForm<Rational> d_alpha() { return BinaryForm<Rational>(sem_d(family_coeffs()), "x", "y", 12); }

ResultantReport resultant_R(unsigned threads) {
  const auto delta = delta_alpha();
  const auto d = d_alpha();
  ResultantReport rep{UPoly<Rational>(kQQ), 0, false};
  rep.degree_bound = resultant_degree_bounds(delta, d).at(0);
  rep.r = as_univariate(sylvester_resultant(delta, d, {.first_sample = 0, .threads = threads}));
  // Nodes disjoint from the first grid.
  const auto shifted = as_univariate(sylvester_resultant(delta, d, {.first_sample = rep.degree_bound + 7, .threads = threads}));
  rep.cross_validated = shifted == rep.r;
  return rep;
}

SectionReport section_reducedness() {
  const auto sec = d_alpha().poly().specialize("x", Rational(1)).specialize("y", Rational(0));
  SectionReport rep{as_univariate(sec), false, Rational(0)};
  const std::vector<std::string> a{"alpha"};
  const QPoly one = QPoly::constant(kQQ, a, Rational(1));
  const QPoly al = QPoly::variable(kQQ, a, "alpha");
  const QuarticCoeffs<QPoly> fiber{one, one * Rational(-2), one - al, al * Rational(2), -al};
  rep.matches_direct = as_univariate(sem_d(fiber)) == rep.poly;
  rep.linear = rep.poly.coeff(1);
  return rep;
}

QuarticCoeffs<Rational> fiber_quartic(const Rational& x0, const Rational& y0, const Rational& alpha0) {
  if (x0.is_zero() && y0.is_zero()) throw InvalidArgument("[x:y] = [0:0] is not a point of P^1");
  const std::array<Rational, 3> pt{x0, y0, alpha0};
  return family_coeffs().map([&](const QPoly& c) { return c.evaluate(pt); });
}

std::string to_string(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::smooth: return "smooth";
    case CertificateStatus::fail: return "fail";
  }
  return "unknown";
}

SmoothnessCertificate smoothness_certificate(const QPoly& p_in, unsigned threads) {
  if (p_in.is_zero()) throw InvalidArgument("zero form has no smoothness certificate");
  const QPoly p = p_in.embed(kXYUV);
  const auto& lead = p.terms().begin()->first;
  const int a = lead[0] + lead[1], b = lead[2] + lead[3];
  // Validates bihomogeneity.
  (void)BinaryForm<Rational>(p, "x", "y", a);
  (void)BinaryForm<Rational>(p, "u", "v", b);

  struct Partial {
    std::string name;
    QPoly poly;
    int deg_xy, deg_uv;
  };
  const std::array<Partial, 4> partials{Partial{"P_x", p.derivative("x"), a - 1, b},
                                        Partial{"P_y", p.derivative("y"), a - 1, b},
                                        Partial{"P_u", p.derivative("u"), a, b - 1},
                                        Partial{"P_v", p.derivative("v"), a, b - 1}};
  struct Order {
    const char *elim0, *elim1, *keep0, *keep1;
    bool uv;  // eliminating (u, v)
  };
  const std::array<Order, 2> orders{Order{"u", "v", "x", "y", true}, Order{"x", "y", "u", "v", false}};

  // Eliminant of a pair of partials: a form in the kept pair, or nullopt when
  // it vanishes identically.
  std::map<std::tuple<int, int, int>, std::optional<BinaryForm<Rational>>> cache;
  bool any_nonzero = false;
  auto eliminant = [&](int order, int i, int j) -> const std::optional<BinaryForm<Rational>>& {
    auto key = std::make_tuple(order, i, j);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    const auto& o = orders[static_cast<std::size_t>(order)];
    const auto& f = partials[static_cast<std::size_t>(i)];
    const auto& g = partials[static_cast<std::size_t>(j)];
    const int df = o.uv ? f.deg_uv : f.deg_xy, dg = o.uv ? g.deg_uv : g.deg_xy;
    const int kf = o.uv ? f.deg_xy : f.deg_uv, kg = o.uv ? g.deg_xy : g.deg_uv;
    std::optional<BinaryForm<Rational>> out;
    if (!f.poly.is_zero() && !g.poly.is_zero() && df >= 1 && dg >= 1) {
      const auto r = sylvester_resultant(BinaryForm<Rational>(f.poly, o.elim0, o.elim1, df),
                                         BinaryForm<Rational>(g.poly, o.elim0, o.elim1, dg), {.first_sample = 0, .threads = threads});
      if (!r.is_zero()) {
        out = BinaryForm<Rational>(r, o.keep0, o.keep1, kf * dg + kg * df);
        any_nonzero = true;
      }
    }
    return cache.emplace(key, std::move(out)).first->second;
  };

  std::vector<std::pair<int, int>> pairs;
  // (P_u,P_v) and (P_x,P_y) first, then the mixed pairs.
  pairs.emplace_back(2, 3);
  pairs.emplace_back(0, 1);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!((i == 2 && j == 3) || (i == 0 && j == 1))) pairs.emplace_back(i, j);

  SmoothnessCertificate cert;
  for (int order = 0; order < 2; ++order) {
    for (std::size_t s = 0; s < pairs.size(); ++s) {
      for (std::size_t t = s + 1; t < pairs.size(); ++t) {
        ++cert.strategies_tried;
        const auto& e1 = eliminant(order, pairs[s].first, pairs[s].second);
        if (!e1 || e1->degree() < 1) continue;
        const auto& e2 = eliminant(order, pairs[t].first, pairs[t].second);
        if (!e2 || e2->degree() < 1) continue;
        const Rational r = sylvester_resultant(*e1, *e2).constant_term();
        if (r.is_zero()) continue;
        const auto& o = orders[static_cast<std::size_t>(order)];
        auto nm = [&](std::pair<int, int> pr) {
          return "(" + partials[static_cast<std::size_t>(pr.first)].name + "," + partials[static_cast<std::size_t>(pr.second)].name + ")";
        };
        cert.status = CertificateStatus::smooth;
        cert.strategy = std::string("eliminate (") + o.elim0 + "," + o.elim1 + "): " + nm(pairs[s]) + " & " + nm(pairs[t]);
        cert.resultant = r;
        return cert;
      }
    }
  }
  cert.status = CertificateStatus::fail;
  cert.inconclusive = !any_nonzero;
  cert.reason = any_nonzero ? "every pair of eliminants has a common root" : "every eliminant vanishes identically";

  // Look for a singular point with coordinates in [-3, 3].
  std::vector<std::pair<std::int64_t, std::int64_t>> line;
  for (std::int64_t a = -3; a <= 3; ++a)
    for (std::int64_t b = -3; b <= 3; ++b)
      if (std::gcd(a, b) == 1 && (a > 0 || (a == 0 && b == 1))) line.emplace_back(a, b);
  for (const auto& [x0, y0] : line) {
    for (const auto& [u0, v0] : line) {
      const std::array<Rational, 4> pt{x0, y0, u0, v0};
      bool singular = true;
      for (const auto& d : partials) singular = singular && d.poly.evaluate(pt).is_zero();
      if (singular) {
        cert.singular_point = std::array<std::int64_t, 4>{x0, y0, u0, v0};
        return cert;
      }
    }
  }
  return cert;
}

SmoothnessCertificate p0_smoothness_certificate(unsigned threads) { return smoothness_certificate(p_zero(), threads); }

std::array<ControlForm, 2> singular_controls() {
  const auto& v = kXYUV;
  const QPoly l = mono(v, 1, {{"y", 1}, {"u", 1}}) - mono(v, 1, {{"x", 1}, {"v", 1}});
  QPoly g(kQQ, v);
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      g += mono(v, (3 * i + 5 * j + 1) % 7 - 3, {{"x", 3 - i}, {"y", i}, {"u", 3 - j}, {"v", j}});
  const std::array<Rational, 4> pt{1, 1, 0, 1};
  g -= QPoly::constant(kQQ, v, g.evaluate(pt)) * mono(v, 1, {{"y", 3}, {"v", 3}});
  return {ControlForm{"(uy - vx)^2", l * l}, ControlForm{"u * G, G(1,1;0,1) = 0", mono(v, 1, {{"u", 1}}) * g}};
}

}  // namespace prymcalc
