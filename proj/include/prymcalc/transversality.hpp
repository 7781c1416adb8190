#pragma once

// The one-parameter family of (3,4)-forms
//   P_alpha = (x^3+y^3) u^4 - 2x^3 u^3 v + (1-alpha) x^3 u^2 v^2 + 2 alpha x^3 u v^3
//             + (-alpha x^3 + x^2 y + y^3) v^4
// on P^1 x P^1, its bitangent conditions, and a smoothness certificate.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "prymcalc/quartic.hpp"

namespace prymcalc {

using QPoly = MultiPoly<Rational>;
using FamilyCoeffs = QuarticCoeffs<QPoly>;

/// Coefficients A..E as polynomials in (x, y, alpha).
FamilyCoeffs family_coeffs();

/// P_alpha as a polynomial in (x, y, u, v, alpha).
QPoly p_alpha();

/// P_0 as a polynomial in (x, y, u, v).
QPoly p_zero();

/// disc_delta of the family: degree 18 in (x, y), coefficients in alpha.
BinaryForm<Rational> delta_alpha();
/// sem_d of the family: degree 12 in (x, y).
BinaryForm<Rational> d_alpha();

struct ResultantReport {
  UPoly<Rational> r;              // R(alpha) = Res_(x,y)(Delta_alpha, d_alpha)
  int degree_bound = 0;
  bool cross_validated = false;   // agrees with a second, shifted sample grid
  int degree() const { return r.degree(); }
  int order_at_zero() const { return r.order_at_zero(); }
};

ResultantReport resultant_R(unsigned threads = 0);

struct SectionReport {
  UPoly<Rational> poly;           // d on the fiber over [x:y] = [1:0]
  bool matches_direct = false;    // same as sem_d(1, -2, 1-alpha, 2alpha, -alpha)
  Rational linear;
  bool passed() const { return matches_direct && !linear.is_zero(); }
};

SectionReport section_reducedness();

/// The quartic in (u, v) over the point ([x0:y0], alpha0).
QuarticCoeffs<Rational> fiber_quartic(const Rational& x0, const Rational& y0, const Rational& alpha0);

enum class CertificateStatus { smooth, fail };
std::string to_string(CertificateStatus s);

struct SmoothnessCertificate {
  CertificateStatus status = CertificateStatus::fail;
  std::string strategy;     // e.g. "eliminate (u,v): (P_u,P_v) & (P_x,P_y)"
  Rational resultant;       // the nonzero final resultant when smooth
  int strategies_tried = 0;
  bool inconclusive = false;  // every eliminant vanished identically
  std::string reason;
  /// A point ([x:y],[u:v]) with small integer coordinates where all four
  /// partials vanish, when the search finds one.
  std::optional<std::array<std::int64_t, 4>> singular_point;
};

/// Exact smoothness test for a bihomogeneous form in (x, y; u, v) over QQ.
/// A singular point is a common zero of the four partials (Euler), so it is
/// a common root of any two eliminants Res(P_a, P_b), Res(P_c, P_d) taken in
/// one pair of variables; a nonzero resultant of two eliminants rules it out.
/// Resultants are of forms with their formal degrees, so no root can hide at
/// infinity.
SmoothnessCertificate smoothness_certificate(const QPoly& p, unsigned threads = 0);

SmoothnessCertificate p0_smoothness_certificate(unsigned threads = 0);

struct ControlForm {
  std::string name;
  QPoly form;  // in (x, y, u, v)
};

/// Two singular forms the certificate must reject: (uy - vx)^2, and u * G for
/// a fixed (3,3)-form G through ([1:1], [0:1]).
std::array<ControlForm, 2> singular_controls();

}  // namespace prymcalc
