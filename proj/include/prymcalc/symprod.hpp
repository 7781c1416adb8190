#pragma once

// Polynomials in the tautological classes x and theta on the d-th symmetric
// product X^(d) of a genus-g curve, and their top-degree evaluation.

#include <map>
#include <string>
#include <utility>

#include "prymcalc/field.hpp"

namespace prymcalc {

/// sum c_ij x^i theta^j with i + j <= d. Zero coefficients are not stored.
class XThetaClass {
 public:
  XThetaClass(int g, int d);
  static XThetaClass monomial(int g, int d, int i, int j, const Rational& c = Rational(1));

  int genus() const { return g_; }
  int dim() const { return d_; }
  Rational coeff(int i, int j) const;
  const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }
  /// Set when a product dropped terms above degree d.
  bool truncated() const { return truncated_; }

  XThetaClass& add(int i, int j, const Rational& c);
  XThetaClass& operator+=(const XThetaClass& o);
  XThetaClass& operator-=(const XThetaClass& o);
  friend XThetaClass operator+(XThetaClass a, const XThetaClass& b) { return a += b; }
  friend XThetaClass operator-(XThetaClass a, const XThetaClass& b) { return a -= b; }
  friend XThetaClass operator*(const XThetaClass& a, const XThetaClass& b);
  friend XThetaClass operator*(const Rational& s, XThetaClass a);
  /// Compares ambient data and coefficients; the truncation flag is ignored.
  friend bool operator==(const XThetaClass& a, const XThetaClass& b) {
    return a.g_ == b.g_ && a.d_ == b.d_ && a.terms_ == b.terms_;
  }

  /// e.g. "104*x^2*theta^2 + 2*theta^4 - 24*x*theta^3 - 128*x^3*theta",
  /// terms by descending power of theta.
  std::string to_string() const;

 private:
  void check_same(const XThetaClass& o) const;

  int g_, d_;
  std::map<std::pair<int, int>, Rational> terms_;
  bool truncated_ = false;
};

/// integral of x^(d-j) theta^j over X^(d) = g!/(g-j)!, and 0 for j > g.
Rational top_monomial_value(int g, int d, int j);

/// sum over i + j = d of c_ij * top_monomial_value(g, d, j). Lower-degree
/// terms contribute nothing.
Rational eval_top(const XThetaClass& c);

/// theta^2/2 - x theta on X^(4), genus 5.
XThetaClass class_c14();
/// 128 x^2 + 4 theta^2 - 40 x theta on X^(4), genus 5.
XThetaClass class_delta2();
/// 104 x^2 theta^2 + 2 theta^4 - 24 x theta^3 - 128 x^3 theta.
XThetaClass expected_c14_delta2();

struct IntersectionReport {
  XThetaClass product{5, 4};
  Rational value;
  bool expansion_matches = false;
  bool passed() const { return expansion_matches && value == Rational(240); }
};

IntersectionReport product_and_eval();

}  // namespace prymcalc
