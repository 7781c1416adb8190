#pragma once

// Binary forms, Sylvester resultants, gcds and squarefree parts.
//
// A binary form is a MultiPoly homogeneous of a declared degree in a
// designated pair of variables; its coefficients live in the polynomial ring
// of the remaining variables. Declared degrees are formal: the leading
// coefficient may vanish, which is how roots at [1:0] are represented.

#include <algorithm>
#include <future>
#include <string>
#include <thread>
#include <vector>

#include "prymcalc/linalg.hpp"
#include "prymcalc/multipoly.hpp"
#include "prymcalc/upoly.hpp"

namespace prymcalc {

template <FieldElement K>
class BinaryForm {
 public:
  /// Throws InvalidArgument unless every term has degree `degree` in (first, second).
  BinaryForm(MultiPoly<K> poly, std::string first, std::string second, int degree)
      : poly_(std::move(poly)), first_(std::move(first)), second_(std::move(second)), degree_(degree) {
    if (degree_ < 0) throw InvalidArgument("binary form degree must be non-negative");
    i0_ = poly_.index_of(first_);
    i1_ = poly_.index_of(second_);
    if (i0_ == i1_) throw InvalidArgument("binary form needs two distinct variables");
    for (const auto& [e, c] : poly_.terms()) {
      if (static_cast<int>(e[i0_]) + e[i1_] != degree_) {
        throw InvalidArgument("polynomial is not homogeneous of degree " + std::to_string(degree_) + " in (" + first_ +
                              ", " + second_ + ")");
      }
    }
  }

  /// Infers the degree from a nonzero homogeneous polynomial.
  static BinaryForm homogeneous(MultiPoly<K> poly, std::string first, std::string second) {
    if (poly.is_zero()) throw InvalidArgument("cannot infer the degree of the zero form");
    const auto& e = poly.terms().begin()->first;
    const int deg = e[poly.index_of(first)] + e[poly.index_of(second)];
    return BinaryForm(std::move(poly), std::move(first), std::move(second), deg);
  }

  /// Pure form sum_i coeffs[i] * first^(n-i) * second^i over a field.
  static BinaryForm from_coefficients(const typename K::Domain& dom, const std::vector<K>& coeffs, std::string first,
                                      std::string second) {
    if (coeffs.empty()) throw InvalidArgument("a form needs at least one coefficient");
    MultiPoly<K> p(dom, {first, second});
    const int n = static_cast<int>(coeffs.size()) - 1;
    for (int i = 0; i <= n; ++i) {
      Exponents e{};
      e[0] = static_cast<std::uint16_t>(n - i);
      e[1] = static_cast<std::uint16_t>(i);
      p.add_term(e, coeffs[static_cast<std::size_t>(i)]);
    }
    return BinaryForm(std::move(p), std::move(first), std::move(second), n);
  }

  const MultiPoly<K>& poly() const { return poly_; }
  const std::string& first() const { return first_; }
  const std::string& second() const { return second_; }
  int degree() const { return degree_; }
  bool is_zero() const { return poly_.is_zero(); }
  const typename K::Domain& domain() const { return poly_.domain(); }

  std::vector<std::string> remaining_vars() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < poly_.nvars(); ++i)
      if (i != i0_ && i != i1_) out.push_back(poly_.vars()[i]);
    return out;
  }

  /// Coefficient of first^(n-i) second^i, as a polynomial in the remaining variables.
  std::vector<MultiPoly<K>> coefficients() const {
    const auto rest = remaining_vars();
    std::vector<MultiPoly<K>> out(static_cast<std::size_t>(degree_) + 1, MultiPoly<K>(poly_.domain(), rest));
    for (const auto& [e, c] : poly_.terms()) {
      Exponents f{};
      for (std::size_t i = 0, j = 0; i < poly_.nvars(); ++i)
        if (i != i0_ && i != i1_) f[j++] = e[i];
      out[e[i1_]].add_term(f, c);
    }
    return out;
  }

  /// Coefficients of a pure form (no remaining variables).
  std::vector<K> constant_coefficients() const {
    if (!remaining_vars().empty()) throw InvalidArgument("form still depends on other variables");
    std::vector<K> out;
    for (const auto& c : coefficients()) out.push_back(c.constant_term());
    return out;
  }

  /// Value at (first, second) = (a, b) for a pure form.
  K evaluate(const K& a, const K& b) const {
    const auto c = constant_coefficients();
    K acc = domain().zero();
    for (std::size_t i = 0; i < c.size(); ++i) {
      acc += c[i] * power(a, static_cast<std::uint64_t>(degree_) - i) * power(b, static_cast<std::uint64_t>(i));
    }
    return acc;
  }

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.degree_ == b.degree_ && a.first_ == b.first_ && a.second_ == b.second_ && a.poly_ == b.poly_;
  }

 private:
  MultiPoly<K> poly_;
  std::string first_, second_;
  int degree_;
  std::size_t i0_ = 0, i1_ = 0;
};

struct ResultantOptions {
  /// Interpolation nodes are first_sample, first_sample + 1, ... per variable.
  std::int64_t first_sample = 0;
  /// Worker threads for the sample evaluations; 0 means hardware concurrency.
  unsigned threads = 0;
};

namespace detail {

template <FieldElement K>
Matrix<K> sylvester_matrix(const std::vector<K>& a, const std::vector<K>& b) {
  const std::size_t m = a.size() - 1, n = b.size() - 1, size = m + n;
  const auto dom = a.front().domain();
  Matrix<K> s(size, std::vector<K>(size, dom.zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = a[j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = b[j];
  return s;
}

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::future<void>> jobs;
  for (unsigned t = 0; t < threads; ++t) {
    jobs.push_back(std::async(std::launch::async, [=, &fn] {
      for (std::size_t i = t; i < count; i += threads) fn(i);
    }));
  }
  for (auto& j : jobs) j.get();
}

}  // namespace detail

/// Per-variable degree bound used for interpolating a Sylvester determinant:
/// deg g * max deg(f coeffs) + deg f * max deg(g coeffs).
template <FieldElement K>
std::vector<int> resultant_degree_bounds(const BinaryForm<K>& f, const BinaryForm<K>& g) {
  const auto fc = f.coefficients();
  const auto gc = g.coefficients();
  const auto rest = f.remaining_vars();
  std::vector<int> bounds;
  for (std::size_t v = 0; v < rest.size(); ++v) {
    int df = 0, dg = 0;
    for (const auto& c : fc) df = std::max(df, c.degree_in(v));
    for (const auto& c : gc) dg = std::max(dg, c.degree_in(v));
    bounds.push_back(g.degree() * df + f.degree() * dg);
  }
  return bounds;
}

/// Res(f, g) of two binary forms in the same pair, as a polynomial in the
/// remaining variables. Polynomial entries are handled by evaluation at an
/// integer grid followed by tensor-product Newton interpolation.
template <FieldElement K>
MultiPoly<K> sylvester_resultant(const BinaryForm<K>& f, const BinaryForm<K>& g, const ResultantOptions& opt = {}) {
  if (!(f.domain() == g.domain())) throw DomainMismatch("resultant of forms over different fields");
  if (f.poly().vars() != g.poly().vars() || f.first() != g.first() || f.second() != g.second()) {
    throw DomainMismatch("resultant of forms over different variables");
  }
  if (f.is_zero() || g.is_zero()) throw InvalidArgument("resultant of a zero form");
  if (f.degree() < 1 || g.degree() < 1) throw InvalidArgument("resultant needs forms of degree >= 1");

  const auto& dom = f.domain();
  const auto rest = f.remaining_vars();
  const auto fc = f.coefficients();
  const auto gc = g.coefficients();

  if (rest.empty()) {
    std::vector<K> a, b;
    for (const auto& c : fc) a.push_back(c.constant_term());
    for (const auto& c : gc) b.push_back(c.constant_term());
    return MultiPoly<K>::constant(dom, {}, determinant(detail::sylvester_matrix(a, b), dom));
  }

  const auto bounds = resultant_degree_bounds(f, g);
  const std::size_t nv = rest.size();
  std::vector<std::size_t> dims(nv), stride(nv);
  std::size_t total = 1;
  for (std::size_t v = nv; v-- > 0;) {
    dims[v] = static_cast<std::size_t>(bounds[v]) + 1;
    stride[v] = total;
    total *= dims[v];
  }
  const std::uint64_t ch = dom.characteristic();
  for (std::size_t v = 0; v < nv; ++v) {
    const std::int64_t last = opt.first_sample + bounds[v];
    if (opt.first_sample < 0 || (ch != 0 && static_cast<std::uint64_t>(last) >= ch)) {
      throw InternalError("insufficient distinct sample points for degree bound " + std::to_string(bounds[v]));
    }
  }

  std::vector<K> values(total, dom.zero());
  detail::parallel_for(total, opt.threads, [&](std::size_t idx) {
    std::vector<K> pt;
    for (std::size_t v = 0; v < nv; ++v) pt.push_back(dom.from_int(opt.first_sample + static_cast<std::int64_t>((idx / stride[v]) % dims[v])));
    std::vector<K> a, b;
    for (const auto& c : fc) a.push_back(c.evaluate(pt));
    for (const auto& c : gc) b.push_back(c.evaluate(pt));
    values[idx] = determinant(detail::sylvester_matrix(a, b), dom);
  });

  // Interpolate along one axis at a time; afterwards values[] holds coefficients.
  for (std::size_t v = 0; v < nv; ++v) {
    std::vector<K> xs;
    for (std::size_t k = 0; k < dims[v]; ++k) xs.push_back(dom.from_int(opt.first_sample + static_cast<std::int64_t>(k)));
    for (std::size_t base = 0; base < total; ++base) {
      if ((base / stride[v]) % dims[v] != 0) continue;
      std::vector<K> ys;
      for (std::size_t k = 0; k < dims[v]; ++k) ys.push_back(values[base + k * stride[v]]);
      const auto poly = interpolate<K>(xs, ys);
      for (std::size_t k = 0; k < dims[v]; ++k) values[base + k * stride[v]] = poly.coeff(k);
    }
  }

  MultiPoly<K> out(dom, rest);
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (values[idx].is_zero()) continue;
    Exponents e{};
    for (std::size_t v = 0; v < nv; ++v) e[v] = static_cast<std::uint16_t>((idx / stride[v]) % dims[v]);
    out.add_term(e, values[idx]);
  }
  return out;
}

/// A polynomial in a single variable as a dense UPoly.
template <FieldElement K>
UPoly<K> as_univariate(const MultiPoly<K>& p) {
  if (p.nvars() > 1) throw InvalidArgument("polynomial has more than one variable");
  std::vector<K> c(static_cast<std::size_t>(std::max(p.total_degree(), 0)) + 1, p.domain().zero());
  for (const auto& [e, x] : p.terms()) c[e[0]] = x;
  return UPoly<K>(p.domain(), std::move(c));
}

/// Univariate view of a pure form: f(X, 1) together with the multiplicity
/// of the root [1:0] (the number of vanishing leading coefficients).
template <FieldElement K>
struct Dehomogenized {
  UPoly<K> affine;
  int mult_at_infinity = 0;
};

template <FieldElement K>
Dehomogenized<K> dehomogenize(const BinaryForm<K>& f) {
  const auto c = f.constant_coefficients();
  const int n = f.degree();
  std::vector<K> up(c.size(), f.domain().zero());
  for (int i = 0; i <= n; ++i) up[static_cast<std::size_t>(n - i)] = c[static_cast<std::size_t>(i)];
  Dehomogenized<K> d{UPoly<K>(f.domain(), std::move(up)), 0};
  if (d.affine.is_zero()) return d;
  d.mult_at_infinity = n - d.affine.degree();
  return d;
}

template <FieldElement K>
BinaryForm<K> homogenize(const UPoly<K>& affine, int mult_at_infinity, const std::string& first,
                         const std::string& second) {
  const int n = std::max(affine.degree(), 0) + mult_at_infinity;
  std::vector<K> c(static_cast<std::size_t>(n) + 1, affine.domain().zero());
  for (int j = 0; j <= affine.degree(); ++j) c[static_cast<std::size_t>(n - j)] = affine.coeff(static_cast<std::size_t>(j));
  return BinaryForm<K>::from_coefficients(affine.domain(), c, first, second);
}

/// Greatest common divisor of two pure forms over a field, normalized so the
/// affine part is monic. Common roots at [1:0] are restored as powers of
/// the second variable.
template <FieldElement K>
BinaryForm<K> binary_gcd(const BinaryForm<K>& f, const BinaryForm<K>& g) {
  if (f.first() != g.first() || f.second() != g.second()) throw DomainMismatch("gcd of forms in different variables");
  if (f.is_zero() && g.is_zero()) throw InvalidArgument("gcd of two zero forms");
  const auto df = dehomogenize(f);
  const auto dg = dehomogenize(g);
  if (f.is_zero()) return homogenize(dg.affine.monic(), dg.mult_at_infinity, g.first(), g.second());
  if (g.is_zero()) return homogenize(df.affine.monic(), df.mult_at_infinity, f.first(), f.second());
  return homogenize(gcd(df.affine, dg.affine), std::min(df.mult_at_infinity, dg.mult_at_infinity), f.first(),
                    f.second());
}

/// Product of the distinct linear factors over the algebraic closure, as
/// f / gcd(f, f'). Rejects characteristic <= deg f.
template <FieldElement K>
BinaryForm<K> squarefree_part(const BinaryForm<K>& f) {
  const auto ch = f.domain().characteristic();
  if (ch != 0 && static_cast<std::uint64_t>(f.degree()) >= ch) {
    throw InvalidArgument("squarefree part needs characteristic above the degree");
  }
  if (f.is_zero()) throw InvalidArgument("squarefree part of the zero form");
  const auto d = dehomogenize(f);
  return homogenize(squarefree_part(d.affine), d.mult_at_infinity > 0 ? 1 : 0, f.first(), f.second());
}

/// Partial derivative of a form with respect to one of its pair variables.
template <FieldElement K>
BinaryForm<K> form_derivative(const BinaryForm<K>& f, const std::string& var) {
  if (var != f.first() && var != f.second()) throw InvalidArgument("derivative must be taken in a pair variable");
  if (f.degree() == 0) throw InvalidArgument("derivative of a degree-0 form");
  return BinaryForm<K>(f.poly().derivative(var), f.first(), f.second(), f.degree() - 1);
}

}  // namespace prymcalc
