#pragma once

// Sparse multivariate polynomials over a field, at most kMaxVars variables,
// terms kept in graded-lexicographic order (leading term first).

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "prymcalc/field.hpp"

namespace prymcalc {

inline constexpr std::size_t kMaxVars = 6;

using Exponents = std::array<std::uint16_t, kMaxVars>;

inline unsigned total_degree(const Exponents& e) {
  unsigned s = 0;
  for (auto x : e) s += x;
  return s;
}

/// Strict "a comes before b" for graded lex with descending terms.
struct GrlexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

template <FieldElement K>
class MultiPoly {
 public:
  using Domain = typename K::Domain;
  using TermMap = std::map<Exponents, K, GrlexDescending>;

  MultiPoly(Domain dom, std::vector<std::string> vars) : dom_(std::move(dom)), vars_(std::move(vars)) {
    if (vars_.size() > kMaxVars) throw InvalidArgument("at most 6 variables are supported");
    for (std::size_t i = 0; i < vars_.size(); ++i)
      for (std::size_t j = i + 1; j < vars_.size(); ++j)
        if (vars_[i] == vars_[j]) throw InvalidArgument("duplicate variable name '" + vars_[i] + "'");
  }

  static MultiPoly constant(const Domain& dom, std::vector<std::string> vars, const K& c) {
    MultiPoly p(dom, std::move(vars));
    p.add_term(Exponents{}, c);
    return p;
  }

  static MultiPoly variable(const Domain& dom, std::vector<std::string> vars, const std::string& name) {
    MultiPoly p(dom, std::move(vars));
    Exponents e{};
    e[p.index_of(name)] = 1;
    p.add_term(e, dom.one());
    return p;
  }

  const Domain& domain() const { return dom_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0); }

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return i;
    throw InvalidArgument("unknown variable '" + name + "'");
  }
  bool has_var(const std::string& name) const { return std::find(vars_.begin(), vars_.end(), name) != vars_.end(); }

  /// Coefficient of a monomial (zero when absent).
  K coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? dom_.zero() : it->second;
  }
  K constant_term() const { return coeff(Exponents{}); }

  void add_term(const Exponents& e, const K& c) {
    if (!(c.domain() == dom_)) throw DomainMismatch("coefficient over " + c.domain().describe() + ", polynomial over " + dom_.describe());
    for (std::size_t i = vars_.size(); i < kMaxVars; ++i)
      if (e[i] != 0) throw InvalidArgument("exponent given for a nonexistent variable");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  int degree_in(std::size_t var) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
  }
  int degree_in(const std::string& name) const { return degree_in(index_of(name)); }
  int total_degree() const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(prymcalc::total_degree(e)));
    return d;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const K& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend MultiPoly operator*(MultiPoly a, const K& s) { return a *= s; }
  friend MultiPoly operator*(const K& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly out(a.dom_, a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e{};
        for (std::size_t i = 0; i < kMaxVars; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.dom_ == b.dom_ && a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned n) const {
    MultiPoly acc = constant(dom_, vars_, dom_.one());
    MultiPoly base = *this;
    while (n != 0) {
      if (n & 1U) acc *= base;
      n >>= 1U;
      if (n != 0) base *= base;
    }
    return acc;
  }

  MultiPoly derivative(const std::string& name) const {
    const std::size_t v = index_of(name);
    MultiPoly out(dom_, vars_);
    for (const auto& [e, c] : terms_) {
      if (e[v] == 0) continue;
      Exponents f = e;
      --f[v];
      out.add_term(f, c * dom_.from_int(e[v]));
    }
    return out;
  }

  /// Substitute a value for one variable and drop it from the variable list.
  MultiPoly specialize(const std::string& name, const K& value) const {
    const std::size_t v = index_of(name);
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (i != v) rest.push_back(vars_[i]);
    MultiPoly out(dom_, std::move(rest));
    std::vector<K> powers{dom_.one()};
    for (const auto& [e, c] : terms_) {
      while (powers.size() <= e[v]) powers.push_back(powers.back() * value);
      Exponents f{};
      for (std::size_t i = 0, j = 0; i < vars_.size(); ++i)
        if (i != v) f[j++] = e[i];
      out.add_term(f, c * powers[e[v]]);
    }
    return out;
  }

  /// Evaluate at a point given in variable order.
  K evaluate(std::span<const K> point) const {
    return evaluate_as<K>(point, [](const K& c) { return c; });
  }

  /// Evaluate with coefficients mapped into another field L through `lift`.
  template <class L, class Lift>
  L evaluate_as(std::span<const L> point, Lift lift) const {
    if (point.size() != vars_.size()) throw InvalidArgument("point dimension does not match variable count");
    std::vector<std::vector<L>> powers(vars_.size());
    L acc = lift(dom_.zero());
    for (const auto& [e, c] : terms_) {
      L term = lift(c);
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (e[i] == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(lift(dom_.one()));
        while (pw.size() <= e[i]) pw.push_back(pw.back() * point[i]);
        term *= pw[e[i]];
      }
      acc += term;
    }
    return acc;
  }

  /// Re-express over a variable list containing every current variable.
  MultiPoly embed(const std::vector<std::string>& new_vars) const {
    MultiPoly out(dom_, new_vars);
    std::vector<std::size_t> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) where[i] = out.index_of(vars_[i]);
    for (const auto& [e, c] : terms_) {
      Exponents f{};
      for (std::size_t i = 0; i < vars_.size(); ++i) f[where[i]] = e[i];
      out.add_term(f, c);
    }
    return out;
  }

  /// Apply a coefficient map into another field, keeping the variables.
  template <class L, class Map>
  MultiPoly<L> map_coefficients(const typename L::Domain& target, Map f) const {
    MultiPoly<L> out(target, vars_);
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

  /// Human-readable sum of monomials, e.g. "3*x^2*y - 1/2*u*v^3".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      std::string coef = c.to_string();
      const bool negative = !coef.empty() && coef[0] == '-';
      if (negative) coef.erase(0, 1);
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      std::string mono;
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) {
        out += coef;
      } else if (coef == "1") {
        out += mono;
      } else {
        out += coef + "*" + mono;
      }
    }
    return out;
  }

 private:
  void check_compatible(const MultiPoly& o) const {
    if (!(o.dom_ == dom_)) throw DomainMismatch("polynomials over " + dom_.describe() + " and " + o.dom_.describe());
    if (o.vars_ != vars_) throw DomainMismatch("polynomials over different variable lists");
  }

  Domain dom_;
  std::vector<std::string> vars_;
  TermMap terms_;
};

}  // namespace prymcalc
