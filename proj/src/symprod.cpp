#include "prymcalc/symprod.hpp"

#include "prymcalc/errors.hpp"

namespace prymcalc {

XThetaClass::XThetaClass(int g, int d) : g_(g), d_(d) {
  if (g < 0 || d < 0) throw InvalidArgument("genus and dimension must be non-negative");
}

XThetaClass XThetaClass::monomial(int g, int d, int i, int j, const Rational& c) {
  XThetaClass out(g, d);
  out.add(i, j, c);
  return out;
}

Rational XThetaClass::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

XThetaClass& XThetaClass::add(int i, int j, const Rational& c) {
  if (i < 0 || j < 0 || i + j > d_) {
    throw InvalidArgument("monomial x^" + std::to_string(i) + " theta^" + std::to_string(j) + " exceeds dimension " + std::to_string(d_));
  }
  if (c.is_zero()) return *this;
  auto [it, fresh] = terms_.try_emplace({i, j}, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

void XThetaClass::check_same(const XThetaClass& o) const {
  if (g_ != o.g_ || d_ != o.d_) throw DomainMismatch("classes live on different symmetric products");
}

XThetaClass& XThetaClass::operator+=(const XThetaClass& o) {
  check_same(o);
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  truncated_ = truncated_ || o.truncated_;
  return *this;
}

XThetaClass& XThetaClass::operator-=(const XThetaClass& o) {
  check_same(o);
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  truncated_ = truncated_ || o.truncated_;
  return *this;
}

XThetaClass operator*(const XThetaClass& a, const XThetaClass& b) {
  a.check_same(b);
  XThetaClass out(a.g_, a.d_);
  out.truncated_ = a.truncated_ || b.truncated_;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      const int i = ka.first + kb.first, j = ka.second + kb.second;
      if (i + j > a.d_) {
        out.truncated_ = true;
        continue;
      }
      out.add(i, j, ca * cb);
    }
  }
  return out;
}

XThetaClass operator*(const Rational& s, XThetaClass a) {
  XThetaClass out(a.g_, a.d_);
  out.truncated_ = a.truncated_;
  for (const auto& [k, c] : a.terms_) out.add(k.first, k.second, s * c);
  return out;
}

std::string XThetaClass::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Descending theta power, then descending x power.
  std::map<std::pair<int, int>, Rational, std::greater<>> ordered;
  for (const auto& [k, c] : terms_) ordered.emplace(std::make_pair(k.second, k.first), c);
  for (const auto& [k, c] : ordered) {
    const auto [j, i] = k;
    const bool neg = c < Rational(0);
    const Rational mag = neg ? -c : c;
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    std::string m;
    auto push = [&](const std::string& s) { m += (m.empty() ? "" : "*") + s; };
    if (!mag.is_one() || (i == 0 && j == 0)) push(mag.to_string());
    if (i > 0) push(i == 1 ? "x" : "x^" + std::to_string(i));
    if (j > 0) push(j == 1 ? "theta" : "theta^" + std::to_string(j));
    out += m;
  }
  return out;
}

Rational top_monomial_value(int g, int d, int j) {
  if (g < 0 || d < 0 || j < 0 || j > d) throw InvalidArgument("top monomial needs 0 <= j <= d");
  if (j > g) return Rational(0);
  Rational v(1);
  for (int k = g - j + 1; k <= g; ++k) v *= Rational(k);
  return v;
}

Rational eval_top(const XThetaClass& c) {
  Rational total(0);
  for (const auto& [k, coef] : c.terms())
    if (k.first + k.second == c.dim()) total += coef * top_monomial_value(c.genus(), c.dim(), k.second);
  return total;
}

XThetaClass class_c14() {
  XThetaClass c(5, 4);
  c.add(0, 2, Rational(mpq_class(1, 2)));
  c.add(1, 1, Rational(-1));
  return c;
}

XThetaClass class_delta2() {
  XThetaClass c(5, 4);
  c.add(2, 0, Rational(128));
  c.add(0, 2, Rational(4));
  c.add(1, 1, Rational(-40));
  return c;
}

XThetaClass expected_c14_delta2() {
  XThetaClass c(5, 4);
  c.add(2, 2, Rational(104));
  c.add(0, 4, Rational(2));
  c.add(1, 3, Rational(-24));
  c.add(3, 1, Rational(-128));
  return c;
}

IntersectionReport product_and_eval() {
  IntersectionReport rep;
  rep.product = class_c14() * class_delta2();
  rep.expansion_matches = rep.product == expected_c14_delta2() && !rep.product.truncated();
  rep.value = eval_top(rep.product);
  return rep;
}

}  // namespace prymcalc
