#pragma once

#include "lsa/errors.hpp"
#include "lsa/gaussian.hpp"
#include "lsa/rational.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace lsa {

/// Power product of named variables. Factors are sorted by variable name and
/// carry strictly positive exponents, so equal monomials are equal vectors.
class Monomial {
public:
  using Factor = std::pair<std::string, unsigned>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);
  static Monomial variable(const std::string& name, unsigned exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }
  unsigned exponent_of(const std::string& name) const;
  /// Same monomial with `name` removed.
  Monomial without(const std::string& name) const;
  std::string to_string() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

private:
  std::vector<Factor> factors_;
  unsigned degree_ = 0;
};

/// Graded lexicographic comparison: total degree first, then exponents
/// variable by variable in ascending name order. Returns -1, 0 or 1.
int grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) < 0; }
};

namespace detail {
inline bool coeff_is_zero(const Rational& c) { return c.is_zero(); }
inline bool coeff_is_zero(const GaussianRational& c) { return c.is_zero(); }
inline bool coeff_is_one(const Rational& c) { return c.is_one(); }
inline bool coeff_is_one(const GaussianRational& c) { return c.is_one(); }
inline bool coeff_is_minus_one(const Rational& c) { return c == Rational(-1); }
inline bool coeff_is_minus_one(const GaussianRational& c) { return c == GaussianRational(-1); }
inline std::string coeff_factor_string(const Rational& c) { return c.to_string(); }
inline std::string coeff_factor_string(const GaussianRational& c) {
  if (!c.re().is_zero() && !c.im().is_zero()) return "(" + c.to_string() + ")";
  return c.to_string();
}
}  // namespace detail

/// Multivariate polynomial with coefficients in C (Rational or
/// GaussianRational). Zero coefficients are never stored, so two polynomials
/// are equal iff their term maps are equal.
template <class C>
class Polynomial {
public:
  using Coefficient = C;
  using TermMap = std::map<Monomial, C, GrlexLess>;

  Polynomial() = default;
  Polynomial(int v) : Polynomial(C(v)) {}
  Polynomial(long v) : Polynomial(C(v)) {}
  Polynomial(const C& c) {
    if (!detail::coeff_is_zero(c)) terms_.emplace(Monomial{}, c);
  }
  Polynomial(const Monomial& m, const C& c) {
    if (!detail::coeff_is_zero(c)) terms_.emplace(m, c);
  }

  static Polynomial variable(const std::string& name) { return Polynomial(Monomial::variable(name), C(1)); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

  /// Coefficient of the monomial 1.
  C constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? C(0) : it->second;
  }

  /// Value of a constant polynomial; throws RingError otherwise.
  C constant_value() const {
    if (!is_constant()) throw RingError("polynomial '" + to_string() + "' is not constant");
    return constant_term();
  }

  C coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C(0) : it->second;
  }

  unsigned total_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

  unsigned degree_in(const std::string& name) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent_of(name));
    return d;
  }

  std::set<std::string> variables() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_)
      for (const auto& f : m.factors()) out.insert(f.first);
    return out;
  }

  Polynomial operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, -c);
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  /// Division by a nonzero constant polynomial.
  Polynomial& operator/=(const Polynomial& o) {
    const C d = o.constant_value();
    if (detail::coeff_is_zero(d)) throw DomainError("division by zero polynomial");
    for (auto& [m, c] : terms_) c /= d;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator/(Polynomial a, const Polynomial& b) { return a /= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  Polynomial pow(unsigned exponent) const {
    Polynomial out(C(1));
    for (unsigned i = 0; i < exponent; ++i) out *= *this;
    return out;
  }

  /// Replaces every occurrence of variable `name` by `value`.
  Polynomial substitute(const std::string& name, const Polynomial& value) const {
    Polynomial out;
    std::map<unsigned, Polynomial> powers;
    for (const auto& [m, c] : terms_) {
      const unsigned e = m.exponent_of(name);
      if (e == 0) {
        out.add_term(m, c);
        continue;
      }
      auto it = powers.find(e);
      if (it == powers.end()) it = powers.emplace(e, value.pow(e)).first;
      out += Polynomial(m.without(name), c) * it->second;
    }
    return out;
  }

  Polynomial substitute(const std::map<std::string, Polynomial>& values) const {
    Polynomial out = *this;
    for (const auto& [name, v] : values) out = out.substitute(name, v);
    return out;
  }

  /// Reduces modulo the relation name^2 = replacement, i.e. rewrites every
  /// name^k as name^(k mod 2) * replacement^(k div 2). `replacement` must
  /// not mention `name`.
  Polynomial reduce_square(const std::string& name, const Polynomial& replacement) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
      const unsigned e = m.exponent_of(name);
      if (e < 2) {
        out.add_term(m, c);
        continue;
      }
      Monomial rest = m.without(name);
      if (e % 2 == 1) rest = rest * Monomial::variable(name);
      out += Polynomial(rest, c) * replacement.pow(e / 2);
    }
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      std::string coeff;
      bool negative = false;
      C shown = c;
      if constexpr (std::is_same_v<C, Rational>) {
        if (c.sign() < 0) {
          negative = true;
          shown = -c;
        }
      } else {
        if (c.im().is_zero() && c.re().sign() < 0) {
          negative = true;
          shown = -c;
        } else if (c.re().is_zero() && c.im().sign() < 0) {
          negative = true;
          shown = -c;
        }
      }
      if (m.is_one())
        coeff = detail::coeff_factor_string(shown);
      else if (detail::coeff_is_one(shown))
        coeff = m.to_string();
      else
        coeff = detail::coeff_factor_string(shown) + "*" + m.to_string();
      if (first)
        out += negative ? "-" + coeff : coeff;
      else
        out += negative ? " - " + coeff : " + " + coeff;
      first = false;
    }
    return out;
  }

private:
  void add_term(const Monomial& m, const C& c) {
    if (detail::coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (detail::coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  TermMap terms_;
};

template <class C>
std::ostream& operator<<(std::ostream& os, const Polynomial<C>& p) {
  return os << p.to_string();
}

using Poly = Polynomial<Rational>;
using GaussianPoly = Polynomial<GaussianRational>;

}  // namespace lsa
