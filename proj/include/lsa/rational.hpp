#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace lsa {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
///
/// Thin value wrapper around GMP's mpq_class. Arithmetic returns plain
/// Rational values so GMP expression templates never reach Eigen.
class Rational {
public:
  Rational() = default;
  Rational(int v) : q_(v) {}
  Rational(long v) : q_(v) {}
  Rational(long long v) : q_(static_cast<long>(v)) {}
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses `a`, `-a`, `a/b` or a finite decimal `1.25`, `-0.5`.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  std::string numerator() const { return q_.get_num().get_str(); }
  std::string denominator() const { return q_.get_den().get_str(); }
  double to_double() const { return q_.get_d(); }
  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

private:
  mpq_class q_{0};
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace lsa
