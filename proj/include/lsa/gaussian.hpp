#pragma once

#include "lsa/rational.hpp"

#include <iosfwd>
#include <string>

namespace lsa {

/// Element re + im*i of Q(i).
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(int v) : re_(v) {}
  GaussianRational(long v) : re_(v) {}
  GaussianRational(const Rational& re) : re_(re) {}
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational unit() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  GaussianRational conj() const { return {re_, -im_}; }
  /// re^2 + im^2
  Rational norm() const { return re_ * re_ + im_ * im_; }
  std::string to_string() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace lsa
