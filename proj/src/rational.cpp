#include "lsa/rational.hpp"
#include "lsa/gaussian.hpp"
#include "lsa/errors.hpp"

#include <cctype>
#include <ostream>

namespace lsa {

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty rational literal");
  auto digits_only = [](std::string_view v) {
    if (v.empty()) return false;
    for (char c : v)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  bool negative = false;
  std::string_view body(s);
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  mpq_class q;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!digits_only(num) || !digits_only(den)) throw DomainError("malformed rational '" + s + "'");
    mpz_class d{std::string(den)};
    if (d == 0) throw DomainError("rational with zero denominator");
    mpz_class n{std::string(num)};
    q = n;
    q /= d;
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !digits_only(whole)) || !digits_only(frac))
      throw DomainError("malformed decimal '" + s + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class w{whole.empty() ? std::string("0") : std::string(whole)};
    mpz_class n = w * scale + mpz_class{std::string(frac)};
    q = n;
    q /= scale;
  } else {
    if (!digits_only(body)) throw DomainError("malformed integer '" + s + "'");
    q = mpz_class{std::string(body)};
  }
  q.canonicalize();
  if (negative) q = -q;
  return Rational(q);
}

std::string Rational::to_string() const { return q_.get_str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, unsigned exponent) {
  Rational out(1);
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational n = o.norm();
  if (n.is_zero()) throw DomainError("division by zero");
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string imag;
  if (im_.is_one())
    imag = "i";
  else if (im_ == Rational(-1))
    imag = "-i";
  else
    imag = im_.to_string() + "*i";
  if (re_.is_zero()) return imag;
  if (im_.sign() > 0) return re_.to_string() + "+" + imag;
  return re_.to_string() + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace lsa
