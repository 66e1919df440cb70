#pragma once

#include "lsa/gaussian.hpp"
#include "lsa/polynomial.hpp"
#include "lsa/rational.hpp"

#include <Eigen/Core>

#include <concepts>
#include <string>
#include <type_traits>

namespace lsa {

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool is_field = true;
  static constexpr bool is_polynomial = false;
  using Coefficient = Rational;
  static constexpr const char* ring_name = "rational";
};

template <>
struct ScalarTraits<GaussianRational> {
  static constexpr bool is_field = true;
  static constexpr bool is_polynomial = false;
  using Coefficient = GaussianRational;
  static constexpr const char* ring_name = "gaussian";
};

template <class C>
struct ScalarTraits<Polynomial<C>> {
  static constexpr bool is_field = false;
  static constexpr bool is_polynomial = true;
  using Coefficient = C;
  static constexpr const char* ring_name = std::is_same_v<C, Rational> ? "poly" : "gaussian-poly";
};

/// Rational or GaussianRational: the rings where kernels and ranks exist.
template <class S>
concept ExactField = ScalarTraits<S>::is_field;

template <class S>
concept ExactScalar = requires { ScalarTraits<S>::ring_name; };

template <class S>
concept PolynomialScalar = ScalarTraits<S>::is_polynomial;

/// Polynomial ring over the coefficient field of S. Generic-element
/// computations on an S-algebra run here.
template <class S>
using PolyOver = Polynomial<typename ScalarTraits<S>::Coefficient>;

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }
template <class C>
bool is_zero(const Polynomial<C>& p) {
  return p.is_zero();
}

inline std::string to_string(const Rational& r) { return r.to_string(); }
inline std::string to_string(const GaussianRational& z) { return z.to_string(); }
template <class C>
std::string to_string(const Polynomial<C>& p) {
  return p.to_string();
}

template <class S>
PolyOver<S> lift_to_poly(const S& s) {
  if constexpr (PolynomialScalar<S>)
    return s;
  else
    return PolyOver<S>(s);
}

}  // namespace lsa

namespace Eigen {

template <class T>
struct LsaExactNumTraits {
  using Real = T;
  using NonInteger = T;
  using Nested = T;
  using Literal = T;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static inline T epsilon() { return T(0); }
  static inline T dummy_precision() { return T(0); }
  static inline int digits10() { return 0; }
  static inline int max_digits10() { return 0; }
};

template <>
struct NumTraits<lsa::Rational> : LsaExactNumTraits<lsa::Rational> {};
template <>
struct NumTraits<lsa::GaussianRational> : LsaExactNumTraits<lsa::GaussianRational> {};
template <class C>
struct NumTraits<lsa::Polynomial<C>> : LsaExactNumTraits<lsa::Polynomial<C>> {};

}  // namespace Eigen
