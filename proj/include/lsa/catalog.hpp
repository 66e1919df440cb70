#pragma once

#include "lsa/algebra.hpp"

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lsa {

namespace build {

/// e_i * e_j = sum coef*e_k with one-based indices.
template <class S>
void put(Algebra<S>& a, int i, int j, std::initializer_list<std::pair<int, S>> terms) {
  Vector<S> v = zero_vector<S>(a.dim());
  for (const auto& [k, c] : terms) v(k - 1) += c;
  if (a.kind() == Kind::Lie)
    a.set_bracket(i - 1, j - 1, v);
  else
    a.set_product(i - 1, j - 1, v);
}

template <class S>
S half() {
  return S(Rational(1, 2));
}

/// Oscillator algebra in the introduction basis: [e1,e2]=e3, [e4,e1]=e2, [e4,e2]=-e1.
template <class S>
Algebra<S> O4() {
  Algebra<S> g("O4", Kind::Lie, 4);
  put<S>(g, 1, 2, {{3, S(1)}});
  put<S>(g, 4, 1, {{2, S(1)}});
  put<S>(g, 4, 2, {{1, S(-1)}});
  return g;
}

/// Oscillator algebra in the basis of the classification: [e1,e2]=e3,
/// [e1,e3]=-e2, [e2,e3]=e4.
template <class S>
Algebra<S> O4T2() {
  Algebra<S> g("O4T2", Kind::Lie, 4);
  put<S>(g, 1, 2, {{3, S(1)}});
  put<S>(g, 1, 3, {{2, S(-1)}});
  put<S>(g, 2, 3, {{4, S(1)}});
  return g;
}

/// [e1,e2]=e3, [e4,e1]=lambda e2, [e4,e2]=-lambda e1.
template <class S>
Algebra<S> OscillatorLie(const S& lambda) {
  Algebra<S> g("OscillatorLie", Kind::Lie, 4);
  put<S>(g, 1, 2, {{3, S(1)}});
  put<S>(g, 4, 1, {{2, lambda}});
  put<S>(g, 4, 2, {{1, -lambda}});
  return g;
}

template <class S>
Algebra<S> H3() {
  Algebra<S> g("H3", Kind::Lie, 3);
  put<S>(g, 1, 2, {{3, S(1)}});
  return g;
}

/// Euclidean motions of the plane: [e1,e2]=e3, [e1,e3]=-e2.
template <class S>
Algebra<S> E2() {
  Algebra<S> g("E2", Kind::Lie, 3);
  put<S>(g, 1, 2, {{3, S(1)}});
  put<S>(g, 1, 3, {{2, S(-1)}});
  return g;
}

template <class S>
Algebra<S> Abelian(int n) {
  return Algebra<S>("Abelian" + std::to_string(n), Kind::Lie, n);
}

template <class S>
Algebra<S> Trivial(int n) {
  return Algebra<S>("Trivial" + std::to_string(n), Kind::LSA, n);
}

template <class S>
Algebra<S> I0() {
  return Algebra<S>("I0", Kind::LSA, 1);
}

template <class S>
Algebra<S> A4(const S& s, const S& t) {
  Algebra<S> a("A4", Kind::LSA, 4);
  put<S>(a, 1, 1, {{4, s}});
  put<S>(a, 2, 2, {{4, t}});
  put<S>(a, 3, 3, {{4, t}});
  put<S>(a, 1, 2, {{3, S(1)}});
  put<S>(a, 1, 3, {{2, S(-1)}});
  put<S>(a, 2, 3, {{4, half<S>()}});
  put<S>(a, 3, 2, {{4, -half<S>()}});
  return a;
}

/// Central extension of A3(0) before normalization.
template <class S>
Algebra<S> A4abc(const S& alpha, const S& beta, const S& gamma) {
  Algebra<S> a("A4abc", Kind::LSA, 4);
  put<S>(a, 1, 1, {{4, alpha}});
  put<S>(a, 2, 2, {{4, beta}});
  put<S>(a, 3, 3, {{4, beta}});
  put<S>(a, 1, 2, {{3, S(1)}});
  put<S>(a, 1, 3, {{2, S(-1)}});
  put<S>(a, 2, 3, {{4, gamma}});
  put<S>(a, 3, 2, {{4, -gamma}});
  return a;
}

template <class S>
Algebra<S> B4() {
  Algebra<S> a("B4", Kind::LSA, 4);
  put<S>(a, 1, 2, {{3, S(1)}});
  put<S>(a, 1, 3, {{2, S(-1)}});
  put<S>(a, 2, 2, {{1, S(1)}});
  put<S>(a, 3, 3, {{1, S(1)}});
  put<S>(a, 2, 3, {{4, half<S>()}});
  put<S>(a, 3, 2, {{4, -half<S>()}});
  return a;
}

/// Central extension of A3(1) by the gamma class.
template <class S>
Algebra<S> B4bis(const S& gamma) {
  Algebra<S> a("B4bis", Kind::LSA, 4);
  put<S>(a, 1, 2, {{3, S(1)}});
  put<S>(a, 1, 3, {{2, S(-1)}});
  put<S>(a, 2, 2, {{1, S(1)}});
  put<S>(a, 3, 3, {{1, S(1)}});
  put<S>(a, 2, 3, {{4, gamma}});
  put<S>(a, 3, 2, {{4, -gamma}});
  return a;
}

/// Heisenberg LSA, first class.
template <class S>
Algebra<S> H3LSA_i(const S& p, const S& q) {
  Algebra<S> a("H3LSA_i", Kind::LSA, 3);
  put<S>(a, 1, 1, {{3, p}});
  put<S>(a, 2, 2, {{3, q}});
  put<S>(a, 1, 2, {{3, half<S>()}});
  put<S>(a, 2, 1, {{3, -half<S>()}});
  return a;
}

/// Heisenberg LSA, second class.
template <class S>
Algebra<S> H3LSA_ii(const S& m) {
  Algebra<S> a("H3LSA_ii", Kind::LSA, 3);
  put<S>(a, 1, 2, {{3, m}});
  put<S>(a, 2, 1, {{3, m - S(1)}});
  put<S>(a, 2, 2, {{1, S(1)}});
  return a;
}

/// Complete LSA on E(2): e1e2=e3, e1e3=-e2, e2e2=e3e3=eps e1.
template <class S>
Algebra<S> A3(const S& eps) {
  Algebra<S> a("A3", Kind::LSA, 3);
  put<S>(a, 1, 2, {{3, S(1)}});
  put<S>(a, 1, 3, {{2, S(-1)}});
  put<S>(a, 2, 2, {{1, eps}});
  put<S>(a, 3, 3, {{1, eps}});
  return a;
}

/// Two-dimensional complex simple LSA: e1e1=2e1, e1e2=e2, e2e2=e1.
inline Algebra<GaussianRational> B2c() {
  using G = GaussianRational;
  Algebra<G> a("B2c", Kind::LSA, 2);
  put<G>(a, 1, 1, {{1, G(2)}});
  put<G>(a, 1, 2, {{2, G(1)}});
  put<G>(a, 2, 2, {{1, G(1)}});
  return a;
}

/// Four-dimensional complex simple complete LSA.
inline Algebra<GaussianRational> B4c() {
  using G = GaussianRational;
  Algebra<G> a("B4c", Kind::LSA, 4);
  put<G>(a, 1, 2, {{4, G(1)}});
  put<G>(a, 2, 1, {{4, G(1)}});
  put<G>(a, 2, 3, {{1, G(2)}});
  put<G>(a, 3, 2, {{1, G(1)}});
  put<G>(a, 4, 1, {{1, G(1)}});
  put<G>(a, 4, 2, {{2, G(-1)}});
  put<G>(a, 4, 3, {{3, G(2)}});
  return a;
}

/// Lie algebra of B4c: [e2,e3]=[e4,e1]=e1, [e2,e4]=e2, [e3,e4]=-2e3.
inline Algebra<GaussianRational> G4c() {
  using G = GaussianRational;
  Algebra<G> g("G4c", Kind::Lie, 4);
  put<G>(g, 2, 3, {{1, G(1)}});
  put<G>(g, 4, 1, {{1, G(1)}});
  put<G>(g, 2, 4, {{2, G(1)}});
  put<G>(g, 3, 4, {{3, G(-2)}});
  return g;
}

/// Relabeling e4->e1, e1->e2, e2->e3, e3->e4 from the introduction basis
/// of O4 to the classification basis (column j = image of e_j).
template <class S>
Matrix<S> O4_relabeling() {
  Matrix<S> f = zero_matrix<S>(4, 4);
  f(1, 0) = S(1);
  f(2, 1) = S(1);
  f(3, 2) = S(1);
  f(0, 3) = S(1);
  return f;
}

/// e4 -> 2 e4 scaling in the normalization of A4(alpha,beta,1) to A4(s,t).
template <class S>
Matrix<S> A4_scaling() {
  Matrix<S> f = identity_matrix<S>(4);
  f(3, 3) = half<S>();
  return f;
}

}  // namespace build

/// Known properties used as regression oracles, evaluated at the entry's
/// sample parameters.
struct ExpectedRecord {
  std::optional<bool> complete;
  std::optional<bool> novikov;
  std::optional<LieInvariants> lie;
  std::optional<int> translation_dim;
  std::optional<int> lsa_center_dim;
};

struct CatalogEntry {
  std::string name;
  Kind kind;
  std::string ring;  // "rational" or "gaussian"
  std::vector<std::string> params;
  std::map<std::string, std::string> sample;
  std::string description;
  ExpectedRecord expected;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(const std::string& name);

/// Builds a catalog algebra. Binding values use the scalar syntax; any
/// identifier in them is a free parameter, giving a polynomial algebra.
/// Missing bindings are an error. The kind identity is certified on the
/// result and an IdentityFailure is thrown if it does not hold.
AnyAlgebra named_algebra(const std::string& name, const std::map<std::string, std::string>& bindings);

/// Binds every parameter to itself, giving the fully symbolic algebra.
std::map<std::string, std::string> symbolic_bindings(const CatalogEntry& e);

}  // namespace lsa
