#pragma once

#include "lsa/catalog.hpp"
#include "lsa/extension.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lsa {

using Normalizer = std::function<Poly(const Poly&)>;

/// A family of linear maps with polynomial entries in eps, b, c.
/// `square_relations` rewrites name^2 (eps^2 -> 1); `norm_value`, when set,
/// pins b^2 + c^2.
struct ParametricMapFamily {
  std::string label;
  std::vector<std::string> param_names;
  Matrix<Poly> matrix;
  std::vector<std::string> constraints;
  std::map<std::string, Poly> square_relations;
  std::vector<int> sign_values;          // admissible values of eps
  std::optional<Rational> norm_value;    // forced value of b^2 + c^2
  bool derived = false;                  // obtained by forcing, not a closed form given up front
  std::vector<std::string> derivation;   // forcing trail

  Poly normalize(const Poly& p) const;
  Normalizer normalizer() const;
  /// Substitutes eps, b, c. Values may themselves be polynomials.
  Matrix<Poly> member(const Poly& eps, const Poly& b, const Poly& c) const;
  Matrix<Rational> member(int eps, const Rational& b, const Rational& c) const;
};

/// Case 1: automorphisms of A3(0); case 2: of A3(1).
ParametricMapFamily aut_family_a3(int which);

/// Residual polynomials of eta(e_i e_j) - eta(e_i) eta(e_j), one per
/// nonzero entry, after normalization.
std::vector<Poly> automorphism_residuals(const ParametricMapFamily& f, const Algebra<Rational>& k);

struct GroupCheck {
  bool closed = false;     // product of two members is a member
  bool inverse = false;    // member(eps, b, -eps c) * member = diag(1, r, r)
  std::string detail;
};
GroupCheck family_group_check(const ParametricMapFamily& f);

/// (mu, eta).g (x, y) = mu g(eta x, eta y).
template <class S>
Bilinear<S> cocycle_pullback(const S& mu, const Matrix<S>& eta, const Bilinear<S>& g) {
  const int n = g.base_dim(), m = g.value_dim();
  if (eta.rows() != n || eta.cols() != n) throw DimensionError("cocycle_pullback: eta has the wrong shape");
  if (is_zero(determinant(eta))) throw DomainError("cocycle_pullback: eta is singular");
  Bilinear<S> out(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vector<S> v = g.apply(Vector<S>(eta.col(i)), Vector<S>(eta.col(j)));
      for (int a = 0; a < m; ++a) out.at(i, j, a) = mu * v(a);
    }
  return out;
}

/// Inverse of a polynomial matrix whose determinant normalizes to a nonzero
/// constant (Faddeev-LeVerrier).
Matrix<Poly> inverse_normalized(const Matrix<Poly>& a, const Normalizer& norm);

/// Coordinates on Z2 for a trivial bimodule: cohomology representatives
/// followed by a basis of B2 given as delta1 of explicit preimages.
struct CocycleFrame {
  Algebra<Rational> base;
  int fiber_dim = 1;
  std::vector<Bilinear<Rational>> representatives;
  std::vector<Matrix<Rational>> preimages;
  Matrix<Rational> frame;         // columns: representatives, then coboundaries
  Matrix<Rational> left_inverse;  // left_inverse * frame = I

  explicit CocycleFrame(const Algebra<Rational>& k, int m = 1);
  int h2_dim() const { return static_cast<int>(representatives.size()); }
  /// Class coordinates and a primitive h with v = sum c_k rep_k + delta1 h,
  /// or nullopt if v is not a cocycle.
  struct Split {
    Vector<Poly> classes;
    Matrix<Poly> h;
  };
  std::optional<Split> split(const Bilinear<Poly>& v, const Normalizer& norm) const;
  std::optional<Split> split(const Bilinear<Rational>& v) const;
};

/// psi(x, a) = (eta x, mu a + h x) from the extension by g onto the
/// extension by g'. mu, eps, r, b, c are the solver's parameters: the family
/// member eta_f = member(eps, b, c) satisfies mu g(eta_f x, eta_f y) =
/// g'(x, y) + delta1 k(x, y), and eta = eta_f^-1. When (b, c) is not
/// rational, b and c stay symbolic under c^2 -> r - b^2.
struct IsoWitness {
  Rational mu{1};
  int eps = 1;
  Rational r{1};
  std::optional<Rational> b, c;
  Matrix<Poly> eta;
  Matrix<Poly> h;
  std::map<std::string, Poly> relations;

  bool symbolic() const { return !b.has_value(); }
  Poly normalize(const Poly& p) const;
  Matrix<Poly> psi() const;
  Matrix<Rational> psi_rational() const;  // throws if symbolic
  std::string summary() const;
};

struct WitnessSearch {
  std::optional<IsoWitness> witness;
  std::vector<std::string> trail;  // elimination steps, one per line
  bool verified = false;           // check_morphism passed with require_iso
  std::string verification;        // morphism witness when it fails
};

/// Searches the family for (mu, eta) carrying the class of g to that of g'.
/// Both cocycles live on k with a trivial one-dimensional fiber.
WitnessSearch extension_iso_witness(const Algebra<Rational>& k, const Bilinear<Rational>& g,
                                    const Bilinear<Rational>& g_prime, const ParametricMapFamily& family);

/// Assembles and checks the witness for a given family member.
WitnessSearch witness_for_member(const Algebra<Rational>& k, const Bilinear<Rational>& g,
                                 const Bilinear<Rational>& g_prime, const ParametricMapFamily& family,
                                 const Rational& mu, int eps, const Rational& b, const Rational& c);

/// g = alpha E11 + beta (E22 + E33) + gamma (E23 - E32) on A3(0).
Bilinear<Rational> a3_cocycle(const Rational& alpha, const Rational& beta, const Rational& gamma);

struct A4Normalization {
  Rational s, t;
  int eps = 1;
  WitnessSearch step1;           // A4abc(alpha,beta,gamma) -> A4abc(eps alpha/gamma, eps beta/gamma, 1)
  Matrix<Rational> step2;        // -> A4(s,t)
  Matrix<Rational> composite;    // A4abc(alpha,beta,gamma) -> A4(s,t)
  bool verified = false;
};

A4Normalization a4_normalize(const Rational& alpha, const Rational& beta, const Rational& gamma, int eps = 1);

struct ConjugacyReport {
  bool iso = false;
  WitnessSearch search;
  bool claimed_criterion = false;  // (s',t') = (a s, +-t), a != 0
  bool derived_criterion = false;  // (s',t') = (mu s, sign(mu) t), mu != 0
  std::string claimed_statement;
  std::string derived_statement;
  std::string note;
};

ConjugacyReport a4_conjugate(const Rational& s, const Rational& t, const Rational& s_prime, const Rational& t_prime);

struct ClassInvariant {
  int product_span_dim = 0;
  int translation_dim = 0;
  bool operator==(const ClassInvariant&) const = default;
};

template <class S>
ClassInvariant e2_class_invariant(const Algebra<S>& a) {
  return {static_cast<int>(product_span(a).dim()), static_cast<int>(translation_ideal(a).dim())};
}

/// Rational (b, c) with b^2 + c^2 = r, when one exists with small height.
std::optional<std::pair<Rational, Rational>> two_squares(const Rational& r);

}  // namespace lsa
