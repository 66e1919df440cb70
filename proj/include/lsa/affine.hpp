#pragma once

#include "lsa/algebra.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace lsa {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using VectorXld = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

/// v -> A v + b
struct AffineElement {
  MatrixXd linear;
  VectorXd translation;

  static AffineElement identity(int n);
  int dim() const { return static_cast<int>(translation.size()); }
  AffineElement compose(const AffineElement& o) const;  // this o o
  AffineElement inverse() const;
  VectorXd apply(const VectorXd& v) const { return linear * v + translation; }
  /// max |entry| over linear and translation parts
  double distance(const AffineElement& o) const;
};

/// X -> (L_X, X), kept exactly and lowered to double.
struct AffineGenerator {
  Matrix<Rational> linear_exact;
  Vector<Rational> translation_exact;
  MatrixXd linear;
  VectorXd translation;
};

/// Precomputed left multiplications of a certified complete LSA.
class AffineRealization {
 public:
  /// Throws DomainError unless `a` is a complete LSA over Q and the
  /// representation identity holds on all basis pairs.
  explicit AffineRealization(const Algebra<Rational>& a);

  const Algebra<Rational>& algebra() const { return a_; }
  int dim() const { return a_.dim(); }
  AffineGenerator hom(const Vector<Rational>& x) const;
  /// Double-valued generator for sampled coordinates.
  AffineGenerator hom(const VectorXd& x) const;
  /// Orbit of the origin: exp(hom(x)) * 0.
  VectorXd orbit(const VectorXd& x, double tol = 1e-14) const;
  /// Same map in extended precision; used by the Newton solver, whose
  /// targets can have preimages of size 1e4 where doubles cancel badly.
  VectorXld orbit_extended(const VectorXld& x) const;

 private:
  Algebra<Rational> a_;
  std::vector<MatrixXd> left_;  // L_{e_i}
};

/// Lie-representation identity on one basis pair: hom[e_i,e_j] equals the
/// affine commutator ([L_i, L_j], L_i e_j - L_j e_i). Exact.
bool affine_bracket_identity(const Algebra<Rational>& a, int i, int j);

AffineGenerator affine_hom(const Algebra<Rational>& a, const Vector<Rational>& x);

/// exp of [[L, v], [0, 0]]: finite series when L is nilpotent, otherwise
/// scaling and squaring with a Taylor kernel truncated at `tol`.
AffineElement affine_exp(const AffineGenerator& g, double tol);

struct SpecialValues {
  double f, g, h, k;
};
/// f = sin x / x, g = (1 - cos x) / x, h = (x - sin x) / x^2,
/// k = (1 - cos x) / x^2, continuous at 0 (series for |x| < 1e-3).
SpecialValues special_functions(double x);
/// Same functions evaluated directly (no series branch), for cross-checks.
SpecialValues special_functions_direct(double x);

enum class AffineCase { G4, G4st };
std::string case_name(AffineCase c);

struct ClosedFormParams {
  double s = 0, t = 0;
  /// Toggle the (y^2 + z^2) k(x) term in the first translation component:
  /// G4 carries it, G4st does not.
  bool flip_first_term = false;
};

AffineElement closed_form_element(AffineCase c, const ClosedFormParams& p, double x, double y, double z, double w);

struct MembershipFit {
  double x = 0, y = 0, z = 0, w = 0;
  double residual = 0;
  bool rotation_ok = false;
  bool degenerate = false;  // every candidate had f^2 + g^2 <= tol
  int candidates = 0;
};

/// Recovers (x,y,z,w) with closed_form_element(...) closest to e; rotation
/// angles are tried with up to 3 extra turns either way.
MembershipFit closed_form_membership(const AffineElement& e, AffineCase c, const ClosedFormParams& p, double tol);

struct RegimeStats {
  int count = 0;
  double max_residual = 0;
};

struct VerificationReport {
  std::string name;
  int samples = 0;
  std::uint64_t seed = 0;
  double tolerance = 0;
  double max_residual = 0;
  std::map<std::string, RegimeStats> regimes;
  bool pass = false;
  std::vector<std::string> notes;

  void record(const std::string& regime, double residual);
  std::string to_json() const;
};

/// Deterministic generator for sample `index` of a run seeded by `seed`.
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index);

/// The algebra realizing a case: B4 for G4, A4(s,t) for G4st.
Algebra<Rational> case_algebra(AffineCase c, const Rational& s, const Rational& t);

/// Exp-generated group: associativity, inverses, one-parameter property.
VerificationReport exp_group_check(const AffineRealization& r, int n, std::uint64_t seed, double tol);

/// Products of closed-form elements fitted back into the closed form. The
/// residuals are reported by regime; pass means every fit ran.
VerificationReport closed_form_closure_check(AffineCase c, const ClosedFormParams& p, int n, std::uint64_t seed,
                                             double tol);

/// Newton on X -> exp(hom X) * 0 = p for targets in [-3,3]^n, plus
/// injectivity and Jacobian sampling.
VerificationReport simply_transitive_check(const AffineRealization& r, int n, std::uint64_t seed, double tol);

/// Row 4 of exp(hom X) against (s x, Phi_t(x), Psi_t(x)) and the
/// closed-form comparison with the first-component term on and off.
VerificationReport row4_check(const Rational& s, const Rational& t, int n, std::uint64_t seed, double tol);
VerificationReport translation_term_check(AffineCase c, const Rational& s, const Rational& t, int n,
                                          std::uint64_t seed, double tol);

}  // namespace lsa
