#pragma once

#include "lsa/errors.hpp"
#include "lsa/matrix.hpp"
#include "lsa/scalar.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace lsa {

enum class Kind { LSA, Lie, Bilinear };

inline const char* kind_name(Kind k) {
  switch (k) {
    case Kind::LSA: return "lsa";
    case Kind::Lie: return "lie";
    case Kind::Bilinear: return "bilinear";
  }
  return "?";
}

/// Finite-dimensional algebra given by structure constants:
/// e_i * e_j = sum_k c(i,j,k) e_k (the bracket for Lie kind). Indices are
/// zero-based in code and one-based in every printed form.
template <class S>
class Algebra {
public:
  using Scalar = S;

  Algebra() = default;
  Algebra(std::string name, Kind kind, int dim, std::vector<std::string> params = {})
      : name_(std::move(name)), kind_(kind), dim_(dim), params_(std::move(params)),
        c_(static_cast<std::size_t>(dim) * dim * dim, S(0)) {
    if (dim < 0) throw DimensionError("negative dimension");
    for (int i = 1; i <= dim; ++i) basis_names_.push_back("e" + std::to_string(i));
  }

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  Kind kind() const { return kind_; }
  void set_kind(Kind k) { kind_ = k; }
  int dim() const { return dim_; }
  const std::vector<std::string>& params() const { return params_; }
  void set_params(std::vector<std::string> p) { params_ = std::move(p); }
  const std::vector<std::string>& basis_names() const { return basis_names_; }

  S& at(int i, int j, int k) { return c_[index(i, j, k)]; }
  const S& at(int i, int j, int k) const { return c_[index(i, j, k)]; }

  /// Coordinates of e_i * e_j.
  Vector<S> product(int i, int j) const {
    Vector<S> v(dim_);
    for (int k = 0; k < dim_; ++k) v(k) = at(i, j, k);
    return v;
  }

  void set_product(int i, int j, const Vector<S>& v) {
    if (v.size() != dim_) throw DimensionError("product vector length differs from algebra dimension");
    for (int k = 0; k < dim_; ++k) at(i, j, k) = v(k);
  }

  /// Sets e_i*e_j and, for Lie kind, e_j*e_i = -e_i*e_j.
  void set_bracket(int i, int j, const Vector<S>& v) {
    set_product(i, j, v);
    set_product(j, i, Vector<S>(-v));
  }

  const std::vector<S>& tensor() const { return c_; }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.dim_ == b.dim_ && a.kind_ == b.kind_ && a.c_ == b.c_;
  }

private:
  std::size_t index(int i, int j, int k) const {
    if (i < 0 || j < 0 || k < 0 || i >= dim_ || j >= dim_ || k >= dim_)
      throw DimensionError("basis index out of range");
    return (static_cast<std::size_t>(i) * dim_ + j) * dim_ + k;
  }

  std::string name_;
  Kind kind_ = Kind::LSA;
  int dim_ = 0;
  std::vector<std::string> params_;
  std::vector<std::string> basis_names_;
  std::vector<S> c_;
};

using AnyAlgebra = std::variant<Algebra<Rational>, Algebra<GaussianRational>, Algebra<Poly>, Algebra<GaussianPoly>>;

template <class S>
const char* ring_name() {
  return ScalarTraits<S>::ring_name;
}

/// Bilinear expansion x*y through the structure constants.
template <class S>
Vector<S> multiply(const Algebra<S>& a, const Vector<S>& x, const Vector<S>& y) {
  const int n = a.dim();
  if (x.size() != n || y.size() != n) throw DimensionError("multiply: element length differs from algebra dimension");
  Vector<S> out = zero_vector<S>(n);
  for (int i = 0; i < n; ++i) {
    if (is_zero(x(i))) continue;
    for (int j = 0; j < n; ++j) {
      if (is_zero(y(j))) continue;
      const S f = x(i) * y(j);
      for (int k = 0; k < n; ++k)
        if (!is_zero(a.at(i, j, k))) out(k) += f * a.at(i, j, k);
    }
  }
  return out;
}

template <class S>
Vector<S> basis_element(const Algebra<S>& a, int i) {
  return unit_vector<S>(a.dim(), i);
}

/// Outcome of an identity check over basis triples; on failure records the
/// first offending triple (zero-based) and both sides.
template <class S>
struct IdentityVerdict {
  bool pass = true;
  std::array<int, 3> triple{-1, -1, -1};
  Vector<S> lhs;
  Vector<S> rhs;

  std::string witness() const {
    if (pass) return "";
    return "(e" + std::to_string(triple[0] + 1) + ",e" + std::to_string(triple[1] + 1) + ",e" +
           std::to_string(triple[2] + 1) + "): " + vector_to_string(lhs) + " vs " + vector_to_string(rhs);
  }
};

/// Associator (x,y,z) = (xy)z - x(yz).
template <class S>
Vector<S> associator(const Algebra<S>& a, const Vector<S>& x, const Vector<S>& y, const Vector<S>& z) {
  return multiply(a, multiply(a, x, y), z) - multiply(a, x, multiply(a, y, z));
}

/// Left-symmetry (x,y,z) = (y,x,z) on all basis triples.
template <class S>
IdentityVerdict<S> check_left_symmetric(const Algebra<S>& a) {
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const auto ei = basis_element(a, i), ej = basis_element(a, j), ek = basis_element(a, k);
        Vector<S> l = associator(a, ei, ej, ek);
        Vector<S> r = associator(a, ej, ei, ek);
        if (!vectors_equal(l, r)) return {false, {i, j, k}, l, r};
      }
  return {};
}

/// Antisymmetry of the product on basis pairs (reported as triple (i,j,-1)).
template <class S>
IdentityVerdict<S> check_antisymmetric(const Algebra<S>& a) {
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Vector<S> l = a.product(i, j);
      Vector<S> r = -a.product(j, i);
      if (!vectors_equal(l, r)) return {false, {i, j, -1}, l, r};
    }
  return {};
}

/// Jacobi identity [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 on basis triples.
template <class S>
IdentityVerdict<S> check_jacobi(const Algebra<S>& a) {
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const auto ei = basis_element(a, i), ej = basis_element(a, j), ek = basis_element(a, k);
        Vector<S> s = multiply(a, a.product(i, j), ek) + multiply(a, a.product(j, k), ei) +
                      multiply(a, a.product(k, i), ej);
        if (!is_zero_vector(s)) return {false, {i, j, k}, s, zero_vector<S>(n)};
      }
  return {};
}

/// Lie kind: antisymmetry then Jacobi. LSA/Bilinear kind: left-symmetry.
template <class S>
IdentityVerdict<S> check_kind_identity(const Algebra<S>& a) {
  if (a.kind() == Kind::Lie) {
    auto v = check_antisymmetric(a);
    if (!v.pass) return v;
    return check_jacobi(a);
  }
  return check_left_symmetric(a);
}

/// Commutator algebra [x,y] = xy - yx.
template <class S>
Algebra<S> associated_lie(const Algebra<S>& a) {
  if (a.kind() == Kind::Lie) throw DomainError("associated_lie: input is already a Lie algebra");
  auto v = check_left_symmetric(a);
  if (!v.pass) throw IdentityFailure("associated_lie: '" + a.name() + "' is not left-symmetric at " + v.witness());
  Algebra<S> g("Lie(" + a.name() + ")", Kind::Lie, a.dim(), a.params());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k) g.at(i, j, k) = a.at(i, j, k) - a.at(j, i, k);
  return g;
}

/// Lie bracket of an LSA or Lie algebra applied to elements.
template <class S>
Vector<S> bracket(const Algebra<S>& a, const Vector<S>& x, const Vector<S>& y) {
  if (a.kind() == Kind::Lie) return multiply(a, x, y);
  return multiply(a, x, y) - multiply(a, y, x);
}

enum class Side { Left, Right };

/// L_x (column j = x*e_j) or R_x (column j = e_j*x).
template <class S>
Matrix<S> operator_matrix(const Algebra<S>& a, Side side, const Vector<S>& x) {
  const int n = a.dim();
  if (x.size() != n) throw DimensionError("operator_matrix: element length differs from algebra dimension");
  Matrix<S> m = zero_matrix<S>(n, n);
  for (int j = 0; j < n; ++j) {
    const auto ej = basis_element(a, j);
    m.col(j) = side == Side::Left ? multiply(a, x, ej) : multiply(a, ej, x);
  }
  return m;
}

/// Same structure constants over a wider scalar ring (Rational -> Poly etc.).
template <class T, class S>
Algebra<T> convert_algebra(const Algebra<S>& a) {
  Algebra<T> out(a.name(), a.kind(), a.dim(), a.params());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k) out.at(i, j, k) = T(a.at(i, j, k));
  return out;
}

/// Fresh generic-element variable names xi1..xin that avoid the parameters.
inline std::vector<std::string> generic_variable_names(int n, const std::vector<std::string>& avoid) {
  std::string stem = "xi";
  auto clash = [&](const std::string& s) {
    for (const auto& p : avoid)
      if (p.rfind(s, 0) == 0) return true;
    return false;
  };
  while (clash(stem)) stem += "_";
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

/// Generic element sum xi_i e_i over the polynomial ring of S.
template <class S>
Vector<PolyOver<S>> generic_element(const Algebra<S>& a, std::vector<std::string>* names = nullptr) {
  auto vars = generic_variable_names(a.dim(), a.params());
  Vector<PolyOver<S>> x(a.dim());
  for (int i = 0; i < a.dim(); ++i) x(i) = PolyOver<S>::variable(vars[static_cast<std::size_t>(i)]);
  if (names) *names = vars;
  return x;
}

template <class S>
struct CompletenessVerdict {
  bool pass = true;
  /// tr(R_x^k), k = 1..dim, for the generic x.
  std::vector<PolyOver<S>> generic_traces;
  std::vector<std::string> variables;
  /// Element with a nonzero trace power when pass is false.
  std::optional<Vector<S>> witness;
  std::vector<S> witness_traces;
};

/// Completeness: every R_x nilpotent, tested by the vanishing of all power
/// traces of the generic R_x (characteristic zero).
template <class S>
CompletenessVerdict<S> is_complete(const Algebra<S>& a) {
  using P = PolyOver<S>;
  CompletenessVerdict<S> out;
  Algebra<P> lifted = convert_algebra<P>(a);
  Vector<P> x = generic_element(a, &out.variables);
  Matrix<P> r = operator_matrix(lifted, Side::Right, x);
  out.generic_traces = power_traces(r, a.dim());
  for (const auto& t : out.generic_traces)
    if (!is_zero(t)) out.pass = false;
  if (out.pass) return out;

  auto traces_at = [&](const Vector<S>& v) { return power_traces(operator_matrix(a, Side::Right, v), a.dim()); };
  auto nonzero = [](const std::vector<S>& ts) {
    for (const auto& t : ts)
      if (!is_zero(t)) return true;
    return false;
  };
  for (int i = 0; i < a.dim(); ++i) {
    Vector<S> v = basis_element(a, i);
    auto ts = traces_at(v);
    if (nonzero(ts)) {
      out.witness = v;
      out.witness_traces = ts;
      return out;
    }
  }
  // Small integer grid; a nonzero polynomial cannot vanish on all of it
  // once the grid is wider than its degree in each variable.
  const int n = a.dim();
  const int radius = n + 1;
  std::vector<int> coords(static_cast<std::size_t>(n), -radius);
  for (;;) {
    Vector<S> v(n);
    for (int i = 0; i < n; ++i) v(i) = S(coords[static_cast<std::size_t>(i)]);
    auto ts = traces_at(v);
    if (nonzero(ts)) {
      out.witness = v;
      out.witness_traces = ts;
      return out;
    }
    int p = 0;
    while (p < n && ++coords[static_cast<std::size_t>(p)] > radius) coords[static_cast<std::size_t>(p++)] = -radius;
    if (p == n) break;
  }
  return out;
}

namespace detail {
template <class S>
void require_field_algebra(const Algebra<S>& a, const char* what) {
  if constexpr (!ExactField<S>)
    throw RingError(std::string(what) + ": '" + a.name() + "' has symbolic parameters; specialize them first");
}

/// Rows are the linear conditions on x collected from `blocks`; each block
/// maps x to a dim-length vector linearly (given by its matrix).
template <class S>
Subspace<S> common_kernel(const std::vector<Matrix<S>>& blocks, Index cols) {
  Index rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  Matrix<S> m = zero_matrix<S>(rows, cols);
  Index r = 0;
  for (const auto& b : blocks) {
    m.middleRows(r, b.rows()) = b;
    r += b.rows();
  }
  return kernel(m);
}

/// Matrix of x -> x*e_j (left=true) or e_j*x, rows indexed by output coordinate.
template <class S>
Matrix<S> product_with_basis(const Algebra<S>& a, int j, bool x_on_left) {
  const int n = a.dim();
  Matrix<S> m = zero_matrix<S>(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) m(k, i) = x_on_left ? a.at(i, j, k) : a.at(j, i, k);
  return m;
}
}  // namespace detail

/// T(A) = {x : L_x = 0}.
template <class S>
Subspace<S> translation_ideal(const Algebra<S>& a) {
  detail::require_field_algebra(a, "translation_ideal");
  std::vector<Matrix<S>> blocks;
  for (int j = 0; j < a.dim(); ++j) blocks.push_back(detail::product_with_basis(a, j, true));
  return detail::common_kernel(blocks, a.dim());
}

/// {x : x*y = y*x = 0 for all y}.
template <class S>
Subspace<S> lsa_center(const Algebra<S>& a) {
  detail::require_field_algebra(a, "lsa_center");
  std::vector<Matrix<S>> blocks;
  for (int j = 0; j < a.dim(); ++j) {
    blocks.push_back(detail::product_with_basis(a, j, true));
    blocks.push_back(detail::product_with_basis(a, j, false));
  }
  return detail::common_kernel(blocks, a.dim());
}

/// Center of a Lie algebra (or of the commutator of an LSA).
template <class S>
Subspace<S> lie_center(const Algebra<S>& g) {
  detail::require_field_algebra(g, "lie_center");
  const int n = g.dim();
  std::vector<Matrix<S>> blocks;
  for (int j = 0; j < n; ++j) {
    Matrix<S> m = zero_matrix<S>(n, n);
    for (int i = 0; i < n; ++i) m.col(i) = bracket(g, basis_element(g, i), basis_element(g, j));
    blocks.push_back(m);
  }
  return detail::common_kernel(blocks, n);
}

/// Subspace closed under left and right multiplication by A.
template <class S>
bool is_two_sided_ideal(const Algebra<S>& a, const Subspace<S>& s) {
  for (Index v = 0; v < s.dim(); ++v)
    for (int j = 0; j < a.dim(); ++j) {
      const auto ej = basis_element(a, j);
      if (!s.contains(multiply(a, s.basis_vector(v), ej))) return false;
      if (!s.contains(multiply(a, ej, s.basis_vector(v)))) return false;
    }
  return true;
}

/// Smallest two-sided ideal containing v.
template <class S>
Subspace<S> ideal_closure(const Algebra<S>& a, const Vector<S>& v) {
  detail::require_field_algebra(a, "ideal_closure");
  Subspace<S> s = Subspace<S>::span(std::vector<Vector<S>>{v}, a.dim());
  for (;;) {
    std::vector<Vector<S>> gens = s.vectors();
    for (Index i = 0; i < s.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j) {
        gens.push_back(multiply(a, s.basis_vector(i), basis_element(a, j)));
        gens.push_back(multiply(a, basis_element(a, j), s.basis_vector(i)));
      }
    Subspace<S> next = Subspace<S>::span(gens, a.dim());
    if (next == s) return s;
    s = next;
  }
}

/// [g, s] contained in s.
template <class S>
bool lie_ideal_check(const Algebra<S>& g, const Subspace<S>& s) {
  for (Index v = 0; v < s.dim(); ++v)
    for (int j = 0; j < g.dim(); ++j)
      if (!s.contains(bracket(g, basis_element(g, j), s.basis_vector(v)))) return false;
  return true;
}

/// span{[x,y] : x in a, y in b}.
template <class S>
Subspace<S> bracket_span(const Algebra<S>& g, const Subspace<S>& a, const Subspace<S>& b) {
  std::vector<Vector<S>> gens;
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < b.dim(); ++j) gens.push_back(bracket(g, a.basis_vector(i), b.basis_vector(j)));
  return Subspace<S>::span(gens, g.dim());
}

struct LieInvariants {
  std::vector<int> derived_series;        // dims of D^0 = g, D^1, ... until stable
  std::vector<int> lower_central_series;  // dims of C^0 = g, C^1, ... until stable
  int center_dim = 0;
  bool solvable = false;
  bool nilpotent = false;

  friend bool operator==(const LieInvariants&, const LieInvariants&) = default;
};

template <class S>
LieInvariants lie_invariants(const Algebra<S>& g) {
  detail::require_field_algebra(g, "lie_invariants");
  LieInvariants inv;
  const auto full = Subspace<S>::full(g.dim());
  Subspace<S> d = full;
  inv.derived_series.push_back(static_cast<int>(d.dim()));
  for (;;) {
    Subspace<S> next = bracket_span(g, d, d);
    if (next.dim() == d.dim()) break;
    d = next;
    inv.derived_series.push_back(static_cast<int>(d.dim()));
  }
  Subspace<S> c = full;
  inv.lower_central_series.push_back(static_cast<int>(c.dim()));
  for (;;) {
    Subspace<S> next = bracket_span(g, full, c);
    if (next.dim() == c.dim()) break;
    c = next;
    inv.lower_central_series.push_back(static_cast<int>(c.dim()));
  }
  inv.center_dim = static_cast<int>(lie_center(g).dim());
  inv.solvable = inv.derived_series.back() == 0;
  inv.nilpotent = inv.lower_central_series.back() == 0;
  return inv;
}

/// One-dimensional ideals come in families: every line of a joint eigenspace
/// W of all ad(e_i) is an ideal. `dim` is dim W (1 means a single ideal).
template <class S>
struct IdealScan {
  std::vector<Subspace<S>> line_families;
  /// The codimension-one ideals are exactly the hyperplanes containing
  /// [g,g]; there are none if [g,g] = g, one if codim [g,g] = 1, otherwise a
  /// projective family of dimension codim - 1.
  Subspace<S> derived;
  int codim_derived = 0;
  std::vector<Subspace<S>> hyperplanes;  // filled when codim_derived == 1
  std::vector<std::string> notes;
};

namespace detail {

/// Rational roots of a polynomial with rational coefficients, given by
/// coefficients c[0] + c[1] t + ... Uses the rational root theorem.
std::vector<Rational> rational_roots(std::vector<Rational> coeffs);

/// Characteristic polynomial coefficients of a square rational matrix
/// (Faddeev-LeVerrier), lowest degree first, monic.
std::vector<Rational> characteristic_polynomial(const Matrix<Rational>& m);

}  // namespace detail

/// Dimension-one and codimension-one ideals of a Lie algebra over Q.
IdealScan<Rational> small_ideal_scan(const Algebra<Rational>& g);

/// Derivations D with D(e_i*e_j) = D(e_i)*e_j + e_i*D(e_j). Coordinates are
/// row-major: entry (p,q) of D at index p*n+q, with column q = D(e_q).
template <class S>
Subspace<S> derivations(const Algebra<S>& a) {
  detail::require_field_algebra(a, "derivations");
  const int n = a.dim();
  const int nn = n * n;
  Matrix<S> m = zero_matrix<S>(static_cast<Index>(n) * n * n, nn);
  auto col = [n](int p, int q) { return static_cast<Index>(p * n + q); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Index row = (static_cast<Index>(i) * n + j) * n + k;
        for (int l = 0; l < n; ++l) {
          if (!is_zero(a.at(i, j, l))) m(row, col(k, l)) += a.at(i, j, l);  // D(e_i e_j)
          if (!is_zero(a.at(l, j, k))) m(row, col(l, i)) -= a.at(l, j, k);  // D(e_i) e_j
          if (!is_zero(a.at(i, l, k))) m(row, col(l, j)) -= a.at(i, l, k);  // e_i D(e_j)
        }
      }
  return kernel(m);
}

template <class S>
Matrix<S> coords_to_map(const Vector<S>& v, int n) {
  Matrix<S> d(n, n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) d(p, q) = v(p * n + q);
  return d;
}

/// Leibniz rule on every basis pair.
template <class S>
bool is_derivation(const Algebra<S>& a, const Matrix<S>& d) {
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      const auto ei = basis_element(a, i), ej = basis_element(a, j);
      Vector<S> l = mul(d, a.product(i, j));
      Vector<S> r = multiply(a, mul(d, ei), ej) + multiply(a, ei, mul(d, ej));
      if (!vectors_equal(l, r)) return false;
    }
  return true;
}

/// (xy)z = (xz)y on basis triples.
template <class S>
IdentityVerdict<S> is_novikov(const Algebra<S>& a) {
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vector<S> l = multiply(a, a.product(i, j), basis_element(a, k));
        Vector<S> r = multiply(a, a.product(i, k), basis_element(a, j));
        if (!vectors_equal(l, r)) return {false, {i, j, k}, l, r};
      }
  return {};
}

template <class S>
struct ComplexOf;
template <>
struct ComplexOf<Rational> {
  using type = GaussianRational;
};
template <>
struct ComplexOf<Poly> {
  using type = GaussianPoly;
};

/// Complexification: same structure constants read over Q(i).
template <class S>
Algebra<typename ComplexOf<S>::type> complexify(const Algebra<S>& a) {
  using C = typename ComplexOf<S>::type;
  Algebra<C> out(a.name() + "^C", a.kind(), a.dim(), a.params());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k) {
        if constexpr (std::is_same_v<S, Rational>)
          out.at(i, j, k) = C(a.at(i, j, k));
        else {
          C p;
          for (const auto& [m, c] : a.at(i, j, k).terms()) p = p + C(m, GaussianRational(c));
          out.at(i, j, k) = p;
        }
      }
  return out;
}

template <class S>
struct MorphismVerdict {
  bool pass = true;
  bool invertible = true;
  std::array<int, 2> pair{-1, -1};
  Vector<S> lhs;
  Vector<S> rhs;
  S det{0};

  std::string witness() const {
    if (pass) return "";
    if (pair[0] < 0) return "map is not invertible";
    return "(e" + std::to_string(pair[0] + 1) + ",e" + std::to_string(pair[1] + 1) + "): " + vector_to_string(lhs) +
           " vs " + vector_to_string(rhs);
  }
};

/// f(e_i o e_j) = f(e_i) o f(e_j) on all pairs, f given by its matrix
/// (column j = f(e_j)). `normalize` reduces polynomial residues modulo
/// relations among the map's parameters before the zero test.
template <class S>
MorphismVerdict<S> check_morphism(const Matrix<S>& f, const Algebra<S>& a, const Algebra<S>& b, bool require_iso,
                                  const std::function<S(const S&)>& normalize = {}) {
  if (f.rows() != b.dim() || f.cols() != a.dim()) throw DimensionError("check_morphism: map shape does not match the algebras");
  auto norm = [&](const S& s) { return normalize ? normalize(s) : s; };
  MorphismVerdict<S> out;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      Vector<S> l = mul(f, a.product(i, j));
      Vector<S> r = multiply(b, Vector<S>(f.col(i)), Vector<S>(f.col(j)));
      Vector<S> d = l - r;
      for (Index k = 0; k < d.size(); ++k) d(k) = norm(d(k));
      if (!is_zero_vector(d)) {
        out.pass = false;
        out.pair = {i, j};
        out.lhs = l;
        out.rhs = r;
        return out;
      }
    }
  if (require_iso) {
    if (a.dim() != b.dim()) {
      out.pass = out.invertible = false;
      return out;
    }
    out.det = norm(determinant(f));
    if (is_zero(out.det)) out.pass = out.invertible = false;
  }
  return out;
}

/// Transports the structure of `a` along an invertible f: the result b makes
/// f an isomorphism a -> b.
template <class S>
Algebra<S> transport(const Algebra<S>& a, const Matrix<S>& f) {
  auto finv = inverse(f);
  if (!finv) throw DomainError("transport: singular map");
  const int n = a.dim();
  Algebra<S> b(a.name(), a.kind(), n, a.params());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // b(e_i, e_j) = f(a(f^-1 e_i, f^-1 e_j))
      Vector<S> x = finv->col(i), y = finv->col(j);
      b.set_product(i, j, mul(f, multiply(a, x, y)));
    }
  return b;
}

/// Substitutes values for parameters of a polynomial algebra.
template <class C>
Algebra<Polynomial<C>> substitute(const Algebra<Polynomial<C>>& a, const std::map<std::string, Polynomial<C>>& values) {
  std::vector<std::string> remaining;
  for (const auto& p : a.params())
    if (!values.count(p)) remaining.push_back(p);
  Algebra<Polynomial<C>> out(a.name(), a.kind(), a.dim(), remaining);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k) out.at(i, j, k) = a.at(i, j, k).substitute(values);
  return out;
}

/// Constant structure constants of a polynomial algebra as field values.
/// Throws RingError if any constant still depends on a parameter.
template <class C>
Algebra<C> to_field(const Algebra<Polynomial<C>>& a) {
  Algebra<C> out(a.name(), a.kind(), a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k) out.at(i, j, k) = a.at(i, j, k).constant_value();
  return out;
}

template <class C>
Algebra<C> specialize(const Algebra<Polynomial<C>>& a, const std::map<std::string, C>& values) {
  std::map<std::string, Polynomial<C>> v;
  for (const auto& [k, c] : values) v.emplace(k, Polynomial<C>(c));
  return to_field(substitute(a, v));
}

/// dim span{x*y}.
template <class S>
Subspace<S> product_span(const Algebra<S>& a) {
  std::vector<Vector<S>> gens;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) gens.push_back(a.product(i, j));
  return Subspace<S>::span(gens, a.dim());
}

}  // namespace lsa
