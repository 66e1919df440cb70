#pragma once

#include "lsa/algebra.hpp"

#include <string>
#include <vector>

namespace lsa {

/// Bilinear map K x K -> V, n = dim K, m = dim V. Flat coordinates
/// (i*n + j)*m + a hold component a of g(e_i, e_j).
template <class S>
class Bilinear {
public:
  Bilinear() = default;
  Bilinear(int n, int m) : n_(n), m_(m), c_(static_cast<std::size_t>(n) * n * m, S(0)) {
    if (n < 0 || m < 0) throw DimensionError("negative dimension");
  }

  int base_dim() const { return n_; }
  int value_dim() const { return m_; }

  S& at(int i, int j, int a) { return c_[index(i, j, a)]; }
  const S& at(int i, int j, int a) const { return c_[index(i, j, a)]; }

  Vector<S> value(int i, int j) const {
    Vector<S> v(m_);
    for (int a = 0; a < m_; ++a) v(a) = at(i, j, a);
    return v;
  }
  void set(int i, int j, const Vector<S>& v) {
    if (v.size() != m_) throw DimensionError("bilinear value has the wrong length");
    for (int a = 0; a < m_; ++a) at(i, j, a) = v(a);
  }
  /// Sets g(e_i,e_j) = v and g(e_j,e_i) = -v.
  void set_skew(int i, int j, const Vector<S>& v) {
    set(i, j, v);
    set(j, i, Vector<S>(-v));
  }

  Vector<S> apply(const Vector<S>& x, const Vector<S>& y) const {
    if (x.size() != n_ || y.size() != n_) throw DimensionError("bilinear argument has the wrong length");
    Vector<S> out = zero_vector<S>(m_);
    for (int i = 0; i < n_; ++i) {
      if (is_zero(x(i))) continue;
      for (int j = 0; j < n_; ++j) {
        if (is_zero(y(j))) continue;
        const S f = x(i) * y(j);
        for (int a = 0; a < m_; ++a) out(a) += f * at(i, j, a);
      }
    }
    return out;
  }

  Vector<S> coords() const {
    Vector<S> v(static_cast<Index>(c_.size()));
    for (std::size_t k = 0; k < c_.size(); ++k) v(static_cast<Index>(k)) = c_[k];
    return v;
  }
  static Bilinear from_coords(int n, int m, const Vector<S>& v) {
    Bilinear b(n, m);
    if (v.size() != static_cast<Index>(b.c_.size())) throw DimensionError("bilinear coordinate vector has the wrong length");
    for (std::size_t k = 0; k < b.c_.size(); ++k) b.c_[k] = v(static_cast<Index>(k));
    return b;
  }

  /// (x,y) -> g(y,x)
  Bilinear transposed() const {
    Bilinear t(n_, m_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        for (int a = 0; a < m_; ++a) t.at(i, j, a) = at(j, i, a);
    return t;
  }

  bool is_alternating() const {
    for (int i = 0; i < n_; ++i)
      for (int j = i; j < n_; ++j)
        for (int a = 0; a < m_; ++a)
          if (!is_zero(at(i, j, a) + at(j, i, a))) return false;
    return true;
  }

  bool is_zero_map() const {
    for (const auto& c : c_)
      if (!is_zero(c)) return false;
    return true;
  }

  friend Bilinear operator+(Bilinear a, const Bilinear& b) {
    a.check_same(b);
    for (std::size_t k = 0; k < a.c_.size(); ++k) a.c_[k] += b.c_[k];
    return a;
  }
  friend Bilinear operator-(Bilinear a, const Bilinear& b) {
    a.check_same(b);
    for (std::size_t k = 0; k < a.c_.size(); ++k) a.c_[k] -= b.c_[k];
    return a;
  }
  friend Bilinear operator*(const S& s, Bilinear a) {
    for (auto& c : a.c_) c = s * c;
    return a;
  }
  friend bool operator==(const Bilinear& a, const Bilinear& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.c_ == b.c_;
  }

  /// Rows "g(ei,ej) = v" for the nonzero values.
  std::string to_string() const {
    std::string out;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        Vector<S> v = value(i, j);
        if (is_zero_vector(v)) continue;
        if (!out.empty()) out += ", ";
        out += "g(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ")=" +
               (m_ == 1 ? lsa::to_string(v(0)) : vector_to_string(v));
      }
    return out.empty() ? "0" : out;
  }

private:
  std::size_t index(int i, int j, int a) const {
    if (i < 0 || j < 0 || a < 0 || i >= n_ || j >= n_ || a >= m_) throw DimensionError("bilinear index out of range");
    return (static_cast<std::size_t>(i) * n_ + j) * m_ + a;
  }
  void check_same(const Bilinear& b) const {
    if (n_ != b.n_ || m_ != b.m_) throw DimensionError("bilinear maps of different shapes");
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<S> c_;
};

/// Linear map K -> End(V) stored by its values on the basis of K.
template <class S>
using OperatorFamily = std::vector<Matrix<S>>;

template <class S>
OperatorFamily<S> zero_family(int n, int m) {
  return OperatorFamily<S>(static_cast<std::size_t>(n), zero_matrix<S>(m, m));
}

/// sum_i x_i F(e_i)
template <class S>
Matrix<S> family_at(const OperatorFamily<S>& f, const Vector<S>& x, int m) {
  if (static_cast<Index>(f.size()) != x.size()) throw DimensionError("operator family length differs from the argument");
  Matrix<S> out = zero_matrix<S>(m, m);
  for (Index i = 0; i < x.size(); ++i)
    if (!is_zero(x(i))) out += x(i) * f[static_cast<std::size_t>(i)];
  return out;
}

template <class S>
void check_family(const OperatorFamily<S>& f, int n, int m, const char* what) {
  if (static_cast<int>(f.size()) != n) throw DimensionError(std::string(what) + ": expected one operator per base vector");
  for (const auto& op : f)
    if (op.rows() != m || op.cols() != m) throw DimensionError(std::string(what) + ": operator has the wrong shape");
}

/// Result of one named condition. `applicable` is false when the condition
/// does not apply to the given data (reported as n/a).
struct ConditionCheck {
  std::string name;
  bool pass = true;
  bool applicable = true;
  std::string witness;
};

inline bool all_pass(const std::vector<ConditionCheck>& cs) {
  for (const auto& c : cs)
    if (c.applicable && !c.pass) return false;
  return true;
}

namespace detail {

template <class S>
void record(ConditionCheck& c, const std::string& where, const Vector<S>& lhs, const Vector<S>& rhs) {
  if (!c.pass) return;
  if (vectors_equal(lhs, rhs)) return;
  c.pass = false;
  c.witness = where + ": " + vector_to_string(lhs) + " vs " + vector_to_string(rhs);
}

template <class S>
void record(ConditionCheck& c, const std::string& where, const Matrix<S>& lhs, const Matrix<S>& rhs) {
  if (!c.pass) return;
  if (matrices_equal(lhs, rhs)) return;
  c.pass = false;
  c.witness = where + ": " + matrix_to_string(lhs) + " vs " + matrix_to_string(rhs);
}

inline std::string base_name(int i) { return "e" + std::to_string(i + 1); }
inline std::string fiber_name(int a) { return "f" + std::to_string(a + 1); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Lie extensions

/// Bracket on G (+) A, base first:
/// [(x,a),(y,b)] = ([x,y], [a,b] + phi(x)b - phi(y)a + omega(x,y)).
template <class S>
struct LieExtensionData {
  Algebra<S> base;   // G, kind Lie
  Algebra<S> fiber;  // A, kind Lie
  OperatorFamily<S> phi;
  Bilinear<S> omega;
};

template <class S>
void validate(const LieExtensionData<S>& d) {
  const int n = d.base.dim(), m = d.fiber.dim();
  if (d.base.kind() != Kind::Lie || d.fiber.kind() != Kind::Lie)
    throw DomainError("Lie extension data needs Lie base and fiber");
  check_family(d.phi, n, m, "phi");
  if (d.omega.base_dim() != n || d.omega.value_dim() != m) throw DimensionError("omega has the wrong shape");
  if (!d.omega.is_alternating()) throw DomainError("omega is not alternating");
}

template <class S>
struct LieExtensionResult {
  Algebra<S> algebra;
  std::vector<ConditionCheck> conditions;  // phi-derivation, phi-bracket, omega-cocycle
  IdentityVerdict<S> jacobi;
  bool conditions_hold = true;
  bool agree = true;
};

template <class S>
Algebra<S> lie_extension_algebra(const LieExtensionData<S>& d) {
  validate(d);
  const int n = d.base.dim(), m = d.fiber.dim();
  Algebra<S> out(d.base.name() + "|" + d.fiber.name(), Kind::Lie, n + m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) out.at(i, j, k) = d.base.at(i, j, k);
      for (int a = 0; a < m; ++a) out.at(i, j, n + a) = d.omega.at(i, j, a);
    }
  for (int i = 0; i < n; ++i)
    for (int b = 0; b < m; ++b)
      for (int a = 0; a < m; ++a) {
        out.at(i, n + b, n + a) = d.phi[static_cast<std::size_t>(i)](a, b);
        out.at(n + b, i, n + a) = -d.phi[static_cast<std::size_t>(i)](a, b);
      }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) out.at(n + a, n + b, n + c) = d.fiber.at(a, b, c);
  return out;
}

template <class S>
std::vector<ConditionCheck> lie_extension_conditions(const LieExtensionData<S>& d) {
  validate(d);
  const int n = d.base.dim(), m = d.fiber.dim();
  const auto& A = d.fiber;
  const auto& G = d.base;
  auto phi = [&](int i) -> const Matrix<S>& { return d.phi[static_cast<std::size_t>(i)]; };
  auto phi_at = [&](const Vector<S>& x) { return family_at(d.phi, x, m); };

  ConditionCheck c1{"phi-derivation"};
  for (int i = 0; i < n && c1.pass; ++i)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        const auto fa = basis_element(A, a), fb = basis_element(A, b);
        Vector<S> lhs = mul(phi(i), A.product(a, b));
        Vector<S> rhs = multiply(A, mul(phi(i), fa), fb) + multiply(A, fa, mul(phi(i), fb));
        detail::record(c1, "x=" + detail::base_name(i) + " b=" + detail::fiber_name(a) + " c=" + detail::fiber_name(b),
                       lhs, rhs);
      }

  ConditionCheck c2{"phi-bracket"};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix<S> lhs = commutator(phi(i), phi(j));
      Matrix<S> rhs = phi_at(G.product(i, j)) + operator_matrix(A, Side::Left, d.omega.value(i, j));
      detail::record(c2, "x=" + detail::base_name(i) + " y=" + detail::base_name(j), lhs, rhs);
    }

  ConditionCheck c3{"omega-cocycle"};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const auto x = basis_element(G, i), y = basis_element(G, j), z = basis_element(G, k);
        Vector<S> lhs = d.omega.apply(G.product(i, j), z) - d.omega.apply(x, G.product(j, k)) +
                        d.omega.apply(y, G.product(i, k));
        Vector<S> rhs = mul(phi(i), d.omega.value(j, k)) + mul(phi(j), d.omega.value(k, i)) +
                        mul(phi(k), d.omega.value(i, j));
        detail::record(c3,
                       "x=" + detail::base_name(i) + " y=" + detail::base_name(j) + " z=" + detail::base_name(k), lhs,
                       rhs);
      }
  return {c1, c2, c3};
}

/// Builds the bracket and checks both the three conditions and Jacobi.
template <class S>
LieExtensionResult<S> lie_extend(const LieExtensionData<S>& d) {
  LieExtensionResult<S> r;
  r.algebra = lie_extension_algebra(d);
  r.conditions = lie_extension_conditions(d);
  r.jacobi = check_jacobi(r.algebra);
  r.conditions_hold = all_pass(r.conditions);
  r.agree = r.conditions_hold == r.jacobi.pass;
  return r;
}

/// Factor-system test: phi lands in Der(A), T_phi = ad o omega and
/// delta_phi omega = 0 (Chevalley-Eilenberg differential).
template <class S>
std::vector<ConditionCheck> factor_system_check(const LieExtensionData<S>& d) {
  validate(d);
  const int n = d.base.dim(), m = d.fiber.dim();
  const auto& G = d.base;
  const auto& A = d.fiber;
  std::vector<ConditionCheck> out;

  ConditionCheck der{"phi-into-derivations"};
  for (int i = 0; i < n && der.pass; ++i)
    if (!is_derivation(A, d.phi[static_cast<std::size_t>(i)])) {
      der.pass = false;
      der.witness = "phi(" + detail::base_name(i) + ") is not a derivation";
    }
  out.push_back(der);

  ConditionCheck t{"phi-curvature-ad-omega"};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix<S> tphi = commutator(d.phi[static_cast<std::size_t>(i)], d.phi[static_cast<std::size_t>(j)]) -
                       family_at(d.phi, G.product(i, j), m);
      Matrix<S> ad = operator_matrix(A, Side::Left, d.omega.value(i, j));
      detail::record(t, "x=" + detail::base_name(i) + " y=" + detail::base_name(j), tphi, ad);
    }
  out.push_back(t);

  ConditionCheck dw{"omega-closed"};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        auto w = [&](int p, int q) { return d.omega.value(p, q); };
        auto ph = [&](int p) -> const Matrix<S>& { return d.phi[static_cast<std::size_t>(p)]; };
        auto wb = [&](int p, int q, int r) {  // omega([e_p,e_q], e_r)
          return d.omega.apply(G.product(p, q), basis_element(G, r));
        };
        Vector<S> v = mul(ph(i), w(j, k)) - mul(ph(j), w(i, k)) + mul(ph(k), w(i, j)) - wb(i, j, k) + wb(i, k, j) -
                      wb(j, k, i);
        detail::record(dw, "x=" + detail::base_name(i) + " y=" + detail::base_name(j) + " z=" + detail::base_name(k), v,
                       zero_vector<S>(m));
      }
  out.push_back(dw);
  return out;
}

/// Reads (phi, omega) off a Lie algebra whose last m coordinates span an ideal.
template <class S>
LieExtensionData<S> split_lie_extension(const Algebra<S>& g, int m) {
  if (g.kind() != Kind::Lie) throw DomainError("split_lie_extension: not a Lie algebra");
  const int N = g.dim(), n = N - m;
  if (m < 0 || n < 0) throw DimensionError("split_lie_extension: bad fiber dimension");
  LieExtensionData<S> d{Algebra<S>(g.name() + "/A", Kind::Lie, n), Algebra<S>("A", Kind::Lie, m), zero_family<S>(n, m),
                        Bilinear<S>(n, m)};
  for (int p = 0; p < N; ++p)
    for (int a = n; a < N; ++a)
      for (int k = 0; k < n; ++k)
        if (!is_zero(g.at(p, a, k))) throw DomainError("split_lie_extension: the last coordinates do not span an ideal");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) d.base.at(i, j, k) = g.at(i, j, k);
      for (int a = 0; a < m; ++a) d.omega.at(i, j, a) = g.at(i, j, n + a);
    }
  for (int i = 0; i < n; ++i)
    for (int b = 0; b < m; ++b)
      for (int a = 0; a < m; ++a) d.phi[static_cast<std::size_t>(i)](a, b) = g.at(i, n + b, n + a);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) d.fiber.at(a, b, c) = g.at(n + a, n + b, n + c);
  return d;
}

// ---------------------------------------------------------------------------
// LSA extensions

/// Product on K (+) E, base first:
/// (x,a)(y,b) = (xy, ab + lambda_x b + rho_y a + g(x,y)).
template <class S>
struct LsaExtensionData {
  Algebra<S> base;   // K
  Algebra<S> fiber;  // E
  OperatorFamily<S> lambda;
  OperatorFamily<S> rho;
  Bilinear<S> g;
};

template <class S>
void validate(const LsaExtensionData<S>& d) {
  const int n = d.base.dim(), m = d.fiber.dim();
  if (d.base.kind() == Kind::Lie || d.fiber.kind() == Kind::Lie)
    throw DomainError("LSA extension data needs LSA base and fiber");
  check_family(d.lambda, n, m, "lambda");
  check_family(d.rho, n, m, "rho");
  if (d.g.base_dim() != n || d.g.value_dim() != m) throw DimensionError("g has the wrong shape");
}

template <class S>
Algebra<S> lsa_extension_algebra(const LsaExtensionData<S>& d) {
  validate(d);
  const int n = d.base.dim(), m = d.fiber.dim();
  Algebra<S> out(d.base.name() + "|" + d.fiber.name(), Kind::LSA, n + m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) out.at(i, j, k) = d.base.at(i, j, k);
      for (int a = 0; a < m; ++a) out.at(i, j, n + a) = d.g.at(i, j, a);
    }
  for (int i = 0; i < n; ++i)
    for (int b = 0; b < m; ++b)
      for (int a = 0; a < m; ++a) {
        out.at(i, n + b, n + a) = d.lambda[static_cast<std::size_t>(i)](a, b);  // x * b
        out.at(n + b, i, n + a) = d.rho[static_cast<std::size_t>(i)](a, b);     // b * y
      }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) out.at(n + a, n + b, n + c) = d.fiber.at(a, b, c);
  return out;
}

template <class S>
bool has_trivial_product(const Algebra<S>& a) {
  for (const auto& c : a.tensor())
    if (!is_zero(c)) return false;
  return true;
}

template <class S>
std::vector<ConditionCheck> lsa_extension_conditions(const LsaExtensionData<S>& d) {
  validate(d);
  const int n = d.base.dim(), m = d.fiber.dim();
  const auto& K = d.base;
  const auto& E = d.fiber;
  auto lam = [&](int i) -> const Matrix<S>& { return d.lambda[static_cast<std::size_t>(i)]; };
  auto rho = [&](int i) -> const Matrix<S>& { return d.rho[static_cast<std::size_t>(i)]; };
  using detail::base_name;
  using detail::fiber_name;

  ConditionCheck c1{"lambda-product"};
  ConditionCheck c2{"rho-bracket"};
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        const auto fa = basis_element(E, a), fb = basis_element(E, b);
        const std::string where = "x=" + base_name(i) + " a=" + fiber_name(a) + " b=" + fiber_name(b);
        detail::record(c1, where, Vector<S>(mul(lam(i), E.product(a, b))),
                       Vector<S>(multiply(E, mul(lam(i), fa), fb) + multiply(E, fa, mul(lam(i), fb)) -
                                 multiply(E, mul(rho(i), fa), fb)));
        detail::record(c2, where, Vector<S>(mul(rho(i), bracket(E, fa, fb))),
                       Vector<S>(multiply(E, fa, mul(rho(i), fb)) - multiply(E, fb, mul(rho(i), fa))));
      }

  ConditionCheck c3{"lambda-lambda"};
  ConditionCheck c4{"lambda-rho"};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::string where = "x=" + base_name(i) + " y=" + base_name(j);
      const Vector<S> skew = d.g.value(i, j) - d.g.value(j, i);
      detail::record(c3, where, commutator(lam(i), lam(j)),
                     Matrix<S>(family_at(d.lambda, bracket(K, basis_element(K, i), basis_element(K, j)), m) +
                               operator_matrix(E, Side::Left, skew)));
      detail::record(c4, where, commutator(lam(i), rho(j)),
                     Matrix<S>(family_at(d.rho, K.product(i, j), m) - mul(rho(j), rho(i)) +
                               operator_matrix(E, Side::Right, d.g.value(i, j))));
    }

  ConditionCheck c5{"g-cocycle"};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const auto x = basis_element(K, i), y = basis_element(K, j), z = basis_element(K, k);
        Vector<S> v = d.g.apply(x, K.product(j, k)) - d.g.apply(y, K.product(i, k)) + mul(lam(i), d.g.value(j, k)) -
                      mul(lam(j), d.g.value(i, k)) - d.g.apply(bracket(K, x, y), z) -
                      mul(rho(k), Vector<S>(d.g.value(i, j) - d.g.value(j, i)));
        detail::record(c5, "x=" + base_name(i) + " y=" + base_name(j) + " z=" + base_name(k), v, zero_vector<S>(m));
      }
  return {c1, c2, c3, c4, c5};
}

/// The three-condition form valid when E has trivial product. Marked not
/// applicable otherwise.
template <class S>
std::vector<ConditionCheck> lsa_trivial_fiber_conditions(const LsaExtensionData<S>& d) {
  validate(d);
  std::vector<ConditionCheck> out{{"trivial-fiber-lambda-representation"},
                                  {"trivial-fiber-lambda-rho"},
                                  {"trivial-fiber-g-cocycle"}};
  if (!has_trivial_product(d.fiber)) {
    for (auto& c : out) c.applicable = false;
    return out;
  }
  const int n = d.base.dim(), m = d.fiber.dim();
  const auto& K = d.base;
  auto lam = [&](int i) -> const Matrix<S>& { return d.lambda[static_cast<std::size_t>(i)]; };
  auto rho = [&](int i) -> const Matrix<S>& { return d.rho[static_cast<std::size_t>(i)]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::string where = "x=" + detail::base_name(i) + " y=" + detail::base_name(j);
      detail::record(out[0], where, commutator(lam(i), lam(j)),
                     family_at(d.lambda, bracket(K, basis_element(K, i), basis_element(K, j)), m));
      detail::record(out[1], where, commutator(lam(i), rho(j)),
                     Matrix<S>(family_at(d.rho, K.product(i, j), m) - mul(rho(j), rho(i))));
    }
  // delta_2 g = 0, written out independently of the general check
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vector<S> v = zero_vector<S>(m);
        for (int l = 0; l < n; ++l) {
          v += K.at(j, k, l) * d.g.value(i, l) - K.at(i, k, l) * d.g.value(j, l);
          v -= (K.at(i, j, l) - K.at(j, i, l)) * d.g.value(l, k);
        }
        v += mul(lam(i), d.g.value(j, k)) - mul(lam(j), d.g.value(i, k));
        v -= mul(rho(k), Vector<S>(d.g.value(i, j) - d.g.value(j, i)));
        detail::record(out[2],
                       "x=" + detail::base_name(i) + " y=" + detail::base_name(j) + " z=" + detail::base_name(k), v,
                       zero_vector<S>(m));
      }
  return out;
}

/// The specialization for a one-dimensional base with zero product:
/// lambda(xy) = lambda(x)y + x lambda(y) - rho(x)y,
/// rho([x,y]) = x rho(y) - y rho(x),  [lambda,rho] + rho^2 = R_e, e = g(e0,e0).
template <class S>
std::vector<ConditionCheck> lsa_one_dim_base_conditions(const LsaExtensionData<S>& d) {
  validate(d);
  std::vector<ConditionCheck> out{{"one-dim-base-lambda"}, {"one-dim-base-rho"}, {"one-dim-base-lambda-rho"}};
  if (d.base.dim() != 1 || !has_trivial_product(d.base)) {
    for (auto& c : out) c.applicable = false;
    return out;
  }
  const auto& E = d.fiber;
  const int m = E.dim();
  const Matrix<S>& lam = d.lambda[0];
  const Matrix<S>& rho = d.rho[0];
  const Vector<S> e = d.g.value(0, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const auto x = basis_element(E, a), y = basis_element(E, b);
      const std::string where = "x=" + detail::fiber_name(a) + " y=" + detail::fiber_name(b);
      detail::record(out[0], where, Vector<S>(mul(lam, E.product(a, b))),
                     Vector<S>(multiply(E, mul(lam, x), y) + multiply(E, x, mul(lam, y)) - multiply(E, mul(rho, x), y)));
      detail::record(out[1], where, Vector<S>(mul(rho, bracket(E, x, y))),
                     Vector<S>(multiply(E, x, mul(rho, y)) - multiply(E, y, mul(rho, x))));
    }
  detail::record(out[2], "operators", Matrix<S>(commutator(lam, rho) + mul(rho, rho)),
                 operator_matrix(E, Side::Right, e));
  return out;
}

template <class S>
struct LsaExtensionResult {
  Algebra<S> algebra;
  std::vector<ConditionCheck> conditions;          // the five general conditions
  std::vector<ConditionCheck> trivial_fiber;       // n/a unless E has zero product
  std::vector<ConditionCheck> one_dim_base;        // n/a unless K is one-dimensional with zero product
  IdentityVerdict<S> left_symmetry;
  bool conditions_hold = true;
  /// Each available form agrees with the left-symmetry verdict.
  bool agree = true;
};

template <class S>
LsaExtensionResult<S> lsa_extend(const LsaExtensionData<S>& d) {
  LsaExtensionResult<S> r;
  r.algebra = lsa_extension_algebra(d);
  r.conditions = lsa_extension_conditions(d);
  r.trivial_fiber = lsa_trivial_fiber_conditions(d);
  r.one_dim_base = lsa_one_dim_base_conditions(d);
  r.left_symmetry = check_left_symmetric(r.algebra);
  r.conditions_hold = all_pass(r.conditions);
  // K and E are assumed left-symmetric; only then do the conditions characterize the product.
  r.agree = r.conditions_hold == r.left_symmetry.pass;
  if (r.trivial_fiber.front().applicable) r.agree = r.agree && all_pass(r.trivial_fiber) == r.left_symmetry.pass;
  if (r.one_dim_base.front().applicable) r.agree = r.agree && all_pass(r.one_dim_base) == r.left_symmetry.pass;
  return r;
}

/// Reads (lambda, rho, g) off an algebra whose last m coordinates span a
/// two-sided ideal.
template <class S>
LsaExtensionData<S> split_lsa_extension(const Algebra<S>& a, int m) {
  const int N = a.dim(), n = N - m;
  if (m < 0 || n < 0) throw DimensionError("split_lsa_extension: bad fiber dimension");
  for (int p = 0; p < N; ++p)
    for (int q = n; q < N; ++q)
      for (int k = 0; k < n; ++k)
        if (!is_zero(a.at(p, q, k)) || !is_zero(a.at(q, p, k)))
          throw DomainError("split_lsa_extension: the last coordinates do not span a two-sided ideal");
  LsaExtensionData<S> d{Algebra<S>(a.name() + "/E", Kind::LSA, n), Algebra<S>("E", Kind::LSA, m),
                        zero_family<S>(n, m), zero_family<S>(n, m), Bilinear<S>(n, m)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) d.base.at(i, j, k) = a.at(i, j, k);
      for (int c = 0; c < m; ++c) d.g.at(i, j, c) = a.at(i, j, n + c);
    }
  for (int i = 0; i < n; ++i)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        d.lambda[static_cast<std::size_t>(i)](c, b) = a.at(i, n + b, n + c);
        d.rho[static_cast<std::size_t>(i)](c, b) = a.at(n + b, i, n + c);
      }
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      for (int c = 0; c < m; ++c) d.fiber.at(p, q, c) = a.at(n + p, n + q, n + c);
  return d;
}

/// Lie data of the commutator algebra: phi = lambda - rho, omega = g - g^T.
template <class S>
LieExtensionData<S> lie_data_of(const LsaExtensionData<S>& d) {
  validate(d);
  const int n = d.base.dim(), m = d.fiber.dim();
  LieExtensionData<S> l{associated_lie(d.base), associated_lie(d.fiber), zero_family<S>(n, m), d.g - d.g.transposed()};
  for (int i = 0; i < n; ++i)
    l.phi[static_cast<std::size_t>(i)] = d.lambda[static_cast<std::size_t>(i)] - d.rho[static_cast<std::size_t>(i)];
  return l;
}

// ---------------------------------------------------------------------------
// Cohomology with coefficients in a bimodule (V, lambda, rho) over K

template <class S>
struct Bimodule {
  Algebra<S> base;  // K
  int dim = 0;      // dim V
  OperatorFamily<S> lambda;
  OperatorFamily<S> rho;
};

template <class S>
Bimodule<S> trivial_bimodule(const Algebra<S>& k, int m) {
  return {k, m, zero_family<S>(k.dim(), m), zero_family<S>(k.dim(), m)};
}

/// [lambda_x, lambda_y] = lambda_[x,y] and [lambda_x, rho_y] = rho_xy - rho_y rho_x.
template <class S>
std::vector<ConditionCheck> bimodule_check(const Bimodule<S>& v) {
  LsaExtensionData<S> d{v.base, Algebra<S>("V", Kind::LSA, v.dim), v.lambda, v.rho, Bilinear<S>(v.base.dim(), v.dim)};
  auto cs = lsa_trivial_fiber_conditions(d);
  cs.pop_back();
  cs[0].name = "bimodule lambda representation";
  cs[1].name = "bimodule lambda-rho";
  return cs;
}

namespace detail {
template <class S>
void require_bimodule(const Bimodule<S>& v) {
  check_family(v.lambda, v.base.dim(), v.dim, "lambda");
  check_family(v.rho, v.base.dim(), v.dim, "rho");
  for (const auto& c : bimodule_check(v))
    if (!c.pass) throw DomainError("not a bimodule: " + c.name + " fails at " + c.witness);
}
}  // namespace detail

/// Coordinates of h in L^1(K,V): index i*m + a is component a of h(e_i).
/// `h` as a matrix is m x n with column i = h(e_i).
template <class S>
Bilinear<S> coboundary1(const Bimodule<S>& v, const Matrix<S>& h) {
  detail::require_bimodule(v);
  const int n = v.base.dim(), m = v.dim;
  if (h.rows() != m || h.cols() != n) throw DimensionError("coboundary1: h has the wrong shape");
  Bilinear<S> out(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vector<S> val = mul(v.rho[static_cast<std::size_t>(j)], Vector<S>(h.col(i))) +
                      mul(v.lambda[static_cast<std::size_t>(i)], Vector<S>(h.col(j))) - mul(h, v.base.product(i, j));
      out.set(i, j, val);
    }
  return out;
}

/// Trilinear map flattened as ((i*n + j)*n + k)*m + a.
template <class S>
Vector<S> coboundary2(const Bimodule<S>& v, const Bilinear<S>& g) {
  detail::require_bimodule(v);
  const int n = v.base.dim(), m = v.dim;
  if (g.base_dim() != n || g.value_dim() != m) throw DimensionError("coboundary2: g has the wrong shape");
  const auto& K = v.base;
  Vector<S> out = zero_vector<S>(static_cast<Index>(n) * n * n * m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const auto x = basis_element(K, i), y = basis_element(K, j), z = basis_element(K, k);
        Vector<S> val = g.apply(x, K.product(j, k)) - g.apply(y, K.product(i, k)) +
                        mul(v.lambda[static_cast<std::size_t>(i)], g.value(j, k)) -
                        mul(v.lambda[static_cast<std::size_t>(j)], g.value(i, k)) - g.apply(bracket(K, x, y), z) -
                        mul(v.rho[static_cast<std::size_t>(k)], Vector<S>(g.value(i, j) - g.value(j, i)));
        for (int a = 0; a < m; ++a) out((((static_cast<Index>(i) * n + j) * n + k) * m) + a) = val(a);
      }
  return out;
}

/// Matrix of delta_1: (n*n*m) x (n*m).
template <class S>
Matrix<S> delta1_matrix(const Bimodule<S>& v) {
  detail::require_bimodule(v);
  const int n = v.base.dim(), m = v.dim;
  Matrix<S> d = zero_matrix<S>(static_cast<Index>(n) * n * m, static_cast<Index>(n) * m);
  auto row = [&](int i, int j, int a) { return (static_cast<Index>(i) * n + j) * m + a; };
  auto col = [&](int p, int b) { return static_cast<Index>(p) * m + b; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
          d(row(i, j, a), col(i, b)) += v.rho[static_cast<std::size_t>(j)](a, b);
          d(row(i, j, a), col(j, b)) += v.lambda[static_cast<std::size_t>(i)](a, b);
        }
        for (int l = 0; l < n; ++l)
          if (!is_zero(v.base.at(i, j, l))) d(row(i, j, a), col(l, a)) -= v.base.at(i, j, l);
      }
  return d;
}

/// Matrix of delta_2: (n^3*m) x (n^2*m).
template <class S>
Matrix<S> delta2_matrix(const Bimodule<S>& v) {
  detail::require_bimodule(v);
  const int n = v.base.dim(), m = v.dim;
  const auto& K = v.base;
  Matrix<S> d = zero_matrix<S>(static_cast<Index>(n) * n * n * m, static_cast<Index>(n) * n * m);
  auto row = [&](int i, int j, int k, int a) { return ((static_cast<Index>(i) * n + j) * n + k) * m + a; };
  auto col = [&](int p, int q, int b) { return (static_cast<Index>(p) * n + q) * m + b; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int a = 0; a < m; ++a) {
          const Index r = row(i, j, k, a);
          for (int l = 0; l < n; ++l) {
            d(r, col(i, l, a)) += K.at(j, k, l);                  // g(x, yz)
            d(r, col(j, l, a)) -= K.at(i, k, l);                  // -g(y, xz)
            d(r, col(l, k, a)) -= K.at(i, j, l) - K.at(j, i, l);  // -g([x,y], z)
          }
          for (int b = 0; b < m; ++b) {
            d(r, col(j, k, b)) += v.lambda[static_cast<std::size_t>(i)](a, b);
            d(r, col(i, k, b)) -= v.lambda[static_cast<std::size_t>(j)](a, b);
            d(r, col(i, j, b)) -= v.rho[static_cast<std::size_t>(k)](a, b);
            d(r, col(j, i, b)) += v.rho[static_cast<std::size_t>(k)](a, b);
          }
        }
  return d;
}

template <class S>
struct CohomologySpace {
  Subspace<S> z2;
  Subspace<S> b2;
  int h2_dim = 0;
  std::vector<Bilinear<S>> representatives;  // span a complement of B2 in Z2
};

/// Z2 = ker delta_2, B2 = im delta_1, representatives by completing an
/// echelon basis of B2 with Z2 basis vectors in order.
template <class S>
CohomologySpace<S> cohomology_h2(const Bimodule<S>& v) {
  detail::require_field<S>("cohomology_h2");
  const int n = v.base.dim(), m = v.dim;
  CohomologySpace<S> out;
  out.z2 = kernel(delta2_matrix(v));
  out.b2 = image(delta1_matrix(v));
  if (!out.b2.is_subspace_of(out.z2)) throw IdentityFailure("cohomology_h2: coboundaries are not cocycles");
  out.h2_dim = static_cast<int>(out.z2.dim() - out.b2.dim());
  Subspace<S> span = out.b2;
  for (Index r = 0; r < out.z2.dim(); ++r) {
    Vector<S> z = out.z2.basis_vector(r);
    if (span.contains(z)) continue;
    out.representatives.push_back(Bilinear<S>::from_coords(n, m, z));
    span = span.sum(Subspace<S>::span(std::vector<Vector<S>>{z}, span.ambient_dim()));
  }
  return out;
}

template <class S>
bool is_cocycle(const Bimodule<S>& v, const Bilinear<S>& g) {
  return is_zero_vector(coboundary2(v, g));
}

/// I_[g] = {x : xy = yx = 0 and g(x,y) = g(y,x) = 0 for all y}.
template <class S>
Subspace<S> exactness_ideal(const Algebra<S>& k, const Bilinear<S>& g) {
  detail::require_field_algebra(k, "exactness_ideal");
  const int n = k.dim(), m = g.value_dim();
  if (g.base_dim() != n) throw DimensionError("exactness_ideal: g has the wrong shape");
  std::vector<Matrix<S>> blocks;
  for (int j = 0; j < n; ++j) {
    blocks.push_back(detail::product_with_basis(k, j, true));
    blocks.push_back(detail::product_with_basis(k, j, false));
    Matrix<S> left = zero_matrix<S>(m, n), right = zero_matrix<S>(m, n);
    for (int i = 0; i < n; ++i) {
      left.col(i) = g.value(i, j);
      right.col(i) = g.value(j, i);
    }
    blocks.push_back(left);
    blocks.push_back(right);
  }
  return detail::common_kernel(blocks, n);
}

/// K (+) V with (x,a)(y,b) = (xy, g(x,y)); g must be a cocycle for the
/// trivial bimodule.
template <class S>
Algebra<S> central_extend(const Algebra<S>& k, const Bilinear<S>& g) {
  if (g.base_dim() != k.dim()) throw DimensionError("central_extend: g has the wrong shape");
  const int m = g.value_dim();
  Bimodule<S> v = trivial_bimodule(k, m);
  Vector<S> d = coboundary2(v, g);
  if (!is_zero_vector(d)) {
    const int n = k.dim();
    for (Index r = 0; r < d.size(); ++r)
      if (!is_zero(d(r))) {
        const Index a = r % m, ijk = r / m;
        const int kk = static_cast<int>(ijk % n), j = static_cast<int>((ijk / n) % n), i = static_cast<int>(ijk / n / n);
        throw DomainError("central_extend: g is not a cocycle; delta2 g(e" + std::to_string(i + 1) + ",e" +
                          std::to_string(j + 1) + ",e" + std::to_string(kk + 1) + ")_" + std::to_string(a + 1) +
                          " = " + to_string(d(r)));
      }
  }
  LsaExtensionData<S> data{k, Algebra<S>("I", Kind::LSA, m), zero_family<S>(k.dim(), m), zero_family<S>(k.dim(), m),
                           g};
  Algebra<S> out = lsa_extension_algebra(data);
  out.set_name(k.name() + "+g");
  out.set_params(k.params());
  return out;
}

/// Span of the last m coordinates of an (n+m)-dimensional algebra.
template <class S>
Subspace<S> fiber_subspace(int n, int m) {
  std::vector<Vector<S>> gens;
  for (int a = 0; a < m; ++a) gens.push_back(unit_vector<S>(n + m, n + a));
  return Subspace<S>::span(gens, n + m);
}

}  // namespace lsa
