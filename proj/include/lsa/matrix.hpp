#pragma once

#include "lsa/errors.hpp"
#include "lsa/scalar.hpp"

#include <Eigen/Core>

#include <optional>
#include <string>
#include <vector>

namespace lsa {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

template <class S>
Matrix<S> zero_matrix(Index rows, Index cols) {
  return Matrix<S>::Constant(rows, cols, S(0));
}

template <class S>
Vector<S> zero_vector(Index n) {
  return Vector<S>::Constant(n, S(0));
}

template <class S>
Matrix<S> identity_matrix(Index n) {
  Matrix<S> m = zero_matrix<S>(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = S(1);
  return m;
}

template <class S>
Vector<S> unit_vector(Index n, Index i) {
  Vector<S> v = zero_vector<S>(n);
  v(i) = S(1);
  return v;
}

template <class S>
bool is_zero_matrix(const Matrix<S>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <class S>
bool is_zero_vector(const Vector<S>& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) return false;
  return true;
}

template <class S>
bool matrices_equal(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <class S>
bool vectors_equal(const Vector<S>& a, const Vector<S>& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (!(a(i) == b(i))) return false;
  return true;
}

/// Product written out by hand. Eigen's blocked kernels are tuned for
/// floating point; for exact scalars the triple loop is simpler and skips zeros.
template <class S>
Matrix<S> mul(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  Matrix<S> out = zero_matrix<S>(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (Index j = 0; j < b.cols(); ++j)
        if (!is_zero(b(k, j))) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <class S>
Vector<S> mul(const Matrix<S>& a, const Vector<S>& v) {
  if (a.cols() != v.size()) throw DimensionError("matrix-vector product: sizes differ");
  Vector<S> out = zero_vector<S>(a.rows());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index k = 0; k < a.cols(); ++k)
      if (!is_zero(a(i, k)) && !is_zero(v(k))) out(i) += a(i, k) * v(k);
  return out;
}

template <class S>
S trace(const Matrix<S>& m) {
  if (m.rows() != m.cols()) throw DimensionError("trace of a non-square matrix");
  S t(0);
  for (Index i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

template <class S>
Matrix<S> commutator(const Matrix<S>& a, const Matrix<S>& b) {
  return mul(a, b) - mul(b, a);
}

/// [tr(m), tr(m^2), ..., tr(m^k_max)].
template <class S>
std::vector<S> power_traces(const Matrix<S>& m, int k_max) {
  if (m.rows() != m.cols()) throw DimensionError("power_traces needs a square matrix");
  std::vector<S> out;
  Matrix<S> p = m;
  for (int k = 1; k <= k_max; ++k) {
    if (k > 1) p = mul(p, m);
    out.push_back(trace(p));
  }
  return out;
}

/// Determinant by Laplace expansion along the sparsest row. Works over any
/// ring; meant for the small matrices used here.
template <class S>
S determinant(const Matrix<S>& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  const Index n = m.rows();
  if (n == 0) return S(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Index best = 0, best_zeros = -1;
  for (Index i = 0; i < n; ++i) {
    Index zeros = 0;
    for (Index j = 0; j < n; ++j)
      if (is_zero(m(i, j))) ++zeros;
    if (zeros > best_zeros) best = i, best_zeros = zeros;
  }
  S det(0);
  for (Index j = 0; j < n; ++j) {
    if (is_zero(m(best, j))) continue;
    Matrix<S> minor(n - 1, n - 1);
    for (Index r = 0, rr = 0; r < n; ++r) {
      if (r == best) continue;
      for (Index c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(rr, cc++) = m(r, c);
      }
      ++rr;
    }
    S term = m(best, j) * determinant(minor);
    det = ((best + j) % 2 == 0) ? det + term : det - term;
  }
  return det;
}

namespace detail {
template <class S>
void require_field(const char* what) {
  if constexpr (!ExactField<S>) throw RingError(std::string(what) + " needs a field (rational or gaussian) matrix");
}
}  // namespace detail

template <class S>
struct Echelon {
  Matrix<S> reduced;
  std::vector<Index> pivots;  // pivot column of each nonzero row
};

/// Reduced row-echelon form.
template <class S>
Echelon<S> rref(Matrix<S> m) {
  detail::require_field<S>("rref");
  Echelon<S> out;
  if constexpr (ExactField<S>) {
    Index row = 0;
    for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
      Index piv = -1;
      for (Index r = row; r < m.rows(); ++r)
        if (!is_zero(m(r, col))) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      m.row(row).swap(m.row(piv));
      const S inv = S(1) / m(row, col);
      for (Index c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
      for (Index r = 0; r < m.rows(); ++r) {
        if (r == row || is_zero(m(r, col))) continue;
        const S f = m(r, col);
        for (Index c = col; c < m.cols(); ++c)
          if (!is_zero(m(row, c))) m(r, c) -= f * m(row, c);
      }
      out.pivots.push_back(col);
      ++row;
    }
    out.reduced = m.topRows(row);
  }
  return out;
}

template <class S>
Index rank(const Matrix<S>& m) {
  return static_cast<Index>(rref(m).pivots.size());
}

/// Linear subspace of S^n stored by its reduced row-echelon basis, so equal
/// subspaces have identical representations.
template <class S>
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(Index ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace zero(Index ambient) { return Subspace(ambient); }
  static Subspace full(Index ambient) { return span(identity_matrix<S>(ambient)); }

  /// Row space of `rows`.
  static Subspace span(const Matrix<S>& rows) {
    Subspace s(rows.cols());
    Echelon<S> e = rref(rows);
    s.basis_ = e.reduced;
    s.pivots_ = e.pivots;
    return s;
  }

  static Subspace span(const std::vector<Vector<S>>& vectors, Index ambient) {
    Matrix<S> rows = zero_matrix<S>(static_cast<Index>(vectors.size()), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (vectors[i].size() != ambient) throw DimensionError("span: vector length differs from ambient dimension");
      rows.row(static_cast<Index>(i)) = vectors[i].transpose();
    }
    return span(rows);
  }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  const Matrix<S>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }
  Vector<S> basis_vector(Index i) const { return basis_.row(i).transpose(); }

  std::vector<Vector<S>> vectors() const {
    std::vector<Vector<S>> out;
    for (Index i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
    return out;
  }

  bool contains(const Vector<S>& v) const {
    if (v.size() != ambient_) throw DimensionError("contains: vector length differs from ambient dimension");
    Vector<S> r = v;
    for (Index i = 0; i < dim(); ++i) {
      const S f = r(pivots_[i]);
      if (is_zero(f)) continue;
      for (Index c = 0; c < ambient_; ++c)
        if (!is_zero(basis_(i, c))) r(c) -= f * basis_(i, c);
    }
    return is_zero_vector(r);
  }

  bool is_subspace_of(const Subspace& o) const {
    for (Index i = 0; i < dim(); ++i)
      if (!o.contains(basis_vector(i))) return false;
    return true;
  }

  Subspace sum(const Subspace& o) const {
    check_ambient(o);
    Matrix<S> rows(dim() + o.dim(), ambient_);
    rows << basis_, o.basis_;
    return span(rows);
  }

  /// Intersection via the kernel of [A; -B]^T.
  Subspace intersect(const Subspace& o) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && matrices_equal(a.basis_, b.basis_);
  }

  std::string to_string() const {
    std::string out = "span{";
    for (Index i = 0; i < dim(); ++i) {
      if (i) out += ", ";
      out += "(";
      for (Index c = 0; c < ambient_; ++c) {
        if (c) out += ",";
        out += lsa::to_string(basis_(i, c));
      }
      out += ")";
    }
    return out + "}";
  }

private:
  void check_ambient(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw DimensionError("subspaces live in different ambient spaces");
  }

  Index ambient_ = 0;
  Matrix<S> basis_;
  std::vector<Index> pivots_;
};

/// Null space {x : m x = 0}.
template <class S>
Subspace<S> kernel(const Matrix<S>& m) {
  detail::require_field<S>("kernel");
  Echelon<S> e = rref(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Vector<S>> vecs;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector<S> v = zero_vector<S>(n);
    v(free) = S(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v(e.pivots[r]) = -e.reduced(static_cast<Index>(r), free);
    vecs.push_back(v);
  }
  return Subspace<S>::span(vecs, n);
}

/// Column space of m.
template <class S>
Subspace<S> image(const Matrix<S>& m) {
  return Subspace<S>::span(m.transpose());
}

template <class S>
Subspace<S> Subspace<S>::intersect(const Subspace& o) const {
  check_ambient(o);
  if (dim() == 0 || o.dim() == 0) return zero(ambient_);
  // Columns of M are the basis vectors of both spaces; a kernel vector (a,b)
  // gives a common element sum a_i u_i = -sum b_j w_j.
  Matrix<S> m(ambient_, dim() + o.dim());
  m << basis_.transpose(), o.basis_.transpose();
  Subspace<S> k = kernel(m);
  std::vector<Vector<S>> common;
  for (Index i = 0; i < k.dim(); ++i) {
    Vector<S> v = zero_vector<S>(ambient_);
    for (Index j = 0; j < dim(); ++j)
      if (!is_zero(k.basis()(i, j))) v += k.basis()(i, j) * basis_vector(j);
    common.push_back(v);
  }
  return span(common, ambient_);
}

template <class S>
struct Solution {
  Vector<S> particular;
  Subspace<S> homogeneous;
};

/// Solves m x = rhs. Returns nullopt when the system is inconsistent.
template <class S>
std::optional<Solution<S>> solve(const Matrix<S>& m, const Vector<S>& rhs) {
  detail::require_field<S>("solve");
  if (rhs.size() != m.rows()) throw DimensionError("solve: right-hand side length differs from row count");
  Matrix<S> aug(m.rows(), m.cols() + 1);
  aug << m, rhs;
  Echelon<S> e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector<S> x = zero_vector<S>(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x(e.pivots[r]) = e.reduced(static_cast<Index>(r), m.cols());
  return Solution<S>{x, kernel(m)};
}

template <class S>
std::optional<Matrix<S>> inverse(const Matrix<S>& m) {
  detail::require_field<S>("inverse");
  if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
  const Index n = m.rows();
  Matrix<S> aug(n, 2 * n);
  aug << m, identity_matrix<S>(n);
  Echelon<S> e = rref(aug);
  if (static_cast<Index>(e.pivots.size()) < n || e.pivots[static_cast<std::size_t>(n - 1)] != n - 1) return std::nullopt;
  return Matrix<S>(e.reduced.rightCols(n));
}

/// Entrywise conversion, e.g. Rational -> Poly or Rational -> GaussianRational.
template <class T, class S>
Matrix<T> convert(const Matrix<S>& m) {
  Matrix<T> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = T(m(i, j));
  return out;
}

template <class T, class S>
Vector<T> convert(const Vector<S>& v) {
  Vector<T> out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = T(v(i));
  return out;
}

template <class S>
std::string vector_to_string(const Vector<S>& v) {
  std::string out = "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += lsa::to_string(v(i));
  }
  return out + ")";
}

template <class S>
std::string matrix_to_string(const Matrix<S>& m) {
  std::string out = "[";
  for (Index i = 0; i < m.rows(); ++i) {
    if (i) out += "; ";
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += lsa::to_string(m(i, j));
    }
  }
  return out + "]";
}

}  // namespace lsa
