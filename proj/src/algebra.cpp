#include "lsa/algebra.hpp"

#include <gmpxx.h>

#include <set>

namespace lsa {
namespace detail {

std::vector<Rational> characteristic_polynomial(const Matrix<Rational>& a) {
  const Index n = a.rows();
  if (a.cols() != n) throw DimensionError("characteristic polynomial of a non-square matrix");
  std::vector<Rational> c(static_cast<std::size_t>(n + 1), Rational(0));
  c[static_cast<std::size_t>(n)] = Rational(1);
  Matrix<Rational> m = zero_matrix<Rational>(n, n);
  const Matrix<Rational> id = identity_matrix<Rational>(n);
  for (Index k = 1; k <= n; ++k) {
    m = mul(a, m);
    const Rational ck = c[static_cast<std::size_t>(n - k + 1)];
    for (Index i = 0; i < n; ++i) m(i, i) += ck;
    c[static_cast<std::size_t>(n - k)] = -trace(mul(a, m)) / Rational(static_cast<long>(k));
  }
  return c;
}

namespace {

std::vector<mpz_class> positive_divisors(const mpz_class& v) {
  mpz_class x = abs(v);
  std::vector<mpz_class> out;
  if (x == 0) return out;
  for (mpz_class d = 1; d * d <= x; ++d) {
    if (x % d != 0) continue;
    out.push_back(d);
    if (d * d != x) out.push_back(x / d);
  }
  return out;
}

Rational evaluate(const std::vector<Rational>& c, const Rational& t) {
  Rational acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

}  // namespace

std::vector<Rational> rational_roots(std::vector<Rational> c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  std::vector<Rational> roots;
  if (c.size() <= 1) return roots;
  if (c.front().is_zero()) {
    roots.push_back(Rational(0));
    while (!c.empty() && c.front().is_zero()) c.erase(c.begin());
    if (c.size() <= 1) return roots;
  }
  mpz_class lcm = 1;
  for (const auto& x : c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.raw().get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& x : c) {
    mpq_class scaled = x.raw() * lcm;
    ints.push_back(scaled.get_num());
  }
  const mpz_class bound("1000000000000");
  if (abs(ints.front()) > bound || abs(ints.back()) > bound)
    throw DomainError("rational_roots: coefficients too large for divisor enumeration");
  std::set<std::string> seen;
  for (const auto& p : positive_divisors(ints.front()))
    for (const auto& q : positive_divisors(ints.back()))
      for (int sign : {1, -1}) {
        mpq_class cand(p * sign, q);
        cand.canonicalize();
        Rational r(cand);
        if (!seen.insert(r.to_string()).second) continue;
        if (evaluate(c, r).is_zero()) roots.push_back(r);
      }
  return roots;
}

}  // namespace detail

IdealScan<Rational> small_ideal_scan(const Algebra<Rational>& g) {
  const int n = g.dim();
  if (n > 6) throw DomainError("small_ideal_scan is limited to dimension 6");
  IdealScan<Rational> out;

  std::vector<Matrix<Rational>> ad;
  std::vector<std::vector<Rational>> eigen;
  for (int i = 0; i < n; ++i) {
    Matrix<Rational> m = zero_matrix<Rational>(n, n);
    for (int j = 0; j < n; ++j) m.col(j) = bracket(g, basis_element(g, i), basis_element(g, j));
    ad.push_back(m);
    eigen.push_back(detail::rational_roots(detail::characteristic_polynomial(m)));
  }

  bool any_empty = false;
  for (const auto& e : eigen) any_empty = any_empty || e.empty();
  if (!any_empty) {
    std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
    for (;;) {
      std::vector<Matrix<Rational>> blocks;
      for (int i = 0; i < n; ++i) {
        Matrix<Rational> m = ad[static_cast<std::size_t>(i)];
        for (int d = 0; d < n; ++d) m(d, d) -= eigen[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]];
        blocks.push_back(m);
      }
      Subspace<Rational> w = detail::common_kernel(blocks, n);
      if (w.dim() > 0) out.line_families.push_back(w);
      std::size_t p = 0;
      while (p < pick.size() && ++pick[p] >= eigen[p].size()) pick[p++] = 0;
      if (p == pick.size()) break;
    }
  }
  out.notes.push_back("one-dimensional ideals searched among rational joint eigenvectors of ad(e_i)");

  const auto full = Subspace<Rational>::full(n);
  out.derived = bracket_span(g, full, full);
  out.codim_derived = n - static_cast<int>(out.derived.dim());
  if (out.codim_derived == 1) out.hyperplanes.push_back(out.derived);
  return out;
}

}  // namespace lsa
