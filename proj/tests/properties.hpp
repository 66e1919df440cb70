#pragma once

#include "generators.hpp"

#include "lsa/catalog.hpp"

#include <string>
#include <vector>

namespace lsa::testgen {

struct SweepStats {
  std::string pair;
  int instances = 0;
  int valid = 0;
  int invalid = 0;
  int disagreements = 0;
  std::string first_disagreement;
};

template <class S>
Algebra<S> direct_sum(const Algebra<S>& a, const Algebra<S>& b) {
  if (a.kind() != b.kind()) throw DomainError("direct_sum: kinds differ");
  const int n = a.dim(), m = b.dim();
  Algebra<S> out(a.name() + "+" + b.name(), a.kind(), n + m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out.at(i, j, k) = a.at(i, j, k);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) out.at(n + i, n + j, n + k) = b.at(i, j, k);
  return out;
}

/// [[A, 0], [C, D]]: keeps the last m coordinates an ideal under transport.
inline Matrix<Q> block_triangular(std::mt19937_64& rng, int n, int m) {
  Matrix<Q> f = zero_matrix<Q>(n + m, n + m);
  f.topLeftCorner(n, n) = invertible(rng, n);
  f.bottomRightCorner(m, m) = invertible(rng, m);
  f.bottomLeftCorner(m, n) = matrix(rng, m, n, 2, 0.5);
  return f;
}

struct ExtensionSource {
  std::string label;
  Algebra<Q> algebra;
  int fiber_dim;
};

/// Algebras whose last coordinates span an ideal; base and fiber dims <= 4.
inline std::vector<ExtensionSource> lsa_sources() {
  Algebra<Q> truncated("P2", Kind::LSA, 2);  // e1 e1 = e2
  truncated.at(0, 0, 1) = Q(1);
  return {
      {"A3(0) by I0 (A4(1,1))", build::A4<Q>(Q(1), Q(1)), 1},
      {"A3(1) by I0 (B4)", build::B4<Q>(), 1},
      {"I0 by trivial 2 (A3(0))", build::A3<Q>(Q(0)), 2},
      {"H3-type by I0 (H3LSA_ii(2))", build::H3LSA_ii<Q>(Q(2)), 1},
      {"I0 by H3LSA_i(1,1)", direct_sum(build::I0<Q>(), build::H3LSA_i<Q>(Q(1), Q(1))), 3},
      {"A3(1) by P2", direct_sum(build::A3<Q>(Q(1)), truncated), 2},
      {"trivial 2 by trivial 2", build::Trivial<Q>(4), 2},
  };
}

inline std::vector<ExtensionSource> lie_sources() {
  return {
      {"E(2) by abelian 1 (oscillator)", build::O4T2<Q>(), 1},
      {"line by H3 (oscillator)", build::O4T2<Q>(), 3},
      {"E(2) by H3", direct_sum(build::E2<Q>(), build::H3<Q>()), 3},
      {"H3 by abelian 1", direct_sum(build::H3<Q>(), build::Abelian<Q>(1)), 1},
      {"abelian 2 by H3", direct_sum(build::Abelian<Q>(2), build::H3<Q>()), 3},
  };
}

/// Random entry of lambda, rho or g moved by a nonzero amount.
inline void perturb(std::mt19937_64& rng, LsaExtensionData<Q>& d) {
  const int n = d.base.dim(), m = d.fiber.dim();
  std::uniform_int_distribution<int> which(0, 2), bi(0, n - 1), fi(0, m - 1), delta(1, 3);
  Q shift(delta(rng));
  switch (which(rng)) {
    case 0: d.lambda[static_cast<std::size_t>(bi(rng))](fi(rng), fi(rng)) += shift; break;
    case 1: d.rho[static_cast<std::size_t>(bi(rng))](fi(rng), fi(rng)) += shift; break;
    default: d.g.at(bi(rng), bi(rng), fi(rng)) += shift; break;
  }
}

inline void perturb(std::mt19937_64& rng, LieExtensionData<Q>& d) {
  const int n = d.base.dim(), m = d.fiber.dim();
  std::uniform_int_distribution<int> which(0, 1), bi(0, n - 1), fi(0, m - 1), delta(1, 3);
  Q shift(delta(rng));
  if (which(rng) == 0 || n < 2) {
    d.phi[static_cast<std::size_t>(bi(rng))](fi(rng), fi(rng)) += shift;
  } else {
    const int i = bi(rng);
    int j = bi(rng);
    if (j == i) j = (i + 1) % n;
    Vector<Q> v = d.omega.value(i, j);
    v(fi(rng)) += shift;
    d.omega.set_skew(i, j, v);
  }
}

/// Valid instances come from transported sources; the rest are perturbed
/// copies, and every sixth instance is fully random data on the same pair.
inline std::vector<SweepStats> lsa_extension_sweep(std::uint64_t seed, int per_pair) {
  std::vector<SweepStats> out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coin(0, 1), six(0, 5);
  for (const auto& src : lsa_sources()) {
    const int m = src.fiber_dim, n = src.algebra.dim() - m;
    SweepStats st{src.label};
    for (int k = 0; k < per_pair; ++k) {
      const auto a = transport(src.algebra, block_triangular(rng, n, m));
      auto d = split_lsa_extension(a, m);
      if (six(rng) == 0) {
        for (auto& l : d.lambda) l = matrix(rng, m, m);
        for (auto& r : d.rho) r = matrix(rng, m, m);
        d.g = bilinear(rng, n, m);
      } else if (coin(rng)) {
        perturb(rng, d);
      }
      const auto r = lsa_extend(d);
      ++st.instances;
      (r.left_symmetry.pass ? st.valid : st.invalid)++;
      if (!r.agree) {
        if (st.disagreements++ == 0) st.first_disagreement = "instance " + std::to_string(k);
      }
    }
    out.push_back(st);
  }
  return out;
}

inline std::vector<SweepStats> lie_extension_sweep(std::uint64_t seed, int per_pair) {
  std::vector<SweepStats> out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coin(0, 1);
  for (const auto& src : lie_sources()) {
    const int m = src.fiber_dim, n = src.algebra.dim() - m;
    SweepStats st{src.label};
    for (int k = 0; k < per_pair; ++k) {
      const auto g = transport(src.algebra, block_triangular(rng, n, m));
      auto d = split_lie_extension(g, m);
      if (coin(rng)) perturb(rng, d);
      const auto r = lie_extend(d);
      ++st.instances;
      (r.jacobi.pass ? st.valid : st.invalid)++;
      if (!r.agree) {
        if (st.disagreements++ == 0) st.first_disagreement = "instance " + std::to_string(k);
      }
    }
    out.push_back(st);
  }
  return out;
}

/// Isomorphism oracle for A4(s,t) ~ A4(s',t'): s' = mu s, t' = sign(mu) t.
inline bool a4_iso_oracle(const Q& s, const Q& t, const Q& s2, const Q& t2) {
  if (s.is_zero()) return s2.is_zero() && (t2 == t || t2 == -t);
  if (s2.is_zero()) return false;
  const Q mu = s2 / s;
  return t2 == (mu.sign() > 0 ? t : -t);
}

}  // namespace lsa::testgen
