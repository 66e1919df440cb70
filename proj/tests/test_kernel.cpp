#include "generators.hpp"

#include "lsa/catalog.hpp"
#include "lsa/expression.hpp"

#include <doctest.h>

using namespace lsa;
using Q = Rational;
using G = GaussianRational;

TEST_CASE("rational canonical form and arithmetic") {
  CHECK(Q(2, 4) == Q(1, 2));
  CHECK(Q(3, -6).to_string() == "-1/2");
  CHECK(Q(1, 3) + Q(1, 6) == Q(1, 2));
  CHECK(Q(-2, 3) * Q(3, 4) == Q(-1, 2));
  CHECK(Q::parse("-1.25") == Q(-5, 4));
  CHECK(Q::parse("6/8").denominator() == "4");
  CHECK_THROWS_AS(Q(1) / Q(0), DomainError);
  // arbitrary precision
  Q big = pow(Q(10), 40) + Q(1);
  CHECK((big - pow(Q(10), 40)) == Q(1));
}

TEST_CASE("gaussian rationals satisfy i^2 = -1") {
  const G i = G::unit();
  CHECK(i * i == G(-1));
  CHECK((G(Q(1), Q(2)) * G(Q(1), Q(-2))) == G(5));
  CHECK(G(Q(1), Q(1)) / G(Q(1), Q(1)) == G(1));
  CHECK(G(Q(3), Q(4)).norm() == Q(25));
}

TEST_CASE("polynomials are canonical") {
  const Poly x = Poly::variable("x"), y = Poly::variable("y");
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK((x - x).is_zero());
  CHECK((x * y).to_string() == (y * x).to_string());
  CHECK((x + Poly(1)).pow(2).substitute("x", Poly(2)) == Poly(9));
  CHECK((x * x * x).reduce_square("x", Poly(Q(2))) == Poly(Q(2)) * x);
}

TEST_CASE("polynomial distributivity on random inputs") {
  std::mt19937_64 rng(7);
  const std::vector<std::string> vars{"a", "b", "c", "d", "e", "f"};
  for (int trial = 0; trial < 60; ++trial) {
    const Poly p = testgen::polynomial(rng, vars, 3, 4), q = testgen::polynomial(rng, vars, 3, 4),
               r = testgen::polynomial(rng, vars, 3, 4);
    CHECK((p + q) * r == p * r + q * r);
    CHECK((p * q) * r == p * (q * r));
  }
}

TEST_CASE("kernel examples") {
  CHECK(kernel(identity_matrix<Q>(2)).dim() == 0);
  Matrix<Q> ones(1, 3);
  ones << Q(1), Q(1), Q(1);
  const auto k = kernel(ones);
  CHECK(k.dim() == 2);
  Vector<Q> v(3);
  v << Q(1), Q(-1), Q(0);
  CHECK(k.contains(v));
  CHECK_THROWS_AS(kernel(Matrix<Poly>(identity_matrix<Poly>(2))), RingError);
}

TEST_CASE("kernel of delta2 for A3(0) with a trivial one-dimensional bimodule") {
  const auto v = trivial_bimodule(build::A3<Q>(Q(0)), 1);
  const Matrix<Q> d2 = delta2_matrix(v);
  CHECK(d2.rows() == 27);
  CHECK(d2.cols() == 9);
  CHECK(kernel(d2).dim() == 5);
}

TEST_CASE("kernel and rank-nullity on random matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 80; ++trial) {
    std::uniform_int_distribution<int> dim(1, 6);
    const int r = dim(rng), c = dim(rng);
    const Matrix<Q> m = testgen::matrix(rng, r, c);
    const auto k = kernel(m);
    CHECK(k.dim() + rank(m) == c);
    for (const auto& b : k.vectors()) CHECK(is_zero_vector(mul(m, b)));
  }
}

TEST_CASE("solve examples") {
  auto s = solve(identity_matrix<Q>(2), Vector<Q>((Vector<Q>(2) << Q(1), Q(2)).finished()));
  REQUIRE(s);
  CHECK(s->particular(0) == Q(1));
  CHECK(s->particular(1) == Q(2));
  Matrix<Q> row(1, 2);
  row << Q(1), Q(1);
  Vector<Q> rhs(1);
  rhs << Q(3);
  s = solve(row, rhs);
  REQUIRE(s);
  CHECK(s->particular(0) == Q(3));
  CHECK(s->particular(1) == Q(0));
  CHECK(s->homogeneous.dim() == 1);
  CHECK(s->homogeneous.contains((Vector<Q>(2) << Q(1), Q(-1)).finished()));
  Matrix<Q> sing(2, 2);
  sing << Q(1), Q(1), Q(1), Q(1);
  CHECK_FALSE(solve(sing, Vector<Q>((Vector<Q>(2) << Q(0), Q(1)).finished())));
  CHECK_THROWS_AS(solve(row, Vector<Q>(2)), DimensionError);
}

TEST_CASE("solve the rotation-scaling system symbolically") {
  // [[f, -g], [g, f]] with symbolic f, g; at x = pi, f = 0 and g = 2/pi
  const Poly f = Poly::variable("f"), g = Poly::variable("g");
  Matrix<Poly> m(2, 2);
  m << f, -g, g, f;
  CHECK(determinant(m) == f * f + g * g);
  // rational surrogate with 1/pi -> u: f = 0, g = 2u
  Matrix<Q> at(2, 2);
  const Q u(7, 22);
  at << Q(0), -Q(2) * u, Q(2) * u, Q(0);
  CHECK(determinant(at) == Q(4) * u * u);
  Vector<Q> rhs(2);
  rhs << Q(1), Q(1);
  auto s = solve(at, rhs);
  REQUIRE(s);
  CHECK(vectors_equal(mul(at, s->particular), rhs));
}

TEST_CASE("power traces") {
  Matrix<Q> n = zero_matrix<Q>(3, 3);
  n(0, 1) = Q(1);
  n(1, 2) = Q(5);
  n(0, 2) = Q(-2);
  auto t = power_traces(n, 3);
  for (const auto& x : t) CHECK(x.is_zero());
  // right multiplication by e1 in the complex algebra B2
  const auto b2 = build::B2c();
  auto tr = power_traces(operator_matrix(b2, Side::Right, basis_element(b2, 0)), 2);
  CHECK(tr[0] == G(2));
  CHECK(tr[1] == G(4));
  CHECK_THROWS_AS(power_traces(Matrix<Q>(2, 3), 2), DimensionError);
}

TEST_CASE("generic right multiplication of A4(s,t) has vanishing power traces") {
  auto any = named_algebra("A4", {{"s", "s"}, {"t", "t"}});
  const auto& a = std::get<Algebra<Poly>>(any);
  Vector<Poly> x = generic_element(a);
  auto traces = power_traces(operator_matrix(a, Side::Right, x), 4);
  for (const auto& t : traces) CHECK(t.is_zero());
}

TEST_CASE("power traces are conjugation invariant") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix<Q> m = testgen::matrix(rng, 4, 4);
    const Matrix<Q> p = testgen::invertible(rng, 4);
    const Matrix<Q> c = mul(mul(p, m), *inverse(p));
    CHECK(power_traces(c, 4) == power_traces(m, 4));
  }
}

TEST_CASE("subspace canonical form") {
  std::vector<Vector<Q>> a{(Vector<Q>(3) << Q(1), Q(2), Q(0)).finished(), (Vector<Q>(3) << Q(0), Q(1), Q(1)).finished()};
  std::vector<Vector<Q>> b{(Vector<Q>(3) << Q(1), Q(3), Q(1)).finished(), (Vector<Q>(3) << Q(2), Q(4), Q(0)).finished()};
  CHECK(Subspace<Q>::span(a, 3) == Subspace<Q>::span(b, 3));
  const auto s = Subspace<Q>::span(a, 3);
  for (Index r = 0; r < s.dim(); ++r) CHECK(s.basis()(r, s.pivots()[static_cast<std::size_t>(r)]) == Q(1));
}

TEST_CASE("scalar text syntax") {
  CHECK(parse_scalar<Q>("1/2 + 3") == Q(7, 2));
  CHECK(parse_scalar<G>("2 + 3*i") == G(Q(2), Q(3)));
  CHECK(parse_scalar<Poly>("(x + 1)^2", {"x"}) == (Poly::variable("x") + Poly(1)).pow(2));
  CHECK_THROWS_AS(parse_scalar<Q>("1 +"), ParseError);
}
