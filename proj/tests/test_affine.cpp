#include "lsa/affine.hpp"
#include "lsa/catalog.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace lsa;
using Q = Rational;

namespace {

VectorXd vec(std::initializer_list<double> v) {
  VectorXd out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

double max_abs(const MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("affine generators") {
  const auto a = build::A4<Q>(Q(2), Q(3));
  const auto g4 = affine_hom(a, unit_vector<Q>(4, 3));
  CHECK(is_zero_matrix(g4.linear_exact));
  CHECK(vectors_equal(g4.translation_exact, unit_vector<Q>(4, 3)));
  const auto z = affine_hom(a, zero_vector<Q>(4));
  CHECK(is_zero_matrix(z.linear_exact));
  CHECK(is_zero_vector(z.translation_exact));
  const auto g1 = affine_hom(a, unit_vector<Q>(4, 0));
  CHECK(g1.linear_exact(2, 1) == Q(1));
  CHECK(g1.linear_exact(1, 2) == Q(-1));
  CHECK(g1.linear_exact(3, 0) == Q(2));
  CHECK(g1.linear(3, 0) == 2.0);
}

TEST_CASE("Lie-representation identity on basis pairs") {
  std::vector<Algebra<Q>> complete{build::B4<Q>(), build::A3<Q>(Q(0)), build::A3<Q>(Q(1)),
                                   build::H3LSA_i<Q>(Q(1), Q(2)), build::H3LSA_ii<Q>(Q(3))};
  for (int s = -2; s <= 2; ++s)
    for (int t = -2; t <= 2; ++t) complete.push_back(build::A4<Q>(Q(s, 2), Q(t)));
  for (const auto& a : complete) {
    AffineRealization r(a);
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j) CHECK(affine_bracket_identity(a, i, j));
  }
  Algebra<Q> incomplete("R", Kind::LSA, 1);
  incomplete.at(0, 0, 0) = Q(1);
  CHECK_THROWS_AS(AffineRealization{incomplete}, DomainError);
}

TEST_CASE("exponential examples") {
  const double s = 1.5, t = -0.75;
  AffineRealization r(build::A4<Q>(Q(3, 2), Q(-3, 4)));
  const auto tr = affine_exp(r.hom(vec({0, 0, 0, 1})), 1e-14);
  CHECK(max_abs(tr.linear - MatrixXd::Identity(4, 4)) == 0.0);
  CHECK((tr.translation - vec({0, 0, 0, 1})).norm() == 0.0);

  const double x = 0.9;
  const auto e1 = affine_exp(r.hom(vec({x, 0, 0, 0})), 1e-14);
  MatrixXd want = MatrixXd::Identity(4, 4);
  want(1, 1) = want(2, 2) = std::cos(x);
  want(1, 2) = -std::sin(x);
  want(2, 1) = std::sin(x);
  want(3, 0) = s * x;
  CHECK(max_abs(e1.linear - want) < 1e-12);
  CHECK((e1.translation - vec({x, 0, 0, s * x * x / 2})).cwiseAbs().maxCoeff() < 1e-12);

  const double y = -1.3;
  const auto e2 = affine_exp(r.hom(vec({0, y, 0, 0})), 1e-14);
  want = MatrixXd::Identity(4, 4);
  want(3, 1) = t * y;
  want(3, 2) = y / 2;
  CHECK(max_abs(e2.linear - want) < 1e-14);
  CHECK((e2.translation - vec({0, y, 0, t * y * y / 2})).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("exponential inverse and one-parameter property") {
  AffineRealization r(build::B4<Q>());
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int k = 0; k < 50; ++k) {
    const VectorXd x = vec({u(rng), u(rng), u(rng), u(rng)});
    const double a = u(rng), b = u(rng);
    const auto ex = affine_exp(r.hom(x), 1e-12);
    const auto em = affine_exp(r.hom(VectorXd(-x)), 1e-12);
    CHECK(ex.compose(em).distance(AffineElement::identity(4)) < 1e-10);
    const auto sum = affine_exp(r.hom(VectorXd((a + b) * x)), 1e-12);
    const auto prod = affine_exp(r.hom(VectorXd(a * x)), 1e-12).compose(affine_exp(r.hom(VectorXd(b * x)), 1e-12));
    CHECK(sum.distance(prod) < 1e-10);
  }
}

TEST_CASE("special functions") {
  const auto z = special_functions(0.0);
  CHECK(z.f == 1.0);
  CHECK(z.g == 0.0);
  CHECK(z.h == 0.0);
  CHECK(z.k == 0.5);  // continuous value
  for (double x = -10; x <= 10; x += 0.37) {
    const auto v = special_functions(x);
    CHECK(std::abs(v.f * v.f + v.g * v.g - 2 * v.k) < 1e-12);
  }
  for (double x : {1e-4, -3e-4, 9e-4}) {
    const auto a = special_functions(x), b = special_functions_direct(x);
    CHECK(std::abs(a.f - b.f) < 1e-12);
    CHECK(std::abs(a.g - b.g) < 1e-12);
    CHECK(std::abs(a.k - b.k) < 1e-8);  // direct form loses digits to cancellation here
  }
  const auto p = special_functions(2.0), q = special_functions_direct(2.0);
  CHECK(std::abs(p.h - q.h) < 1e-15);
  CHECK(std::abs(p.h - (2.0 - std::sin(2.0)) / 4.0) < 1e-15);
}

TEST_CASE("closed-form elements") {
  const ClosedFormParams p{0.5, 2.0};
  CHECK(closed_form_element(AffineCase::G4st, p, 0, 0, 0, 0).distance(AffineElement::identity(4)) == 0.0);
  const auto e = closed_form_element(AffineCase::G4st, p, 0, 1, 0, 0);
  CHECK(e.linear(3, 0) == 0.0);
  CHECK(e.linear(3, 1) == doctest::Approx(2.0));
  CHECK(e.linear(3, 2) == doctest::Approx(0.5));
  CHECK(e.linear(3, 3) == 1.0);
  CHECK((e.translation - vec({0, 1, 0, 1.0})).norm() < 1e-15);  // t (y^2+z^2) k(0)
  const double pi = std::numbers::pi;
  const auto r = closed_form_element(AffineCase::G4, p, pi, 0, 0, 1);
  CHECK(r.linear(1, 1) == doctest::Approx(-1.0));
  CHECK(r.linear(2, 2) == doctest::Approx(-1.0));
  CHECK(std::abs(r.linear(2, 1)) < 1e-15);
  CHECK((r.translation - vec({pi, 0, 0, 1})).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("closed-form membership") {
  const ClosedFormParams p{1.0, 1.0};
  const auto e = closed_form_element(AffineCase::G4st, p, 0.3, 0.5, -0.2, 1.0);
  const auto fit = closed_form_membership(e, AffineCase::G4st, p, 1e-9);
  CHECK(fit.residual < 1e-10);
  CHECK(fit.x == doctest::Approx(0.3));
  CHECK(fit.y == doctest::Approx(0.5));
  CHECK(fit.z == doctest::Approx(-0.2));
  CHECK(fit.w == doctest::Approx(1.0));

  AffineRealization r(build::A4<Q>(Q(1), Q(1)));
  const auto ey = affine_exp(r.hom(vec({0, 1, 0, 0})), 1e-14);
  const auto fy = closed_form_membership(ey, AffineCase::G4st, p, 1e-9);
  CHECK(fy.residual < 1e-10);
  CHECK(std::abs(fy.x) < 1e-12);
  CHECK(fy.y == doctest::Approx(1.0));
  CHECK(std::abs(fy.z) < 1e-12);
  CHECK(std::abs(fy.w) < 1e-12);

  // toggling the (y^2+z^2) k(x) term shifts the first translation component by exactly that much
  const auto ex = affine_exp(r.hom(vec({0.7, 0.4, 0, 0})), 1e-14);
  CHECK(std::abs(ex.translation(0) - 0.7) < 1e-14);
  const auto f = closed_form_membership(ex, AffineCase::G4st, p, 1e-9);
  CHECK(f.residual < 1e-10);
  ClosedFormParams toggled = p;
  toggled.flip_first_term = true;
  const auto pf = closed_form_element(AffineCase::G4st, toggled, f.x, f.y, f.z, f.w);
  const double predicted = (f.y * f.y + f.z * f.z) * special_functions(f.x).k;
  CHECK(std::abs(std::abs(pf.translation(0) - ex.translation(0)) - predicted) < 1e-12);
  CHECK(predicted > 1e-3);
}

TEST_CASE("orbit map") {
  AffineRealization r(build::A4<Q>(Q(1), Q(1)));
  const double x = 1.1, w = -0.4;
  const VectorXd o = r.orbit(vec({x, 0, 0, w}));
  CHECK((o - vec({x, 0, 0, w + x * x / 2})).cwiseAbs().maxCoeff() < 1e-13);
  CHECK(r.orbit(vec({0, 0, 0, 0})).norm() == 0.0);
  VectorXld xl(4);
  xl << 0.3L, -0.2L, 0.5L, 1.0L;
  const VectorXd od = r.orbit(vec({0.3, -0.2, 0.5, 1.0}));
  CHECK((xl.size() == 4));
  CHECK((r.orbit_extended(xl).cast<double>() - od).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("verification reports are deterministic and pass at small sample counts") {
  AffineRealization a4(build::A4<Q>(Q(1), Q(1)));
  const auto g = exp_group_check(a4, 30, 7, 1e-9);
  CHECK(g.pass);
  CHECK(g.samples == 30);
  CHECK(g.to_json() == exp_group_check(a4, 30, 7, 1e-9).to_json());
  CHECK(row4_check(Q(1), Q(1), 30, 7, 1e-9).pass);
  CHECK(row4_check(Q(-2), Q(1, 3), 30, 7, 1e-9).pass);
  const auto tt = translation_term_check(AffineCase::G4st, Q(1), Q(1), 30, 7, 1e-9);
  CHECK(tt.pass);
  CHECK(tt.to_json() == translation_term_check(AffineCase::G4st, Q(1), Q(1), 30, 7, 1e-9).to_json());
  CHECK(closed_form_closure_check(AffineCase::G4st, {1.0, 1.0}, 20, 7, 1e-9).pass);
  const auto st = simply_transitive_check(a4, 20, 7, 1e-10);
  CHECK(st.pass);
  CHECK(st.to_json() == simply_transitive_check(a4, 20, 7, 1e-10).to_json());
  CHECK(sample_rng(7, 3)() == sample_rng(7, 3)());
  CHECK(sample_rng(7, 3)() != sample_rng(7, 4)());
}
