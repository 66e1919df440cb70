#include "lsa/catalog.hpp"
#include "lsa/text_format.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace lsa;
using Q = Rational;

namespace {

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class S>
ExpectedRecord measure(const Algebra<S>& a) {
  ExpectedRecord r;
  if (a.kind() == Kind::LSA) {
    r.complete = is_complete(a).pass;
    r.novikov = is_novikov(a).pass;
    r.translation_dim = static_cast<int>(translation_ideal(a).dim());
    r.lsa_center_dim = static_cast<int>(lsa_center(a).dim());
    r.lie = lie_invariants(associated_lie(a));
  } else {
    r.lie = lie_invariants(a);
  }
  return r;
}

template <class T>
void compare(const std::optional<T>& want, const std::optional<T>& got, const std::string& what) {
  if (!want) return;
  INFO(what);
  REQUIRE(got);
  CHECK(*want == *got);
}

}  // namespace

TEST_CASE("every catalog entry passes its kind identity symbolically") {
  for (const auto& entry : catalog_entries()) {
    INFO(entry.name);
    const AnyAlgebra any = named_algebra(entry.name, symbolic_bindings(entry));
    std::visit([](const auto& a) { CHECK(check_kind_identity(a).pass); }, any);
    if (!entry.params.empty()) CHECK(std::holds_alternative<Algebra<Poly>>(any));
  }
}

TEST_CASE("every catalog entry matches its expected record at the sample parameters") {
  for (const auto& entry : catalog_entries()) {
    INFO(entry.name);
    const AnyAlgebra any = named_algebra(entry.name, entry.sample);
    std::visit(
        [&](const auto& a) {
          using S = typename std::decay_t<decltype(a)>::Scalar;
          if constexpr (ExactField<S>) {
            const ExpectedRecord got = measure(a);
            compare(entry.expected.complete, got.complete, "complete");
            compare(entry.expected.novikov, got.novikov, "novikov");
            compare(entry.expected.translation_dim, got.translation_dim, "translation");
            compare(entry.expected.lsa_center_dim, got.lsa_center_dim, "center");
            compare(entry.expected.lie, got.lie, "lie invariants");
          } else {
            FAIL("sample parameters must be numeric");
          }
        },
        any);
  }
}

TEST_CASE("named_algebra examples and errors") {
  const auto a = std::get<Algebra<Q>>(named_algebra("A4", {{"s", "1"}, {"t", "1/2"}}));
  CHECK(a.at(1, 2, 3) == Q(1, 2));
  CHECK(a.at(1, 1, 3) == Q(1, 2));
  const auto i0 = std::get<Algebra<Q>>(named_algebra("I0", {}));
  CHECK(i0.dim() == 1);
  CHECK(is_zero_vector(i0.product(0, 0)));
  const auto g = std::get<Algebra<Q>>(named_algebra("OscillatorLie", {{"lambda", "2"}}));
  CHECK(g.at(3, 0, 1) == Q(2));
  CHECK_THROWS_AS(named_algebra("Nope", {}), UnknownName);
  CHECK_THROWS_AS(named_algebra("A4", {{"s", "1"}}), DomainError);
  CHECK_THROWS_AS(named_algebra("A4", {{"s", "1"}, {"t", "1"}, {"u", "2"}}), DomainError);
}

TEST_CASE("specialization commutes with construction") {
  for (const auto& entry : catalog_entries()) {
    if (entry.params.empty() || entry.ring != "rational") continue;
    INFO(entry.name);
    const auto sym = std::get<Algebra<Poly>>(named_algebra(entry.name, symbolic_bindings(entry)));
    std::map<std::string, Q> values;
    for (const auto& [k, v] : entry.sample) values[k] = Q::parse(v);
    const auto direct = std::get<Algebra<Q>>(named_algebra(entry.name, entry.sample));
    CHECK(specialize(sym, values) == direct);
  }
}

TEST_CASE("basis changes stored in the catalog") {
  CHECK(check_morphism(build::O4_relabeling<Q>(), build::O4<Q>(), build::O4T2<Q>(), true).pass);
  CHECK(check_morphism(build::A4_scaling<Q>(), build::A4abc<Q>(Q(1), Q(2), Q(1)), build::A4<Q>(Q(1, 2), Q(1)), true).pass);
  // B4bis(gamma) -> B4 via e4 -> 2 gamma e4'
  Matrix<Q> f = identity_matrix<Q>(4);
  f(3, 3) = Q(1) / (Q(2) * Q(3));
  CHECK(check_morphism(f, build::B4bis<Q>(Q(3)), build::B4<Q>(), true).pass);
}

TEST_CASE("algebra text format") {
  const auto t = parse_algebra("algebra T\nfield rational\ndim 2\n");
  REQUIRE(std::holds_alternative<Algebra<Q>>(t));
  CHECK(std::get<Algebra<Q>>(t) == build::Trivial<Q>(2));

  const auto fixture = load_algebra_file(std::string(LSA_FIXTURES) + "/a4_st.alg");
  const auto sym = std::get<Algebra<Poly>>(named_algebra("A4", {{"s", "s"}, {"t", "t"}}));
  CHECK(std::get<Algebra<Poly>>(fixture) == sym);

  CHECK_THROWS_AS(parse_algebra("algebra X\ndim 4\nproduct e1 e2 = 1/2*e4\nproduct e1 e2 = e3\n"), ParseError);
  try {
    parse_algebra("algebra X\ndim 2\nproduct e1 e3 = e1\n");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_algebra("algebra X\ndim 2\nproduct e1 e2 = i*e1\n"), ParseError);
  const auto lie = parse_algebra("algebra L\ndim 3\nkind lie\n[e1,e2] = e3\n");
  CHECK(std::get<Algebra<Q>>(lie) == build::H3<Q>());
  CHECK_THROWS_AS(parse_algebra("algebra X\ndim 3\nbracket e1 e2 = e3\n"), ParseError);
}

TEST_CASE("serialization round trip") {
  for (const auto& entry : catalog_entries()) {
    INFO(entry.name);
    const AnyAlgebra any = named_algebra(entry.name, symbolic_bindings(entry));
    const std::string text = serialize_any(any);
    const AnyAlgebra back = parse_algebra(text);
    CHECK(serialize_any(back) == text);
    std::visit(
        [&](const auto& a) {
          using A = std::decay_t<decltype(a)>;
          REQUIRE(std::holds_alternative<A>(back));
          CHECK(std::get<A>(back) == a);
        },
        any);
  }
}
