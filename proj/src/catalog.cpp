#include "lsa/catalog.hpp"

#include "lsa/expression.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace lsa {

namespace {

LieInvariants invariants(std::vector<int> derived, std::vector<int> lower, int center) {
  LieInvariants inv;
  inv.derived_series = std::move(derived);
  inv.lower_central_series = std::move(lower);
  inv.center_dim = center;
  inv.solvable = inv.derived_series.back() == 0;
  inv.nilpotent = inv.lower_central_series.back() == 0;
  return inv;
}

const LieInvariants kOscillator = invariants({4, 3, 1, 0}, {4, 3}, 1);
const LieInvariants kHeisenberg = invariants({3, 1, 0}, {3, 1, 0}, 1);
const LieInvariants kEuclidean = invariants({3, 2, 0}, {3, 2}, 0);
const LieInvariants kG4 = invariants({4, 3, 1, 0}, {4, 3}, 0);

std::vector<CatalogEntry> make_entries() {
  std::vector<CatalogEntry> v;
  auto add = [&](std::string name, Kind kind, std::string ring, std::vector<std::string> params,
                 std::map<std::string, std::string> sample, std::string description, ExpectedRecord e) {
    v.push_back({std::move(name), kind, std::move(ring), std::move(params), std::move(sample), std::move(description),
                 std::move(e)});
  };
  add("O4", Kind::Lie, "rational", {}, {}, "oscillator algebra, introduction basis", {{}, {}, kOscillator, {}, {}});
  add("O4T2", Kind::Lie, "rational", {}, {}, "oscillator algebra, classification basis", {{}, {}, kOscillator, {}, {}});
  add("OscillatorLie", Kind::Lie, "rational", {"lambda"}, {{"lambda", "2"}},
      "[e1,e2]=e3, [e4,e1]=lambda e2, [e4,e2]=-lambda e1", {{}, {}, kOscillator, {}, {}});
  add("H3", Kind::Lie, "rational", {}, {}, "Heisenberg algebra", {{}, {}, kHeisenberg, {}, {}});
  add("E2", Kind::Lie, "rational", {}, {}, "Euclidean motions of the plane", {{}, {}, kEuclidean, {}, {}});
  add("Abelian2", Kind::Lie, "rational", {}, {}, "abelian Lie algebra of dimension 2",
      {{}, {}, invariants({2, 0}, {2, 0}, 2), {}, {}});
  add("I0", Kind::LSA, "rational", {}, {}, "one-dimensional trivial LSA",
      {true, true, invariants({1, 0}, {1, 0}, 1), 1, 1});
  add("A4", Kind::LSA, "rational", {"s", "t"}, {{"s", "1"}, {"t", "1"}}, "two-parameter complete LSA on O4",
      {true, false, kOscillator, 1, 1});
  add("A4abc", Kind::LSA, "rational", {"alpha", "beta", "gamma"}, {{"alpha", "2"}, {"beta", "4"}, {"gamma", "2"}},
      "central extension of A3(0) by the (alpha,beta,gamma) class", {true, false, kOscillator, 1, 1});
  add("B4", Kind::LSA, "rational", {}, {}, "complete LSA on O4 over A3(1)", {true, false, kOscillator, 1, 1});
  add("B4bis", Kind::LSA, "rational", {"gamma"}, {{"gamma", "1"}}, "central extension of A3(1) by the gamma class",
      {true, false, kOscillator, 1, 1});
  add("H3LSA_i", Kind::LSA, "rational", {"p", "q"}, {{"p", "0"}, {"q", "0"}}, "complete LSA on H3, first class",
      {true, true, kHeisenberg, 1, 1});
  add("H3LSA_ii", Kind::LSA, "rational", {"m"}, {{"m", "1"}}, "complete LSA on H3, second class",
      {true, true, kHeisenberg, 1, 1});
  add("A3", Kind::LSA, "rational", {"eps"}, {{"eps", "1"}}, "complete LSA on E(2)", {true, false, kEuclidean, 0, 0});
  add("B2c", Kind::LSA, "gaussian", {}, {}, "two-dimensional complex simple LSA",
      {false, false, invariants({2, 1, 0}, {2, 1}, 0), 0, 0});
  add("B4c", Kind::LSA, "gaussian", {}, {}, "four-dimensional complex simple complete LSA", {true, {}, kG4, {}, {}});
  add("G4c", Kind::Lie, "gaussian", {}, {}, "Lie algebra of B4c", {{}, {}, kG4, {}, {}});
  return v;
}

Poly parse_binding(const std::string& name, const std::string& text) {
  IdentifierResolver<Poly> any_variable = [](const std::string& id) -> std::optional<ParsedValue<Poly>> {
    if (id == "i") throw std::string("'i' is not allowed in a real parameter");
    ParsedValue<Poly> v;
    v.scalar = Poly::variable(id);
    return v;
  };
  try {
    ExpressionParser<Poly> p(text, any_variable);
    return p.parse().scalar;
  } catch (const ParseError& e) {
    throw ParseError("parameter " + name + ": " + std::string(e.what()), e.line(), e.column());
  }
}

template <class S>
Algebra<S> build_real(const std::string& name, const std::map<std::string, S>& v) {
  auto p = [&](const char* key) { return v.at(key); };
  if (name == "O4") return build::O4<S>();
  if (name == "O4T2") return build::O4T2<S>();
  if (name == "OscillatorLie") return build::OscillatorLie<S>(p("lambda"));
  if (name == "H3") return build::H3<S>();
  if (name == "E2") return build::E2<S>();
  if (name == "Abelian2") return build::Abelian<S>(2);
  if (name == "I0") return build::I0<S>();
  if (name == "A4") return build::A4<S>(p("s"), p("t"));
  if (name == "A4abc") return build::A4abc<S>(p("alpha"), p("beta"), p("gamma"));
  if (name == "B4") return build::B4<S>();
  if (name == "B4bis") return build::B4bis<S>(p("gamma"));
  if (name == "H3LSA_i") return build::H3LSA_i<S>(p("p"), p("q"));
  if (name == "H3LSA_ii") return build::H3LSA_ii<S>(p("m"));
  if (name == "A3") return build::A3<S>(p("eps"));
  throw UnknownName("unknown algebra '" + name + "'");
}

template <class S>
void certify(const Algebra<S>& a) {
  auto v = check_kind_identity(a);
  if (!v.pass)
    throw IdentityFailure("catalog algebra '" + a.name() + "' fails its " + kind_name(a.kind()) + " identity at " +
                          v.witness());
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = make_entries();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return e;
  throw UnknownName("unknown algebra '" + name + "'");
}

std::map<std::string, std::string> symbolic_bindings(const CatalogEntry& e) {
  std::map<std::string, std::string> out;
  for (const auto& p : e.params) out[p] = p;
  return out;
}

AnyAlgebra named_algebra(const std::string& name, const std::map<std::string, std::string>& bindings) {
  const CatalogEntry& entry = catalog_entry(name);
  for (const auto& [k, _] : bindings)
    if (std::find(entry.params.begin(), entry.params.end(), k) == entry.params.end())
      throw DomainError("algebra '" + name + "' has no parameter '" + k + "'");

  if (entry.ring == "gaussian") {
    Algebra<GaussianRational> a = name == "B2c" ? build::B2c() : name == "B4c" ? build::B4c() : build::G4c();
    certify(a);
    return a;
  }

  std::map<std::string, Poly> values;
  std::set<std::string> variables;
  for (const auto& p : entry.params) {
    auto it = bindings.find(p);
    if (it == bindings.end()) throw DomainError("algebra '" + name + "' needs parameter '" + p + "'");
    Poly v = parse_binding(p, it->second);
    for (const auto& var : v.variables()) variables.insert(var);
    values.emplace(p, std::move(v));
  }

  if (variables.empty()) {
    std::map<std::string, Rational> r;
    for (const auto& [k, v] : values) r.emplace(k, v.constant_value());
    Algebra<Rational> a = build_real<Rational>(name, r);
    certify(a);
    return a;
  }
  Algebra<Poly> a = build_real<Poly>(name, values);
  a.set_params(std::vector<std::string>(variables.begin(), variables.end()));
  certify(a);
  return a;
}

}  // namespace lsa
