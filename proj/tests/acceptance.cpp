// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "properties.hpp"

#include "lsa/affine.hpp"
#include "lsa/classification.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace lsa;
using namespace lsa::testgen;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream why;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) why << what;
      else why << "; " << what;
      pass = false;
    }
  }
};

Subspace<Q> span_with(const std::vector<Bilinear<Q>>& named, const Subspace<Q>& b2, int n) {
  std::vector<Vector<Q>> v;
  for (const auto& g : named) v.push_back(g.coords());
  for (const auto& b : b2.vectors()) v.push_back(b);
  return Subspace<Q>::span(v, n * n);
}

void c1(Outcome& o) {
  for (const auto& entry : catalog_entries()) {
    const AnyAlgebra a = named_algebra(entry.name, symbolic_bindings(entry));
    const bool ok = std::visit([](const auto& x) { return check_kind_identity(x).pass; }, a);
    o.require(ok, entry.name + " fails its identity");
  }
}

void c2(Outcome& o) {
  auto sym = [](const std::string& n) {
    const auto& e = catalog_entry(n);
    return std::get<Algebra<Poly>>(named_algebra(n, symbolic_bindings(e)));
  };
  o.require(is_complete(sym("A4")).pass, "A4(s,t)");
  o.require(is_complete(build::B4<Q>()).pass, "B4");
  o.require(is_complete(sym("H3LSA_i")).pass, "H3LSA_i(p,q)");
  o.require(is_complete(sym("H3LSA_ii")).pass, "H3LSA_ii(m)");
  o.require(is_complete(build::A3<Q>(Q(0))).pass && is_complete(build::A3<Q>(Q(1))).pass, "A3");
  o.require(is_complete(build::I0<Q>()).pass, "I0");
  const auto b2 = is_complete(build::B2c());
  o.require(!b2.pass, "B2c reported complete");
  o.require(b2.witness && vectors_equal(*b2.witness, unit_vector<GaussianRational>(2, 0)), "B2c witness is not e1");
  o.require(!b2.witness_traces.empty() && b2.witness_traces.front() == GaussianRational(2), "B2c trace is not 2");
}

void c3(Outcome& o) {
  const auto d = derivations(build::H3<Q>());
  o.require(d.dim() == 6, "dim Der(H3) = " + std::to_string(d.dim()));
  for (const auto& v : d.vectors()) {
    const auto m = coords_to_map(v, 3);
    o.require(m(0, 2).is_zero() && m(1, 2).is_zero() && m(2, 2) == m(0, 0) + m(1, 1), "pattern mismatch");
  }
}

void c4(Outcome& o) {
  for (int eps : {0, 1}) {
    const auto v = trivial_bimodule(build::A3<Q>(Q(eps)), 1);
    o.require(is_zero_matrix(mul(delta2_matrix(v), delta1_matrix(v))), "delta2 delta1 != 0");
    const auto h = cohomology_h2(v);
    o.require(h.h2_dim == (eps == 0 ? 3 : 1), "h2 of A3(" + std::to_string(eps) + ") = " + std::to_string(h.h2_dim));
    std::vector<Bilinear<Q>> named{a3_cocycle(Q(0), Q(0), Q(1))};
    if (eps == 0) {
      named.push_back(a3_cocycle(Q(1), Q(0), Q(0)));
      named.push_back(a3_cocycle(Q(0), Q(1), Q(0)));
    }
    o.require(span_with(named, h.b2, 3) == h.z2, "Z2 pattern of A3(" + std::to_string(eps) + ")");
  }
}

void c5(Outcome& o) {
  for (const auto& st : lsa_extension_sweep(0xacce55, 100)) {
    o.require(st.instances >= 100 && st.disagreements == 0 && st.valid > 0 && st.invalid > 0,
              "LSA " + st.pair + " (" + std::to_string(st.valid) + " valid, " + std::to_string(st.invalid) +
                  " invalid, " + std::to_string(st.disagreements) + " disagreements)");
  }
  for (const auto& st : lie_extension_sweep(0xacce56, 100)) {
    o.require(st.instances >= 100 && st.disagreements == 0 && st.valid > 0 && st.invalid > 0,
              "Lie " + st.pair + " (" + std::to_string(st.valid) + " valid, " + std::to_string(st.invalid) +
                  " invalid, " + std::to_string(st.disagreements) + " disagreements)");
  }
}

void c6(Outcome& o) {
  const auto k0 = build::A3<Q>(Q(0)), k1 = build::A3<Q>(Q(1));
  std::vector<std::pair<Algebra<Q>, Bilinear<Q>>> cases{
      {k0, a3_cocycle(Q(0), Q(0), Q(1))}, {k0, a3_cocycle(Q(1), Q(1), Q(1))},
      {k0, a3_cocycle(Q(-2), Q(3), Q(1, 2))}, {k1, cohomology_h2(trivial_bimodule(k1, 1)).representatives.at(0)},
      {k1, a3_cocycle(Q(0), Q(0), Q(1, 2))}};
  for (const auto& [k, g] : cases) {
    o.require(exactness_ideal(k, g).dim() == 0, "exactness ideal nonzero for " + g.to_string());
    o.require(lsa_center(central_extend(k, g)) == fiber_subspace<Q>(3, 1), "center differs from fiber for " + g.to_string());
  }
}

void c7(Outcome& o) {
  const auto n = a4_normalize(Q(2), Q(4), Q(2));
  o.require(n.s == Q(1, 2) && n.t == Q(1), "a4_normalize(2,4,2) = (" + to_string(n.s) + "," + to_string(n.t) + ")");
  o.require(n.verified && check_morphism(n.composite, build::A4abc<Q>(Q(2), Q(4), Q(2)), build::A4<Q>(n.s, n.t), true).pass,
            "normalization chain unverified");
  const std::vector<std::array<int, 4>> iso{{1, 1, 3, 1}, {1, 1, -1, -1}, {0, 5, 0, -5}};
  for (const auto& p : iso) {
    const auto r = a4_conjugate(Q(p[0]), Q(p[1]), Q(p[2]), Q(p[3]));
    const std::string tag = std::to_string(p[0]) + "," + std::to_string(p[1]) + "," + std::to_string(p[2]) + "," +
                            std::to_string(p[3]);
    o.require(r.iso && r.search.witness && r.search.verified, "no verified witness for " + tag);
    if (r.search.witness && !r.search.witness->symbolic())
      o.require(check_morphism(r.search.witness->psi_rational(), build::A4<Q>(Q(p[0]), Q(p[1])),
                               build::A4<Q>(Q(p[2]), Q(p[3])), true)
                    .pass,
                "witness fails check_morphism for " + tag);
  }
  const auto d = a4_conjugate(Q(1), Q(1), Q(1), Q(-1));
  bool trail = false;
  for (const auto& line : d.search.trail) trail = trail || line.find("eps = sign(mu)") != std::string::npos;
  o.require(!d.iso && !d.search.witness, "(1,1) vs (1,-1) reported isomorphic");
  o.require(trail, "obstruction trail missing eps = sign(mu)");
}

void c8(Outcome& o) {
  const auto cl = ideal_closure(build::A4<Q>(Q(1), Q(1)), unit_vector<Q>(4, 3));
  o.require(cl.dim() > 0 && cl.dim() < 4, "ideal_closure(e4) is not proper");
  o.require(lie_invariants(build::G4c()).center_dim == 0, "G4 center nonzero");
  o.require(lie_invariants(complexify(build::O4T2<Q>())).center_dim == 1, "complex oscillator center dim != 1");
  const auto b2 = is_complete(build::B2c());
  o.require(!b2.pass && b2.witness, "B2c not shown incomplete");
}

void c9(Outcome& o) {
  std::vector<Algebra<Q>> algebras{build::B4<Q>()};
  for (int s = -2; s <= 2; ++s)
    for (int t = -2; t <= 2; ++t) algebras.push_back(build::A4<Q>(Q(s, 2), Q(t, 3)));
  for (const auto& a : algebras)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) o.require(affine_bracket_identity(a, i, j), "bracket identity fails on " + a.name());
  for (const auto& a : {build::A4<Q>(Q(1), Q(1)), build::B4<Q>()}) {
    const auto rep = exp_group_check(AffineRealization(a), 200, 42, 1e-9);
    o.require(rep.pass, rep.name + " max residual " + std::to_string(rep.max_residual));
  }
}

void c10(Outcome& o) {
  const auto row = row4_check(Q(1), Q(1), 200, 42, 1e-9);
  o.require(row.pass, "row 4 max residual " + std::to_string(row.max_residual));
  for (auto c : {AffineCase::G4st, AffineCase::G4}) {
    const auto a = translation_term_check(c, Q(1), Q(1), 200, 42, 1e-9);
    const auto b = translation_term_check(c, Q(1), Q(1), 200, 42, 1e-9);
    o.require(a.to_json() == b.to_json(), a.name + " not deterministic");
    o.require(a.pass, a.name + " predicted term mismatch " + std::to_string(a.max_residual));
  }
}

void c11(Outcome& o) {
  for (const auto& a : {build::A4<Q>(Q(1), Q(1)), build::B4<Q>()}) {
    const auto rep = simply_transitive_check(AffineRealization(a), 200, 42, 1e-10);
    std::string notes;
    for (const auto& n : rep.notes) notes += (notes.empty() ? "" : ", ") + n;
    o.require(rep.pass, rep.name + ": " + notes);
    std::cout << "  " << rep.name << ": " << (rep.notes.empty() ? "" : rep.notes.front()) << "\n";
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"identity certification of the catalog", c1},
      {"completeness verdicts", c2},
      {"derivations of H3", c3},
      {"second cohomology of A3", c4},
      {"extension conditions versus identities", c5},
      {"exactness of central extensions", c6},
      {"A4 classification round trip", c7},
      {"non-simplicity support", c8},
      {"affine representation and exponential", c9},
      {"row 4 and first translation term", c10},
      {"simply transitive sampling", c11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %zu: %s (%.1fs)%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                o.pass ? "" : " -- ", o.why.str().c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
