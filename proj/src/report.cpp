#include "lsa/report.hpp"

#include "lsa/catalog.hpp"
#include "lsa/classification.hpp"
#include "lsa/extension_io.hpp"
#include "lsa/text_format.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

namespace lsa {

using json = nlohmann::json;
using Q = Rational;

void Report::add(ReportCheck c) {
  if (c.status == "fail") ok = false;
  checks.push_back(std::move(c));
}

json Report::to_json_value() const {
  json j = extra;
  j["tool_version"] = kToolVersion;
  j["target"] = target;
  if (seed) j["seed"] = *seed;
  json arr = json::array();
  for (const auto& c : checks) {
    json o;
    o["name"] = c.name;
    o["status"] = c.status;
    if (c.witness) o["witness"] = *c.witness;
    if (c.residual) o["residual"] = *c.residual;
    if (!c.details.is_null()) o["details"] = c.details;
    arr.push_back(std::move(o));
  }
  j["checks"] = std::move(arr);
  return j;
}

std::string Report::to_json() const { return to_json_value().dump(2) + "\n"; }

std::string Report::to_text() const {
  std::ostringstream os;
  os << "target: " << target << "\n";
  if (seed) os << "seed: " << *seed << "\n";
  for (const auto& [k, v] : extra.items()) {
    if (!v.is_string()) {
      os << k << ": " << v.dump() << "\n";
      continue;
    }
    const std::string text = v.get<std::string>();
    if (text.find('\n') == std::string::npos) {
      os << k << ": " << text << "\n";
      continue;
    }
    os << k << ":\n";
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) os << "  " << line << "\n";
  }
  for (const auto& c : checks) {
    os << c.status << " " << c.name;
    if (c.residual) os << " residual=" << *c.residual;
    if (c.witness) os << " witness=" << *c.witness;
    if (!c.details.is_null()) os << " " << c.details.dump();
    os << "\n";
  }
  return os.str();
}

void to_json(json& j, const LieInvariants& inv);

namespace {

std::string status_of(bool pass) { return pass ? "pass" : "fail"; }

bool looks_like_path(const std::string& t) {
  return t.find('/') != std::string::npos || t.find('.') != std::string::npos || std::filesystem::exists(t);
}

template <class S>
json subspace_json(const Subspace<S>& s) {
  json basis = json::array();
  for (const auto& v : s.vectors()) basis.push_back(vector_to_string(v));
  return {{"dim", s.dim()}, {"basis", basis}};
}

json invariants_json(const LieInvariants& inv) {
  return json{{"derived_series", inv.derived_series},
          {"lower_central_series", inv.lower_central_series},
          {"center_dim", inv.center_dim},
          {"solvable", inv.solvable},
          {"nilpotent", inv.nilpotent}};
}

template <class S>
std::string bilinear_text(const Bilinear<S>& g) {
  std::string out;
  for (int i = 0; i < g.base_dim(); ++i)
    for (int j = 0; j < g.base_dim(); ++j) {
      Vector<S> v = g.value(i, j);
      if (is_zero_vector(v)) continue;
      if (!out.empty()) out += ", ";
      out += "g(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ")=" +
             (v.size() == 1 ? to_string(v(0)) : vector_to_string(v));
    }
  return out.empty() ? "0" : out;
}

/// Compares `actual` with an optional expectation; returns the status.
template <class T>
std::string against(const std::optional<T>& expected, const T& actual, bool compare, bool& mismatch, json& details) {
  if (!compare || !expected) return "info";
  details["expected"] = *expected;
  if (!(*expected == actual)) mismatch = true;
  return status_of(*expected == actual);
}

template <class S>
void suite_checks(Report& rep, const Algebra<S>& a, const CatalogEntry* entry, bool at_sample) {
  bool mismatch = false;
  rep.extra["kind"] = kind_name(a.kind());
  rep.extra["ring"] = ring_name<S>();
  rep.extra["dim"] = a.dim();

  if (a.kind() == Kind::Bilinear) {
    rep.add({"kind", "info", std::nullopt, std::nullopt, json{{"note", "no identity is attached to bilinear kind"}}});
    return;
  }

  const bool lie = a.kind() == Kind::Lie;
  {
    auto v = check_kind_identity(a);
    ReportCheck c{lie ? "jacobi" : "left-symmetry", status_of(v.pass)};
    if (!v.pass) c.witness = v.witness();
    if (!v.pass) mismatch = true;
    rep.add(c);
  }
  constexpr bool field = ExactField<S>;
  const ExpectedRecord* ex = entry ? &entry->expected : nullptr;
  auto expected = [&](auto member) { return ex ? ex->*member : std::remove_cvref_t<decltype(ex->*member)>{}; };

  if (!lie) {
    auto cv = is_complete(a);
    json d;
    json traces = json::array();
    for (const auto& t : cv.generic_traces) traces.push_back(to_string(t));
    d["generic_traces"] = traces;
    ReportCheck c{"completeness", "", std::nullopt, std::nullopt, d};
    if (!cv.pass && cv.witness) {
      json wt = json::array();
      for (const auto& t : cv.witness_traces) wt.push_back(to_string(t));
      c.witness = vector_to_string(*cv.witness);
      c.details["witness_traces"] = wt;
    }
    bool mm = false;
    // completeness of each catalog family holds for all parameter values
    std::string st = against(expected(&ExpectedRecord::complete), cv.pass, entry != nullptr, mm, c.details);
    c.status = status_of(cv.pass);
    if (st != "info") c.details["matches_expected"] = !mm;
    mismatch = mismatch || mm;
    rep.add(c);

    auto nv = is_novikov(a);
    ReportCheck n{"novikov", status_of(nv.pass), std::nullopt, std::nullopt, json::object()};
    if (!nv.pass) n.witness = nv.witness();
    mm = false;
    st = against(expected(&ExpectedRecord::novikov), nv.pass, at_sample, mm, n.details);
    if (st != "info") n.details["matches_expected"] = !mm;
    mismatch = mismatch || mm;
    if (n.details.empty()) n.details = json();
    rep.add(n);
  }

  if constexpr (field) {
    if (!lie) {
      const auto tr = translation_ideal(a);
      json d = subspace_json(tr);
      bool mm = false;
      std::string st =
          against(expected(&ExpectedRecord::translation_dim), static_cast<int>(tr.dim()), at_sample, mm, d);
      mismatch = mismatch || mm;
      rep.add({"translation-ideal", st, std::nullopt, std::nullopt, d});

      const auto ce = lsa_center(a);
      d = subspace_json(ce);
      mm = false;
      st = against(expected(&ExpectedRecord::lsa_center_dim), static_cast<int>(ce.dim()), at_sample, mm, d);
      mismatch = mismatch || mm;
      rep.add({"lsa-center", st, std::nullopt, std::nullopt, d});
    }
    const Algebra<S> g = lie ? a : associated_lie(a);
    const auto jac = check_jacobi(g);
    if (!lie) {
      ReportCheck c{"associated-lie-jacobi", status_of(jac.pass)};
      if (!jac.pass) c.witness = jac.witness();
      rep.add(c);
    }
    const LieInvariants inv = lie_invariants(g);
    json d = invariants_json(inv);
    bool mm = false;
    std::string st = against(expected(&ExpectedRecord::lie), inv, at_sample, mm, d);
    mismatch = mismatch || mm;
    rep.add({"lie-invariants", st, std::nullopt, std::nullopt, d});
    rep.add({lie ? "center" : "lie-center", "info", std::nullopt, std::nullopt, subspace_json(lie_center(g))});
  } else {
    const json note{{"note", "needs numeric parameters"}};
    if (!lie) {
      rep.add({"translation-ideal", "info", std::nullopt, std::nullopt, note});
      rep.add({"lsa-center", "info", std::nullopt, std::nullopt, note});
    }
    rep.add({"lie-invariants", "info", std::nullopt, std::nullopt, note});
  }

  json ed;
  ed["compared"] = entry ? (at_sample ? "all recorded properties" : "completeness only (parameters differ from the sample)")
                         : "none (no catalog record)";
  rep.add({"expectations", status_of(!mismatch), std::nullopt, std::nullopt, ed});
}

}  // namespace

void to_json(json& j, const LieInvariants& inv) { j = invariants_json(inv); }

AnyAlgebra resolve_target(const std::string& target, const std::map<std::string, std::string>& params) {
  if (looks_like_path(target)) {
    if (!params.empty()) throw DomainError("--param applies to catalog names only");
    return load_algebra_file(target);
  }
  const CatalogEntry& e = catalog_entry(target);
  std::map<std::string, std::string> b = params;
  for (const auto& p : e.params) b.emplace(p, p);
  return named_algebra(target, b);
}

Report verify_suite(const std::string& target, const std::map<std::string, std::string>& params) {
  Report rep;
  rep.target = target;
  const AnyAlgebra any = resolve_target(target, params);
  const CatalogEntry* entry = nullptr;
  bool at_sample = false;
  if (!looks_like_path(target)) {
    entry = &catalog_entry(target);
    at_sample = true;
    for (const auto& p : entry->params) {
      auto it = params.find(p);
      const auto want = entry->sample.at(p);
      if (it == params.end() || Rational::parse(it->second) != Rational::parse(want)) at_sample = false;
    }
    if (!params.empty()) {
      json b = json::object();
      for (const auto& [k, v] : params) b[k] = v;
      rep.extra["params"] = b;
    }
  }
  std::visit([&](const auto& a) { suite_checks(rep, a, entry, at_sample); }, any);
  std::sort(rep.checks.begin(), rep.checks.end(),
            [](const ReportCheck& x, const ReportCheck& y) { return x.name < y.name; });
  // the suite result is the expectation verdict; property failures such as a
  // non-Novikov algebra are informative
  rep.ok = true;
  for (const auto& c : rep.checks)
    if ((c.name == "expectations" || c.name == "left-symmetry" || c.name == "jacobi") && c.status == "fail")
      rep.ok = false;
  return rep;
}

namespace {

template <class S>
void cohomology_checks(Report& rep, const Algebra<S>& k, int m) {
  if constexpr (!ExactField<S>) {
    throw RingError("cohomology needs numeric parameters");
  } else {
    if (k.kind() != Kind::LSA) throw DomainError("cohomology is defined here for LSAs");
    const Bimodule<S> v = trivial_bimodule(k, m);
    const Matrix<S> d1 = delta1_matrix(v), d2 = delta2_matrix(v);
    const Matrix<S> comp = mul(d2, d1);
    rep.add({"delta2-delta1", status_of(is_zero_matrix(comp)), std::nullopt, std::nullopt,
             json{{"delta1_shape", {d1.rows(), d1.cols()}}, {"delta2_shape", {d2.rows(), d2.cols()}}}});
    const auto h = cohomology_h2(v);
    json z = json::array();
    for (const auto& b : h.z2.vectors()) z.push_back(bilinear_text(Bilinear<S>::from_coords(k.dim(), m, b)));
    rep.add({"z2", "info", std::nullopt, std::nullopt, json{{"dim", h.z2.dim()}, {"basis", z}}});
    rep.add({"b2", "info", std::nullopt, std::nullopt, json{{"dim", h.b2.dim()}}});
    json reps = json::array();
    for (const auto& g : h.representatives) reps.push_back(bilinear_text(g));
    rep.add({"h2", "info", std::nullopt, std::nullopt, json{{"dim", h.h2_dim}, {"representatives", reps}}});
    bool all_cocycles = true;
    for (const auto& g : h.representatives) all_cocycles = all_cocycles && is_cocycle(v, g);
    rep.add({"representatives-are-cocycles", status_of(all_cocycles)});
    rep.extra["fiber_dim"] = m;
  }
}

}  // namespace

Report cohomology_report(const std::string& target, const std::map<std::string, std::string>& params, int m) {
  if (m < 1) throw DomainError("fiber dimension must be positive");
  Report rep;
  rep.target = target;
  const AnyAlgebra any = resolve_target(target, params);
  std::visit([&](const auto& a) { cohomology_checks(rep, a, m); }, any);
  return rep;
}

Report extension_report(const std::string& path) {
  Report rep;
  rep.target = path;
  const ExtensionSpec parsed = load_extension_file(path);
  auto add_conditions = [&](const std::vector<ConditionCheck>& cs, const std::string& prefix) {
    for (const auto& c : cs) {
      ReportCheck r{prefix + c.name, c.applicable ? status_of(c.pass) : "info"};
      if (!c.applicable) r.details = json{{"note", "not applicable"}};
      if (!c.witness.empty()) r.witness = c.witness;
      rep.add(r);
    }
  };
  if (const auto* lsa = std::get_if<LsaExtensionData<Q>>(&parsed)) {
    const auto r = lsa_extend(*lsa);
    rep.extra["type"] = "lsa";
    add_conditions(r.conditions, "");
    if (r.trivial_fiber.front().applicable) add_conditions(r.trivial_fiber, "");
    if (r.one_dim_base.front().applicable) add_conditions(r.one_dim_base, "");
    ReportCheck ls{"left-symmetry", status_of(r.left_symmetry.pass)};
    if (!r.left_symmetry.pass) ls.witness = r.left_symmetry.witness();
    rep.add(ls);
    rep.add({"conditions-agree-with-identity", status_of(r.agree)});
    rep.extra["algebra"] = serialize_algebra(r.algebra);
  } else {
    const auto& lie = std::get<LieExtensionData<Q>>(parsed);
    const auto r = lie_extend(lie);
    rep.extra["type"] = "lie";
    add_conditions(r.conditions, "");
    ReportCheck jc{"jacobi", status_of(r.jacobi.pass)};
    if (!r.jacobi.pass) jc.witness = r.jacobi.witness();
    rep.add(jc);
    rep.add({"conditions-agree-with-identity", status_of(r.agree)});
    rep.extra["algebra"] = serialize_algebra(r.algebra);
  }
  return rep;
}

Report classify_a4_report(const Q& s, const Q& t, const Q& sp, const Q& tp) {
  Report rep;
  rep.target = "A4(" + s.to_string() + "," + t.to_string() + ") vs A4(" + sp.to_string() + "," + tp.to_string() + ")";
  const ConjugacyReport c = a4_conjugate(s, t, sp, tp);
  rep.extra["decision"] = c.iso ? "isomorphic" : "not-isomorphic";
  rep.extra["claimed_criterion"] = {{"holds", c.claimed_criterion}, {"statement", c.claimed_statement}};
  rep.extra["derived_criterion"] = {{"holds", c.derived_criterion}, {"statement", c.derived_statement}};
  rep.extra["note"] = c.note;
  if (c.search.witness) {
    const IsoWitness& w = *c.search.witness;
    json wj;
    wj["mu"] = w.mu.to_string();
    wj["eps"] = w.eps;
    wj["r"] = w.r.to_string();
    if (w.b) wj["b"] = w.b->to_string();
    if (w.c) wj["c"] = w.c->to_string();
    wj["symbolic"] = w.symbolic();
    wj["psi"] = matrix_to_string(w.psi());
    wj["summary"] = w.summary();
    rep.extra["witness"] = wj;
    ReportCheck v{"witness-verification", status_of(c.search.verified)};
    if (!c.search.verified) v.witness = c.search.verification;
    rep.add(v);
  } else {
    rep.extra["obstruction"] = c.search.trail;
    rep.add({"witness-verification", "info", std::nullopt, std::nullopt, json{{"note", "no witness in the family"}}});
  }
  rep.add({"claimed-criterion", "info", std::nullopt, std::nullopt, json{{"holds", c.claimed_criterion}}});
  rep.add({"derived-criterion", "info", std::nullopt, std::nullopt, json{{"holds", c.derived_criterion}}});
  // the decision must agree with the derived equations it came from
  rep.add({"decision-matches-derived", status_of(c.iso == c.derived_criterion)});
  return rep;
}

Report affine_report(const AffineOptions& o) {
  Report rep;
  rep.seed = o.seed;
  const Algebra<Q> alg = case_algebra(o.which, o.s, o.t);
  rep.target = case_name(o.which) + (o.which == AffineCase::G4st ? "(" + o.s.to_string() + "," + o.t.to_string() + ")"
                                                                 : std::string());
  rep.extra["algebra"] = alg.name();
  const AffineRealization r(alg);
  auto add = [&](const VerificationReport& v) {
    ReportCheck c{v.name, status_of(v.pass)};
    c.residual = v.max_residual;
    c.details = json::parse(v.to_json());
    rep.add(c);
  };
  bool identity = true;
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = 0; j < alg.dim(); ++j) identity = identity && affine_bracket_identity(alg, i, j);
  rep.add({"affine-bracket-identity", status_of(identity)});
  add(exp_group_check(r, o.samples, o.seed, o.tol));
  if (o.which == AffineCase::G4st) add(row4_check(o.s, o.t, o.samples, o.seed, o.tol));
  add(translation_term_check(o.which, o.s, o.t, o.samples, o.seed, o.tol));
  ClosedFormParams p{o.s.to_double(), o.t.to_double(), false};
  add(closed_form_closure_check(o.which, p, o.samples, o.seed, o.tol));
  add(simply_transitive_check(r, o.samples, o.seed, o.newton_tol));
  return rep;
}

Report catalog_report() {
  Report rep;
  rep.target = "catalog";
  for (const auto& e : catalog_entries()) {
    json d;
    d["kind"] = kind_name(e.kind);
    d["ring"] = e.ring;
    d["params"] = e.params;
    d["sample"] = e.sample;
    d["description"] = e.description;
    rep.add({e.name, "info", std::nullopt, std::nullopt, d});
  }
  return rep;
}

}  // namespace lsa
