#include "lsa/errors.hpp"
#include "lsa/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

constexpr int kUsage = 2;

std::map<std::string, std::string> parse_params(const std::vector<std::string>& raw) {
  std::map<std::string, std::string> out;
  for (const auto& p : raw) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw lsa::DomainError("--param expects name=value, got '" + p + "'");
    if (!out.emplace(p.substr(0, eq), p.substr(eq + 1)).second)
      throw lsa::DomainError("parameter '" + p.substr(0, eq) + "' given twice");
  }
  return out;
}

std::vector<lsa::Rational> parse_pair(const std::string& text) {
  std::vector<lsa::Rational> v;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) v.push_back(lsa::Rational::parse(item));
  if (v.size() != 4) throw lsa::DomainError("--pair expects s,t,s',t'");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Left-symmetric algebra toolkit"};
  app.require_subcommand(1);
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::vector<std::string> raw_params;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", seed, "Seed for sampled numerics");
  app.add_option("--tol", tol, "Tolerance for numeric checks")->check(CLI::PositiveNumber);
  app.add_option("--param", raw_params, "Catalog parameter binding name=value (repeatable)");

  std::string target;
  auto* check = app.add_subcommand("check", "Run the verification suite on a catalog name or algebra file");
  check->add_option("target", target)->required();
  check->fallthrough();

  int fiber_dim = 1;
  auto* coh = app.add_subcommand("cohomology", "Second cohomology with a trivial bimodule");
  coh->add_option("target", target)->required();
  coh->add_option("--fiber-dim", fiber_dim, "Dimension of the trivial bimodule")->check(CLI::PositiveNumber);
  coh->fallthrough();

  std::string ext_path;
  auto* extend = app.add_subcommand("extend", "Build and check an extension file");
  extend->add_option("file", ext_path)->required();
  extend->fallthrough();

  std::string pair;
  auto* classify = app.add_subcommand("classify-a4", "Decide whether A4(s,t) and A4(s',t') are isomorphic");
  classify->add_option("--pair", pair, "s,t,s',t'")->required();
  classify->fallthrough();

  std::string which = "g4st", s_text = "1", t_text = "1";
  int samples = 200;
  double newton_tol = 1e-10;
  auto* affine = app.add_subcommand("affine-verify", "Numerical checks of the affine action");
  affine->add_option("--case", which)->check(CLI::IsMember({"g4", "g4st"}));
  affine->add_option("--s", s_text);
  affine->add_option("--t", t_text);
  affine->add_option("--samples", samples)->check(CLI::PositiveNumber);
  affine->add_option("--newton-tol", newton_tol)->check(CLI::PositiveNumber);
  affine->fallthrough();

  auto* catalog = app.add_subcommand("catalog", "Catalog operations");
  auto* list = catalog->add_subcommand("list", "List catalog algebras");
  catalog->require_subcommand(1);
  catalog->fallthrough();
  list->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    const auto params = parse_params(raw_params);
    lsa::Report rep;
    if (*check) {
      rep = lsa::verify_suite(target, params);
    } else if (*coh) {
      rep = lsa::cohomology_report(target, params, fiber_dim);
    } else if (*extend) {
      if (!params.empty()) throw lsa::DomainError("--param does not apply to extend");
      rep = lsa::extension_report(ext_path);
    } else if (*classify) {
      const auto v = parse_pair(pair);
      rep = lsa::classify_a4_report(v[0], v[1], v[2], v[3]);
    } else if (*affine) {
      lsa::AffineOptions o;
      o.which = which == "g4" ? lsa::AffineCase::G4 : lsa::AffineCase::G4st;
      o.s = lsa::Rational::parse(s_text);
      o.t = lsa::Rational::parse(t_text);
      o.samples = samples;
      if (seed) o.seed = *seed;
      if (tol) o.tol = *tol;
      o.newton_tol = newton_tol;
      rep = lsa::affine_report(o);
    } else if (*list) {
      rep = lsa::catalog_report();
    }
    if (seed && !rep.seed) rep.seed = seed;
    std::cout << (format == "json" ? rep.to_json() : rep.to_text());
    return rep.ok ? 0 : 1;
  } catch (const lsa::ParseError& e) {
    std::cerr << "lsa-forge: parse error: " << e.what() << "\n";
  } catch (const lsa::IdentityFailure& e) {
    std::cerr << "lsa-forge: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "lsa-forge: error: " << e.what() << "\n";
  }
  return kUsage;
}
