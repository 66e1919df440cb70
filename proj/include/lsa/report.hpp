#pragma once

#include "lsa/affine.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lsa {

inline constexpr const char* kToolVersion = "lsa-forge 1.0.0";

/// One named result. status is "pass", "fail" or "info".
struct ReportCheck {
  std::string name;
  std::string status;
  std::optional<std::string> witness;
  std::optional<double> residual;
  nlohmann::json details;  // null when absent
};

/// Top-level report shared by every subcommand.
struct Report {
  std::string target;
  std::optional<std::uint64_t> seed;
  std::vector<ReportCheck> checks;
  nlohmann::json extra = nlohmann::json::object();  // subcommand-specific top-level keys
  /// Exit status 0 when true, 1 otherwise.
  bool ok = true;

  void add(ReportCheck c);
  nlohmann::json to_json_value() const;
  /// Sorted keys, two-space indent, trailing newline.
  std::string to_json() const;
  std::string to_text() const;
};

/// A catalog name with bindings or a path to an algebra file. Missing
/// catalog parameters stay symbolic.
AnyAlgebra resolve_target(const std::string& target, const std::map<std::string, std::string>& params);

/// Every applicable analysis for the algebra's kind. Checks are ordered by
/// name. ok is false when the kind identity fails or a catalog expectation
/// is contradicted; expectations are compared in full only at the entry's
/// sample parameters, and completeness is compared for every binding.
Report verify_suite(const std::string& target, const std::map<std::string, std::string>& params);

/// Z2, B2 and H2 for the trivial bimodule of dimension m over an LSA.
Report cohomology_report(const std::string& target, const std::map<std::string, std::string>& params, int m);

/// Builds the extension in `path` and reports each condition alongside the
/// kind identity of the result.
Report extension_report(const std::string& path);

/// Isomorphism decision between A4(s,t) and A4(s',t').
Report classify_a4_report(const Rational& s, const Rational& t, const Rational& s_prime, const Rational& t_prime);

struct AffineOptions {
  AffineCase which = AffineCase::G4st;
  Rational s{1}, t{1};
  int samples = 200;
  std::uint64_t seed = 42;
  double tol = 1e-9;
  double newton_tol = 1e-10;
};
Report affine_report(const AffineOptions& o);

Report catalog_report();

}  // namespace lsa
