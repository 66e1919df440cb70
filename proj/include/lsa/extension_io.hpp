#pragma once

#include "lsa/extension.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace lsa {

/// Extension definition format (rational scalars):
///
///   type lsa                       (lsa | lie; default lsa)
///   base A3 eps=0                  catalog name and bindings
///   base file path/to/base.alg     or an algebra file (relative paths
///                                  resolve against `origin`)
///   fiber I0                       or: fiber trivial <m> | fiber abelian <m>
///   cocycle g e2 e3 = 1            value in V; for dim V > 1: 1, 0, 2
///   action lambda e1 = 0, -1; 1, 0 rows separated by ';'
///   action rho e1 = ...
///
/// For type lie the names are `phi` and `omega`; an omega line sets both
/// omega(ei,ej) and omega(ej,ei) = -omega(ei,ej).
using ExtensionSpec = std::variant<LsaExtensionData<Rational>, LieExtensionData<Rational>>;

ExtensionSpec parse_extension(std::string_view text, const std::string& origin = ".");
ExtensionSpec load_extension_file(const std::string& path);

}  // namespace lsa
