#pragma once

#include "lsa/algebra.hpp"

#include <string>
#include <string_view>

namespace lsa {

/// Parses the line-oriented algebra definition format:
///
///   # comment
///   algebra A4
///   field rational            (or gaussian; default rational)
///   params s t                (optional; makes the ring polynomial)
///   dim 4
///   kind lsa                  (lsa | lie | bilinear; default lsa)
///   product e1 e1 = s*e4
///   bracket e1 e2 = e3        (lie only; also written [e1,e2] = e3)
///
/// Unlisted products are zero. Errors carry line and column.
AnyAlgebra parse_algebra(std::string_view text);

AnyAlgebra load_algebra_file(const std::string& path);

namespace detail {
template <class S>
std::string coefficient_text(const S& c) {
  std::string s = to_string(c);
  bool plain = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || (i == 0 && ch == '-'))) plain = false;
  }
  return plain ? s : "(" + s + ")";
}

template <class S>
std::string combination_text(const Vector<S>& v) {
  std::string out;
  for (Index k = 0; k < v.size(); ++k) {
    if (is_zero(v(k))) continue;
    const std::string e = "e" + std::to_string(k + 1);
    std::string term;
    if (v(k) == S(1))
      term = e;
    else if (v(k) == S(-1))
      term = "-" + e;
    else
      term = coefficient_text(v(k)) + "*" + e;
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out.empty() ? "0" : out;
}
}  // namespace detail

/// Canonical text form; parse_algebra(serialize_algebra(a)) reproduces the
/// tensor exactly.
template <class S>
std::string serialize_algebra(const Algebra<S>& a) {
  constexpr bool gaussian = std::is_same_v<S, GaussianRational> || std::is_same_v<S, GaussianPoly>;
  std::string out = "algebra " + (a.name().empty() ? std::string("unnamed") : a.name()) + "\n";
  out += std::string("field ") + (gaussian ? "gaussian" : "rational") + "\n";
  if constexpr (PolynomialScalar<S>) {
    if (!a.params().empty()) {
      out += "params";
      for (const auto& p : a.params()) out += " " + p;
      out += "\n";
    }
  }
  out += "dim " + std::to_string(a.dim()) + "\n";
  out += std::string("kind ") + kind_name(a.kind()) + "\n";
  const bool lie = a.kind() == Kind::Lie && check_antisymmetric(a).pass;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = lie ? i + 1 : 0; j < a.dim(); ++j) {
      Vector<S> v = a.product(i, j);
      if (is_zero_vector(v)) continue;
      out += std::string(lie ? "bracket" : "product") + " e" + std::to_string(i + 1) + " e" + std::to_string(j + 1) +
             " = " + detail::combination_text(v) + "\n";
    }
  return out;
}

std::string serialize_any(const AnyAlgebra& a);

}  // namespace lsa
