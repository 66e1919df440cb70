#pragma once

#include "lsa/errors.hpp"
#include "lsa/scalar.hpp"

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lsa {

/// Result of parsing an expression: either a scalar or a linear combination
/// of basis vectors (when the resolver hands out basis atoms like `e3`).
template <class S>
struct ParsedValue {
  S scalar{0};
  std::vector<S> coords;  // empty unless is_vector
  bool is_vector = false;

  static ParsedValue basis(std::size_t dim, std::size_t index) {
    ParsedValue v;
    v.is_vector = true;
    v.coords.assign(dim, S(0));
    v.coords[index] = S(1);
    return v;
  }
};

/// Maps an identifier to a value. Return nullopt for unknown names; throw
/// a std::string message for names that exist but are not allowed here.
template <class S>
using IdentifierResolver = std::function<std::optional<ParsedValue<S>>(const std::string&)>;

/// Recursive-descent parser for the shared scalar syntax: integers, `+ - * /`,
/// `^` with a non-negative integer exponent (optionally parenthesized),
/// parentheses and identifiers. Division is only by nonzero constants.
template <class S>
class ExpressionParser {
public:
  ExpressionParser(std::string_view text, IdentifierResolver<S> resolver, int line = 1, int column_offset = 0)
      : text_(text), resolver_(std::move(resolver)), line_(line), column_offset_(column_offset) {}

  ParsedValue<S> parse() {
    ParsedValue<S> v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, column_offset_ + static_cast<int>(pos_) + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ParsedValue<S> expr() {
    ParsedValue<S> acc = term();
    for (;;) {
      if (accept('+'))
        acc = add(acc, term(), false);
      else if (accept('-'))
        acc = add(acc, term(), true);
      else
        return acc;
    }
  }

  ParsedValue<S> term() {
    ParsedValue<S> acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = multiply(acc, factor());
      } else if (accept('/')) {
        std::size_t at = pos_;
        ParsedValue<S> d = factor();
        acc = divide(acc, d, at);
      } else {
        return acc;
      }
    }
  }

  ParsedValue<S> factor() {
    if (accept('-')) return negate(factor());
    if (accept('+')) return factor();
    ParsedValue<S> base = atom();
    if (accept('^')) {
      bool paren = accept('(');
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      unsigned e = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
      if (paren && !accept(')')) fail("expected ')'");
      if (base.is_vector) fail("cannot raise a basis element to a power");
      S out(1);
      for (unsigned i = 0; i < e; ++i) out = out * base.scalar;
      base.scalar = out;
    }
    return base;
  }

  ParsedValue<S> atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ParsedValue<S> v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      ParsedValue<S> v;
      v.scalar = S(Rational::parse(text_.substr(start, pos_ - start)));
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      std::optional<ParsedValue<S>> v;
      try {
        v = resolver_(name);
      } catch (const std::string& message) {
        pos_ = start;
        fail(message);
      }
      if (!v) {
        pos_ = start;
        fail("unknown identifier '" + name + "'");
      }
      return *v;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  ParsedValue<S> negate(ParsedValue<S> v) {
    v.scalar = -v.scalar;
    for (auto& c : v.coords) c = -c;
    return v;
  }

  ParsedValue<S> add(ParsedValue<S> a, ParsedValue<S> b, bool subtract) {
    if (subtract) b = negate(std::move(b));
    if (a.is_vector != b.is_vector) {
      // a bare scalar zero is allowed next to basis terms
      ParsedValue<S>& s = a.is_vector ? b : a;
      if (!is_zero(s.scalar)) fail("cannot add a scalar to a basis combination");
      return a.is_vector ? a : b;
    }
    if (!a.is_vector) {
      a.scalar = a.scalar + b.scalar;
      return a;
    }
    for (std::size_t i = 0; i < a.coords.size(); ++i) a.coords[i] = a.coords[i] + b.coords[i];
    return a;
  }

  ParsedValue<S> multiply(ParsedValue<S> a, ParsedValue<S> b) {
    if (a.is_vector && b.is_vector) fail("product of two basis elements is not linear");
    if (!a.is_vector && !b.is_vector) {
      a.scalar = a.scalar * b.scalar;
      return a;
    }
    ParsedValue<S>& v = a.is_vector ? a : b;
    const S k = a.is_vector ? b.scalar : a.scalar;
    for (auto& c : v.coords) c = k * c;
    return a.is_vector ? a : b;
  }

  ParsedValue<S> divide(ParsedValue<S> a, const ParsedValue<S>& d, std::size_t at) {
    if (d.is_vector) {
      pos_ = at;
      fail("division by a basis element");
    }
    if (is_zero(d.scalar)) {
      pos_ = at;
      fail("division by zero");
    }
    try {
      if (a.is_vector) {
        for (auto& c : a.coords) c = c / d.scalar;
      } else {
        a.scalar = a.scalar / d.scalar;
      }
    } catch (const std::exception& e) {
      pos_ = at;
      fail(e.what());
    }
    return a;
  }

  std::string_view text_;
  IdentifierResolver<S> resolver_;
  int line_;
  int column_offset_;
  std::size_t pos_ = 0;
};

/// Resolver for plain scalars of ring S: `i` in the Gaussian field, declared
/// parameter names in a polynomial ring.
template <class S>
IdentifierResolver<S> scalar_resolver(std::vector<std::string> params) {
  return [params = std::move(params)](const std::string& name) -> std::optional<ParsedValue<S>> {
    if (name == "i") {
      if constexpr (std::is_same_v<S, GaussianRational> || std::is_same_v<S, GaussianPoly>) {
        ParsedValue<S> v;
        v.scalar = S(GaussianRational::unit());
        return v;
      } else {
        throw std::string("coefficient 'i' is not in the declared ring");
      }
    }
    for (const auto& p : params) {
      if (p != name) continue;
      if constexpr (PolynomialScalar<S>) {
        ParsedValue<S> v;
        v.scalar = S::variable(name);
        return v;
      } else {
        throw std::string("parameter '" + name + "' needs a polynomial ring");
      }
    }
    return std::nullopt;
  };
}

/// Parses a scalar in the shared text syntax.
template <class S>
S parse_scalar(std::string_view text, std::vector<std::string> params = {}) {
  ExpressionParser<S> parser(text, scalar_resolver<S>(std::move(params)));
  ParsedValue<S> v = parser.parse();
  if (v.is_vector) throw ParseError("expected a scalar", 1, 1);
  return v.scalar;
}

}  // namespace lsa
