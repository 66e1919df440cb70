#include "lsa/text_format.hpp"

#include "lsa/expression.hpp"

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace lsa {

namespace {


struct ProductLine {
  int line;
  int i, j;           // zero-based
  bool bracket;
  std::string rhs;
  int rhs_column;     // zero-based offset of rhs in the line
};

struct Header {
  std::string name = "unnamed";
  bool gaussian = false;
  std::vector<std::string> params;
  int dim = -1;
  Kind kind = Kind::LSA;
  std::vector<ProductLine> products;
};

bool is_identifier(const std::string& s) {
  static const std::regex id("[A-Za-z_][A-Za-z0-9_]*");
  return std::regex_match(s, id);
}

bool is_basis_name(const std::string& s) {
  static const std::regex b("e[0-9]+");
  return std::regex_match(s, b);
}

int column_of(const std::string&, std::size_t pos) { return static_cast<int>(pos) + 1; }

Header parse_header(std::string_view text) {
  Header h;
  std::set<std::string> seen_keys;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  static const std::regex product_re(R"(^\s*(product|bracket)\s+e([0-9]+)\s+e([0-9]+)\s*=)");
  static const std::regex bracket_re(R"(^\s*\[\s*e([0-9]+)\s*,\s*e([0-9]+)\s*\]\s*=)");
  while (std::getline(in, raw)) {
    ++number;
    std::string line = raw.substr(0, raw.find('#'));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;

    std::smatch m;
    if (std::regex_search(line, m, product_re) || std::regex_search(line, m, bracket_re)) {
      const bool keyword = m.size() == 4;
      const bool bracket = !keyword || m[1] == "bracket";
      const std::string si = keyword ? m[2].str() : m[1].str();
      const std::string sj = keyword ? m[3].str() : m[2].str();
      const std::size_t pos_i = static_cast<std::size_t>(keyword ? m.position(2) : m.position(1));
      const std::size_t pos_j = static_cast<std::size_t>(keyword ? m.position(3) : m.position(2));
      if (h.dim < 0) throw ParseError("'dim' must be declared before products", number, column_of(line, first));
      if (bracket && h.kind != Kind::Lie)
        throw ParseError("bracket lines require 'kind lie'", number, column_of(line, first));
      const int i = std::stoi(si), j = std::stoi(sj);
      if (i < 1 || i > h.dim) throw ParseError("index e" + si + " out of range", number, column_of(line, pos_i) - 1);
      if (j < 1 || j > h.dim) throw ParseError("index e" + sj + " out of range", number, column_of(line, pos_j) - 1);
      const std::size_t rhs = static_cast<std::size_t>(m.position(0) + m.length(0));
      h.products.push_back({number, i - 1, j - 1, bracket, line.substr(rhs), static_cast<int>(rhs)});
      continue;
    }

    std::istringstream words(line);
    std::string key;
    words >> key;
    std::vector<std::string> args;
    for (std::string w; words >> w;) args.push_back(w);
    const int col = column_of(line, first);
    if (key == "algebra" || key == "field" || key == "params" || key == "dim" || key == "kind") {
      if (!h.products.empty()) throw ParseError("header line '" + key + "' after products", number, col);
      if (!seen_keys.insert(key).second) throw ParseError("duplicate '" + key + "' line", number, col);
    }
    if (key == "algebra") {
      std::string rest = line.substr(first + key.size());
      rest.erase(0, rest.find_first_not_of(" \t"));
      while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t')) rest.pop_back();
      if (rest.empty()) throw ParseError("missing algebra name", number, col);
      h.name = rest;
    } else if (key == "field") {
      if (args.size() != 1 || (args[0] != "rational" && args[0] != "gaussian"))
        throw ParseError("expected 'field rational' or 'field gaussian'", number, col);
      h.gaussian = args[0] == "gaussian";
    } else if (key == "params") {
      for (const auto& p : args) {
        if (!is_identifier(p) || p == "i" || is_basis_name(p))
          throw ParseError("invalid parameter name '" + p + "'", number, column_of(line, line.find(p)));
        if (std::find(h.params.begin(), h.params.end(), p) != h.params.end())
          throw ParseError("duplicate parameter '" + p + "'", number, column_of(line, line.find(p)));
        h.params.push_back(p);
      }
    } else if (key == "dim") {
      static const std::regex num("[0-9]+");
      if (args.size() != 1 || !std::regex_match(args[0], num)) throw ParseError("expected 'dim <n>'", number, col);
      h.dim = std::stoi(args[0]);
      if (h.dim > 64) throw ParseError("dimension too large", number, col);
    } else if (key == "kind") {
      if (args.size() != 1) throw ParseError("expected 'kind lsa|lie|bilinear'", number, col);
      if (args[0] == "lsa")
        h.kind = Kind::LSA;
      else if (args[0] == "lie")
        h.kind = Kind::Lie;
      else if (args[0] == "bilinear")
        h.kind = Kind::Bilinear;
      else
        throw ParseError("unknown kind '" + args[0] + "'", number, column_of(line, line.find(args[0])));
    } else if (key == "product" || key == "bracket" || key[0] == '[') {
      throw ParseError("malformed " + std::string(key[0] == '[' ? "bracket" : key) + " line", number, col);
    } else {
      throw ParseError("unknown directive '" + key + "'", number, col);
    }
  }
  if (h.dim < 0) throw ParseError("missing 'dim' line", number + 1, 1);
  return h;
}

template <class S>
Algebra<S> build(const Header& h) {
  Algebra<S> a(h.name, h.kind, h.dim, h.params);
  auto resolver = scalar_resolver<S>(h.params);
  const auto dim = static_cast<std::size_t>(h.dim);
  IdentifierResolver<S> with_basis = [&](const std::string& id) -> std::optional<ParsedValue<S>> {
    if (is_basis_name(id)) {
      const int k = std::stoi(id.substr(1));
      if (k < 1 || k > h.dim) throw std::string("index " + id + " out of range");
      return ParsedValue<S>::basis(dim, static_cast<std::size_t>(k - 1));
    }
    return resolver(id);
  };
  std::set<std::pair<int, int>> defined;
  for (const auto& p : h.products) {
    ExpressionParser<S> parser(p.rhs, with_basis, p.line, p.rhs_column);
    ParsedValue<S> v = parser.parse();
    Vector<S> vec = zero_vector<S>(h.dim);
    if (v.is_vector) {
      for (std::size_t k = 0; k < dim; ++k) vec(static_cast<Index>(k)) = v.coords[k];
    } else if (!is_zero(v.scalar)) {
      throw ParseError("right-hand side must be a combination of basis elements", p.line, p.rhs_column + 1);
    }
    auto claim = [&](int i, int j) {
      if (!defined.insert({i, j}).second)
        throw ParseError("duplicate definition of e" + std::to_string(i + 1) + "*e" + std::to_string(j + 1), p.line,
                         1);
    };
    if (p.bracket) {
      if (p.i == p.j) {
        if (!is_zero_vector(vec))
          throw ParseError("bracket [e" + std::to_string(p.i + 1) + ",e" + std::to_string(p.i + 1) + "] must be zero",
                           p.line, 1);
        claim(p.i, p.i);
        continue;
      }
      claim(p.i, p.j);
      claim(p.j, p.i);
      a.set_bracket(p.i, p.j, vec);
    } else {
      claim(p.i, p.j);
      a.set_product(p.i, p.j, vec);
    }
  }
  return a;
}

}  // namespace

AnyAlgebra parse_algebra(std::string_view text) {
  Header h = parse_header(text);
  if (h.gaussian) {
    if (h.params.empty()) return build<GaussianRational>(h);
    return build<GaussianPoly>(h);
  }
  if (h.params.empty()) return build<Rational>(h);
  return build<Poly>(h);
}

AnyAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str());
}

std::string serialize_any(const AnyAlgebra& a) {
  return std::visit([](const auto& alg) { return serialize_algebra(alg); }, a);
}

}  // namespace lsa
