#include "lsa/extension_io.hpp"

#include "lsa/catalog.hpp"
#include "lsa/expression.hpp"
#include "lsa/text_format.hpp"

#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace lsa {

namespace {

using Q = Rational;

struct RawLine {
  int number;
  std::string text;
  std::size_t first;  // first non-blank column
};

Q scalar_at(const std::string& text, int line, int column_offset) {
  ExpressionParser<Q> p(text, scalar_resolver<Q>({}), line, column_offset);
  ParsedValue<Q> v = p.parse();
  return v.scalar;
}

/// Splits on `sep`, remembering where each piece starts.
std::vector<std::pair<std::string, int>> split(const std::string& s, char sep, int offset) {
  std::vector<std::pair<std::string, int>> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t at = s.find(sep, start);
    out.emplace_back(s.substr(start, at == std::string::npos ? std::string::npos : at - start),
                     offset + static_cast<int>(start));
    if (at == std::string::npos) break;
    start = at + 1;
  }
  return out;
}

Vector<Q> parse_values(const std::string& s, int line, int offset, int expected) {
  auto parts = split(s, ',', offset);
  if (static_cast<int>(parts.size()) != expected)
    throw ParseError("expected " + std::to_string(expected) + " value(s), found " + std::to_string(parts.size()), line,
                     offset + 1);
  Vector<Q> v(expected);
  for (int a = 0; a < expected; ++a) v(a) = scalar_at(parts[static_cast<std::size_t>(a)].first, line,
                                                       parts[static_cast<std::size_t>(a)].second);
  return v;
}

Matrix<Q> parse_rows(const std::string& s, int line, int offset, int m) {
  auto rows = split(s, ';', offset);
  if (static_cast<int>(rows.size()) != m)
    throw ParseError("expected " + std::to_string(m) + " row(s), found " + std::to_string(rows.size()), line,
                     offset + 1);
  Matrix<Q> out(m, m);
  for (int r = 0; r < m; ++r) {
    const auto& [text, col] = rows[static_cast<std::size_t>(r)];
    out.row(r) = parse_values(text, line, col, m).transpose();
  }
  return out;
}

Algebra<Q> resolve_algebra(const std::vector<std::string>& words, const RawLine& l, const std::string& origin) {
  const int col = static_cast<int>(l.first) + 1;
  if (words.size() < 2) throw ParseError("missing algebra reference", l.number, col);
  const std::string& head = words[1];
  auto count_arg = [&]() {
    static const std::regex num("[0-9]+");
    if (words.size() != 3 || !std::regex_match(words[2], num)) throw ParseError("expected a dimension", l.number, col);
    return std::stoi(words[2]);
  };
  if (head == "trivial") return build::Trivial<Q>(count_arg());
  if (head == "abelian") return build::Abelian<Q>(count_arg());
  AnyAlgebra any;
  if (head == "file") {
    if (words.size() != 3) throw ParseError("expected 'file <path>'", l.number, col);
    std::filesystem::path p(words[2]);
    if (p.is_relative()) p = std::filesystem::path(origin) / p;
    any = load_algebra_file(p.string());
  } else {
    std::map<std::string, std::string> bindings;
    for (std::size_t w = 2; w < words.size(); ++w) {
      auto eq = words[w].find('=');
      if (eq == std::string::npos) throw ParseError("expected name=value, got '" + words[w] + "'", l.number, col);
      bindings[words[w].substr(0, eq)] = words[w].substr(eq + 1);
    }
    try {
      any = named_algebra(head, bindings);
    } catch (const UnknownName& e) {
      throw ParseError(e.what(), l.number, col);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), l.number, col);
    }
  }
  if (!std::holds_alternative<Algebra<Q>>(any))
    throw ParseError("extension files need rational algebras with numeric parameters", l.number, col);
  return std::get<Algebra<Q>>(any);
}

}  // namespace

ExtensionSpec parse_extension(std::string_view text, const std::string& origin) {
  std::vector<RawLine> lines;
  {
    std::istringstream in{std::string(text)};
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
      ++number;
      std::string line = raw.substr(0, raw.find('#'));
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::size_t first = line.find_first_not_of(" \t");
      if (first == std::string::npos) continue;
      lines.push_back({number, line, first});
    }
  }

  bool lie = false;
  std::optional<Algebra<Q>> base, fiber;
  std::set<std::string> seen;
  std::vector<const RawLine*> body;
  for (const auto& l : lines) {
    std::istringstream ws(l.text);
    std::vector<std::string> words;
    for (std::string w; ws >> w;) words.push_back(w);
    const std::string& key = words[0];
    const int col = static_cast<int>(l.first) + 1;
    if (key == "type" || key == "base" || key == "fiber") {
      if (!seen.insert(key).second) throw ParseError("duplicate '" + key + "' line", l.number, col);
    }
    if (key == "type") {
      if (words.size() != 2 || (words[1] != "lsa" && words[1] != "lie"))
        throw ParseError("expected 'type lsa' or 'type lie'", l.number, col);
      lie = words[1] == "lie";
    } else if (key == "base") {
      base = resolve_algebra(words, l, origin);
    } else if (key == "fiber") {
      fiber = resolve_algebra(words, l, origin);
    } else if (key == "cocycle" || key == "action") {
      body.push_back(&l);
    } else {
      throw ParseError("unknown directive '" + key + "'", l.number, col);
    }
  }
  const int last = lines.empty() ? 1 : lines.back().number;
  if (!base) throw ParseError("missing 'base' line", last, 1);
  if (!fiber) throw ParseError("missing 'fiber' line", last, 1);
  const Kind want = lie ? Kind::Lie : Kind::LSA;
  if (base->kind() != want || fiber->kind() != want)
    throw ParseError(std::string("base and fiber must both be ") + (lie ? "Lie algebras" : "LSAs"), last, 1);

  const int n = base->dim(), m = fiber->dim();
  OperatorFamily<Q> first = zero_family<Q>(n, m), second = zero_family<Q>(n, m);
  Bilinear<Q> g(n, m);
  std::set<std::string> defined;
  static const std::regex cocycle_re(R"(^\s*cocycle\s+([A-Za-z]+)\s+e([0-9]+)\s+e([0-9]+)\s*=)");
  static const std::regex action_re(R"(^\s*action\s+([A-Za-z]+)\s+e([0-9]+)\s*=)");
  const std::string map_name = lie ? "omega" : "g";
  for (const RawLine* l : body) {
    std::smatch mt;
    const int col = static_cast<int>(l->first) + 1;
    auto index = [&](const std::string& s, std::size_t pos) {
      const int i = std::stoi(s);
      if (i < 1 || i > n) throw ParseError("index e" + s + " out of range", l->number, static_cast<int>(pos));
      return i - 1;
    };
    if (std::regex_search(l->text, mt, cocycle_re)) {
      if (mt[1] != map_name) throw ParseError("expected 'cocycle " + map_name + "'", l->number, col);
      const int i = index(mt[2], static_cast<std::size_t>(mt.position(2))),
                j = index(mt[3], static_cast<std::size_t>(mt.position(3)));
      const auto rhs = static_cast<std::size_t>(mt.position(0) + mt.length(0));
      Vector<Q> v = parse_values(l->text.substr(rhs), l->number, static_cast<int>(rhs), m);
      auto claim = [&](int p, int q) {
        if (!defined.insert("g" + std::to_string(p) + "," + std::to_string(q)).second)
          throw ParseError("duplicate value for " + map_name + "(e" + std::to_string(p + 1) + ",e" +
                               std::to_string(q + 1) + ")",
                           l->number, col);
      };
      claim(i, j);
      if (lie) {
        if (i == j && !is_zero_vector(v)) throw ParseError("omega must vanish on the diagonal", l->number, col);
        if (i != j) claim(j, i);
        g.set_skew(i, j, v);
      } else {
        g.set(i, j, v);
      }
    } else if (std::regex_search(l->text, mt, action_re)) {
      const std::string which = mt[1];
      const bool ok = lie ? which == "phi" : (which == "lambda" || which == "rho");
      if (!ok) throw ParseError("unknown action '" + which + "'", l->number, col);
      const int i = index(mt[2], static_cast<std::size_t>(mt.position(2)));
      if (!defined.insert(which + std::to_string(i)).second)
        throw ParseError("duplicate " + which + " for e" + std::to_string(i + 1), l->number, col);
      const auto rhs = static_cast<std::size_t>(mt.position(0) + mt.length(0));
      Matrix<Q> op = parse_rows(l->text.substr(rhs), l->number, static_cast<int>(rhs), m);
      (which == "rho" ? second : first)[static_cast<std::size_t>(i)] = op;
    } else {
      throw ParseError("malformed line", l->number, col);
    }
  }
  if (lie) return LieExtensionData<Q>{*base, *fiber, first, g};
  return LsaExtensionData<Q>{*base, *fiber, first, second, g};
}

ExtensionSpec load_extension_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_extension(ss.str(), std::filesystem::path(path).parent_path().string());
}

}  // namespace lsa
