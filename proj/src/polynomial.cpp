#include "lsa/polynomial.hpp"

namespace lsa {

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  for (auto& f : factors) {
    if (f.second == 0) continue;
    if (!factors_.empty() && factors_.back().first == f.first)
      factors_.back().second += f.second;
    else
      factors_.push_back(std::move(f));
    degree_ += f.second;
  }
}

Monomial Monomial::variable(const std::string& name, unsigned exponent) {
  return Monomial(std::vector<Factor>{{name, exponent}});
}

unsigned Monomial::exponent_of(const std::string& name) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), name,
                             [](const Factor& f, const std::string& n) { return f.first < n; });
  return (it != factors_.end() && it->first == name) ? it->second : 0;
}

Monomial Monomial::without(const std::string& name) const {
  std::vector<Factor> rest;
  for (const auto& f : factors_)
    if (f.first != name) rest.push_back(f);
  return Monomial(std::move(rest));
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [name, e] : factors_) {
    if (!out.empty()) out += "*";
    out += name;
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Factor> merged;
  merged.reserve(a.factors_.size() + b.factors_.size());
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first)) {
      merged.push_back(*ia++);
    } else if (ia == a.factors_.end() || ib->first < ia->first) {
      merged.push_back(*ib++);
    } else {
      merged.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  Monomial out;
  out.factors_ = std::move(merged);
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto ia = fa.begin();
  auto ib = fb.begin();
  while (ia != fa.end() || ib != fb.end()) {
    if (ib == fb.end() || (ia != fa.end() && ia->first < ib->first)) return 1;   // b has exponent 0 there
    if (ia == fa.end() || ib->first < ia->first) return -1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    ++ia;
    ++ib;
  }
  return 0;
}

}  // namespace lsa
