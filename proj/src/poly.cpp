#include "vfalg/poly.hpp"

#include <algorithm>
#include <string>

#include "vfalg/error.hpp"

namespace vfalg {

Monomial::Monomial(std::vector<Factor> factors) {
  for (const auto& [i, e] : factors) {
    if (i < 1) throw InvalidArgument("variable index must be >= 1, got " + std::to_string(i));
    if (e < 0) throw InvalidArgument("exponent must be >= 0, got " + std::to_string(e));
  }
  std::sort(factors.begin(), factors.end());
  for (const auto& [i, e] : factors) {
    if (e == 0) continue;
    if (!factors_.empty() && factors_.back().first == i)
      factors_.back().second += e;
    else
      factors_.emplace_back(i, e);
  }
}

Monomial Monomial::var(VarIndex i, int exponent) { return Monomial({{i, exponent}}); }

int Monomial::length() const {
  int n = 0;
  for (const auto& f : factors_) n += f.second;
  return n;
}

int Monomial::degree_in(VarIndex i) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{i, 0});
  return (it != factors_.end() && it->first == i) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int la = a.length();
  const int lb = b.length();
  if (la != lb) return la < lb;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first == fb[j].first) {
      if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second;
      ++i;
      ++j;
    } else {
      return fa[i].first < fb[j].first;
    }
  }
  return i < fa.size() && j == fb.size();
}

int var_degree(const Monomial& m, VarIndex i) {
  if (i < 1) throw InvalidArgument("variable index must be >= 1");
  return m.degree_in(i);
}

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial::Polynomial(const Monomial& m, const Rational& coeff) {
  if (coeff != 0) terms_.emplace(m, coeff);
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

VarIndex Polynomial::max_variable() const {
  VarIndex v = 0;
  for (const auto& t : terms_) v = std::max(v, t.first.max_variable());
  return v;
}

int Polynomial::total_degree() const {
  // The term map is ordered by length, so the last key is the longest.
  return terms_.empty() ? -1 : terms_.rbegin()->first.length();
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial partial(const Polynomial& p, VarIndex i) {
  if (i < 1) throw InvalidArgument("variable index must be >= 1");
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    const int e = m.degree_in(i);
    if (e == 0) continue;
    std::vector<Monomial::Factor> f = m.factors();
    for (auto& fi : f)
      if (fi.first == i) fi.second -= 1;
    out.add_term(Monomial(std::move(f)), c * e);
  }
  return out;
}

std::set<VarIndex> support_vars(const Polynomial& p) {
  std::set<VarIndex> out;
  for (const auto& t : p.terms())
    for (const auto& f : t.first.factors()) out.insert(f.first);
  return out;
}

}  // namespace vfalg
