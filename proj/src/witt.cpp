#include "vfalg/witt.hpp"

#include <algorithm>
#include <string>

#include "vfalg/error.hpp"
#include "vfalg/textio.hpp"

namespace vfalg {

VectorField::VectorField(Direction i, Polynomial f) {
  if (i < 1) throw InvalidArgument("direction index must be >= 1, got " + std::to_string(i));
  if (!f.is_zero()) components_.emplace(i, std::move(f));
}

VectorField VectorField::term(const TermKey& key, const Rational& coeff) {
  return VectorField(key.direction, Polynomial(key.monomial, coeff));
}

Polynomial VectorField::component(Direction i) const {
  auto it = components_.find(i);
  return it == components_.end() ? Polynomial() : it->second;
}

VarIndex VectorField::max_variable() const {
  VarIndex v = 0;
  for (const auto& c : components_) v = std::max(v, c.second.max_variable());
  return v;
}

Direction VectorField::max_direction() const {
  return components_.empty() ? 0 : components_.rbegin()->first;
}

std::size_t VectorField::term_count() const {
  std::size_t n = 0;
  for (const auto& c : components_) n += c.second.size();
  return n;
}

Rational VectorField::coefficient(const TermKey& key) const {
  auto it = components_.find(key.direction);
  return it == components_.end() ? Rational(0) : it->second.coefficient(key.monomial);
}

void VectorField::for_each_term(
    const std::function<void(const TermKey&, const Rational&)>& fn) const {
  for (const auto& [i, f] : components_)
    for (const auto& [m, c] : f.terms()) fn(TermKey{i, m}, c);
}

void VectorField::add_term(const TermKey& key, const Rational& c) {
  add_component(key.direction, Polynomial(key.monomial, c));
}

void VectorField::add_component(Direction i, const Polynomial& f) {
  if (i < 1) throw InvalidArgument("direction index must be >= 1, got " + std::to_string(i));
  if (f.is_zero()) return;
  auto [it, inserted] = components_.try_emplace(i, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) components_.erase(it);
  }
}

VectorField VectorField::operator-() const {
  VectorField out = *this;
  for (auto& c : out.components_) c.second = -c.second;
  return out;
}

VectorField& VectorField::operator+=(const VectorField& other) {
  for (const auto& [i, f] : other.components_) add_component(i, f);
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& other) {
  for (const auto& [i, f] : other.components_) add_component(i, -f);
  return *this;
}

VectorField& VectorField::operator*=(const Rational& c) {
  if (c == 0) {
    components_.clear();
    return *this;
  }
  for (auto& comp : components_) comp.second *= c;
  return *this;
}

VectorField operator*(const Polynomial& p, const VectorField& w) {
  VectorField out;
  for (const auto& [i, f] : w.components()) out.add_component(i, p * f);
  return out;
}

// [h_i d_i, f_j d_j] = h_i (d_i f_j) d_j - f_j (d_j h_i) d_i, summed over the
// components of both arguments.
VectorField bracket(const VectorField& u, const VectorField& w) {
  VectorField out;
  for (const auto& [i, h] : u.components()) {
    for (const auto& [j, f] : w.components()) {
      out.add_component(j, h * partial(f, i));
      out.add_component(i, -(f * partial(h, j)));
    }
  }
  return out;
}

Polynomial apply_field(const VectorField& w, const Polynomial& p) {
  Polynomial out;
  for (const auto& [i, f] : w.components()) out += f * partial(p, i);
  return out;
}

HomogeneousField::HomogeneousField(VectorField f, int deg) : field(std::move(f)), degree(deg) {
  if (deg < -1) throw InvalidArgument("degree must be >= -1");
  field.for_each_term([&](const TermKey& key, const Rational&) {
    if (key.degree() != deg)
      throw InvalidArgument("term " + format_term(key, 1) + " has degree " +
                            std::to_string(key.degree()) + ", expected " + std::to_string(deg));
  });
}

std::map<int, HomogeneousField> degree_components(const VectorField& w) {
  std::map<int, VectorField> parts;
  w.for_each_term([&](const TermKey& key, const Rational& c) { parts[key.degree()].add_term(key, c); });
  std::map<int, HomogeneousField> out;
  for (auto& [k, f] : parts) out.emplace(k, HomogeneousField(std::move(f), k));
  return out;
}

std::optional<int> homogeneous_degree(const VectorField& w) {
  std::optional<int> deg;
  bool mixed = false;
  w.for_each_term([&](const TermKey& key, const Rational&) {
    if (!deg)
      deg = key.degree();
    else if (*deg != key.degree())
      mixed = true;
  });
  if (mixed) return std::nullopt;
  return deg;
}

namespace {

VectorField coordinate_field(VarIndex i, Direction j) {
  return VectorField(j, Polynomial::var(i));
}

}  // namespace

std::vector<VectorField> sl_basis(int n) {
  if (n < 2) throw InvalidArgument("sl_basis needs n >= 2, got " + std::to_string(n));
  std::vector<VectorField> out;
  out.reserve(static_cast<std::size_t>(n * n - 1));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) out.push_back(coordinate_field(i, j));
  for (int i = 1; i < n; ++i) out.push_back(coordinate_field(i, i) - coordinate_field(i + 1, i + 1));
  return out;
}

std::vector<VectorField> gl_basis(int n) {
  if (n < 1) throw InvalidArgument("gl_basis needs n >= 1, got " + std::to_string(n));
  std::vector<VectorField> out;
  out.reserve(static_cast<std::size_t>(n * n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) out.push_back(coordinate_field(i, j));
  return out;
}

std::vector<VectorField> L_basis(int n) {
  if (n < 1) throw InvalidArgument("L_basis needs n >= 1, got " + std::to_string(n));
  std::vector<VectorField> out;
  for (int i = 1; i <= n; ++i) out.push_back(VectorField::d(i));
  auto gl = gl_basis(n);
  out.insert(out.end(), gl.begin(), gl.end());
  return out;
}

VectorField euler(int n) {
  if (n < 1) throw InvalidArgument("euler needs n >= 1, got " + std::to_string(n));
  VectorField e;
  for (int i = 1; i <= n; ++i) e += coordinate_field(i, i);
  return e;
}

void TruncationWindow::validate() const {
  if (max_var < 1) throw InvalidArgument("window max_var must be >= 1");
  if (degree_min < -1) throw InvalidArgument("window degree_min must be >= -1");
  if (degree_max < degree_min) throw InvalidArgument("window needs degree_min <= degree_max");
}

bool TruncationWindow::contains(const TermKey& key) const {
  const int deg = key.degree();
  return key.direction <= max_var && key.monomial.max_variable() <= max_var &&
         deg >= degree_min && deg <= degree_max;
}

bool TruncationWindow::contains(const VectorField& w) const {
  bool ok = true;
  w.for_each_term([&](const TermKey& key, const Rational&) { ok = ok && contains(key); });
  return ok;
}

VectorField truncate(const VectorField& w, const TruncationWindow& win) {
  win.validate();
  VectorField out;
  w.for_each_term([&](const TermKey& key, const Rational& c) {
    if (win.contains(key)) {
      out.add_term(key, c);
    } else if (win.mode == TruncationMode::strict) {
      const std::string t = format_term(key, c);
      throw WindowViolation(t, "term " + t + " lies outside the truncation window");
    }
  });
  return out;
}

std::vector<Monomial> monomials_of_length(int nvars, int length) {
  std::vector<Monomial> out;
  if (length < 0 || nvars < 0) return out;
  if (length == 0) return {Monomial()};
  if (nvars == 0) return out;
  // Exponent of x1 runs from high to low so the output is already canonical.
  std::vector<Monomial::Factor> stack;
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (remaining == 0) {
      out.emplace_back(stack);
      return;
    }
    if (var == nvars) {
      stack.emplace_back(var, remaining);
      out.emplace_back(stack);
      stack.pop_back();
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      if (e > 0) stack.emplace_back(var, e);
      rec(var + 1, remaining - e);
      if (e > 0) stack.pop_back();
    }
  };
  rec(1, length);
  return out;
}

std::vector<TermKey> window_terms(const TruncationWindow& win) {
  win.validate();
  std::vector<TermKey> out;
  for (Direction i = 1; i <= win.max_var; ++i)
    for (int deg = win.degree_min; deg <= win.degree_max; ++deg)
      for (auto& m : monomials_of_length(win.max_var, deg + 1)) out.push_back(TermKey{i, std::move(m)});
  return out;
}

}  // namespace vfalg
