#include "vfalg/textio.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vfalg/error.hpp"

namespace vfalg {

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { integer, x, d, plus, minus, star, slash, caret, end, invalid };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::integer:
      return "integer " + (t.text.size() > 20 ? t.text.substr(0, 20) + "..." : t.text);
    case Tok::end:
      return "end of input";
    case Tok::invalid: {
      const auto c = static_cast<unsigned char>(t.text[0]);
      if (std::isprint(c)) return "character '" + t.text + "'";
      static const char* hex = "0123456789abcdef";
      return std::string("byte 0x") + hex[c >> 4] + hex[c & 15];
    }
    default:
      return "'" + t.text + "'";
  }
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++col;
      ++i;
      continue;
    }
    Token t{Tok::invalid, std::string(1, ch), line, col};
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = Tok::integer;
      t.text = std::string(text.substr(i, j - i));
      col += j - i;
      i = j;
      out.push_back(std::move(t));
      continue;
    }
    switch (ch) {
      case 'x':
        t.kind = Tok::x;
        break;
      case 'd':
        t.kind = Tok::d;
        break;
      case '+':
        t.kind = Tok::plus;
        break;
      case '-':
        t.kind = Tok::minus;
        break;
      case '*':
        t.kind = Tok::star;
        break;
      case '/':
        t.kind = Tok::slash;
        break;
      case '^':
        t.kind = Tok::caret;
        break;
      default:
        break;
    }
    out.push_back(std::move(t));
    if (out.back().kind == Tok::invalid) return out;
    ++col;
    ++i;
  }
  out.push_back(Token{Tok::end, "", line, col});
  return out;
}

constexpr int kMaxIndex = 1'000'000;
constexpr long long kMaxExponent = 1'000'000;

// ---------------------------------------------------------------------------
// Recursive-descent parser over the token list

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  VectorField field() {
    if (toks_.size() == 2 && toks_[0].kind == Tok::integer && is_zero_literal(toks_[0].text)) return {};
    VectorField out;
    Rational sign = leading_sign();
    field_term(out, sign, true);
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      sign = next().kind == Tok::minus ? -1 : 1;
      field_term(out, sign, false);
    }
    expect_end();
    return out;
  }

  Polynomial polynomial() {
    Polynomial out;
    Rational sign = leading_sign();
    poly_term(out, sign, true);
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      sign = next().kind == Tok::minus ? -1 : 1;
      poly_term(out, sign, false);
    }
    expect_end();
    return out;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const Token& at, std::vector<std::string> expected) const {
    const std::string msg =
        at.kind == Tok::invalid ? "unexpected " + describe(at) : "unexpected " + describe(at);
    throw ParseError(at.line, at.column, std::move(expected), msg);
  }
  [[noreturn]] void fail_value(const Token& at, const std::string& msg) const {
    throw ParseError(at.line, at.column, {}, msg);
  }

  static bool is_zero_literal(const std::string& digits) {
    return digits.find_first_not_of('0') == std::string::npos;
  }

  Rational leading_sign() {
    if (peek().kind == Tok::minus) {
      next();
      return -1;
    }
    if (peek().kind == Tok::plus) next();
    return 1;
  }

  void expect_end() {
    if (peek().kind != Tok::end) fail(peek(), {"'+'", "'-'", "end of input"});
  }

  // INT used as an index or exponent: positive and bounded.
  long long small_positive(const Token& t, const char* what, long long limit) {
    const std::size_t nz = t.text.find_first_not_of('0');
    const std::string digits = nz == std::string::npos ? "0" : t.text.substr(nz);
    if (digits.size() > 9 || std::stoll(digits) > limit)
      fail_value(t, std::string(what) + " " + describe(t) + " is too large");
    const long long v = std::stoll(digits);
    if (v < 1) fail_value(t, std::string(what) + " must be >= 1");
    return v;
  }

  Rational coeff() {
    const Token& num = next();
    Integer n(num.text, 10);
    Integer d(1);
    if (peek().kind == Tok::slash) {
      next();
      if (peek().kind != Tok::integer) fail(peek(), {"INT"});
      const Token& den = next();
      d = Integer(den.text, 10);
      if (d == 0) fail_value(den, "zero denominator");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
  }

  Monomial monomial() {
    std::map<int, long long> exps;
    for (;;) {
      next();  // 'x'
      if (peek().kind != Tok::integer) fail(peek(), {"INT"});
      const Token& idx = next();
      const int var = static_cast<int>(small_positive(idx, "variable index", kMaxIndex));
      long long e = 1;
      if (peek().kind == Tok::caret) {
        next();
        if (peek().kind != Tok::integer) fail(peek(), {"INT"});
        e = small_positive(next(), "exponent", kMaxExponent);
      }
      long long& slot = exps[var];
      slot += e;
      if (slot > kMaxExponent) fail_value(idx, "exponent of x" + std::to_string(var) + " is too large");
      if (peek().kind == Tok::star && peek(1).kind == Tok::x) {
        next();
        continue;
      }
      break;
    }
    std::vector<Monomial::Factor> f;
    for (const auto& [v, e] : exps) f.emplace_back(v, static_cast<int>(e));
    return Monomial(std::move(f));
  }

  void field_term(VectorField& out, const Rational& sign, bool first) {
    Rational c = 1;
    Monomial m;
    bool have_coeff = false;
    if (peek().kind == Tok::integer) {
      c = coeff();
      have_coeff = true;
      if (peek().kind == Tok::star) {
        next();
        if (peek().kind != Tok::x && peek().kind != Tok::d) fail(peek(), {"'x'", "'d'"});
      }
    }
    if (peek().kind == Tok::x) {
      m = monomial();
      if (peek().kind == Tok::star) {
        next();
        if (peek().kind != Tok::d) fail(peek(), {"'d'"});
      }
    }
    if (peek().kind != Tok::d) {
      std::vector<std::string> expected;
      if (!have_coeff && m.is_unit()) expected.push_back("INT");
      if (have_coeff && m.is_unit()) expected.insert(expected.end(), {"'/'", "'*'"});
      if (m.is_unit()) expected.push_back("'x'");
      if (!m.is_unit()) expected.insert(expected.end(), {"'^'", "'*'"});
      expected.push_back("'d'");
      if (first && !have_coeff && m.is_unit() && pos_ == 0) expected.insert(expected.begin(), {"'+'", "'-'"});
      fail(peek(), std::move(expected));
    }
    next();
    if (peek().kind != Tok::integer) fail(peek(), {"INT"});
    const int dir = static_cast<int>(small_positive(next(), "direction index", kMaxIndex));
    out.add_term(TermKey{dir, std::move(m)}, sign * c);
  }

  void poly_term(Polynomial& out, const Rational& sign, bool first) {
    Rational c = 1;
    Monomial m;
    if (peek().kind == Tok::integer) {
      c = coeff();
      if (peek().kind == Tok::star) {
        next();
        if (peek().kind != Tok::x) fail(peek(), {"'x'"});
        m = monomial();
      }
    } else if (peek().kind == Tok::x) {
      m = monomial();
    } else {
      std::vector<std::string> expected{"INT", "'x'"};
      if (first && pos_ == 0) expected.insert(expected.begin(), {"'+'", "'-'"});
      fail(peek(), std::move(expected));
    }
    out.add_term(m, sign * c);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string term_body(const Monomial& m, const Rational& abs_coeff) {
  const bool unit_coeff = abs_coeff == 1;
  if (m.is_unit()) return to_string(abs_coeff);
  return unit_coeff ? print_monomial(m) : to_string(abs_coeff) + "*" + print_monomial(m);
}

std::string field_term_body(const TermKey& key, const Rational& abs_coeff) {
  const std::string d = "d" + std::to_string(key.direction);
  if (key.monomial.is_unit()) return abs_coeff == 1 ? d : to_string(abs_coeff) + " " + d;
  return term_body(key.monomial, abs_coeff) + " " + d;
}

}  // namespace

VectorField parse_field(std::string_view text) { return Parser(text).field(); }

Polynomial parse_polynomial(std::string_view text) { return Parser(text).polynomial(); }

std::string print_monomial(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(v);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string format_term(const TermKey& key, const Rational& coeff) {
  const Rational a = abs(coeff);
  return (coeff < 0 ? "-" : "") + field_term_body(key, a);
}

std::string print_field(const VectorField& w) {
  if (w.is_zero()) return "0";
  std::string out;
  w.for_each_term([&](const TermKey& key, const Rational& c) {
    const Rational a = abs(c);
    if (out.empty())
      out = (c < 0 ? "-" : "") + field_term_body(key, a);
    else
      out += (c < 0 ? " - " : " + ") + field_term_body(key, a);
  });
  return out;
}

std::string print_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    const Rational a = abs(c);
    if (out.empty())
      out = (c < 0 ? "-" : "") + term_body(m, a);
    else
      out += (c < 0 ? " - " : " + ") + term_body(m, a);
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON encoding

Json to_json(const Monomial& m) {
  Json j = Json::object();
  for (const auto& [v, e] : m.factors()) j[std::to_string(v)] = e;
  return j;
}

Json to_json(const Polynomial& p) {
  Json j = Json::array();
  for (const auto& [m, c] : p.terms()) j.push_back(Json{{"monomial", to_json(m)}, {"coeff", to_string(c)}});
  return j;
}

Json to_json(const VectorField& w) {
  Json comps = Json::object();
  for (const auto& [i, f] : w.components()) comps[std::to_string(i)] = to_json(f);
  return Json{{"components", comps}};
}

namespace {

Json term_json(const TermKey& key) {
  return Json{{"direction", key.direction}, {"monomial", to_json(key.monomial)}};
}

Json vector_json(const RationalVector& v) {
  Json j = Json::array();
  for (const auto& q : v) j.push_back(to_string(q));
  return j;
}

Json trajectory_json(const Trajectory& t) {
  return Json{{"values", vector_json(t.values)},
              {"stabilized", t.stabilized},
              {"first_stable_n", t.first_stable_n}};
}

Json fields_json(const std::vector<VectorField>& fs) {
  Json j = Json::array();
  for (const auto& f : fs) j.push_back(to_json(f));
  return j;
}

}  // namespace

Json to_json(const TruncationWindow& win) {
  return Json{{"max_var", win.max_var},
              {"degree_min", win.degree_min},
              {"degree_max", win.degree_max},
              {"mode", win.mode == TruncationMode::strict ? "strict" : "project"}};
}

Json to_json(const SubspaceSpec& s) {
  return Json{{"window", to_json(s.window())}, {"basis", fields_json(s.basis())}};
}

Json to_json(const SolveOutcome& s) {
  Json kernel = Json::array();
  for (const auto& k : s.kernel_basis) kernel.push_back(vector_json(k));
  return Json{{"kind", to_string(s.kind)},
              {"particular", s.particular ? vector_json(*s.particular) : Json(nullptr)},
              {"kernel_basis", kernel},
              {"inconsistent_row", s.inconsistent_row ? Json(*s.inconsistent_row) : Json(nullptr)}};
}

Json to_json(const InnerSolution& s) {
  Json cert = nullptr;
  if (s.certificate) {
    cert = Json{{"generator", s.certificate->generator},
                {"term", term_json(s.certificate->term)},
                {"required", to_string(s.certificate->required)},
                {"message", s.certificate->message}};
  }
  return Json{{"kind", to_string(s.kind)},
              {"solution", s.solution ? to_json(*s.solution) : Json(nullptr)},
              {"kernel", fields_json(s.kernel)},
              {"certificate", cert}};
}

Json to_json(const StabilizationReport& r) {
  Json coeffs = Json::array();
  for (const auto& c : r.coefficients)
    coeffs.push_back(Json{{"term", term_json(c.term)}, {"trajectory", trajectory_json(c.trajectory)}});
  return Json{{"task", to_string(r.task)},
              {"n_from", r.n_from},
              {"n_to", r.n_to},
              {"dimensions", trajectory_json(r.dimensions)},
              {"coefficients", coeffs},
              {"all_stabilized", r.all_stabilized()},
              {"limit", to_json(r.limit())}};
}

Json to_json(const DerivationSpec& d) {
  if (d.family()) return Json{{"family", to_string(*d.family())}, {"n", d.n()}, {"values", fields_json(d.values())}};
  return Json{{"generators", fields_json(d.generators())}, {"values", fields_json(d.values())}};
}

Json to_json(const CohomologyDims& c) {
  return Json{{"cocycles", c.cocycles},
              {"coboundaries", c.coboundaries},
              {"coboundaries_are_cocycles", c.coboundaries_are_cocycles},
              {"h1", c.h1()}};
}

// ---------------------------------------------------------------------------
// JSON decoding

namespace {

const Json& member(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) throw SchemaError(path.empty() ? "/" : path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "/" + key, "missing required member");
  return *it;
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

long long integer_at(const Json& j, const std::string& path, long long lo, long long hi) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  long long v = 0;
  if (j.is_number_unsigned()) {
    const auto u = j.get<unsigned long long>();
    if (u > static_cast<unsigned long long>(hi)) throw SchemaError(path, "integer out of range");
    v = static_cast<long long>(u);
  } else {
    v = j.get<long long>();
  }
  if (v < lo || v > hi) throw SchemaError(path, "integer " + std::to_string(v) + " out of range");
  return v;
}

bool bool_at(const Json& j, const std::string& path) {
  if (!j.is_boolean()) throw SchemaError(path, "expected a boolean");
  return j.get<bool>();
}

int index_key(const std::string& key, const std::string& path) {
  if (key.empty() || key.size() > 9 || key.find_first_not_of("0123456789") != std::string::npos)
    throw SchemaError(path, "key '" + key + "' is not a positive integer");
  const int v = std::stoi(key);
  if (v < 1) throw SchemaError(path, "index must be >= 1");
  return v;
}

RationalVector vector_from_json(const Json& j, const std::string& path) {
  RationalVector out;
  std::size_t k = 0;
  for (const auto& e : array_at(j, path)) out.push_back(rational_from_json(e, path + "/" + std::to_string(k++)));
  return out;
}

std::vector<VectorField> fields_from_json(const Json& j, const std::string& path, bool allow_text) {
  std::vector<VectorField> out;
  std::size_t k = 0;
  for (const auto& e : array_at(j, path)) {
    const std::string p = path + "/" + std::to_string(k++);
    if (allow_text && e.is_string()) {
      try {
        out.push_back(parse_field(e.get<std::string>()));
      } catch (const ParseError& err) {
        throw SchemaError(p, err.what());
      }
    } else {
      out.push_back(field_from_json(e, p));
    }
  }
  return out;
}

TermKey term_from_json(const Json& j, const std::string& path) {
  TermKey key;
  key.direction = static_cast<int>(integer_at(member(j, path, "direction"), path + "/direction", 1, 1'000'000));
  key.monomial = monomial_from_json(member(j, path, "monomial"), path + "/monomial");
  return key;
}

Trajectory trajectory_from_json(const Json& j, const std::string& path) {
  Trajectory t;
  t.values = vector_from_json(member(j, path, "values"), path + "/values");
  t.stabilized = bool_at(member(j, path, "stabilized"), path + "/stabilized");
  t.first_stable_n = static_cast<int>(
      integer_at(member(j, path, "first_stable_n"), path + "/first_stable_n", 0, 1'000'000));
  return t;
}

SolveKind kind_from_json(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  const auto s = j.get<std::string>();
  if (s == "unique") return SolveKind::unique;
  if (s == "underdetermined") return SolveKind::underdetermined;
  if (s == "inconsistent") return SolveKind::inconsistent;
  throw SchemaError(path, "unknown solve kind '" + s + "'");
}

}  // namespace

Rational rational_from_json(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "rational must be a string \"p\" or \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InvalidArgument& e) {
    throw SchemaError(path, e.what());
  }
}

Monomial monomial_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "monomial must be an object of exponents");
  std::vector<Monomial::Factor> f;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string p = path + "/" + it.key();
    const int v = index_key(it.key(), p);
    f.emplace_back(v, static_cast<int>(integer_at(it.value(), p, 1, 1'000'000)));
  }
  return Monomial(std::move(f));
}

Polynomial polynomial_from_json(const Json& j, const std::string& path) {
  Polynomial out;
  std::size_t k = 0;
  for (const auto& t : array_at(j, path)) {
    const std::string p = path + "/" + std::to_string(k++);
    const Monomial m = monomial_from_json(member(t, p, "monomial"), p + "/monomial");
    out.add_term(m, rational_from_json(member(t, p, "coeff"), p + "/coeff"));
  }
  return out;
}

VectorField field_from_json(const Json& j, const std::string& path) {
  const Json& comps = member(j, path, "components");
  const std::string cp = path + "/components";
  if (!comps.is_object()) throw SchemaError(cp, "expected an object");
  VectorField out;
  for (auto it = comps.begin(); it != comps.end(); ++it) {
    const std::string p = cp + "/" + it.key();
    out.add_component(index_key(it.key(), p), polynomial_from_json(it.value(), p));
  }
  return out;
}

TruncationWindow window_from_json(const Json& j, const std::string& path) {
  TruncationWindow w;
  w.max_var = static_cast<int>(integer_at(member(j, path, "max_var"), path + "/max_var", 1, 1'000'000));
  w.degree_min = static_cast<int>(integer_at(member(j, path, "degree_min"), path + "/degree_min", -1, 1'000'000));
  w.degree_max = static_cast<int>(integer_at(member(j, path, "degree_max"), path + "/degree_max", -1, 1'000'000));
  const Json& mode = member(j, path, "mode");
  if (mode == "strict")
    w.mode = TruncationMode::strict;
  else if (mode == "project")
    w.mode = TruncationMode::project;
  else
    throw SchemaError(path + "/mode", "expected \"strict\" or \"project\"");
  if (w.degree_max < w.degree_min) throw SchemaError(path, "degree_min exceeds degree_max");
  return w;
}

SubspaceSpec subspace_from_json(const Json& j, const std::string& path) {
  const TruncationWindow w = window_from_json(member(j, path, "window"), path + "/window");
  auto basis = fields_from_json(member(j, path, "basis"), path + "/basis", false);
  try {
    return SubspaceSpec(std::move(basis), w);
  } catch (const Error& e) {
    throw SchemaError(path + "/basis", e.what());
  }
}

SolveOutcome solve_outcome_from_json(const Json& j, const std::string& path) {
  SolveOutcome s;
  s.kind = kind_from_json(member(j, path, "kind"), path + "/kind");
  const Json& part = member(j, path, "particular");
  if (!part.is_null()) s.particular = vector_from_json(part, path + "/particular");
  std::size_t k = 0;
  for (const auto& v : array_at(member(j, path, "kernel_basis"), path + "/kernel_basis"))
    s.kernel_basis.push_back(vector_from_json(v, path + "/kernel_basis/" + std::to_string(k++)));
  const Json& row = member(j, path, "inconsistent_row");
  if (!row.is_null())
    s.inconsistent_row = static_cast<std::size_t>(integer_at(row, path + "/inconsistent_row", 0, 1LL << 40));
  if (s.kind == SolveKind::inconsistent && s.particular)
    throw SchemaError(path + "/particular", "inconsistent outcome cannot carry a particular solution");
  if (s.kind == SolveKind::unique && !s.kernel_basis.empty())
    throw SchemaError(path + "/kernel_basis", "unique outcome must have an empty kernel");
  return s;
}

InnerSolution inner_solution_from_json(const Json& j, const std::string& path) {
  InnerSolution s;
  s.kind = kind_from_json(member(j, path, "kind"), path + "/kind");
  const Json& sol = member(j, path, "solution");
  if (!sol.is_null()) s.solution = field_from_json(sol, path + "/solution");
  s.kernel = fields_from_json(member(j, path, "kernel"), path + "/kernel", false);
  const Json& cert = member(j, path, "certificate");
  if (!cert.is_null()) {
    const std::string cp = path + "/certificate";
    InconsistencyCertificate c;
    c.generator = static_cast<std::size_t>(integer_at(member(cert, cp, "generator"), cp + "/generator", 0, 1LL << 40));
    c.term = term_from_json(member(cert, cp, "term"), cp + "/term");
    c.required = rational_from_json(member(cert, cp, "required"), cp + "/required");
    const Json& msg = member(cert, cp, "message");
    if (!msg.is_string()) throw SchemaError(cp + "/message", "expected a string");
    c.message = msg.get<std::string>();
    s.certificate = std::move(c);
  }
  return s;
}

StabilizationReport stabilization_from_json(const Json& j, const std::string& path) {
  StabilizationReport r;
  const Json& task = member(j, path, "task");
  if (!task.is_string()) throw SchemaError(path + "/task", "expected a string");
  try {
    r.task = parse_scan_task(task.get<std::string>());
  } catch (const InvalidArgument& e) {
    throw SchemaError(path + "/task", e.what());
  }
  r.n_from = static_cast<int>(integer_at(member(j, path, "n_from"), path + "/n_from", 1, 1'000'000));
  r.n_to = static_cast<int>(integer_at(member(j, path, "n_to"), path + "/n_to", 1, 1'000'000));
  r.dimensions = trajectory_from_json(member(j, path, "dimensions"), path + "/dimensions");
  std::size_t k = 0;
  for (const auto& c : array_at(member(j, path, "coefficients"), path + "/coefficients")) {
    const std::string p = path + "/coefficients/" + std::to_string(k++);
    r.coefficients.push_back(
        {term_from_json(member(c, p, "term"), p + "/term"), trajectory_from_json(member(c, p, "trajectory"), p + "/trajectory")});
  }
  return r;
}

DerivationSpec derivation_from_json(const Json& j, const std::string& path) {
  auto values = fields_from_json(member(j, path, "values"), path + "/values", true);
  if (j.is_object() && j.contains("family")) {
    const Json& fam = j["family"];
    if (!fam.is_string()) throw SchemaError(path + "/family", "expected \"sl\" or \"L\"");
    GeneratorFamily f{};
    try {
      f = parse_family(fam.get<std::string>());
    } catch (const InvalidArgument& e) {
      throw SchemaError(path + "/family", e.what());
    }
    const int n = static_cast<int>(integer_at(member(j, path, "n"), path + "/n", f == GeneratorFamily::sl ? 2 : 1, 64));
    if (values.size() != family_basis(f, n).size())
      throw SchemaError(path + "/values", "expected " + std::to_string(family_basis(f, n).size()) +
                                              " values for this family, got " + std::to_string(values.size()));
    return DerivationSpec(f, n, std::move(values));
  }
  auto gens = fields_from_json(member(j, path, "generators"), path + "/generators", true);
  if (gens.size() != values.size())
    throw SchemaError(path + "/values", "generators and values differ in length");
  try {
    return DerivationSpec(std::move(gens), std::move(values));
  } catch (const InvalidArgument& e) {
    throw SchemaError(path + "/generators", e.what());
  }
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace vfalg
