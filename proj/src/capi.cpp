#include "vfalg/vfalg.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "vfalg/derivations.hpp"
#include "vfalg/error.hpp"
#include "vfalg/textio.hpp"
#include "vfalg/verify.hpp"

struct vfalg_field {
  vfalg::VectorField value;
};

struct vfalg_poly {
  vfalg::Polynomial value;
};

struct vfalg_result {
  std::string text;
  vfalg::Json json;
  std::vector<vfalg::VectorField> fields;
  long long value = 0;
  bool ok = true;
};

namespace {

using vfalg::Json;

thread_local std::string last_error;
thread_local std::string last_error_json;

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

vfalg_status fail(vfalg_status status, const std::string& message, Json detail = Json::object()) {
  last_error = message;
  Json j{{"error", vfalg_status_name(status)}, {"message", message}};
  for (auto& [k, v] : detail.items()) j[k] = v;
  last_error_json = j.dump();
  return status;
}

// Runs `body`, translating library exceptions into status codes.
template <typename Body>
vfalg_status guarded(Body&& body) {
  last_error.clear();
  last_error_json.clear();
  try {
    return body();
  } catch (const vfalg::ParseError& e) {
    return fail(VFALG_PARSE, e.what(),
                Json{{"line", e.line()}, {"column", e.column()}, {"expected", e.expected()}});
  } catch (const vfalg::WindowViolation& e) {
    return fail(VFALG_WINDOW, e.what(), Json{{"term", e.term()}});
  } catch (const vfalg::InconsistentSpec& e) {
    return fail(VFALG_INCONSISTENT, e.what());
  } catch (const vfalg::SchemaError& e) {
    return fail(VFALG_SCHEMA, e.what(), Json{{"path", e.path()}});
  } catch (const vfalg::InvalidArgument& e) {
    return fail(VFALG_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(VFALG_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(VFALG_INTERNAL, e.what());
  }
}

#define REQUIRE_ARG(cond, what) \
  if (!(cond)) return fail(VFALG_INVALID_ARGUMENT, what)

vfalg::TruncationWindow to_window(const vfalg_window& w) {
  vfalg::TruncationWindow out{w.max_var, w.degree_min, w.degree_max,
                              w.mode == VFALG_PROJECT ? vfalg::TruncationMode::project
                                                      : vfalg::TruncationMode::strict};
  out.validate();
  return out;
}

Json fields_json(const std::vector<vfalg::VectorField>& fs) {
  Json arr = Json::array();
  for (const auto& f : fs) arr.push_back(vfalg::to_json(f));
  return arr;
}

std::string basis_text(const std::vector<vfalg::VectorField>& fs) {
  std::string out = "dim " + std::to_string(fs.size()) + "\n";
  for (const auto& f : fs) out += vfalg::print_field(f) + "\n";
  return out;
}

vfalg_result* basis_result(std::vector<vfalg::VectorField> basis, Json extra = Json::object()) {
  auto* r = new vfalg_result;
  r->value = static_cast<long long>(basis.size());
  r->text = basis_text(basis);
  r->json = Json{{"dim", basis.size()}, {"basis", fields_json(basis)}};
  for (auto& [k, v] : extra.items()) r->json[k] = v;
  r->fields = std::move(basis);
  return r;
}

std::string trajectory_text(const vfalg::Trajectory& t) {
  std::string out;
  for (const auto& v : t.values) out += (out.empty() ? "" : " ") + vfalg::to_string(v);
  if (t.stabilized)
    out += "  (stable from n=" + std::to_string(t.first_stable_n) + ")";
  else
    out += "  (not stabilized)";
  return out;
}

vfalg_status inner_result(const vfalg::InnerSolution& sol, vfalg_result** out) {
  if (sol.kind == vfalg::SolveKind::inconsistent) {
    const auto& c = *sol.certificate;
    return fail(VFALG_INCONSISTENT, c.message,
                Json{{"certificate", vfalg::to_json(sol)["certificate"]},
                     {"term", vfalg::format_term(c.term, c.required)}});
  }
  auto* r = new vfalg_result;
  r->fields.push_back(*sol.solution);
  r->fields.insert(r->fields.end(), sol.kernel.begin(), sol.kernel.end());
  r->value = static_cast<long long>(sol.kernel.size());
  r->text = vfalg::print_field(*sol.solution) + "\n";
  if (!sol.kernel.empty()) r->text += "kernel " + basis_text(sol.kernel);
  r->json = vfalg::to_json(sol);
  *out = r;
  return VFALG_OK;
}

}  // namespace

extern "C" {

const char* vfalg_version(void) { return "1.0.0"; }

const char* vfalg_status_name(vfalg_status status) {
  switch (status) {
    case VFALG_OK: return "ok";
    case VFALG_INVALID_ARGUMENT: return "invalid_argument";
    case VFALG_PARSE: return "parse_error";
    case VFALG_WINDOW: return "window_violation";
    case VFALG_INCONSISTENT: return "inconsistent_spec";
    case VFALG_SCHEMA: return "schema_error";
    case VFALG_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* vfalg_last_error(void) { return last_error.c_str(); }
const char* vfalg_last_error_json(void) { return last_error_json.c_str(); }
void vfalg_string_free(char* s) { std::free(s); }

vfalg_status vfalg_field_parse(const char* text, vfalg_field** out) {
  REQUIRE_ARG(text && out, "null argument");
  return guarded([&] {
    *out = new vfalg_field{vfalg::parse_field(text)};
    return VFALG_OK;
  });
}

vfalg_status vfalg_field_from_json(const char* json, vfalg_field** out) {
  REQUIRE_ARG(json && out, "null argument");
  return guarded([&] {
    *out = new vfalg_field{vfalg::field_from_json(vfalg::parse_json(json))};
    return VFALG_OK;
  });
}

vfalg_status vfalg_field_euler(int n, vfalg_field** out) {
  REQUIRE_ARG(out, "null argument");
  REQUIRE_ARG(n >= 1, "n must be at least 1");
  return guarded([&] {
    *out = new vfalg_field{vfalg::euler(n)};
    return VFALG_OK;
  });
}

vfalg_field* vfalg_field_clone(const vfalg_field* w) { return w ? new vfalg_field{w->value} : nullptr; }
void vfalg_field_free(vfalg_field* w) { delete w; }
char* vfalg_field_print(const vfalg_field* w) { return w ? copy_string(vfalg::print_field(w->value)) : nullptr; }
char* vfalg_field_to_json(const vfalg_field* w) { return w ? copy_string(vfalg::to_json(w->value).dump()) : nullptr; }

int vfalg_field_equal(const vfalg_field* a, const vfalg_field* b) {
  return a && b && a->value == b->value ? 1 : 0;
}

int vfalg_field_is_zero(const vfalg_field* w) { return w && w->value.is_zero() ? 1 : 0; }

vfalg_status vfalg_bracket(const vfalg_field* u, const vfalg_field* w, vfalg_field** out) {
  REQUIRE_ARG(u && w && out, "null argument");
  return guarded([&] {
    *out = new vfalg_field{vfalg::bracket(u->value, w->value)};
    return VFALG_OK;
  });
}

vfalg_status vfalg_poly_parse(const char* text, vfalg_poly** out) {
  REQUIRE_ARG(text && out, "null argument");
  return guarded([&] {
    *out = new vfalg_poly{vfalg::parse_polynomial(text)};
    return VFALG_OK;
  });
}

void vfalg_poly_free(vfalg_poly* p) { delete p; }
char* vfalg_poly_print(const vfalg_poly* p) { return p ? copy_string(vfalg::print_polynomial(p->value)) : nullptr; }

vfalg_status vfalg_apply(const vfalg_field* w, const vfalg_poly* p, vfalg_poly** out) {
  REQUIRE_ARG(w && p && out, "null argument");
  return guarded([&] {
    *out = new vfalg_poly{vfalg::apply_field(w->value, p->value)};
    return VFALG_OK;
  });
}

vfalg_status vfalg_centralizer(const char* family, int n, const vfalg_window* window, vfalg_result** out) {
  REQUIRE_ARG(family && window && out, "null argument");
  return guarded([&] {
    const auto fam = vfalg::parse_family(family);
    const auto ambient = vfalg::SubspaceSpec::full(to_window(*window));
    *out = basis_result(vfalg::centralizer(vfalg::family_basis(fam, n), ambient),
                        Json{{"family", vfalg::to_string(fam)}, {"n", n}, {"window", vfalg::to_json(ambient.window())}});
    return VFALG_OK;
  });
}

vfalg_status vfalg_h1(int n, int k, int max_var, vfalg_result** out) {
  REQUIRE_ARG(out, "null argument");
  return guarded([&] {
    if (n < 2) throw vfalg::InvalidArgument("n must be at least 2");
    const auto module = vfalg::SubspaceSpec::degree_slice(max_var, k);
    const auto dims = vfalg::first_cohomology(vfalg::sl_basis(n), module);
    const long long h1 = dims.h1();
    auto* r = new vfalg_result;
    r->value = h1;
    r->text = std::to_string(h1) + "\n";
    r->json = vfalg::to_json(dims);
    r->json["n"] = n;
    r->json["k"] = k;
    r->json["max_var"] = max_var;
    *out = r;
    return VFALG_OK;
  });
}

vfalg_status vfalg_closure(const vfalg_field* v, int n, const vfalg_window* window, vfalg_result** out) {
  REQUIRE_ARG(v && window && out, "null argument");
  return guarded([&] {
    const auto ambient = vfalg::SubspaceSpec::full(to_window(*window));
    *out = basis_result(vfalg::submodule_closure(v->value, n, ambient));
    return VFALG_OK;
  });
}

vfalg_status vfalg_solve_inner_from_ad(const char* family, int n, const vfalg_field* w,
                                       const vfalg_window* window, vfalg_result** out) {
  REQUIRE_ARG(family && w && window && out, "null argument");
  return guarded([&] {
    const auto spec = vfalg::DerivationSpec::inner(vfalg::parse_family(family), n, w->value);
    return inner_result(vfalg::solve_inner(spec, vfalg::SubspaceSpec::full(to_window(*window))), out);
  });
}

vfalg_status vfalg_solve_inner_from_json(const char* spec_json, const vfalg_window* window, vfalg_result** out) {
  REQUIRE_ARG(spec_json && window && out, "null argument");
  return guarded([&] {
    const auto spec = vfalg::derivation_from_json(vfalg::parse_json(spec_json));
    return inner_result(vfalg::solve_inner(spec, vfalg::SubspaceSpec::full(to_window(*window))), out);
  });
}

vfalg_status vfalg_stabilize(const char* task, const char* family, const vfalg_field* inner, int n_from,
                             int n_to, int extra_vars, int degree_min, int degree_max, vfalg_mode mode,
                             vfalg_result** out) {
  REQUIRE_ARG(task && family && out, "null argument");
  return guarded([&] {
    vfalg::ScanParameters params;
    params.task = vfalg::parse_scan_task(task);
    params.family = vfalg::parse_family(family);
    if (params.task == vfalg::ScanTask::solve_inner && !inner)
      throw vfalg::InvalidArgument("the solve-inner task needs a field");
    if (inner) params.inner = inner->value;
    params.extra_vars = extra_vars;
    params.degree_min = degree_min;
    params.degree_max = degree_max;
    params.mode = mode == VFALG_PROJECT ? vfalg::TruncationMode::project : vfalg::TruncationMode::strict;
    const auto report = vfalg::stabilization_scan(params, n_from, n_to);

    auto* r = new vfalg_result;
    r->ok = report.all_stabilized();
    std::ostringstream text;
    text << "dim " << trajectory_text(report.dimensions) << "\n";
    for (const auto& c : report.coefficients)
      text << vfalg::format_term(c.term, 1) << ": " << trajectory_text(c.trajectory) << "\n";
    if (report.task == vfalg::ScanTask::solve_inner) {
      r->fields.push_back(report.limit());
      text << "limit " << vfalg::print_field(report.limit()) << "\n";
    }
    text << (r->ok ? "stabilized" : "not stabilized") << "\n";
    r->text = text.str();
    r->json = vfalg::to_json(report);
    r->value = report.dimensions.values.empty()
                   ? 0
                   : static_cast<long long>(report.dimensions.values.back().get_num().get_si());
    *out = r;
    return VFALG_OK;
  });
}

vfalg_status vfalg_verify(const char* suite, uint64_t seed, vfalg_result** out) {
  REQUIRE_ARG(suite && out, "null argument");
  return guarded([&] {
    const auto report = vfalg::run_verify(suite, seed);
    auto* r = new vfalg_result;
    r->ok = report.passed();
    Json items = Json::array();
    std::string text = "seed " + std::to_string(seed) + "\n";
    for (const auto& item : report.items) {
      items.push_back(Json{{"id", item.id},
                           {"passed", item.passed},
                           {"cases", item.cases},
                           {"counterexample", item.passed ? Json(nullptr) : Json(item.counterexample)}});
      if (item.passed)
        text += "PASS " + item.id + " (" + std::to_string(item.cases) + " cases)\n";
      else
        text += "FAIL " + item.id + ": " + item.counterexample + "\n";
    }
    text += r->ok ? "all passed\n" : "verification failed\n";
    r->text = text;
    r->json = Json{{"seed", seed}, {"passed", r->ok}, {"items", items}};
    r->value = static_cast<long long>(report.items.size());
    *out = r;
    return VFALG_OK;
  });
}

vfalg_status vfalg_identities(const vfalg_field* w, int i, int j, vfalg_result** out) {
  REQUIRE_ARG(w && out, "null argument");
  return guarded([&] {
    const auto check = vfalg::check_bracket_identities(w->value, i, j);
    auto* r = new vfalg_result;
    r->ok = check.all();
    r->json = Json{{"commutator", check.commutator}, {"component", check.component}, {"diagonal", check.diagonal}};
    r->text = std::string("commutator ") + (check.commutator ? "ok" : "mismatch") + "\ncomponent " +
              (check.component ? "ok" : "mismatch") + "\ndiagonal " + (check.diagonal ? "ok" : "mismatch") + "\n";
    r->value = r->ok ? 1 : 0;
    *out = r;
    return VFALG_OK;
  });
}

vfalg_status vfalg_rigidity(int n, int degree_max, vfalg_result** out) {
  REQUIRE_ARG(out, "null argument");
  return guarded([&] {
    const auto t = vfalg::rigidity_table_dimension(n, degree_max);
    auto* r = new vfalg_result;
    r->value = static_cast<long long>(t.dimension);
    r->text = "dim " + std::to_string(t.dimension) + "\n";
    r->json = Json{{"n", n},
                   {"degree_max", degree_max},
                   {"domain_dim", t.domain_dim},
                   {"unknowns", t.unknowns},
                   {"checked_pairs", t.checked_pairs},
                   {"dim", t.dimension}};
    *out = r;
    return VFALG_OK;
  });
}

char* vfalg_result_text(const vfalg_result* r) { return r ? copy_string(r->text) : nullptr; }
char* vfalg_result_json(const vfalg_result* r) { return r ? copy_string(r->json.dump()) : nullptr; }
size_t vfalg_result_field_count(const vfalg_result* r) { return r ? r->fields.size() : 0; }

vfalg_field* vfalg_result_field_at(const vfalg_result* r, size_t index) {
  if (!r || index >= r->fields.size()) return nullptr;
  return new vfalg_field{r->fields[index]};
}

long long vfalg_result_value(const vfalg_result* r) { return r ? r->value : 0; }
int vfalg_result_ok(const vfalg_result* r) { return r && r->ok ? 1 : 0; }
void vfalg_result_free(vfalg_result* r) { delete r; }

}  // extern "C"
