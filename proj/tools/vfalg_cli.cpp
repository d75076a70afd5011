// Command-line front end. Everything goes through the C interface so the
// tool exercises exactly what other language bindings see.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "vfalg/vfalg.h"

namespace {

constexpr std::uint64_t kDefaultSeed = 20240601;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kComputation = 3 };

bool json_output = false;

struct FieldDeleter {
  void operator()(vfalg_field* f) const { vfalg_field_free(f); }
};
struct PolyDeleter {
  void operator()(vfalg_poly* p) const { vfalg_poly_free(p); }
};
struct ResultDeleter {
  void operator()(vfalg_result* r) const { vfalg_result_free(r); }
};
using FieldPtr = std::unique_ptr<vfalg_field, FieldDeleter>;
using PolyPtr = std::unique_ptr<vfalg_poly, PolyDeleter>;
using ResultPtr = std::unique_ptr<vfalg_result, ResultDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  vfalg_string_free(s);
  return out;
}

int report_usage(const std::string& message) {
  if (json_output)
    std::cout << nlohmann::json{{"error", "usage"}, {"message", message}}.dump() << "\n";
  else
    std::cerr << "error: " << message << "\n";
  return kUsage;
}

// Maps a failed status to an exit code and prints the error.
int report(vfalg_status status) {
  if (json_output)
    std::cout << vfalg_last_error_json() << "\n";
  else
    std::cerr << "error: " << vfalg_last_error() << "\n";
  switch (status) {
    case VFALG_INVALID_ARGUMENT:
    case VFALG_PARSE:
    case VFALG_SCHEMA:
      return kUsage;
    default:
      return kComputation;
  }
}

struct Failure {
  int code;
};

FieldPtr field_arg(const std::string& text) {
  vfalg_field* f = nullptr;
  if (auto st = vfalg_field_parse(text.c_str(), &f); st != VFALG_OK) throw Failure{report(st)};
  return FieldPtr(f);
}

// `call` fills in the result handle and returns the status.
template <typename Call>
int emit(Call&& call, bool fail_on_not_ok = false) {
  vfalg_result* raw = nullptr;
  const vfalg_status status = call(&raw);
  if (status != VFALG_OK) return report(status);
  ResultPtr r(raw);
  if (json_output)
    std::cout << take(vfalg_result_json(r.get())) << "\n";
  else
    std::cout << take(vfalg_result_text(r.get()));
  return fail_on_not_ok && !vfalg_result_ok(r.get()) ? kVerifyFailed : kOk;
}

vfalg_mode parse_mode(const std::string& s) { return s == "project" ? VFALG_PROJECT : VFALG_STRICT; }

struct WindowOptions {
  std::optional<int> max_var;
  int deg_min = -1;
  int deg_max = 2;
  std::string mode = "strict";

  void add(CLI::App* app) {
    app->add_option("--max-var", max_var, "Largest variable and direction index");
    app->add_option("--deg-min", deg_min, "Smallest field degree")->capture_default_str();
    app->add_option("--deg-max", deg_max, "Largest field degree")->capture_default_str();
    app->add_option("--mode", mode, "Window behaviour")
        ->check(CLI::IsMember({"strict", "project"}))
        ->capture_default_str();
  }

  vfalg_window window(int default_max_var) const {
    return vfalg_window{max_var.value_or(default_max_var), deg_min, deg_max, parse_mode(mode)};
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{report_usage("cannot read " + path)};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--format" && std::string(argv[i + 1]) == "json") json_output = true;

  CLI::App app{"Exact computations with polynomial vector fields"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string a_text, b_text;
  auto* bracket_cmd = app.add_subcommand("bracket", "Lie bracket [A, B]");
  bracket_cmd->add_option("A", a_text)->required();
  bracket_cmd->add_option("B", b_text)->required();

  auto* apply_cmd = app.add_subcommand("apply", "Apply field W to polynomial P");
  apply_cmd->add_option("W", a_text)->required();
  apply_cmd->add_option("P", b_text)->required();

  int n = 0;
  std::string gens = "sl";
  WindowOptions win;
  auto* centralizer_cmd = app.add_subcommand("centralizer", "Centralizer of sl_n or L_n in a window");
  centralizer_cmd->add_option("--n", n)->required();
  centralizer_cmd->add_option("--gens", gens)->check(CLI::IsMember({"sl", "L"}))->capture_default_str();
  win.add(centralizer_cmd);

  int k = 0;
  std::optional<int> h1_max_var;
  auto* h1_cmd = app.add_subcommand("h1", "dim H^1 of sl_n with values in degree-k fields");
  h1_cmd->add_option("--n", n)->required();
  h1_cmd->add_option("--k", k)->required();
  h1_cmd->add_option("--max-var", h1_max_var, "Number of variables (default n+1)");

  std::string inner_gens = "L";
  std::string from_ad, spec_file;
  WindowOptions inner_win;
  auto* solve_cmd = app.add_subcommand("solve-inner", "Recover w from derivation values");
  solve_cmd->add_option("--n", n);
  solve_cmd->add_option("--gens", inner_gens)->check(CLI::IsMember({"sl", "L"}))->capture_default_str();
  auto* from_ad_opt = solve_cmd->add_option("--from-ad", from_ad, "Use d = ad(W)");
  auto* spec_opt = solve_cmd->add_option("--spec", spec_file, "JSON derivation spec file");
  from_ad_opt->excludes(spec_opt);
  inner_win.add(solve_cmd);

  WindowOptions closure_win;
  auto* closure_cmd = app.add_subcommand("closure", "sl_n-submodule generated by V");
  closure_cmd->add_option("V", a_text)->required();
  closure_cmd->add_option("--n", n)->required();
  closure_win.add(closure_cmd);

  std::string suite = "all";
  std::uint64_t seed = kDefaultSeed;
  auto* verify_cmd = app.add_subcommand("verify", "Run seeded property suites");
  verify_cmd->add_option("--suite", suite)
      ->check(CLI::IsMember({"all", "poly", "exactla", "witt", "derivations", "textio"}))
      ->capture_default_str();
  verify_cmd->add_option("--seed", seed)->capture_default_str();

  std::string task = "solve-inner";
  int n_from = 2, n_to = 5;
  std::optional<int> extra_vars;
  std::string stab_field;
  WindowOptions stab_win;
  auto* stabilize_cmd = app.add_subcommand("stabilize", "Track normalized solutions as n grows");
  stabilize_cmd->add_option("--task", task)
      ->check(CLI::IsMember({"centralizer", "solve-inner"}))
      ->capture_default_str();
  stabilize_cmd->add_option("--n-from", n_from)->capture_default_str();
  stabilize_cmd->add_option("--n-to", n_to)->capture_default_str();
  stabilize_cmd->add_option("--gens", gens)->check(CLI::IsMember({"sl", "L"}));
  stabilize_cmd->add_option("--field,--from-ad", stab_field, "Fixed w for the solve-inner task");
  stabilize_cmd->add_option("--extra-vars", extra_vars,
                            "Variables beyond n (default 0 for solve-inner, 1 for centralizer)");
  stab_win.add(stabilize_cmd);

  int rig_deg_max = 2;
  auto* rigidity_cmd = app.add_subcommand("rigidity", "Windowed derivation tables vanishing on L_n");
  rigidity_cmd->add_option("--n", n)->required();
  rigidity_cmd->add_option("--deg-max", rig_deg_max)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    if (json_output) return report_usage(e.what());
    app.exit(e);
    return kUsage;
  }

  try {
    if (bracket_cmd->parsed()) {
      auto a = field_arg(a_text), b = field_arg(b_text);
      vfalg_field* out = nullptr;
      if (auto st = vfalg_bracket(a.get(), b.get(), &out); st != VFALG_OK) return report(st);
      FieldPtr r(out);
      std::cout << (json_output ? take(vfalg_field_to_json(r.get())) : take(vfalg_field_print(r.get()))) << "\n";
      return kOk;
    }
    if (apply_cmd->parsed()) {
      auto w = field_arg(a_text);
      vfalg_poly* p = nullptr;
      if (auto st = vfalg_poly_parse(b_text.c_str(), &p); st != VFALG_OK) return report(st);
      PolyPtr poly(p);
      vfalg_poly* out = nullptr;
      if (auto st = vfalg_apply(w.get(), poly.get(), &out); st != VFALG_OK) return report(st);
      PolyPtr r(out);
      const std::string text = take(vfalg_poly_print(r.get()));
      if (json_output)
        std::cout << nlohmann::json{{"polynomial", text}}.dump() << "\n";
      else
        std::cout << text << "\n";
      return kOk;
    }
    if (centralizer_cmd->parsed()) {
      const auto w = win.window(n + 1);
      return emit([&](vfalg_result** out) { return vfalg_centralizer(gens.c_str(), n, &w, out); });
    }
    if (h1_cmd->parsed()) return emit([&](vfalg_result** out) { return vfalg_h1(n, k, h1_max_var.value_or(n + 1), out); });
    if (solve_cmd->parsed()) {
      if (!from_ad.empty()) {
        if (n == 0) return report_usage("--from-ad needs --n");
        auto w = field_arg(from_ad);
        const auto window = inner_win.window(n);
        return emit([&](vfalg_result** out) { return vfalg_solve_inner_from_ad(inner_gens.c_str(), n, w.get(), &window, out); });
      }
      if (spec_file.empty()) return report_usage("solve-inner needs --from-ad or --spec");
      const std::string text = read_file(spec_file);
      int spec_n = n;
      if (spec_n == 0) {
        const auto doc = nlohmann::json::parse(text, nullptr, false);
        if (doc.is_object() && doc.contains("n") && doc["n"].is_number_integer()) spec_n = doc["n"].get<int>();
      }
      if (spec_n == 0 && !inner_win.max_var) return report_usage("--spec without a family needs --n or --max-var");
      const auto window = inner_win.window(spec_n);
      return emit([&](vfalg_result** out) { return vfalg_solve_inner_from_json(text.c_str(), &window, out); });
    }
    if (closure_cmd->parsed()) {
      auto v = field_arg(a_text);
      const auto window = closure_win.window(n + 1);
      return emit([&](vfalg_result** out) { return vfalg_closure(v.get(), n, &window, out); });
    }
    if (verify_cmd->parsed()) return emit([&](vfalg_result** out) { return vfalg_verify(suite.c_str(), seed, out); }, true);
    if (stabilize_cmd->parsed()) {
      const bool inner_task = task == "solve-inner";
      FieldPtr w;
      if (inner_task) {
        if (stab_field.empty()) return report_usage("the solve-inner task needs --field W");
        w = field_arg(stab_field);
      }
      const std::string family = stabilize_cmd->count("--gens") ? gens : (inner_task ? "L" : "sl");
      return emit([&](vfalg_result** out) { return vfalg_stabilize(task.c_str(), family.c_str(), w.get(), n_from, n_to,
                                  extra_vars.value_or(inner_task ? 0 : 1), stab_win.deg_min, stab_win.deg_max,
                                  parse_mode(stab_win.mode), out); });
    }
    if (rigidity_cmd->parsed()) return emit([&](vfalg_result** out) { return vfalg_rigidity(n, rig_deg_max, out); });
  } catch (const Failure& f) {
    return f.code;
  }
  return report_usage("no subcommand");
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
