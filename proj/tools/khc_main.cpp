#include "khc/dsl.hpp"
#include "khc/errors.hpp"
#include "khc/json_io.hpp"
#include "khc/katz.hpp"
#include "khc/render.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace khc;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct Loaded {
  dsl::Program program;
  dsl::EvalResult result;
};

// Shared parse+eval with the documented exit codes: 2 for parse/semantic
// errors, 3 for internal invariant violations.
int load(const std::string& path, Loaded& out) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return dsl::kExitUserError;
  }
  try {
    out.program = dsl::parse_program(text);
  } catch (const dsl::ParseError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return dsl::kExitUserError;
  }
  try {
    out.result = dsl::eval_program(out.program);
  } catch (const dsl::EvalError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return e.internal() ? dsl::kExitInternalError : dsl::kExitUserError;
  }
  return dsl::kExitOk;
}

int report_checks(const dsl::EvalResult& result, bool verbose) {
  int failed = 0;
  for (const auto& check : result.checks) {
    if (!check.passed) ++failed;
    if (verbose || !check.passed)
      std::cout << check.text << " ... " << (check.passed ? "ok" : "FAIL (" + check.detail + ")")
                << "\n";
  }
  if (!result.checks.empty() && verbose)
    std::cout << result.checks.size() << " checks, " << failed << " failed\n";
  return failed == 0 ? dsl::kExitOk : dsl::kExitCheckFailed;
}

int run_command(const std::string& path, const std::string& format, bool emit_intermediate,
                bool trace) {
  Loaded loaded;
  if (int rc = load(path, loaded); rc != dsl::kExitOk) return rc;
  RenderFormat rf = format == "json" ? RenderFormat::Json : RenderFormat::Table;

  const auto& names =
      emit_intermediate ? loaded.result.binding_order : loaded.result.emissions;
  for (const auto& name : names) {
    if (rf == RenderFormat::Table) {
      std::cout << "== " << name << " ==\n"
                << render(loaded.result.bindings.at(name), RenderFormat::Table) << "\n";
    } else {
      nlohmann::json entry{{"name", name}, {"system", to_json(loaded.result.bindings.at(name))}};
      std::cout << entry.dump(2) << "\n";
    }
  }
  if (trace) {
    for (const auto& [label, katz_trace] : loaded.result.traces) {
      nlohmann::json entry{{"name", label}, {"trace", to_json(katz_trace)}};
      std::cout << entry.dump(2) << "\n";
    }
  }
  return report_checks(loaded.result, false);
}

int check_command(const std::string& path) {
  Loaded loaded;
  if (int rc = load(path, loaded); rc != dsl::kExitOk) return rc;
  return report_checks(loaded.result, true);
}

int katz_command(const std::string& path) {
  Loaded loaded;
  if (int rc = load(path, loaded); rc != dsl::kExitOk) return rc;
  if (loaded.result.binding_order.empty()) {
    std::cerr << "error: the program has no bindings\n";
    return dsl::kExitUserError;
  }
  const std::string& name = loaded.result.binding_order.back();
  try {
    KatzTrace trace = katz_reduce(loaded.result.bindings.at(name));
    std::cout << to_json(trace).dump(2) << "\n";
  } catch (const CalcError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.internal() ? dsl::kExitInternalError : dsl::kExitUserError;
  }
  return dsl::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"khc - exact calculator for local systems on the punctured projective line"};
  app.require_subcommand(1);

  std::string run_file, run_format = "table";
  bool emit_intermediate = false, trace = false;
  auto* run = app.add_subcommand("run", "evaluate a program and render its emissions");
  run->add_option("file", run_file, "program file (.khc)")->required();
  run->add_option("--format", run_format, "output format")
      ->check(CLI::IsMember({"table", "json"}));
  run->add_flag("--emit-intermediate", emit_intermediate, "render every binding");
  run->add_flag("--trace", trace, "print reduction traces of katz() calls");

  std::string check_file;
  auto* check = app.add_subcommand("check", "run a program's embedded checks");
  check->add_option("file", check_file, "program file (.khc)")->required();

  std::string katz_file;
  auto* katz = app.add_subcommand("katz", "print the reduction trace of the last binding");
  katz->add_option("file", katz_file, "program file (.khc)")->required();

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) return run_command(run_file, run_format, emit_intermediate, trace);
  if (check->parsed()) return check_command(check_file);
  return katz_command(katz_file);
}
