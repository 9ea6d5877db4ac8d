#include "cli/app.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "cli/expr.hpp"
#include "cli/report.hpp"
#include "cli/verify.hpp"
#include "motivic/motives.hpp"

namespace motive {

using namespace motivic;

std::string resource_refusal(int p, int n, int m) {
  std::uint64_t degree = 1;
  for (int i = 0; i < n; ++i) {
    degree *= static_cast<std::uint64_t>(p);
    if (degree > static_cast<std::uint64_t>(kMaxDegree))
      return "p^n = " + std::to_string(p) + "^" + std::to_string(n) + " exceeds the limit " +
             std::to_string(kMaxDegree) + " (use --force to run anyway)";
  }
  const auto spec = GeometrySpec::make(p, n, m);
  const auto rank = poincare_grassmannian(spec.k, spec.d + 1).total();
  if (rank > kMaxGrassmannRank)
    return "G(" + std::to_string(spec.k) + ", " + std::to_string(spec.d + 1) + ") has " +
           std::to_string(rank) + " Schubert classes, above the limit " + std::to_string(kMaxGrassmannRank) +
           " (use --force to run anyway)";
  return {};
}

int resolve_threads(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("MOTIVE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 1024) return static_cast<int>(v);
  }
  return 1;
}

namespace {

struct SpecFlags {
  int p = 0;
  int n = 0;
  int m = -1;
};

/// Validates (p, n, m); returns an exit code on failure.
std::optional<int> check_spec(const SpecFlags& f, bool force, std::ostream& err) {
  try {
    (void)GeometrySpec::make(f.p, f.n, f.m);
  } catch (const std::invalid_argument& ex) {
    // p^n beyond what the library represents is a resource refusal, not bad input.
    const bool too_big = std::string(ex.what()).find("above") != std::string::npos;
    err << "error: " << ex.what() << "\n";
    return too_big ? exit_resource : exit_invalid;
  }
  if (!force) {
    if (const auto why = resource_refusal(f.p, f.n, f.m); !why.empty()) {
      err << "refused: " << why << "\n";
      return exit_resource;
    }
  }
  return std::nullopt;
}

int cmd_decompose(const SpecFlags& f, std::optional<int> kmax, bool as_json, int threads, bool force,
                  bool timing, std::ostream& out, std::ostream& err) {
  if (auto code = check_spec(f, force, err)) return *code;
  const auto spec = GeometrySpec::make(f.p, f.n, f.m);
  DecomposeOptions opts;
  opts.k_max = kmax;
  opts.subring.threads = threads;
  const auto start = std::chrono::steady_clock::now();
  DecompositionReport report;
  try {
    report = decompose(spec, opts);
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
    return exit_invalid;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (as_json) {
    out << to_json(ReportDocument{report, timing ? ms : 0.0}).dump(2) << "\n";
  } else {
    out << to_text(report, timing ? std::optional<double>(ms) : std::nullopt);
  }
  return exit_ok;
}

int cmd_eval(const SpecFlags& f, const std::vector<int>& grassmann, const std::string& text, bool force,
             std::ostream& out, std::ostream& err) {
  const bool product = f.p != 0 || f.n != 0 || f.m != -1;
  if (product == !grassmann.empty()) {
    err << "error: give either --p --n --m or --grassmann k n p\n";
    return exit_invalid;
  }
  std::unique_ptr<Evaluator> ev;
  try {
    if (product) {
      if (auto code = check_spec(f, force, err)) return *code;
      ev = std::make_unique<Evaluator>(GeometrySpec::make(f.p, f.n, f.m));
    } else {
      const int k = grassmann[0], n = grassmann[1], p = grassmann[2];
      if (k < 1 || k > n) {
        err << "error: --grassmann needs 1 <= k <= n\n";
        return exit_invalid;
      }
      if (!force && (n > kMaxDegree || poincare_grassmannian(k, n).total() > kMaxGrassmannRank)) {
        err << "refused: G(" << k << ", " << n << ") exceeds the resource limits (use --force to run anyway)\n";
        return exit_resource;
      }
      ev = std::make_unique<Evaluator>(k, n, p);
    }
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
    return exit_invalid;
  }
  try {
    out << ev->format(ev->evaluate(text)) << "\n";
  } catch (const ParseError& ex) {
    err << "error: " << ex.what() << "\n  " << text << "\n  " << std::string(ex.column(), ' ') << "^\n";
    return exit_invalid;
  } catch (const ModeError& ex) {
    err << "error: " << ex.what() << "\n";
    return exit_invalid;
  }
  return exit_ok;
}

int cmd_verify(const std::string& only, bool as_json, int threads, bool timing, std::ostream& out,
               std::ostream& err) {
  VerifySuite suite(builtin_corpus(), threads);
  std::vector<CaseResult> results;
  if (only.empty()) {
    results = suite.run_all();
  } else {
    if (!suite.has_case(only)) {
      err << "error: unknown case '" << only << "'; known cases:";
      for (const auto& id : suite.case_ids()) err << " " << id;
      err << "\n";
      return exit_invalid;
    }
    results.push_back(suite.run(only));
  }
  if (as_json) out << to_json(results, timing).dump(2) << "\n";
  else out << to_text(results, timing);
  for (const auto& r : results)
    if (!r.passed) return exit_failure;
  return exit_ok;
}

int cmd_poincare(int k, int n, bool as_json, std::ostream& out, std::ostream& err) {
  if (k < 0 || n < k || n > 4096) {
    err << "error: poincare needs 0 <= k <= n <= 4096\n";
    return exit_invalid;
  }
  PoincarePoly poly;
  try {
    poly = poincare_grassmannian(k, n);
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return exit_invalid;
  }
  if (as_json) {
    nlohmann::ordered_json j;
    j["k"] = k;
    j["n"] = n;
    j["coefficients"] = poly.coeffs();
    j["rank"] = poly.total();
    out << j.dump(2) << "\n";
  } else {
    out << poly.to_string() << "\n";
  }
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Motivic decompositions of generalized Severi-Brauer varieties X(p^m, D), deg D = p^n",
               "motive"};
  app.require_subcommand(1);

  SpecFlags spec;
  std::optional<int> kmax;
  bool as_json = false, force = false, no_timing = false;
  int threads = 0;

  auto* decompose = app.add_subcommand("decompose", "Multiplicities and residual Poincare polynomial");
  decompose->add_option("--p", spec.p, "prime p")->required();
  decompose->add_option("--n", spec.n, "deg D = p^n")->required();
  decompose->add_option("--m", spec.m, "ideals of reduced dimension p^m")->required();
  decompose->add_option("--kmax", kmax, "compute V_k directly up to this k (default ceil(D/2))");
  decompose->add_flag("--json", as_json, "print the report as JSON");
  decompose->add_option("--threads", threads, "worker threads (default: MOTIVE_THREADS or 1)");
  decompose->add_flag("--force", force, "ignore the resource limits");
  decompose->add_flag("--no-timing", no_timing, "report elapsed time as 0 for reproducible output");

  std::vector<int> grassmann;
  std::string expression;
  auto* eval = app.add_subcommand("eval", "Evaluate an expression in a Chow ring");
  eval->add_option("--p", spec.p, "prime p (product ring mode)");
  eval->add_option("--n", spec.n, "deg D = p^n (product ring mode)");
  eval->add_option("--m", spec.m, "ideals of reduced dimension p^m (product ring mode)");
  eval->add_option("--grassmann", grassmann, "k n p: work in Ch(G(k, n); F_p)")->expected(3);
  eval->add_option("expression", expression, "e.g. \"push(cT6*cT2^2)\"")->required();
  eval->add_flag("--force", force, "ignore the resource limits");

  std::string only;
  auto* verify = app.add_subcommand("verify", "Reproduce the published examples");
  verify->add_option("--case", only, "run a single case");
  verify->add_flag("--json", as_json, "print results as JSON");
  verify->add_option("--threads", threads, "worker threads (default: MOTIVE_THREADS or 1)");
  verify->add_flag("--no-timing", no_timing, "report elapsed time as 0 for reproducible output");

  int pk = 0, pn = 0;
  auto* poincare = app.add_subcommand("poincare", "Gaussian binomial [n choose k]_t");
  poincare->add_option("--k", pk, "k")->required();
  poincare->add_option("--n", pn, "n")->required();
  poincare->add_flag("--json", as_json, "print coefficients as JSON");

  std::vector<std::string> argv_storage{"motive"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_invalid;
  }

  const int workers = resolve_threads(threads);
  try {
    if (*decompose)
      return cmd_decompose(spec, kmax, as_json, workers, force, !no_timing, out, err);
    if (*eval) return cmd_eval(spec, grassmann, expression, force, out, err);
    if (*verify) return cmd_verify(only, as_json, workers, !no_timing, out, err);
    if (*poincare) return cmd_poincare(pk, pn, as_json, out, err);
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << "\n";
    return exit_failure;
  }
  return exit_invalid;
}

}  // namespace motive
