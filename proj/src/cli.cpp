#include "signiter/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "signiter/errors.hpp"
#include "signiter/matrix_io.hpp"
#include "signiter/pade.hpp"
#include "signiter/serialize.hpp"
#include "signiter/sign_engine.hpp"

namespace signiter::cli {

namespace {

std::string coeff_list(const Poly& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i > 0) out += ", ";
    out += p.coeffs()[i].to_string();
  }
  return out + "]";
}

void print_spec_text(std::ostream& out, const IterationSpec& spec) {
  out << spec.label() << "  family=" << to_string(spec.family()) << "  s=" << spec.s() << '\n'
      << "  numerator:   " << spec.numerator().to_string() << "   " << coeff_list(spec.numerator()) << '\n'
      << "  denominator: " << spec.denominator().to_string() << "   " << coeff_list(spec.denominator()) << '\n';
}

std::string sci(double x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << x;
  return os.str();
}

std::string pair_label(int m, int n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

int exit_code_for(IterationStatus status) {
  switch (status) {
    case IterationStatus::converged:
      return kSuccess;
    case IterationStatus::max_iterations:
      return kNotConverged;
    case IterationStatus::singular_step:
    case IterationStatus::diverged:
      return kNumericalFailure;
  }
  return kNumericalFailure;
}

void add_pair_checks(VerifyReport& report, int s, int m, int n) {
  const int total = 2 * s - 1;
  const IterationSpec phi = build_phi(m, n);
  const PolyPair pade_pair{phi.numerator(), phi.denominator()};

  const MinimalPair by_recursion = construct_by_recursion(m, n);
  bool three_way = false;
  std::string detail;
  try {
    const MinimalPair by_nullspace = construct_by_nullspace(m, n);
    three_way = equal_up_to_scalar(pade_pair, by_recursion.pair()) &&
                equal_up_to_scalar(by_recursion.pair(), by_nullspace.pair());
    detail = phi.numerator().to_string() + " / " + phi.denominator().to_string();
  } catch (const std::logic_error& e) {
    detail = e.what();
  }
  report.checks.push_back({"three-way", s, m, n, three_way, detail});

  const OrderCheck order = verify_order_conditions(phi.numerator(), phi.denominator(), s);
  report.checks.push_back({"strictness", s, m, n, order.holds && order.strict_at_plus1 && order.strict_at_minus1,
                           ""});

  const int exact = exact_order_at_fixed_points(phi.numerator(), phi.denominator());
  report.checks.push_back({"exact-order", s, m, n, exact == s, "order " + std::to_string(exact)});

  const IterationSpec mirror = build_phi(total - m, total - n);
  const Poly lhs = phi.numerator() * mirror.numerator();
  const Poly rhs = phi.denominator() * mirror.denominator();
  report.checks.push_back({"reciprocity", s, m, n, equal_up_to_scalar({lhs, Poly{}}, {rhs, Poly{}}),
                           "with " + mirror.label()});
}

void add_endpoint_checks(VerifyReport& report, int s) {
  const Poly expected = pow(Poly({-1, 0, 1}), s);
  for (const auto& [m, n] : {std::pair{2 * s, -1}, std::pair{-1, 2 * s}}) {
    const MinimalPair pair = construct_by_recursion(m, n);
    const PolyPair want = m == -1 ? PolyPair{Poly{}, expected} : PolyPair{expected, Poly{}};
    const auto nullity = exact_nullspace(order_condition_matrix(m, n, s)).size();
    report.checks.push_back({"endpoint", s, m, n, equal_up_to_scalar(pair.pair(), want) && nullity == 1,
                             "nullity " + std::to_string(nullity)});
  }
}

int cmd_gen(int m, int n, const std::string& format, std::ostream& out) {
  const IterationSpec spec = build_phi(m, n);
  if (format == "structured") {
    out << to_json(spec).dump(2) << '\n';
  } else {
    print_spec_text(out, spec);
  }
  return kSuccess;
}

int cmd_table(int s, const std::string& format, std::ostream& out) {
  const auto table = family_table(s);
  if (format == "structured") {
    Json list = Json::array();
    for (const auto& spec : table) list.push_back(to_json(spec));
    out << list.dump(2) << '\n';
  } else {
    for (const auto& spec : table) print_spec_text(out, spec);
  }
  return kSuccess;
}

int cmd_verify(int s_max, const std::string& format, std::ostream& out) {
  if (s_max < 2) throw std::invalid_argument("--s-max must be at least 2");
  const VerifyReport report = run_verification(s_max);

  if (format == "structured") {
    Json j;
    j["s_max"] = s_max;
    j["scan"] = Json::array();
    for (const auto& scan : report.scans) {
      for (const auto& r : scan.records) j["scan"].push_back(to_json(r));
    }
    j["checks"] = Json::array();
    for (const auto& c : report.checks) {
      j["checks"].push_back({{"kind", c.kind}, {"s", c.s}, {"m", c.m}, {"n", c.n}, {"passed", c.passed}});
    }
    j["certified"] = report.passed();
    out << j.dump(2) << '\n';
  } else {
    std::size_t null0 = 0;
    std::size_t null1 = 0;
    for (const auto& scan : report.scans) {
      for (const auto& r : scan.records) {
        const bool minimal = r.m + r.n == 2 * r.s - 1;
        (minimal ? null1 : null0) += r.certified ? 1 : 0;
        out << (r.certified ? "[ok]   " : "[FAIL] ") << "s=" << r.s << " scan " << pair_label(r.m, r.n)
            << " nullity=" << r.nullity;
        if (r.strict) out << " strict=" << (*r.strict ? "yes" : "no");
        out << '\n';
      }
    }
    for (const auto& c : report.checks) {
      out << (c.passed ? "[ok]   " : "[FAIL] ") << "s=" << c.s << ' ' << c.kind << ' ' << pair_label(c.m, c.n);
      if (!c.detail.empty()) out << "  " << c.detail;
      out << '\n';
    }
    out << "certified " << null0 << " nullity-0 and " << null1 << " nullity-1 degree pairs, " << report.checks.size()
        << " construction checks\n";
  }

  if (format == "structured") return report.passed() ? kSuccess : kVerificationFailure;
  if (!report.passed()) {
    for (const auto& scan : report.scans) {
      for (const auto& r : scan.records) {
        if (!r.certified) out << "verification failed at s=" << r.s << " " << pair_label(r.m, r.n) << '\n';
      }
    }
    for (const auto& c : report.checks) {
      if (!c.passed) out << "verification failed at s=" << c.s << " " << pair_label(c.m, c.n) << " (" << c.kind << ")\n";
    }
    return kVerificationFailure;
  }
  out << "all checks passed\n";
  return kSuccess;
}

std::filesystem::path default_output_path(const std::filesystem::path& input) {
  std::filesystem::path out = input;
  out.replace_filename(input.stem().string() + ".sign" + input.extension().string());
  return out;
}

int cmd_sign(const std::string& input, int m, int n, std::optional<double> tol, int max_iter,
             const std::string& output, const std::string& report_path, std::ostream& out, std::ostream& err) {
  const IterationSpec spec = build_phi(m, n);
  DenseMatrix a;
  try {
    a = read_matrix_file(input);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  if (a.rows() != a.cols()) {
    err << "error: matrix must be square, got " << a.rows() << "x" << a.cols() << '\n';
    return kUsageError;
  }

  const MatrixRun run =
      matrix_sign_iterate(spec, a, tol.value_or(default_tolerance(static_cast<std::size_t>(a.rows()))), max_iter);
  const std::filesystem::path out_path = output.empty() ? default_output_path(input) : std::filesystem::path(output);
  if (run.report.status == IterationStatus::converged) write_matrix_file(out_path, run.value);

  if (!report_path.empty()) {
    std::ofstream rep(report_path);
    if (!rep) {
      err << "error: cannot write report '" << report_path << "'\n";
      return kUsageError;
    }
    rep << to_json(run.report).dump(2) << '\n';
  }
  out << spec.label() << " on " << a.rows() << "x" << a.cols() << " matrix: " << to_string(run.report.status)
      << " after " << run.report.iterate_count << " iterations\n";
  out << "residual |S^2-I|/|S|^2 = " << sci(run.report.final_residual_sq) << '\n';
  if (run.report.status == IterationStatus::converged) {
    out << "sign written to " << out_path.string() << '\n';
  } else {
    err << "error: iteration did not converge (" << to_string(run.report.status) << ")\n";
  }
  return exit_code_for(run.report.status);
}

int cmd_trace(const std::string& z0_text, int m, int n, std::optional<double> tol, int max_iter,
              const std::string& format, std::ostream& out, std::ostream& err) {
  const IterationSpec spec = build_phi(m, n);
  Complex z0;
  try {
    z0 = parse_complex(z0_text);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  const int target = scalar_sign(z0);
  const ScalarRun run = scalar_iterate(spec, z0, tol.value_or(default_tolerance(1)), max_iter);

  if (format == "structured") {
    Json j;
    j["iteration"] = to_json(spec);
    j["z0"] = format_complex(z0);
    j["iterates"] = Json::array();
    for (std::size_t k = 1; k < run.iterates.size(); ++k) {
      j["iterates"].push_back({{"k", k},
                               {"z", format_complex(run.iterates[k])},
                               {"error", std::abs(run.iterates[k] - static_cast<double>(target))}});
    }
    j["report"] = to_json(run.report);
    out << j.dump(2) << '\n';
  } else {
    out << spec.label() << " from z0 = " << format_complex(z0) << ", sign(z0) = " << (target > 0 ? "+1" : "-1")
        << '\n';
    out << std::setw(4) << "k" << "  " << std::left << std::setw(44) << "z_k" << std::right << "|z_k - sign(z0)|\n";
    for (std::size_t k = 1; k < run.iterates.size(); ++k) {
      out << std::setw(4) << k << "  " << std::left << std::setw(44) << format_complex(run.iterates[k]) << std::right
          << sci(std::abs(run.iterates[k] - static_cast<double>(target))) << '\n';
    }
    out << "status: " << to_string(run.report.status) << " after " << run.report.iterate_count << " steps\n";
    if (run.report.estimated_order) {
      out << "estimated order: " << std::fixed << std::setprecision(3) << *run.report.estimated_order << '\n';
    } else {
      out << "estimated order: n/a (too few usable errors)\n";
    }
  }
  return exit_code_for(run.report.status);
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(scans.begin(), scans.end(), [](const ScanReport& r) { return r.certified(); }) &&
         std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

VerifyReport run_verification(int s_max) {
  VerifyReport report;
  report.s_max = s_max;
  for (int s = 2; s <= s_max; ++s) {
    report.scans.push_back(optimality_scan(s));
    for (int m = 0; m <= 2 * s - 1; ++m) add_pair_checks(report, s, m, 2 * s - 1 - m);
    add_endpoint_checks(report, s);
  }
  return report;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pade sign-function iterations: construction, optimality checks and matrix sign"};
  app.require_subcommand(1);

  int m = 0;
  int n = 0;
  int s = 0;
  std::string format = "text";
  const auto format_check = CLI::IsMember({"text", "structured"});

  auto* gen = app.add_subcommand("gen", "Print the iteration phi_{m,n}");
  gen->add_option("--m", m, "Numerator degree")->required();
  gen->add_option("--n", n, "Denominator degree")->required();
  gen->add_option("--format", format, "text or structured")->check(format_check);

  auto* table = app.add_subcommand("table", "Print every iteration of order s");
  table->add_option("--s", s, "Order of convergence")->required();
  table->add_option("--format", format, "text or structured")->check(format_check);

  int s_max = 0;
  auto* verify = app.add_subcommand("verify", "Certify minimality and uniqueness for s = 2..s-max");
  verify->add_option("--s-max", s_max, "Largest order to check")->required();
  verify->add_option("--format", format, "text or structured")->check(format_check);

  std::string input;
  std::string output;
  std::string report_path;
  std::optional<double> tol;
  int max_iter = kDefaultMaxIter;
  int sign_m = 2;
  int sign_n = 1;
  auto* sign = app.add_subcommand("sign", "Compute sign(A) for a matrix file");
  sign->add_option("--input", input, "Matrix file")->required();
  auto* sign_m_opt = sign->add_option("--m", sign_m, "Numerator degree (default 2)");
  auto* sign_n_opt = sign->add_option("--n", sign_n, "Denominator degree (default 1)");
  sign_m_opt->needs(sign_n_opt);
  sign_n_opt->needs(sign_m_opt);
  sign->add_option("--tol", tol, "Relative step tolerance (default 100 n eps)");
  sign->add_option("--max-iter", max_iter, "Iteration limit")->check(CLI::PositiveNumber);
  sign->add_option("--output", output, "Output matrix file (default <input>.sign<ext>)");
  sign->add_option("--report", report_path, "Write the convergence report here");

  std::string z0;
  auto* trace = app.add_subcommand("trace", "Trace a scalar iteration");
  trace->add_option("--z0", z0, "Start value RE[+IMi]")->required();
  trace->add_option("--m", m, "Numerator degree")->required();
  trace->add_option("--n", n, "Denominator degree")->required();
  trace->add_option("--tol", tol, "Relative step tolerance (default 100 eps)");
  trace->add_option("--max-iter", max_iter, "Iteration limit")->check(CLI::PositiveNumber);
  trace->add_option("--format", format, "text or structured")->check(format_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }
  if (tol && !(*tol > 0.0)) {
    err << "error: --tol must be positive\n";
    return kUsageError;
  }

  try {
    if (gen->parsed()) return cmd_gen(m, n, format, out);
    if (table->parsed()) return cmd_table(s, format, out);
    if (verify->parsed()) return cmd_verify(s_max, format, out);
    if (sign->parsed()) return cmd_sign(input, sign_m, sign_n, tol, max_iter, output, report_path, out, err);
    if (trace->parsed()) return cmd_trace(z0, m, n, tol, max_iter, format, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("signiter");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace signiter::cli
