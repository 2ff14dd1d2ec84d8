// conlag: command-line front end for the conformable Laguerre library.
//
//   conlag eval      --n 2 --m 0 --alpha 0.5 --x 1
//   conlag table     --n 3 --m 1 --alpha 0.5,0.75,1 --xmin 0 --xmax 8 --samples 200
//   conlag transform laguerre 4 --s 2
//   conlag solve     --n 4
//   conlag verify    --scope all
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "conlag/conlag.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kVerifyFailure = 1;
constexpr int kUsageError = 2;

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string label(unsigned n, unsigned m) {
  return "L_{" + std::to_string(n) + "}^{" + std::to_string(m) + "}";
}

int cmd_eval(unsigned n, unsigned m, double alpha, double x) {
  const conlag::AlphaValue a(alpha);
  if (!(x >= 0.0)) throw conlag::domain_error("x must be >= 0");
  const conlag::ReducedPoly p = conlag::assoc_closed(n, m);
  std::cout << label(n, m) << "(x^a/a) = " << conlag::render_x_view(p) << '\n';
  std::cout << "u-form: " << p.to_string() << '\n';
  std::cout << "value: " << fmt12(conlag::eval(p, x, a)) << '\n';
  return 0;
}

int cmd_table(unsigned n, unsigned m, const std::vector<double>& alphas, double xmin, double xmax,
              std::size_t samples) {
  std::cout << conlag::to_csv(conlag::build_table({n, m}, alphas, xmin, xmax, samples));
  return 0;
}

conlag::NamedSignal parse_signal(const std::string& name, double p, double omega) {
  using conlag::SignalKind;
  if (name == "one") return {SignalKind::one};
  if (name == "power_p") return {SignalKind::power_p, p};
  if (name == "exp_u") return {SignalKind::exp_u};
  if (name == "sin_wu") return {SignalKind::sin_wu, 0.0, omega};
  if (name == "cos_wu") return {SignalKind::cos_wu, 0.0, omega};
  throw CLI::ValidationError("transform", "unknown expression '" + name +
                                              "' (expected one, power_p, exp_u, sin_wu, cos_wu or laguerre <n>)");
}

int cmd_transform(const std::vector<std::string>& expr, double alpha, const double* s, double p, double omega) {
  const conlag::AlphaValue a(alpha);
  const conlag::QuadratureRule rule = conlag::gauss_laguerre(64);

  if (expr.front() == "laguerre") {
    if (expr.size() != 2) throw CLI::ValidationError("transform", "usage: transform laguerre <n>");
    const unsigned n = static_cast<unsigned>(std::stoul(expr[1]));
    const conlag::TransformExpr image = conlag::transform(conlag::laguerre_closed(n));
    std::cout << "signal: " << label(n, 0) << "(u)\n";
    std::cout << "transform: (s-1)^" << n << "/s^" << n + 1 << " = " << image.to_string() << '\n';
    if (s != nullptr) {
      const conlag::ExpPoly poly = conlag::laguerre_closed(n);
      std::cout << "s: " << fmt12(*s) << '\n';
      std::cout << "value: " << fmt12(image(*s)) << '\n';
      std::cout << "quadrature: "
                << fmt12(conlag::quad_transform([&](double u) { return conlag::eval(poly, u, conlag::AlphaValue(1.0)); },
                                                *s, rule))
                << '\n';
    }
    return 0;
  }
  if (expr.size() != 1) throw CLI::ValidationError("transform", "expected a single signal name");

  const conlag::NamedSignal sig = parse_signal(expr.front(), p, omega);
  const conlag::NamedTransform closed = conlag::transform_named(sig, a);
  std::cout << "signal: " << expr.front() << '\n';
  if (sig.kind == conlag::SignalKind::one) {
    std::cout << "transform: " << conlag::transform(conlag::ReducedPoly{1}).to_string() << '\n';
  } else if (sig.kind == conlag::SignalKind::exp_u) {
    std::cout << "transform: " << conlag::transform(conlag::ExpPoly::exp(1)).to_string() << '\n';
  } else {
    std::cout << "transform: " << closed.formula() << '\n';
  }
  if (s != nullptr) {
    std::cout << "s: " << fmt12(*s) << '\n';
    std::cout << "value: " << fmt12(closed(*s)) << '\n';
    std::cout << "quadrature: "
              << fmt12(conlag::quad_transform([&](double u) { return conlag::signal_value(sig, a, u); }, *s, rule))
              << '\n';
  }
  return 0;
}

int cmd_solve(unsigned n) {
  const conlag::OdeReplay r = conlag::replay_laguerre_ode(n);
  std::cout << "equation: u y'' + (1 - u) y' + " << n << " y = 0, y(0) = 1\n";
  std::cout << "s-domain: (" << r.dy_coeff.to_string() << ") Y'(s) + (" << r.y_coeff.to_string() << ") Y(s) = 0\n";
  std::string closed;
  for (const auto& [root, e] : r.factors) {
    if (!closed.empty()) closed += " * ";
    const std::string base = root == 0 ? "s" : "(s-" + conlag::to_string(root) + ")";
    closed += base + "^(" + std::to_string(e) + ")";
  }
  std::cout << "Y(s) = " << closed << '\n';
  std::cout << "expansion: " << r.expansion.to_string() << '\n';
  std::cout << "residual: " << r.residual.to_string() << '\n';
  std::cout << "inverse: y(u) = " << r.solution.to_string() << '\n';
  std::cout << "x-view: " << conlag::render_x_view(r.solution) << '\n';
  std::cout << "match: " << (r.matches_closed ? "exact" : "MISMATCH") << '\n';
  return r.matches_closed ? 0 : kVerifyFailure;
}

int cmd_verify(const std::string& scope) {
  const conlag::VerifyReport report = conlag::run_verify(scope);
  for (const auto& e : report.entries)
    std::cout << (e.passed ? "[PASS] " : "[FAIL] ") << e.module << '/' << e.name << ": " << e.detail << '\n';
  std::cout << report.entries.size() - report.failures() << '/' << report.entries.size() << " suites passed\n";
  return report.all_passed() ? 0 : kVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conformable Laguerre polynomials: evaluation, tables, transforms and verification"};
  app.require_subcommand(1);

  unsigned n = 0, m = 0;
  std::vector<double> alphas{0.25, 0.5, 0.75, 1.0};
  double alpha = 1.0, x = 0.0, xmin = 0.0, xmax = 8.0, s = 0.0, p = 0.0, omega = 1.0;
  std::size_t samples = 200;
  std::string scope = "all";
  std::vector<std::string> expr;

  auto* eval = app.add_subcommand("eval", "Evaluate L_n^m(x^a/a) and print its exact x-space form");
  eval->add_option("--n", n, "degree")->required();
  eval->add_option("--m", m, "association order")->capture_default_str();
  eval->add_option("--alpha", alpha, "conformable order in (0, 1]")->capture_default_str();
  eval->add_option("--x", x, "evaluation point, x >= 0")->required();

  auto* table = app.add_subcommand("table", "Emit a CSV sample table of L_n^m for several orders");
  table->add_option("--n", n, "degree")->required();
  table->add_option("--m", m, "association order")->capture_default_str();
  table->add_option("--alpha", alphas, "comma-separated conformable orders")->delimiter(',')->capture_default_str();
  table->add_option("--xmin", xmin)->capture_default_str();
  table->add_option("--xmax", xmax)->capture_default_str();
  table->add_option("--samples", samples)->capture_default_str();

  auto* transform = app.add_subcommand("transform", "Print a conformable Laplace transform");
  transform->add_option("expr", expr, "one | power_p | exp_u | sin_wu | cos_wu | laguerre <n>")->required();
  transform->add_option("--alpha", alpha, "conformable order")->capture_default_str();
  auto* s_opt = transform->add_option("--s", s, "evaluate at s and cross-check by quadrature");
  transform->add_option("--p", p, "exponent for power_p")->capture_default_str();
  transform->add_option("--omega", omega, "frequency for sin_wu / cos_wu")->capture_default_str();

  auto* solve = app.add_subcommand("solve", "Replay the Laplace-transform solution of the Laguerre equation");
  solve->add_option("--n", n, "degree")->required();

  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  verify->add_option("--scope", scope, "all | alpha_calc | laguerre | laplace | integrate | cli")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*eval) return cmd_eval(n, m, alpha, x);
    if (*table) return cmd_table(n, m, alphas, xmin, xmax, samples);
    if (*transform) return cmd_transform(expr, alpha, s_opt->count() > 0 ? &s : nullptr, p, omega);
    if (*solve) return cmd_solve(n);
    if (*verify) return cmd_verify(scope);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const conlag::algebra_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kVerifyFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
