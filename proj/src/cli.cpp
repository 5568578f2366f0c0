#include "dirint/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "dirint/closed_form.hpp"
#include "dirint/golden.hpp"
#include "dirint/kernel.hpp"
#include "dirint/quadrature.hpp"
#include "dirint/record.hpp"

namespace dirint::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

enum class Format { Text, Json, Latex };

struct CommonOptions {
  std::string format = "text";
  int cap = kDefaultMaxN;

  Format fmt() const {
    if (format == "json") return Format::Json;
    if (format == "latex") return Format::Latex;
    return Format::Text;
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "latex"}));
  cmd->add_option("--cap", opts.cap, "Largest n accepted")->check(CLI::PositiveNumber);
}

std::string num(double v, int digits = 17) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string label(IntegralParams p) {
  return "I(" + std::to_string(p.m) + "," + std::to_string(p.n) + ")";
}

void check_mn(int m, int n, int cap) {
  if (m < 1) throw UsageError("m must be a positive integer, got " + std::to_string(m));
  if (n < 1) throw UsageError("n must be a positive integer, got " + std::to_string(n));
  if (n > cap) {
    throw UsageError("n=" + std::to_string(n) + " exceeds the cap " + std::to_string(cap) +
                     " (raise it with --cap)");
  }
}

void check_max_n(int max_n, int cap) {
  if (max_n < 1 || max_n > cap) {
    throw UsageError("--max-n must be in [1, " + std::to_string(cap) + "], got " +
                     std::to_string(max_n));
  }
}

// eval -----------------------------------------------------------------------

int cmd_eval(int m, int n, const CommonOptions& opts, std::ostream& out) {
  check_mn(m, n, opts.cap);
  const IntegralParams p{m, n};
  const ClosedFormResult r = evaluate(p, opts.cap);
  switch (opts.fmt()) {
    case Format::Text: out << render(r, RenderFormat::Plain) << '\n'; break;
    case Format::Latex: out << render(r, RenderFormat::Latex) << '\n'; break;
    case Format::Json: out << to_json(make_record(p, r)) << '\n'; break;
  }
  return r.is_exact() ? kOk : kDivergent;
}

// table ----------------------------------------------------------------------

int cmd_table(int max_n, const CommonOptions& opts, std::ostream& out) {
  check_max_n(max_n, opts.cap);
  for (int m = 1; m <= max_n; ++m) {
    for (int n = m; n <= max_n; ++n) {
      const IntegralParams p{m, n};
      const ClosedFormResult r = evaluate(p, opts.cap);
      switch (opts.fmt()) {
        case Format::Text: out << label(p) << " = " << render(r, RenderFormat::Plain) << '\n'; break;
        case Format::Latex: out << label(p) << " = " << render(r, RenderFormat::Latex) << '\n'; break;
        case Format::Json: out << to_json(make_record(p, r)) << '\n'; break;
      }
    }
  }
  return kOk;
}

// verify ---------------------------------------------------------------------

struct VerifyOptions {
  int max_n = 12;
  std::optional<double> abs_tol;
  std::optional<long long> max_intervals;
  std::optional<double> truncation_cap;
};

struct CheckResult {
  std::string check;
  IntegralParams params;
  bool pass = false;
  std::string detail;
};

std::vector<CheckResult> golden_checks(int cap) {
  std::vector<CheckResult> out;
  for (const auto& g : published_values()) {
    const ClosedFormResult got = evaluate(g.params, cap);
    out.push_back({"golden", g.params, got == g.expected,
                   render(got, RenderFormat::Plain) + " (published " +
                       render(g.expected, RenderFormat::Plain) + ")"});
  }
  return out;
}

std::vector<CheckResult> identity_checks() {
  std::vector<CheckResult> out;
  for (int n = 1; n <= 30; ++n) {
    const BigInt s = alternating_power_sum(n, 1);
    out.push_back({"alternating-sum", {1, n}, s == 0, "sum = " + s.str()});
  }
  for (int n = 2; n <= 30; ++n) {
    for (int m = 2; m <= n; ++m) {
      const BigInt s = alternating_power_sum(n, m);
      out.push_back({"alternating-sum", {m, n}, s == 0, "sum = " + s.str()});
    }
  }
  return out;
}

std::vector<CheckResult> structure_checks(int cap) {
  std::vector<CheckResult> out;
  for (int n = 1; n <= std::min(20, cap); ++n) {
    for (int m = 1; m <= n; ++m) {
      const IntegralParams p{m, n};
      if (classify(p) == Convergence::DivergentEvenN) continue;
      const Assembly a = assemble(p, cap);
      out.push_back({"realness", p, a.value.im.is_zero(),
                     "imaginary part " + render(a.value.im, RenderFormat::Plain)});
      if (m < 2) continue;
      const SymbolicReal& v = a.value.re;
      const bool pass = (n - m) % 2 == 0 ? v.log_coeffs().empty() : v.pi_coeff().is_zero();
      out.push_back({"parity", p, pass, render(v, RenderFormat::Plain)});
    }
  }
  return out;
}

CheckResult quadrature_check(IntegralParams p, const VerifyOptions& vo) {
  QuadratureConfig cfg = QuadratureConfig::for_order(p.m);
  if (vo.abs_tol) cfg.abs_tol = *vo.abs_tol;
  if (vo.max_intervals) cfg.max_intervals = *vo.max_intervals;
  if (vo.truncation_cap) cfg.truncation_cap = *vo.truncation_cap;
  try {
    const double exact = to_float(evaluate(p, p.n).value());
    const NumericEstimate est = integrate_sinc_power(p.m, p.n, cfg);
    const double diff = std::abs(exact - est.value);
    const bool pass = diff <= est.error_bound + 1e-9;
    return {"quadrature", p, pass,
            "closed " + num(exact) + " quad " + num(est.value) + " diff " + num(diff, 3) +
                " bound " + num(est.error_bound, 3)};
  } catch (const std::exception& e) {
    return {"quadrature", p, false, e.what()};
  }
}

std::vector<CheckResult> quadrature_checks(const VerifyOptions& vo) {
  std::vector<std::future<CheckResult>> jobs;
  for (int m = 1; m <= vo.max_n; ++m) {
    for (int n = m; n <= vo.max_n; ++n) {
      const IntegralParams p{m, n};
      if (classify(p) == Convergence::DivergentEvenN) continue;
      jobs.push_back(std::async(std::launch::async, quadrature_check, p, std::cref(vo)));
    }
  }
  std::vector<CheckResult> out;
  out.reserve(jobs.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

int cmd_verify(const VerifyOptions& vo, const CommonOptions& opts, std::ostream& out) {
  check_max_n(vo.max_n, opts.cap);
  if (vo.abs_tol && !(*vo.abs_tol > 0.0)) throw UsageError("--abs-tol must be > 0");

  std::vector<CheckResult> all = golden_checks(opts.cap);
  for (auto&& group : {identity_checks(), structure_checks(opts.cap), quadrature_checks(vo)}) {
    all.insert(all.end(), group.begin(), group.end());
  }

  const auto passed = std::count_if(all.begin(), all.end(), [](const auto& c) { return c.pass; });
  const auto failed = static_cast<long>(all.size()) - passed;
  for (const auto& c : all) {
    const char* verdict = c.pass ? "PASS" : "FAIL";
    switch (opts.fmt()) {
      case Format::Text:
        out << verdict << ' ' << c.check << ' ' << label(c.params) << ": " << c.detail << '\n';
        break;
      case Format::Latex:
        out << c.check << " & $" << label(c.params) << "$ & " << verdict << " \\\\\n";
        break;
      case Format::Json: {
        ordered_json j;
        j["check"] = c.check;
        j["m"] = c.params.m;
        j["n"] = c.params.n;
        j["pass"] = c.pass;
        j["detail"] = c.detail;
        out << j.dump() << '\n';
        break;
      }
    }
  }
  if (opts.fmt() == Format::Json) {
    ordered_json s;
    s["summary"] = {{"total", all.size()}, {"passed", passed}, {"failed", failed}};
    out << s.dump() << '\n';
  } else {
    out << "summary: " << all.size() << " checks, " << passed << " passed, " << failed
        << " failed\n";
  }
  return failed == 0 ? kOk : kVerifyFailed;
}

// reg ------------------------------------------------------------------------

int cmd_reg(int m, int n, double eps, std::optional<double> abs_tol, const CommonOptions& opts,
            std::ostream& out) {
  check_mn(m, n, opts.cap);
  if (!(eps > 0.0)) throw UsageError("--eps must be > 0, got " + num(eps));
  if (m > n) throw UsageError("reg needs n >= m");
  QuadratureConfig cfg = QuadratureConfig::for_damped();
  if (abs_tol) {
    if (!(*abs_tol > 0.0)) throw UsageError("--abs-tol must be > 0");
    cfg.abs_tol = *abs_tol;
  }
  const ComplexFloat closed = eval_regularized(m, n, eps);
  const NumericEstimate quad = integrate_regularized(m, n, eps, cfg);
  const double diff = closed.real() - quad.value;
  switch (opts.fmt()) {
    case Format::Text:
      out << "closed_form = " << num(closed.real()) << (closed.imag() < 0 ? " - " : " + ")
          << num(std::abs(closed.imag()), 3) << "i\n"
          << "quadrature  = " << num(quad.value) << " +/- " << num(quad.error_bound, 3) << '\n'
          << "difference  = " << num(diff, 3) << '\n';
      break;
    case Format::Latex:
      out << "\\int_0^\\infty \\frac{\\sin^{" << n << "} x}{x^{" << m << "}} e^{-" << num(eps)
          << " x}\\,dx \\approx " << num(closed.real(), 12) << '\n';
      break;
    case Format::Json: {
      ordered_json j;
      j["m"] = m;
      j["n"] = n;
      j["eps"] = eps;
      j["closed_form_re"] = closed.real();
      j["closed_form_im"] = closed.imag();
      j["quadrature"] = quad.value;
      j["quadrature_error_bound"] = quad.error_bound;
      j["difference"] = diff;
      out << j.dump() << '\n';
      break;
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and numerical evaluation of integral_0^inf sin^n(x)/x^m dx", "dirint"};
  app.require_subcommand(1);

  CommonOptions common;
  int m = 0;
  int n = 0;

  auto* eval = app.add_subcommand("eval", "Closed form of I(m,n)");
  eval->add_option("m", m, "Power of x")->required();
  eval->add_option("n", n, "Power of sin")->required();
  add_common(eval, common);

  int table_max_n = 0;
  auto* table = app.add_subcommand("table", "Closed forms of I(m,n) for 1 <= m <= n <= N");
  table->add_option("--max-n", table_max_n, "Largest n")->required();
  add_common(table, common);

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run the identity, golden and quadrature checks");
  verify->add_option("--max-n", vo.max_n, "Largest n for the quadrature sweep")->required();
  verify->add_option("--abs-tol", vo.abs_tol, "Quadrature absolute tolerance override");
  verify->add_option("--max-intervals", vo.max_intervals, "Quadrature interval budget");
  verify->add_option("--truncation-cap", vo.truncation_cap, "Largest truncation point");
  add_common(verify, common);

  double eps = 0.0;
  std::optional<double> reg_tol;
  auto* reg = app.add_subcommand("reg", "Damped integral: closed form vs quadrature");
  reg->add_option("m", m, "Power of x")->required();
  reg->add_option("n", n, "Power of sin")->required();
  reg->add_option("--eps", eps, "Damping exponent, > 0")->required();
  reg->add_option("--abs-tol", reg_tol, "Quadrature absolute tolerance");
  add_common(reg, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*eval) return cmd_eval(m, n, common, out);
    if (*table) return cmd_table(table_max_n, common, out);
    if (*verify) return cmd_verify(vo, common, out);
    if (*reg) return cmd_reg(m, n, eps, reg_tol, common, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace dirint::cli
