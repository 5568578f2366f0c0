// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "dirint/cli.hpp"
#include "dirint/closed_form.hpp"
#include "dirint/kernel.hpp"
#include "dirint/quadrature.hpp"
#include "dirint/record.hpp"

using namespace dirint;

namespace {

constexpr double kPi = std::numbers::pi;

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Rational q(long long p, long long d) { return Rational(BigInt(p), BigInt(d)); }
SymbolicReal pi(long long p, long long d) { return SymbolicReal::pi(q(p, d)); }
SymbolicReal ln(std::uint64_t prime, long long p, long long d) {
  return SymbolicReal::log_prime(prime, q(p, d));
}

std::string label(int m, int n) {
  return "I(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

Verdict golden_values() {
  struct Row {
    int m, n;
    bool divergent;
    SymbolicReal value;
  };
  const std::vector<Row> rows = {
      {1, 1, false, pi(1, 2)},
      {1, 2, true, {}},
      {1, 3, false, pi(1, 4)},
      {2, 2, false, pi(1, 2)},
      {2, 3, false, ln(3, 3, 4)},
      {2, 4, false, pi(1, 4)},
      {3, 3, false, pi(3, 8)},
      {3, 4, false, ln(2, 1, 1)},
      {3, 5, false, pi(5, 32)},
      {4, 4, false, pi(1, 3)},
      {4, 5, false, ln(5, 125, 96) - ln(3, 45, 32)},
      {4, 6, false, pi(1, 8)},
      {5, 5, false, pi(115, 384)},
      {5, 6, false, ln(3, 27, 16) - ln(2, 2, 1)},
      {5, 7, false, pi(77, 768)},
  };
  Verdict v;
  for (const Row& r : rows) {
    const ClosedFormResult got = evaluate({r.m, r.n});
    const bool ok = r.divergent ? (!got.is_exact() && got.reason() == DivergenceReason::EvenNWithM1)
                                : (got.is_exact() && got.value() == r.value);
    if (!ok) v.fail(label(r.m, r.n) + " = " + render(got, RenderFormat::Plain));
  }
  if (v.pass) v.detail = "15/15 exact";
  return v;
}

Verdict oracle_agreement() {
  Verdict v;
  int cases = 0;
  double worst_ratio = 0.0;
  for (int n = 1; n <= 12; ++n) {
    for (int m = 1; m <= n; ++m) {
      if (classify({m, n}) == Convergence::DivergentEvenN) continue;
      ++cases;
      const double exact = to_float(evaluate({m, n}).value());
      NumericEstimate est;
      try {
        est = integrate_sinc_power(m, n);
      } catch (const std::exception& e) {
        v.fail(label(m, n) + ": " + e.what());
        continue;
      }
      const double diff = std::abs(exact - est.value);
      const double bound_cap = m == 1 ? 1e-5 : 1e-8;
      if (diff > est.error_bound + 1e-9) {
        v.fail(label(m, n) + " diff " + std::to_string(diff) + " > bound " +
               std::to_string(est.error_bound));
      }
      if (est.error_bound > bound_cap) {
        v.fail(label(m, n) + " error_bound " + std::to_string(est.error_bound) + " > " +
               std::to_string(bound_cap));
      }
      worst_ratio = std::max(worst_ratio, diff / (est.error_bound + 1e-9));
    }
  }
  if (v.pass) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d cases, worst diff/(bound+1e-9) = %.3g", cases, worst_ratio);
    v.detail = buf;
  }
  return v;
}

Verdict alternating_identity() {
  Verdict v;
  int cases = 0;
  for (int n = 2; n <= 30; ++n) {
    for (int m = 2; m <= n; ++m, ++cases) {
      if (alternating_power_sum(n, m) != 0) v.fail("nonzero at n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
  }
  if (cases != 435) v.fail("expected 435 cases, ran " + std::to_string(cases));
  for (int n = 1; n <= 30; ++n) {
    BigInt s = 0;
    for (int l = 0; l <= n; ++l) s += (l % 2 == 0 ? 1 : -1) * binomial(n, l);
    if (s != 0 || alternating_power_sum(n, 1) != 0) v.fail("(1-1)^n != 0 at n=" + std::to_string(n));
  }
  if (v.pass) v.detail = "435 + 30 sums vanish";
  return v;
}

Verdict parity() {
  Verdict v;
  for (int n = 2; n <= 20; ++n) {
    for (int m = 2; m <= n; ++m) {
      const SymbolicReal r = evaluate({m, n}).value();
      const bool ok = (n - m) % 2 == 0 ? r.log_coeffs().empty() : r.pi_coeff().is_zero();
      if (!ok) v.fail(label(m, n) + " = " + render(r, RenderFormat::Plain));
    }
  }
  if (v.pass) v.detail = "190 cases";
  return v;
}

Verdict realness() {
  Verdict v;
  int cases = 0;
  for (int n = 1; n <= 20; ++n) {
    for (int m = 1; m <= n; ++m) {
      if (classify({m, n}) == Convergence::DivergentEvenN) continue;
      ++cases;
      const Assembly a = assemble({m, n});
      if (!a.value.im.is_zero()) v.fail(label(m, n) + " imaginary part " + render(a.value.im, RenderFormat::Plain));
    }
  }
  if (v.pass) v.detail = std::to_string(cases) + " convergent cases";
  return v;
}

Verdict regularized_consistency() {
  Verdict v;
  double worst = 0.0;
  for (int n = 1; n <= 8; ++n) {
    for (int m = 1; m <= n; ++m) {
      for (double eps : {1.0, 0.5, 0.1}) {
        const ComplexFloat closed = eval_regularized(m, n, eps);
        const NumericEstimate quad = integrate_regularized(m, n, eps);
        const double diff = std::abs(closed.real() - quad.value);
        worst = std::max(worst, diff);
        if (diff > 1e-6) v.fail(label(m, n) + " eps " + std::to_string(eps) + " diff " + std::to_string(diff));
        if (std::abs(closed.imag()) > 1e-9 * (1 + std::abs(closed.real()))) {
          v.fail(label(m, n) + " eps " + std::to_string(eps) + " imaginary part too large");
        }
      }
    }
  }
  double previous_gap = INFINITY;
  for (double eps : {0.1, 0.01, 0.001}) {
    const double gap = std::abs(eval_regularized(1, 1, eps).real() - kPi / 2);
    if (!(gap < previous_gap)) v.fail("gap to pi/2 not shrinking at eps " + std::to_string(eps));
    previous_gap = gap;
  }
  if (previous_gap > 0.05) v.fail("I(1,1) at eps 1e-3 is " + std::to_string(previous_gap) + " from pi/2");
  if (v.pass) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "worst |Re - quad| = %.3g, pi/2 gap at 1e-3 = %.3g", worst, previous_gap);
    v.detail = buf;
  }
  return v;
}

Verdict divergence_contract() {
  Verdict v;
  for (int n = 2; n <= 20; n += 2) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run({"eval", "1", std::to_string(n), "--format", "json"}, out, err);
    std::string line = out.str();
    if (!line.empty() && line.back() == '\n') line.pop_back();
    if (code != cli::kDivergent) v.fail("eval 1 " + std::to_string(n) + " exit " + std::to_string(code));
    else if (parse_record(line).status != "divergent") v.fail("eval 1 " + std::to_string(n) + " status");
  }
  for (int n = 1; n <= 20; ++n) {
    for (int m = n + 1; m <= n + 3; ++m) {
      const ClosedFormResult r = evaluate({m, n});
      if (r.is_exact() || r.reason() != DivergenceReason::OriginSingularity) {
        v.fail(label(m, n) + " not OriginSingularity");
      }
    }
  }
  const ClosedFormResult anchor = evaluate({1, 2});
  if (anchor.is_exact() || anchor.reason() != DivergenceReason::EvenNWithM1) v.fail("I(1,2) anchor");
  if (v.pass) v.detail = "even n <= 20 exit 2; m > n OriginSingularity";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Verdict()> run;
    double time_limit_s;  // <= 0 means no limit
  };
  const std::vector<Criterion> criteria = {
      {"1 golden values", golden_values, 1.0},
      {"2 oracle agreement", oracle_agreement, 60.0},
      {"3 alternating power sum identity", alternating_identity, 1.0},
      {"4 parity", parity, 0.0},
      {"5 realness", realness, 0.0},
      {"6 regularized consistency", regularized_consistency, 0.0},
      {"7 divergence contract", divergence_contract, 0.0},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v = c.run();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && seconds > c.time_limit_s) {
      v.fail("took " + std::to_string(seconds) + " s, limit " + std::to_string(c.time_limit_s) + " s");
    }
    std::printf("[%s] %-36s %8.3f s  %s\n", v.pass ? "PASS" : "FAIL", c.name, seconds,
                v.detail.c_str());
    if (!v.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
