#include "dirint/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <queue>

#include "dirint/closed_form.hpp"

namespace dirint {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Kronrod 15-point abscissae (non-negative half) and weights; the odd-indexed
// abscissae are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;
  double abs_value = 0.0;  // integral of |f|, for the roundoff floor

  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gauss_kronrod_15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(center);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::abs(resk);
  std::array<double, 7> f1{};
  std::array<double, 7> f2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = f(center - dx);
    f2[j] = f(center + dx);
    const double sum = f1[j] + f2[j];
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
  }

  Panel p{a, b, resk * half, std::abs((resk - resg) * half), resabs * std::abs(half)};
  resasc *= std::abs(half);
  if (resasc != 0.0 && p.error != 0.0) {
    p.error = resasc * std::min(1.0, std::pow(200.0 * p.error / resasc, 1.5));
  }
  if (p.abs_value > std::numeric_limits<double>::min() / (50.0 * kEps)) {
    p.error = std::max(50.0 * kEps * p.abs_value, p.error);
  }
  return p;
}

// Neumaier compensated sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double ipow(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

std::vector<double> uniform_breakpoints(double width, long long cells) {
  std::vector<double> pts(static_cast<std::size_t>(cells) + 1);
  for (long long k = 0; k <= cells; ++k) pts[static_cast<std::size_t>(k)] = width * k;
  return pts;
}

void check_cells(long long cells, const QuadratureConfig& cfg) {
  if (cells > cfg.max_intervals) {
    throw QuadratureError("max_intervals exhausted: truncation needs " + std::to_string(cells) +
                          " cells, limit is " + std::to_string(cfg.max_intervals));
  }
}

NumericEstimate integrate_m_ge_2(int m, int n, const QuadratureConfig& cfg) {
  // sin^n has period pi for even n and 2 pi for odd n.
  const double period = n % 2 == 0 ? kPi : 2 * kPi;
  const std::array<double, 2> half_period = {0.0, kPi};
  const NumericEstimate area = integrate_adaptive(
      [n](double x) { return ipow(std::sin(x), n); }, half_period, 1e-13, cfg.max_intervals);
  const double area_hi = area.value + area.error_bound;

  // Smallest multiple of the period with area * X^-m <= abs_tol / 2.
  const double wanted = std::pow(2.0 * area_hi / cfg.abs_tol, 1.0 / m);
  auto periods = static_cast<long long>(std::ceil(wanted / period));
  periods = std::max(periods, 1LL);
  if (periods * period > cfg.truncation_cap) {
    periods = std::max(1LL, static_cast<long long>(std::floor(cfg.truncation_cap / period)));
  }
  const double x_max = periods * period;
  const long long cells = n % 2 == 0 ? periods : 2 * periods;
  check_cells(cells, cfg);

  const double tail_remainder = area_hi * std::pow(x_max, -m);
  const double tail_tol = std::max(cfg.abs_tol - tail_remainder, 0.5 * cfg.abs_tol);
  const auto pts = uniform_breakpoints(kPi, cells);
  NumericEstimate body = integrate_adaptive([m, n](double x) { return sinc_power(m, n, x); },
                                            pts, tail_tol, cfg.max_intervals);

  // For even n the tail's leading term is mean(sin^n) * X^(1-m) / (m-1).
  double tail_mean = 0.0;
  double tail_mean_err = 0.0;
  if (n % 2 == 0) {
    const double scale = std::pow(x_max, 1 - m) / ((m - 1) * kPi);
    tail_mean = area.value * scale;
    tail_mean_err = area.error_bound * scale;
  }

  return {body.value + tail_mean, body.error_bound + tail_remainder + tail_mean_err,
          body.function_evals + area.function_evals, body.intervals};
}

NumericEstimate integrate_m_eq_1(int n, const QuadratureConfig& cfg) {
  constexpr long long kCells = 64;
  check_cells(kCells, cfg);
  const double cell_tol = cfg.abs_tol / (10.0 * kCells);

  std::vector<double> partial_sums;
  partial_sums.reserve(kCells);
  CompensatedSum running;
  NumericEstimate out;
  double cell_errors = 0.0;
  for (long long k = 0; k < kCells; ++k) {
    const std::array<double, 2> cell = {k * kPi, (k + 1) * kPi};
    const NumericEstimate c = integrate_adaptive(
        [n](double x) { return sinc_power(1, n, x); }, cell, cell_tol, cfg.max_intervals);
    running.add(c.value);
    partial_sums.push_back(running.value());
    cell_errors += c.error_bound;
    out.function_evals += c.function_evals;
    out.intervals += c.intervals;
  }
  const Acceleration acc = accelerate_alternating(partial_sums, cfg.abs_tol);
  out.value = acc.value;
  out.error_bound = acc.last_correction + cell_errors;
  return out;
}

}  // namespace

QuadratureConfig QuadratureConfig::for_order(int m) {
  QuadratureConfig cfg;
  cfg.abs_tol = m == 1 ? 1e-6 : 1e-10;
  return cfg;
}

NumericEstimate integrate_adaptive(const std::function<double(double)>& f,
                                   std::span<const double> breakpoints, double abs_tol,
                                   long long max_intervals) {
  if (breakpoints.size() < 2) throw std::invalid_argument("integrate_adaptive: need two breakpoints");
  if (!(abs_tol > 0.0)) throw std::invalid_argument("integrate_adaptive: abs_tol must be > 0");
  if (max_intervals < 1) throw std::invalid_argument("integrate_adaptive: max_intervals must be >= 1");
  if (static_cast<long long>(breakpoints.size()) - 1 > max_intervals) {
    throw QuadratureError("max_intervals exhausted before the first pass");
  }

  std::vector<Panel> initial;
  initial.reserve(breakpoints.size() - 1);
  double total_error = 0.0;
  double roundoff_floor = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    initial.push_back(gauss_kronrod_15(f, breakpoints[i], breakpoints[i + 1]));
    total_error += initial.back().error;
    roundoff_floor += 50.0 * kEps * initial.back().abs_value;
  }
  long long evals = 15 * static_cast<long long>(initial.size());
  if (abs_tol < roundoff_floor) {
    throw QuadratureError("abs_tol " + sci(abs_tol) + " is below the roundoff floor " +
                          sci(roundoff_floor));
  }

  std::priority_queue<Panel> heap(std::less<Panel>(), std::move(initial));
  while (total_error > abs_tol) {
    if (static_cast<long long>(heap.size()) >= max_intervals) {
      throw QuadratureError("max_intervals exhausted with error estimate " + sci(total_error) +
                            " > abs_tol " + sci(abs_tol));
    }
    const Panel worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw QuadratureError("interval too small to bisect near x = " + sci(worst.a));
    }
    heap.pop();
    const Panel left = gauss_kronrod_15(f, worst.a, mid);
    const Panel right = gauss_kronrod_15(f, mid, worst.b);
    evals += 30;
    total_error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  NumericEstimate out;
  out.intervals = static_cast<long long>(heap.size());
  out.function_evals = evals;
  CompensatedSum value;
  CompensatedSum error;
  // Sum in left-to-right order so results do not depend on heap layout.
  std::vector<Panel> panels;
  panels.reserve(heap.size());
  while (!heap.empty()) {
    panels.push_back(heap.top());
    heap.pop();
  }
  std::sort(panels.begin(), panels.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
  for (const Panel& p : panels) {
    value.add(p.value);
    error.add(p.error);
  }
  out.value = value.value();
  out.error_bound = error.value();
  return out;
}

Acceleration accelerate_alternating(std::span<const double> partial_sums, double tol,
                                    int max_depth) {
  if (partial_sums.size() < 4) {
    throw std::invalid_argument("accelerate_alternating: need at least 4 partial sums");
  }
  std::vector<double> level(partial_sums.begin(), partial_sums.end());
  Acceleration acc{level.back(), std::abs(level.back() - level[level.size() - 2]), 0};
  double previous_correction = std::numeric_limits<double>::infinity();
  while (level.size() > 1 && acc.depth < max_depth) {
    std::vector<double> next(level.size() - 1);
    for (std::size_t i = 0; i + 1 < level.size(); ++i) next[i] = 0.5 * (level[i] + level[i + 1]);
    const double correction = std::abs(next.back() - level.back());
    if (correction > previous_correction) break;  // past the optimum depth
    previous_correction = correction;
    level = std::move(next);
    acc = {level.back(), correction, acc.depth + 1};
    if (correction < tol) break;
  }
  return acc;
}

double sinc_power(int m, int n, double x) {
  if (x == 0.0) {
    if (n > m) return 0.0;
    if (n == m) return 1.0;
    return std::numeric_limits<double>::infinity();
  }
  const double s = std::sin(x);
  if (n >= m) return ipow(s / x, m) * ipow(s, n - m);
  return ipow(s, n) / ipow(x, m);
}

NumericEstimate integrate_sinc_power(int m, int n, const QuadratureConfig& cfg) {
  switch (classify({m, n})) {
    case Convergence::DivergentEvenN:
    case Convergence::DivergentOrigin:
      throw std::invalid_argument("integrate_sinc_power: I(" + std::to_string(m) + "," +
                                  std::to_string(n) + ") is divergent");
    default:
      break;
  }
  if (!(cfg.abs_tol > 0.0)) throw std::invalid_argument("abs_tol must be > 0");
  return m == 1 ? integrate_m_eq_1(n, cfg) : integrate_m_ge_2(m, n, cfg);
}

NumericEstimate integrate_sinc_power(int m, int n) {
  return integrate_sinc_power(m, n, QuadratureConfig::for_order(m));
}

NumericEstimate integrate_regularized(int m, int n, double eps, const QuadratureConfig& cfg) {
  if (!(eps > 0.0)) throw std::invalid_argument("integrate_regularized: eps must be > 0");
  if (m < 1 || n < 1) throw std::invalid_argument("integrate_regularized: need m >= 1 and n >= 1");
  if (m > n) throw std::invalid_argument("integrate_regularized: need n >= m");

  const double x_max = std::min(std::max(50.0 / eps, 50.0), cfg.truncation_cap);
  const auto full_cells = static_cast<long long>(std::floor(x_max / kPi));
  check_cells(full_cells + 1, cfg);
  std::vector<double> pts = uniform_breakpoints(kPi, full_cells);
  if (x_max > pts.back()) pts.push_back(x_max);

  // integral_X^inf |sin^n x| x^-m e^(-eps x) dx <= e^(-eps X) / (eps X^m)
  const double tail = std::exp(-eps * x_max) / (eps * std::pow(x_max, m));
  const double quad_tol = std::max(cfg.abs_tol - tail, 0.5 * cfg.abs_tol);
  NumericEstimate est = integrate_adaptive(
      [m, n, eps](double x) { return sinc_power(m, n, x) * std::exp(-eps * x); }, pts, quad_tol,
      cfg.max_intervals);
  est.error_bound += tail;
  return est;
}

NumericEstimate integrate_regularized(int m, int n, double eps) {
  return integrate_regularized(m, n, eps, QuadratureConfig::for_damped());
}

}  // namespace dirint
