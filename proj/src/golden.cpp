#include "dirint/golden.hpp"

namespace dirint {

namespace {

Rational q(long long p, long long d) { return Rational(BigInt(p), BigInt(d)); }

ClosedFormResult pi_times(long long p, long long d) {
  return ClosedFormResult::exact(SymbolicReal::pi(q(p, d)));
}

}  // namespace

std::vector<GoldenEntry> published_values() {
  using LogP = SymbolicReal;
  return {
      {{1, 1}, pi_times(1, 2)},
      {{1, 2}, ClosedFormResult::divergent(DivergenceReason::EvenNWithM1)},
      {{1, 3}, pi_times(1, 4)},
      {{2, 2}, pi_times(1, 2)},
      {{2, 3}, ClosedFormResult::exact(LogP::log_prime(3, q(3, 4)))},
      {{2, 4}, pi_times(1, 4)},
      {{3, 3}, pi_times(3, 8)},
      {{3, 4}, ClosedFormResult::exact(LogP::log_prime(2, q(1, 1)))},
      {{3, 5}, pi_times(5, 32)},
      {{4, 4}, pi_times(1, 3)},
      {{4, 5}, ClosedFormResult::exact(LogP::log_prime(5, q(125, 96)) -
                                       LogP::log_prime(3, q(45, 32)))},
      {{4, 6}, pi_times(1, 8)},
      {{5, 5}, pi_times(115, 384)},
      {{5, 6}, ClosedFormResult::exact(LogP::log_prime(3, q(27, 16)) -
                                       LogP::log_prime(2, q(2, 1)))},
      {{5, 7}, pi_times(77, 768)},
  };
}

}  // namespace dirint
