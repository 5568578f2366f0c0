#ifndef DIRINT_GOLDEN_HPP
#define DIRINT_GOLDEN_HPP

#include <vector>

#include "dirint/closed_form.hpp"

namespace dirint {

struct GoldenEntry {
  IntegralParams params;
  ClosedFormResult expected;
};

/// The fifteen published values I(1,1) ... I(5,7), in row-major order.
std::vector<GoldenEntry> published_values();

}  // namespace dirint

#endif  // DIRINT_GOLDEN_HPP
