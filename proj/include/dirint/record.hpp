#ifndef DIRINT_RECORD_HPP
#define DIRINT_RECORD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dirint/closed_form.hpp"

namespace dirint {

/// One line of machine-readable output. Field order in JSON is fixed:
/// m, n, status, pi_coeff, log_terms, float_value, divergence_reason.
/// Absent optionals are omitted.
struct OutputRecord {
  struct LogTerm {
    std::uint64_t prime = 0;
    std::string coeff;  // "p/q" in lowest terms, "p" for integers
    friend bool operator==(const LogTerm&, const LogTerm&) = default;
  };

  int m = 0;
  int n = 0;
  std::string status;  // "exact" | "divergent"
  std::optional<std::string> pi_coeff;
  std::vector<LogTerm> log_terms;
  std::optional<double> float_value;
  std::optional<std::string> divergence_reason;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

OutputRecord make_record(IntegralParams p, const ClosedFormResult& r);

/// Compact single-line JSON.
std::string to_json(const OutputRecord& r);

/// Throws std::invalid_argument on malformed input.
OutputRecord parse_record(const std::string& json_line);

/// Rebuilds the symbolic value of an exact record.
SymbolicReal symbolic_value(const OutputRecord& r);

}  // namespace dirint

#endif  // DIRINT_RECORD_HPP
