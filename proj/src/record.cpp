#include "dirint/record.hpp"

#include <stdexcept>

#include <json.hpp>

namespace dirint {

using ordered_json = nlohmann::ordered_json;

OutputRecord make_record(IntegralParams p, const ClosedFormResult& r) {
  OutputRecord rec;
  rec.m = p.m;
  rec.n = p.n;
  if (!r.is_exact()) {
    rec.status = "divergent";
    rec.divergence_reason = std::string(to_string(r.reason()));
    return rec;
  }
  rec.status = "exact";
  rec.pi_coeff = r.value().pi_coeff().to_string();
  for (const auto& [prime, c] : r.value().log_coeffs()) {
    rec.log_terms.push_back({prime, c.to_string()});
  }
  rec.float_value = to_float(r.value());
  return rec;
}

std::string to_json(const OutputRecord& r) {
  ordered_json j;
  j["m"] = r.m;
  j["n"] = r.n;
  j["status"] = r.status;
  if (r.pi_coeff) j["pi_coeff"] = *r.pi_coeff;
  j["log_terms"] = ordered_json::array();
  for (const auto& t : r.log_terms) {
    ordered_json term;
    term["prime"] = t.prime;
    term["coeff"] = t.coeff;
    j["log_terms"].push_back(std::move(term));
  }
  if (r.float_value) j["float_value"] = *r.float_value;
  if (r.divergence_reason) j["divergence_reason"] = *r.divergence_reason;
  return j.dump();
}

OutputRecord parse_record(const std::string& json_line) {
  try {
    const auto j = ordered_json::parse(json_line);
    OutputRecord r;
    r.m = j.at("m").get<int>();
    r.n = j.at("n").get<int>();
    r.status = j.at("status").get<std::string>();
    if (r.status != "exact" && r.status != "divergent") {
      throw std::invalid_argument("unknown status '" + r.status + "'");
    }
    if (j.contains("pi_coeff")) r.pi_coeff = j["pi_coeff"].get<std::string>();
    for (const auto& t : j.at("log_terms")) {
      r.log_terms.push_back({t.at("prime").get<std::uint64_t>(), t.at("coeff").get<std::string>()});
    }
    if (j.contains("float_value")) r.float_value = j["float_value"].get<double>();
    if (j.contains("divergence_reason")) {
      r.divergence_reason = j["divergence_reason"].get<std::string>();
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("parse_record: ") + e.what());
  }
}

SymbolicReal symbolic_value(const OutputRecord& r) {
  if (r.status != "exact") throw std::invalid_argument("symbolic_value: record is not exact");
  SymbolicReal v = SymbolicReal::pi(Rational::parse(r.pi_coeff.value_or("0")));
  for (const auto& t : r.log_terms) v += SymbolicReal::log_prime(t.prime, Rational::parse(t.coeff));
  return v;
}

}  // namespace dirint
