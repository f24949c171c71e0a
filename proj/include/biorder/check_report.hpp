#ifndef BIORDER_CHECK_REPORT_HPP
#define BIORDER_CHECK_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "biorder/bipoly.hpp"

namespace biorder {

// Outcome of one oracle or identity check. A failed report always carries a
// witness with enough context to reproduce the failure.
struct CheckReport {
  std::string name;
  bool passed = false;
  std::optional<nlohmann::json> witness;
  // Diagnostic data recorded regardless of outcome.
  nlohmann::json details = nlohmann::json::object();
};

void to_json(nlohmann::json& j, const CheckReport& report);

// Smallest (x, y) in lexicographic order on {0..d}^2 where a and b differ, d
// being the larger total degree. Empty when a == b.
std::optional<std::pair<long, long>> find_difference_point(const BiPoly& a, const BiPoly& b);

}  // namespace biorder

#endif  // BIORDER_CHECK_REPORT_HPP
