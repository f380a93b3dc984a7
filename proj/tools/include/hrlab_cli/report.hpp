#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace hrlab::cli {

struct Report {
  std::string command;
  std::optional<bool> pass;  // absent for pure computations
  nlohmann::json payload = nlohmann::json::object();
  nlohmann::json residuals = nlohmann::json::object();
  std::optional<double> wall_time;
  std::string summary;
};

/// Compact JSON with sorted keys and floats at 17 significant digits.
std::string emit_json(const nlohmann::json& j);

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

/// One line starting with PASS or FAIL.
std::string summary_line(const Report& r);

}  // namespace hrlab::cli
