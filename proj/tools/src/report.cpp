#include "hrlab_cli/report.hpp"

#include <cmath>
#include <cstdio>

namespace hrlab::cli {

namespace {

void write(const nlohmann::json& j, std::string& out) {
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // std::map order: sorted keys
        if (!first) out += ',';
        first = false;
        out += nlohmann::json(it.key()).dump();
        out += ':';
        write(it.value(), out);
      }
      out += '}';
      break;
    }
    case nlohmann::json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        write(j[i], out);
      }
      out += ']';
      break;
    }
    case nlohmann::json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        break;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      std::string s(buf);
      if (s.find_first_of(".eE") == std::string::npos) s += ".0";
      out += s;
      break;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string emit_json(const nlohmann::json& j) {
  std::string out;
  write(j, out);
  return out;
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json j{{"command", r.command},
                   {"pass", r.pass ? nlohmann::json(*r.pass) : nlohmann::json(nullptr)},
                   {"payload", r.payload},
                   {"residuals", r.residuals},
                   {"summary", r.summary}};
  if (r.wall_time) j["wall_time_s"] = *r.wall_time;
  return j;
}

Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  if (!j.at("pass").is_null()) r.pass = j.at("pass").get<bool>();
  r.payload = j.at("payload");
  r.residuals = j.at("residuals");
  r.summary = j.value("summary", "");
  if (j.contains("wall_time_s")) r.wall_time = j.at("wall_time_s").get<double>();
  return r;
}

std::string summary_line(const Report& r) {
  std::string line = r.pass.value_or(true) ? "PASS " : "FAIL ";
  line += r.command;
  if (!r.summary.empty()) line += ": " + r.summary;
  for (auto it = r.residuals.begin(); it != r.residuals.end(); ++it) line += " " + it.key() + "=" + emit_json(it.value());
  if (r.wall_time) line += " wall_time_s=" + emit_json(*r.wall_time);
  return line;
}

}  // namespace hrlab::cli
