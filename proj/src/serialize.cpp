#include "radmax/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace radmax {

namespace {

std::string repr_double(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  std::string text(buffer);
  // Keep floats recognizable as floats.
  if (text.find_first_of(".eE") == std::string::npos) text += ".0";
  return text;
}

void write_json(std::ostringstream& out, const Json& value, int indent, int depth) {
  const auto newline = [&](int level) {
    if (indent < 0) return;
    out << '\n' << std::string(static_cast<std::size_t>(indent * level), ' ');
  };
  switch (value.type()) {
    case Json::value_t::number_float: {
      const double v = value.get<double>();
      out << (std::isfinite(v) ? repr_double(v) : "null");
      break;
    }
    case Json::value_t::object: {
      if (value.empty()) {
        out << "{}";
        break;
      }
      out << '{';
      bool first = true;
      for (const auto& [key, item] : value.items()) {
        if (!first) out << ',';
        first = false;
        newline(depth + 1);
        out << Json(key).dump() << (indent < 0 ? ":" : ": ");
        write_json(out, item, indent, depth + 1);
      }
      newline(depth);
      out << '}';
      break;
    }
    case Json::value_t::array: {
      if (value.empty()) {
        out << "[]";
        break;
      }
      out << '[';
      bool first = true;
      for (const auto& item : value) {
        if (!first) out << ',';
        first = false;
        newline(depth + 1);
        write_json(out, item, indent, depth + 1);
      }
      newline(depth);
      out << ']';
      break;
    }
    default:
      out << value.dump();
  }
}

Json optional_number(const std::optional<double>& value) {
  return value ? Json(*value) : Json(nullptr);
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return repr_double(value);
}

std::string dump_json(const Json& value, int indent) {
  std::ostringstream out;
  write_json(out, value, indent, 0);
  return out.str();
}

Json to_json(const SupremumResult& result) {
  Json j;
  j["value"] = result.value;
  j["argmax"] = result.argmax;
  j["bracket"] = Json::array({result.bracket_lo, result.bracket_hi});
  j["evaluations"] = result.evaluations;
  j["discontinuities"] = result.discontinuities;
  return j;
}

Json to_json(const BoundReport& report) {
  Json j;
  j["construction"] = report.construction;
  j["density"] = report.density;
  j["n"] = report.n;
  j["p"] = report.p;
  j["lambda"] = report.lambda;
  j["beta0"] = report.beta0;
  j["l"] = report.l ? Json(*report.l) : Json(nullptr);
  j["k"] = optional_number(report.k);
  j["R"] = report.R;
  j["r"] = report.r;
  j["Q"] = optional_number(report.Q);
  j["alpha"] = report.alpha;
  j["log_alpha"] = std::log(report.alpha);
  j["logT_lower"] = report.logT_lower;
  j["logT_exact"] = optional_number(report.logT_exact);
  Json terms = Json::object();
  for (const auto& [name, value] : report.terms) terms[name] = value;
  j["terms"] = terms;
  return j;
}

Json to_json(const RemarkReport& report) {
  Json j;
  j["lambda"] = report.lambda;
  j["l"] = report.l;
  j["k"] = report.k;
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json row;
    row["n"] = e.n;
    row["R"] = e.R;
    row["log_f_at_R"] = e.log_f_at_R;
    row["log_decay_bound"] = e.log_decay_bound;
    row["monotone_ok"] = e.monotone_ok;
    row["decay_ok"] = e.decay_ok;
    entries.push_back(row);
  }
  j["entries"] = entries;
  j["ok"] = report.all_ok();
  return j;
}

Json to_json(const InclusionReport& report) {
  Json j;
  j["R"] = report.R;
  j["r"] = report.r;
  j["log_threshold"] = report.log_threshold;
  j["min_slack"] = report.min_slack();
  j["failures"] = report.failures();
  Json points = Json::array();
  for (const auto& p : report.points) {
    points.push_back(Json{{"rho", p.rho}, {"log_value", p.log_value}, {"slack", p.slack},
                          {"ok", p.ok}});
  }
  j["points"] = points;
  j["ok"] = report.all_ok();
  return j;
}

Json to_json(const MonteCarloResult& result) {
  Json j;
  j["estimate"] = result.estimate;
  j["stderr"] = result.standard_error;
  j["samples"] = result.samples;
  j["hits"] = result.hits;
  return j;
}

void write_csv(std::ostream& out, const Metadata& metadata,
               const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  for (const auto& [key, value] : metadata) out << "# " << key << ": " << value << '\n';
  const auto write_row = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      const std::string& cell = cells[i];
      if (cell.find_first_of(",\"\n") != std::string::npos) {
        out << '"';
        for (char ch : cell) out << (ch == '"' ? std::string("\"\"") : std::string(1, ch));
        out << '"';
      } else {
        out << cell;
      }
    }
    out << '\n';
  };
  write_row(header);
  for (const auto& row : rows) write_row(row);
}

void write_profile_csv(std::ostream& out, const RadialProfile& profile,
                       const Metadata& metadata) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(profile.grid.size());
  for (std::size_t i = 0; i < profile.grid.size(); ++i) {
    rows.push_back({format_double(profile.grid[i]), format_double(profile.values[i])});
  }
  write_csv(out, metadata, {"rho", "value"}, rows);
}

}  // namespace radmax
