#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "radmax/bounds.hpp"
#include "radmax/optimize.hpp"
#include "radmax/oracle.hpp"

namespace radmax {

using Json = nlohmann::ordered_json;

/// 17 significant digits; "inf", "-inf" and "nan" for non-finite values.
std::string format_double(double value);

/// JSON text with floats at 17 significant digits and non-finite values as null.
std::string dump_json(const Json& value, int indent = 2);

Json to_json(const SupremumResult& result);
Json to_json(const BoundReport& report);
Json to_json(const RemarkReport& report);
Json to_json(const InclusionReport& report);
Json to_json(const MonteCarloResult& result);

using Metadata = std::vector<std::pair<std::string, std::string>>;

/// '#'-prefixed "key: value" metadata lines, a header row, then the rows.
void write_csv(std::ostream& out, const Metadata& metadata,
               const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

/// Two-column (rho, value) CSV.
void write_profile_csv(std::ostream& out, const RadialProfile& profile,
                       const Metadata& metadata);

}  // namespace radmax
