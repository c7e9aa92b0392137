#pragma once

#include <json.hpp>
#include <string>

#include "cherednik/category_o.hpp"
#include "cherednik/params.hpp"
#include "cherednik/partition.hpp"
#include "cherednik/qseries.hpp"
#include "cherednik/rational.hpp"

namespace cherednik::io {

using json = nlohmann::json;

json to_json(const Partition& p);
json to_json(const Rational& q);
json to_json(const QSeries& s);
json to_json(const Line& l);
json to_json(const GammaResult& g);
json to_json(const PointReport& r);
json to_json(const LengthResult& r);
json to_json(const Resolution& r);

Partition partition_from_json(const json& j);
Rational rational_from_json(const json& j);
QSeries qseries_from_json(const json& j);
Line line_from_json(const json& j);
PointReport report_from_json(const json& j);

Verdict verdict_from_string(const std::string& s);

// Compact JSON, keys sorted.
std::string emit_json(const json& j);
// Aligned key/value text; partitions print as (a,b,...).
std::string emit_text(const json& j);

// Command-line forms: "3,2,1" or "empty".
Partition parse_partition(const std::string& text);

}  // namespace cherednik::io
