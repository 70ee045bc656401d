#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tempered/krep.hpp"
#include "tempered/matching.hpp"

namespace tempered {

enum class OutputFormat { Table, Csv, Json };

OutputFormat parse_output_format(const std::string& text);

nlohmann::json to_json(const Weight& w);
nlohmann::json to_json(const ComponentSummary& s);
nlohmann::json to_json(const WeightMultiset& m);

/// RFC 4180 field quoting.
std::string csv_field(const std::string& text);

std::string format_weight_list(const std::vector<Weight>& ws);
std::string format_multiset(const WeightMultiset& m);

std::string render_components(const std::string& group, const Rational& radius_squared,
                              const std::vector<ComponentSummary>& components,
                              OutputFormat format);

std::string render_summary(const ComponentSummary& s);

}  // namespace tempered
