#include "tempered/report.hpp"

#include <algorithm>
#include <sstream>

#include "tempered/error.hpp"

namespace tempered {

OutputFormat parse_output_format(const std::string& text) {
  if (text == "table") return OutputFormat::Table;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw Error(Errc::InvalidArgument, "unknown format '" + text + "'");
}

nlohmann::json to_json(const Weight& w) {
  auto arr = nlohmann::json::array();
  for (const auto& x : w.coords()) arr.push_back(format_rational(x));
  return arr;
}

namespace {

nlohmann::json to_json(const std::vector<Weight>& ws) {
  auto arr = nlohmann::json::array();
  for (const auto& w : ws) arr.push_back(to_json(w));
  return arr;
}

}  // namespace

nlohmann::json to_json(const ComponentSummary& s) {
  nlohmann::json j;
  j["kappa"] = to_json(s.kappa);
  j["N"] = s.levi_rank;
  j["r_order"] = s.r_order;
  j["fine_weights"] = to_json(s.fine_weights);
  j["minimal_k_types"] = to_json(s.minimal_k_types);
  j["dirac_hw"] = to_json(s.dirac_hw);
  return j;
}

nlohmann::json to_json(const WeightMultiset& m) {
  auto arr = nlohmann::json::array();
  for (const auto& [w, mult] : m.entries) arr.push_back({{"weight", to_json(w)}, {"multiplicity", mult}});
  return arr;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string format_weight_list(const std::vector<Weight>& ws) {
  std::string out;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i) out += ';';
    out += format_weight(ws[i]);
  }
  return out;
}

std::string format_multiset(const WeightMultiset& m) {
  // Highest weights first.
  std::string out = "{";
  bool first = true;
  for (auto it = m.entries.rbegin(); it != m.entries.rend(); ++it) {
    if (!first) out += ", ";
    first = false;
    out += format_weight(it->first) + ":" + std::to_string(it->second);
  }
  return out + "}";
}

std::string render_components(const std::string& group, const Rational& radius_squared,
                              const std::vector<ComponentSummary>& components,
                              OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Json: {
      nlohmann::json j;
      j["group"] = group;
      j["radius_squared"] = format_rational(radius_squared);
      j["components"] = nlohmann::json::array();
      for (const auto& s : components) j["components"].push_back(to_json(s));
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv: {
      os << "kappa,N,r_order,minimal_k_types,dirac_hw\r\n";
      for (const auto& s : components) {
        os << csv_field(format_weight(s.kappa)) << ',' << s.levi_rank << ',' << s.r_order << ','
           << csv_field(format_weight_list(s.minimal_k_types)) << ','
           << csv_field(format_weight(s.dirac_hw)) << "\r\n";
      }
      break;
    }
    case OutputFormat::Table: {
      std::vector<std::vector<std::string>> rows{{"kappa", "N", "|R|", "minimal K-types", "dirac_hw"}};
      for (const auto& s : components) {
        rows.push_back({format_weight(s.kappa), std::to_string(s.levi_rank), std::to_string(s.r_order),
                        format_weight_list(s.minimal_k_types), format_weight(s.dirac_hw)});
      }
      std::vector<std::size_t> width(rows.front().size(), 0);
      for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
      for (const auto& r : rows) {
        std::string line;
        for (std::size_t c = 0; c < r.size(); ++c) {
          line += r[c];
          if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
        }
        os << line << '\n';
      }
      os << components.size() << " components of " << group << " with |kappa|^2 <= "
         << format_rational(radius_squared) << '\n';
      break;
    }
  }
  return os.str();
}

std::string render_summary(const ComponentSummary& s) {
  std::ostringstream os;
  os << "kappa: " << format_weight(s.kappa) << '\n'
     << "N: " << s.levi_rank << '\n'
     << "r_order: " << s.r_order << '\n'
     << "fine_weights: " << format_weight_list(s.fine_weights) << '\n'
     << "minimal_k_types: " << format_weight_list(s.minimal_k_types) << '\n'
     << "dirac_hw: " << format_weight(s.dirac_hw) << '\n';
  return os.str();
}

}  // namespace tempered
