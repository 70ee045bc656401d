#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "tempered/error.hpp"
#include "tempered/group.hpp"

namespace tempered {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + msg);
}

int parse_int(const std::string& value, int line) {
  const Rational q = [&] {
    try {
      return parse_rational(value);
    } catch (const Error& e) {
      parse_fail(line, e.what());
    }
  }();
  if (!is_integer(q) || !q.get_num().fits_sint_p()) parse_fail(line, "expected an integer, got '" + value + "'");
  return static_cast<int>(q.get_num().get_si());
}

Weight parse_row(const std::string& value, int line) {
  try {
    return parse_weight(value);
  } catch (const Error& e) {
    parse_fail(line, e.what());
  }
}

// "(1,-1) (-1,1)"; whitespace between tuples is optional.
std::vector<Weight> parse_tuple_list(const std::string& value, int line) {
  std::vector<Weight> out;
  std::size_t pos = 0;
  while (true) {
    while (pos < value.size() && std::isspace(static_cast<unsigned char>(value[pos]))) ++pos;
    if (pos == value.size()) break;
    if (value[pos] != '(') parse_fail(line, "expected '(' in tuple list '" + value + "'");
    const auto close = value.find(')', pos);
    if (close == std::string::npos) parse_fail(line, "unterminated tuple in '" + value + "'");
    out.push_back(parse_row(value.substr(pos, close - pos + 1), line));
    pos = close + 1;
  }
  return out;
}

}  // namespace

RealFormDescriptor parse_descriptor(std::string_view text) {
  RealFormDescriptor d;
  std::optional<std::string> name;
  std::optional<int> rank_tc, rank_g, m0;
  std::vector<std::vector<Rational>> gram;
  std::optional<std::vector<Weight>> compact, positive, noncompact;
  std::vector<Weight> lattice;
  bool saw_form = false, saw_lattice = false;

  std::string section;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string s = trim(raw);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') parse_fail(line, "malformed section header");
      section = trim(std::string_view(s).substr(1, s.size() - 2));
      if (section != "group" && section != "form" && section != "roots" && section != "lattice")
        parse_fail(line, "unknown section [" + section + "]");
      if (section == "form") saw_form = true;
      if (section == "lattice") saw_lattice = true;
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) parse_fail(line, "expected 'key = value'");
    const std::string key = trim(std::string_view(s).substr(0, eq));
    const std::string value = trim(std::string_view(s).substr(eq + 1));

    auto set_once = [&](auto& slot, auto v) {
      if (slot) parse_fail(line, "duplicate key '" + key + "'");
      slot = std::move(v);
    };

    if (section == "group") {
      if (key == "name") {
        if (value.empty()) parse_fail(line, "empty name");
        set_once(name, value);
      } else if (key == "rank_tc") set_once(rank_tc, parse_int(value, line));
      else if (key == "rank_g") set_once(rank_g, parse_int(value, line));
      else if (key == "zero_weight_s_dim") set_once(m0, parse_int(value, line));
      else parse_fail(line, "unknown key '" + key + "' in [group]");
    } else if (section == "form") {
      if (key != "row") parse_fail(line, "unknown key '" + key + "' in [form]");
      gram.push_back(parse_row(value, line).coords());
    } else if (section == "roots") {
      if (key == "compact") set_once(compact, parse_tuple_list(value, line));
      else if (key == "positive_compact") set_once(positive, parse_tuple_list(value, line));
      else if (key == "noncompact") set_once(noncompact, parse_tuple_list(value, line));
      else parse_fail(line, "unknown key '" + key + "' in [roots]");
    } else if (section == "lattice") {
      if (key != "row") parse_fail(line, "unknown key '" + key + "' in [lattice]");
      lattice.push_back(parse_row(value, line));
    } else {
      parse_fail(line, "key outside of any section");
    }
  }

  auto require = [&](bool present, const char* what) {
    if (!present) throw Error(Errc::ParseError, std::string("missing ") + what);
  };
  require(name.has_value(), "[group] name");
  require(rank_tc.has_value(), "[group] rank_tc");
  require(rank_g.has_value(), "[group] rank_g");
  require(m0.has_value(), "[group] zero_weight_s_dim");
  require(saw_form && !gram.empty(), "[form] rows");
  require(compact.has_value(), "[roots] compact");
  require(positive.has_value(), "[roots] positive_compact");
  require(noncompact.has_value(), "[roots] noncompact");
  require(saw_lattice && !lattice.empty(), "[lattice] rows");

  for (const auto& row : gram)
    if (row.size() != gram.size()) throw Error(Errc::ParseError, "[form] Gram matrix is not square");

  d.name = *name;
  d.rank_tc = *rank_tc;
  d.rank_g = *rank_g;
  d.zero_weight_s_dim = *m0;
  d.form = BilinearForm(std::move(gram));
  d.compact_roots.roots = std::move(*compact);
  d.positive_compact = std::move(*positive);
  d.noncompact_weights.roots = std::move(*noncompact);
  d.lattice_basis = std::move(lattice);
  return d;
}

std::string serialize_descriptor(const RealFormDescriptor& d) {
  auto tuple = [](const Weight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.rank(); ++i) {
      if (i) s += ',';
      s += format_rational(w[i]);
    }
    return s + ')';
  };
  auto row = [](const std::vector<Rational>& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) s += ", ";
      s += format_rational(r[i]);
    }
    return s;
  };
  auto list = [&](const std::vector<Weight>& ws) {
    std::string s;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      if (i) s += ' ';
      s += tuple(ws[i]);
    }
    return s;
  };

  std::ostringstream os;
  os << "[group]\n"
     << "name = " << d.name << '\n'
     << "rank_tc = " << d.rank_tc << '\n'
     << "rank_g = " << d.rank_g << '\n'
     << "zero_weight_s_dim = " << d.zero_weight_s_dim << "\n\n"
     << "[form]\n";
  for (const auto& r : d.form.gram()) os << "row = " << row(r) << '\n';
  os << "\n[roots]\n"
     << "compact = " << list(d.compact_roots.roots) << '\n'
     << "positive_compact = " << list(d.positive_compact) << '\n'
     << "noncompact = " << list(d.noncompact_weights.roots) << "\n\n"
     << "[lattice]\n";
  for (const auto& b : d.lattice_basis) os << "row = " << row(b.coords()) << '\n';
  return os.str();
}

RealFormDescriptor load_descriptor(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  auto d = parse_descriptor(buf.str());
  const auto report = validate(d);
  if (!report.ok()) throw Error(Errc::ValidationError, path.string() + ":\n" + report.summary());
  return d;
}

}  // namespace tempered
