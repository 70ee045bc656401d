#include "cli.hpp"

#include <algorithm>
#include <map>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tempered/error.hpp"
#include "tempered/krep.hpp"
#include "tempered/report.hpp"
#include "tempered/vogan.hpp"

namespace tempered::cli {

int exit_code_for(Errc code) {
  if (is_internal(code)) return kTheoremViolation;
  switch (code) {
    case Errc::AmbiguousPositiveSystem:
      return kAmbiguousMatch;
    case Errc::RangeError:
      return kRangeError;
    default:
      return kInputError;
  }
}

IntRange parse_range(const std::string& text) {
  const auto colon = text.find(':', text.front() == '-' ? 1 : 0);
  if (colon == std::string::npos) throw Error(Errc::ParseError, "range must look like 'a:b', got '" + text + "'");
  const Rational lo = parse_rational(text.substr(0, colon));
  const Rational hi = parse_rational(text.substr(colon + 1));
  if (!is_integer(lo) || !is_integer(hi)) throw Error(Errc::ParseError, "range bounds must be integers");
  if (!lo.get_num().fits_slong_p() || !hi.get_num().fits_slong_p())
    throw Error(Errc::RangeError, "range bound out of bounds");
  return {lo.get_num().get_si(), hi.get_num().get_si()};
}

const GridCell* Grid::at(long m, long n) const {
  for (const auto& c : cells)
    if (c.m == m && c.n == n) return &c;
  return nullptr;
}

namespace {

constexpr long kMaxGridCoordinate = 1000;
const char* const kBullet = "•";

std::optional<std::pair<long, long>> integer_position(const Weight& w) {
  if (w.rank() != 2 || !is_integer(w[0]) || !is_integer(w[1])) return std::nullopt;
  if (!w[0].get_num().fits_slong_p() || !w[1].get_num().fits_slong_p()) return std::nullopt;
  return std::make_pair(w[0].get_num().get_si(), w[1].get_num().get_si());
}

std::string component_id(const ComponentSummary& s) {
  return "N" + std::to_string(s.levi_rank) + "-" + format_weight(s.kappa);
}

}  // namespace

Grid build_grid(const RealFormDescriptor& d, IntRange m_range, IntRange n_range) {
  if (d.rank_tc != 2) throw Error(Errc::InvalidArgument, "figure needs a group with rank_tc = 2");
  for (const auto& r : {m_range, n_range}) {
    if (r.lo > r.hi) throw Error(Errc::RangeError, "empty range " + std::to_string(r.lo) + ":" + std::to_string(r.hi));
    if (std::max(std::abs(r.lo), std::abs(r.hi)) > kMaxGridCoordinate)
      throw Error(Errc::RangeError, "range exceeds +-" + std::to_string(kMaxGridCoordinate));
  }

  Grid g;
  g.m_range = m_range;
  g.n_range = n_range;

  // A component owning mu in the box has kappa = mu - rho(Delta+(s)), and
  // |rho(Delta+(s))| <= 1/2 sum over noncompact pairs of |gamma|.
  Rational corner = 0;
  for (long m : {m_range.lo, m_range.hi})
    for (long n : {n_range.lo, n_range.hi})
      corner = std::max(corner, norm2(Weight{Rational(m), Rational(n)}, d.form));
  Rational radius = Rational(ceil_sqrt(corner));
  for (const auto& gamma : d.noncompact_weights.pair_representatives())
    radius += Rational(ceil_sqrt(norm2(gamma, d.form))) / 2;
  g.radius = radius;

  for (long n = n_range.hi; n >= n_range.lo; --n) {
    for (long m = m_range.lo; m <= m_range.hi; ++m) {
      Weight w{Rational(m), Rational(n)};
      if (!is_dominant(w, d.positive_compact, d.form)) continue;
      GridCell cell;
      cell.m = m;
      cell.n = n;
      g.cells.push_back(std::move(cell));
    }
  }

  std::map<std::pair<long, long>, std::size_t> index;
  for (std::size_t i = 0; i < g.cells.size(); ++i) index[{g.cells[i].m, g.cells[i].n}] = i;

  const auto run = enumerate(d, radius);
  for (const auto& datum : run.entries) {
    const auto s = summarize(d, datum);
    LegendEntry entry{component_id(s), s.kappa, s.levi_rank, {}};
    for (const auto& mu : s.minimal_k_types) {
      const auto pos = integer_position(mu);
      if (!pos) continue;
      const auto it = index.find(*pos);
      if (it == index.end()) continue;
      auto& cell = g.cells[it->second];
      if (cell.kind != GridCell::Kind::Empty) {
        throw Error(Errc::InternalInvariant, "position " + format_weight(mu) + " claimed by both " +
                                                 format_weight(cell.kappa) + " and " +
                                                 format_weight(s.kappa));
      }
      if (!(match_inverse(d, mu) == s.kappa))
        throw Error(Errc::InternalInvariant, "grid cell " + format_weight(mu) + " fails the inverse match");
      cell.kind = s.levi_rank == 0 ? GridCell::Kind::Bullet : GridCell::Kind::Component;
      cell.id = s.levi_rank == 0 ? std::string() : entry.id;
      cell.kappa = s.kappa;
      entry.cells.push_back(mu);
    }
    if (!entry.cells.empty()) g.legend.push_back(std::move(entry));
  }
  return g;
}

std::string render_grid_text(const Grid& g) {
  auto label = [](const GridCell* c) -> std::pair<std::string, std::size_t> {
    if (!c) return {"", 0};
    switch (c->kind) {
      case GridCell::Kind::Bullet: return {kBullet, 1};
      case GridCell::Kind::Component: return {c->id, c->id.size()};
      case GridCell::Kind::Empty: break;
    }
    return {".", 1};
  };

  std::size_t width = 1;
  for (long m = g.m_range.lo; m <= g.m_range.hi; ++m) width = std::max(width, std::to_string(m).size());
  for (const auto& c : g.cells) width = std::max(width, label(&c).second);
  std::size_t row_head = 1;
  for (long n = g.n_range.lo; n <= g.n_range.hi; ++n) row_head = std::max(row_head, std::to_string(n).size());

  auto pad = [](const std::string& s, std::size_t shown, std::size_t w) {
    return std::string(w - shown, ' ') + s;
  };

  std::ostringstream os;
  os << "# rows: n from " << g.n_range.hi << " down to " << g.n_range.lo << "; columns: m from "
     << g.m_range.lo << " to " << g.m_range.hi << "\n";
  os << "# " << kBullet << " = discrete series (N = 0); ids name components with N >= 1; . = no essential component\n";
  os << std::string(row_head, ' ') << " |";
  for (long m = g.m_range.lo; m <= g.m_range.hi; ++m) {
    const auto s = std::to_string(m);
    os << ' ' << pad(s, s.size(), width);
  }
  os << '\n';
  for (long n = g.n_range.hi; n >= g.n_range.lo; --n) {
    std::string line;
    const auto ns = std::to_string(n);
    line += pad(ns, ns.size(), row_head) + " |";
    for (long m = g.m_range.lo; m <= g.m_range.hi; ++m) {
      const auto [text, shown] = label(g.at(m, n));
      line += ' ' + pad(text, shown, width);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  os << "\nlegend:\n";
  for (const auto& e : g.legend) {
    os << "  " << (e.levi_rank == 0 ? std::string(kBullet) : e.id) << "  kappa=" << format_weight(e.kappa)
       << " N=" << e.levi_rank << " cells=" << format_weight_list(e.cells) << '\n';
  }
  return os.str();
}

std::string render_grid_csv(const Grid& g) {
  std::ostringstream os;
  os << "m,n,content,kappa,N\r\n";
  for (const auto& c : g.cells) {
    os << c.m << ',' << c.n << ',';
    switch (c.kind) {
      case GridCell::Kind::Empty:
        os << "empty,,\r\n";
        continue;
      case GridCell::Kind::Bullet:
        os << "bullet," << csv_field(format_weight(c.kappa)) << ",0\r\n";
        continue;
      case GridCell::Kind::Component:
        os << csv_field(c.id) << ',' << csv_field(format_weight(c.kappa)) << ','
           << c.id.substr(1, c.id.find('-') - 1) << "\r\n";
        continue;
    }
  }
  return os.str();
}

namespace {

struct Options {
  std::string group;
  std::string radius = "5";
  std::string format = "table";
  std::string mu;
  std::string direction = "inverse";
  std::string m_range = "-6:6";
  std::string n_range = "-6:6";
  std::string path;
  std::string krep_op;
  std::vector<std::string> operands;
  std::string tau;
  std::string v;
};

int cmd_catalog(const Options& o, std::ostream& out) {
  if (o.group.empty()) {
    for (const auto& name : catalog_names()) {
      const auto d = catalog(name);
      out << name << "  rank_tc=" << d.rank_tc << " rank_g=" << d.rank_g
          << " compact_roots=" << d.compact_roots.size()
          << " noncompact_weights=" << d.noncompact_weights.size() << '\n';
    }
  } else {
    out << serialize_descriptor(catalog(o.group));
  }
  return kOk;
}

int cmd_validate(const Options& o, std::ostream& out) {
  std::ifstream in(o.path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + o.path);
  std::stringstream buf;
  buf << in.rdbuf();
  const auto d = parse_descriptor(buf.str());
  const auto report = validate(d);
  if (report.ok()) {
    out << d.name << ": ok\n";
    return kOk;
  }
  out << d.name << ": " << report.violations.size() << " violation(s)\n" << report.summary();
  return kInputError;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const auto d = resolve_descriptor(o.group);
  const auto format = parse_output_format(o.format);
  const Rational radius = parse_rational(o.radius);
  if (radius < 0) throw Error(Errc::InvalidArgument, "radius must be non-negative");
  const auto run = enumerate(d, radius);
  std::vector<ComponentSummary> summaries;
  summaries.reserve(run.entries.size());
  for (const auto& datum : run.entries) summaries.push_back(summarize(d, datum));
  out << render_components(d.name, run.radius_squared, summaries, format);
  return kOk;
}

int cmd_match(const Options& o, std::ostream& out) {
  const auto d = resolve_descriptor(o.group);
  if (o.format != "text" && o.format != "table" && o.format != "json")
    throw Error(Errc::InvalidArgument, "match format must be 'text' or 'json'");
  const Weight w = parse_weight(o.mu);
  if (w.rank() != d.rank()) throw Error(Errc::DimensionMismatch, "weight has the wrong length");
  ComponentSummary s;
  const bool inverse = o.direction == "inverse";
  if (inverse) {
    const Weight kappa = match_inverse(d, w);
    s = summarize(d, kappa);
    if (std::find(s.minimal_k_types.begin(), s.minimal_k_types.end(), w) == s.minimal_k_types.end()) {
      throw Error(Errc::InternalBijectionFailure, format_weight(w) + " is not a minimal K-type of the component " +
                                                      "matched to " + format_weight(kappa));
    }
  } else if (o.direction == "forward") {
    s = summarize(d, w);
  } else {
    throw Error(Errc::InvalidArgument, "direction must be 'forward' or 'inverse'");
  }
  if (o.format == "json") {
    auto doc = to_json(s);
    if (inverse) doc["mu"] = to_json(w);
    out << doc.dump(2) << '\n';
  } else {
    if (inverse) out << "mu: " << format_weight(w) << '\n';
    out << render_summary(s);
  }
  return kOk;
}

int cmd_figure(const Options& o, std::ostream& out) {
  const auto d = resolve_descriptor(o.group);
  const auto grid = build_grid(d, parse_range(o.m_range), parse_range(o.n_range));
  if (o.format == "csv") out << render_grid_csv(grid);
  else if (o.format == "text" || o.format == "table") out << render_grid_text(grid);
  else throw Error(Errc::InvalidArgument, "figure format must be 'text' or 'csv'");
  return kOk;
}

int cmd_krep(const Options& o, std::ostream& out) {
  const auto d = resolve_descriptor(o.group);
  auto operand = [&](std::size_t i) {
    if (o.operands.size() <= i) throw Error(Errc::InvalidArgument, "missing weight operand for '" + o.krep_op + "'");
    const Weight w = parse_weight(o.operands[i]);
    if (w.rank() != d.rank()) throw Error(Errc::DimensionMismatch, "weight has the wrong length");
    return w;
  };
  auto option_weight = [&](const std::string& text, const char* name) {
    if (text.empty()) throw Error(Errc::InvalidArgument, std::string("missing --") + name);
    const Weight w = parse_weight(text);
    if (w.rank() != d.rank()) throw Error(Errc::DimensionMismatch, "weight has the wrong length");
    return w;
  };

  if (o.krep_op == "dim") {
    out << weyl_dim(d, operand(0)) << '\n';
  } else if (o.krep_op == "weights") {
    out << format_multiset(freudenthal(d, operand(0))) << '\n';
  } else if (o.krep_op == "tensor") {
    const auto parts = tensor_decompose(d, operand(0), operand(1));
    WeightMultiset m;
    for (const auto& [w, k] : parts) m.add(w, k);
    out << format_multiset(m) << '\n';
  } else if (o.krep_op == "spin") {
    out << format_multiset(spin_weights(d)) << '\n';
  } else if (o.krep_op == "diracmult") {
    out << dirac_multiplicity(d, {option_weight(o.tau, "tau")}, {option_weight(o.v, "v")}) << '\n';
  } else {
    throw Error(Errc::InvalidArgument, "unknown krep operation '" + o.krep_op + "'");
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Essential components of tempered duals, minimal K-types and Dirac cohomology"};
  app.name("tempered-atlas");
  app.require_subcommand(1);
  Options o;

  auto* catalog_cmd = app.add_subcommand("catalog", "List built-in groups or print one descriptor");
  catalog_cmd->add_option("name", o.group, "Catalog group to print");

  auto* validate_cmd = app.add_subcommand("validate", "Check a descriptor file");
  validate_cmd->add_option("path", o.path, "Descriptor file")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Enumerate essential components within a radius");
  classify_cmd->add_option("group", o.group, "Catalog name or descriptor path")->required();
  classify_cmd->add_option("--radius", o.radius, "Bound on |kappa| (rational)");
  classify_cmd->add_option("--format", o.format, "table, csv or json");

  auto* match_cmd = app.add_subcommand("match", "Match a minimal K-type to kappa, or kappa to its component");
  match_cmd->add_option("group", o.group, "Catalog name or descriptor path")->required();
  match_cmd->add_option("--mu", o.mu, "Weight, comma separated rationals")->required();
  match_cmd->add_option("--direction", o.direction, "inverse (K-type to kappa) or forward");
  match_cmd->add_option("--format", o.format, "text or json");

  auto* figure_cmd = app.add_subcommand("figure", "Minimal K-type grid of a rank-two group");
  figure_cmd->add_option("group", o.group, "Catalog name or descriptor path")->required();
  figure_cmd->add_option("--m-range", o.m_range, "a:b");
  figure_cmd->add_option("--n-range", o.n_range, "a:b");
  figure_cmd->add_option("--format", o.format, "text or csv");

  auto* krep_cmd = app.add_subcommand("krep", "Representations of K: dim, weights, tensor, spin, diracmult");
  krep_cmd->add_option("group", o.group, "Catalog name or descriptor path")->required();
  krep_cmd->add_option("op", o.krep_op, "dim | weights | tensor | spin | diracmult")->required();
  krep_cmd->add_option("weights", o.operands, "Highest weights");
  krep_cmd->add_option("--tau", o.tau, "Genuine K~-type highest weight");
  krep_cmd->add_option("--v", o.v, "K-type highest weight");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (catalog_cmd->parsed()) return cmd_catalog(o, out);
    if (validate_cmd->parsed()) return cmd_validate(o, out);
    if (classify_cmd->parsed()) return cmd_classify(o, out);
    if (match_cmd->parsed()) return cmd_match(o, out);
    if (figure_cmd->parsed()) return cmd_figure(o, out);
    if (krep_cmd->parsed()) return cmd_krep(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace tempered::cli
