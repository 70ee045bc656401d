#include "tempered/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "tempered/error.hpp"
#include "tempered/linalg.hpp"

namespace tempered {

Weight RealFormDescriptor::rho_k() const { return half_sum(positive_compact, rank()); }

int RealFormDescriptor::dim_s() const {
  return static_cast<int>(noncompact_weights.size()) + zero_weight_s_dim;
}

RealFormDescriptor RealFormDescriptor::with_scaled_form(const Rational& c) const {
  if (c <= 0) throw Error(Errc::InvalidArgument, "form scale must be positive");
  RealFormDescriptor out = *this;
  out.form = form.scaled(c);
  return out;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& v : violations) os << v.invariant << ": " << v.detail << '\n';
  return os.str();
}

namespace {

std::vector<Weight> all_weights(const RealFormDescriptor& d) {
  std::vector<Weight> out = d.compact_roots.roots;
  out.insert(out.end(), d.noncompact_weights.roots.begin(), d.noncompact_weights.roots.end());
  return out;
}

bool lattice_contains(const std::vector<Weight>& basis, const Weight& w) {
  const auto c = linalg::solve_in_span(basis, w);
  return c && std::all_of(c->begin(), c->end(), is_integer);
}

}  // namespace

ValidationReport validate(const RealFormDescriptor& d) {
  ValidationReport report;
  auto fail = [&](std::string inv, std::string detail) {
    report.violations.push_back({std::move(inv), std::move(detail)});
  };

  if (d.rank_tc < 1) {
    fail("rank", "rank_tc must be at least 1");
    return report;
  }
  const std::size_t n = d.rank();

  bool shapes_ok = true;
  auto check_dim = [&](const std::vector<Weight>& ws, const char* what) {
    for (const auto& w : ws) {
      if (w.rank() != n) {
        fail("dimension", std::string(what) + " entry " + format_weight(w) + " has length " +
                              std::to_string(w.rank()) + ", expected " + std::to_string(n));
        shapes_ok = false;
      }
    }
  };
  check_dim(d.compact_roots.roots, "compact root");
  check_dim(d.positive_compact, "positive compact root");
  check_dim(d.noncompact_weights.roots, "noncompact weight");
  check_dim(d.lattice_basis, "lattice basis row");
  if (d.form.rank() != n) {
    fail("dimension", "Gram matrix has size " + std::to_string(d.form.rank()) + ", expected " +
                          std::to_string(n));
    shapes_ok = false;
  }
  if (d.lattice_basis.size() != n) {
    fail("dimension", "lattice basis has " + std::to_string(d.lattice_basis.size()) +
                          " rows, expected " + std::to_string(n));
    shapes_ok = false;
  }
  if (!shapes_ok) return report;

  if (!d.form.symmetric()) fail("form-symmetric", "Gram matrix is not symmetric");
  else if (!d.form.positive_definite()) fail("positive-definite", "form not positive definite");

  if (d.rank_g < d.rank_tc) fail("rank", "rank_g is smaller than rank_tc");
  if (d.zero_weight_s_dim != d.rank_g - d.rank_tc) {
    fail("rank", "zero_weight_s_dim = " + std::to_string(d.zero_weight_s_dim) +
                     " but rank_g - rank_tc = " + std::to_string(d.rank_g - d.rank_tc));
  }

  for (const auto* list : {&d.compact_roots, &d.noncompact_weights}) {
    const char* what = list == &d.compact_roots ? "compact roots" : "noncompact weights";
    for (const auto& r : list->roots)
      if (r.is_zero()) fail("nonzero", std::string(what) + " contain the zero weight");
    if (list->has_duplicates())
      fail("multiplicity", std::string(what) + " contain a repeated entry");
    for (const auto& r : list->roots) {
      if (!list->contains(-r)) {
        fail("negation", std::string(what) + ": " + format_weight(r) + " present but " +
                             format_weight(-r) + " absent");
      }
    }
  }
  for (const auto& p : d.positive_compact) {
    if (!d.compact_roots.contains(p))
      fail("positive-compact", format_weight(p) + " is not a compact root");
    if (std::find(d.positive_compact.begin(), d.positive_compact.end(), -p) != d.positive_compact.end())
      fail("positive-compact", "both " + format_weight(p) + " and its negative are positive");
  }
  if (d.positive_compact.size() * 2 != d.compact_roots.size())
    fail("positive-compact", "positive compact roots must pick one root from each pair");

  if (linalg::rank(d.lattice_basis) != n) {
    fail("lattice", "lattice basis is not invertible");
  } else {
    for (const auto& w : all_weights(d)) {
      if (!lattice_contains(d.lattice_basis, w))
        fail("lattice", format_weight(w) + " is not in the integral lattice");
    }
  }
  return report;
}

bool is_integral(const RealFormDescriptor& d, const Weight& w) {
  return lattice_contains(d.lattice_basis, w);
}

namespace {

std::vector<Weight> with_negatives(std::initializer_list<Weight> ws) {
  std::vector<Weight> out;
  for (const auto& w : ws) {
    out.push_back(w);
    out.push_back(-w);
  }
  return out;
}

std::vector<Weight> standard_basis(std::size_t n) {
  std::vector<Weight> out;
  for (std::size_t i = 0; i < n; ++i) {
    Weight e(n);
    e[i] = 1;
    out.push_back(e);
  }
  return out;
}

RealFormDescriptor make_sl2r() {
  RealFormDescriptor d;
  d.name = "sl2r";
  d.rank_tc = 1;
  d.rank_g = 1;
  d.form = BilinearForm::identity(1);
  d.noncompact_weights.roots = with_negatives({Weight{2}});
  d.zero_weight_s_dim = 0;
  d.lattice_basis = standard_basis(1);
  return d;
}

RealFormDescriptor make_sl2c() {
  RealFormDescriptor d;
  d.name = "sl2c";
  d.rank_tc = 1;
  d.rank_g = 2;
  d.form = BilinearForm::identity(1);
  d.compact_roots.roots = with_negatives({Weight{2}});
  d.positive_compact = {Weight{2}};
  d.noncompact_weights.roots = with_negatives({Weight{2}});
  d.zero_weight_s_dim = 1;
  d.lattice_basis = standard_basis(1);
  return d;
}

// Coordinates (x1, x2) stand for x1 e1 + x2 e2 on diag(i t1, i t2, -i(t1 + t2)),
// so e3 = (-1,-1). The form is the dual of the trace form, scaled by 3.
RealFormDescriptor make_su21() {
  RealFormDescriptor d;
  d.name = "su21";
  d.rank_tc = 2;
  d.rank_g = 2;
  d.form = BilinearForm({{2, -1}, {-1, 2}});
  d.compact_roots.roots = with_negatives({Weight{1, -1}});
  d.positive_compact = {Weight{1, -1}};
  d.noncompact_weights.roots = with_negatives({Weight{2, 1}, Weight{1, 2}});
  d.zero_weight_s_dim = 0;
  d.lattice_basis = standard_basis(2);
  return d;
}

RealFormDescriptor make_sp4r() {
  RealFormDescriptor d;
  d.name = "sp4r";
  d.rank_tc = 2;
  d.rank_g = 2;
  d.form = BilinearForm::identity(2);
  d.compact_roots.roots = with_negatives({Weight{1, -1}});
  d.positive_compact = {Weight{1, -1}};
  d.noncompact_weights.roots = with_negatives({Weight{1, 1}, Weight{2, 0}, Weight{0, 2}});
  d.zero_weight_s_dim = 0;
  d.lattice_basis = standard_basis(2);
  return d;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"sl2r", "sl2c", "su21", "sp4r"};
  return names;
}

RealFormDescriptor catalog(std::string_view name) {
  RealFormDescriptor d;
  if (name == "sl2r") d = make_sl2r();
  else if (name == "sl2c") d = make_sl2c();
  else if (name == "su21") d = make_su21();
  else if (name == "sp4r") d = make_sp4r();
  else throw Error(Errc::UnknownDescriptor, "no catalog group named '" + std::string(name) + "'");
  const auto report = validate(d);
  if (!report.ok()) throw Error(Errc::InternalInvariant, "catalog entry invalid:\n" + report.summary());
  return d;
}

RealFormDescriptor resolve_descriptor(std::string_view name_or_path) {
  const std::string name(name_or_path);
  const auto& names = catalog_names();
  if (std::find(names.begin(), names.end(), name) != names.end()) return catalog(name);

  std::error_code ec;
  if (std::filesystem::is_regular_file(name, ec)) return load_descriptor(name);

  if (const char* env = std::getenv("TEMPERED_ATLAS_PATH")) {
    std::stringstream dirs(env);
    std::string dir;
    while (std::getline(dirs, dir, ':')) {
      if (dir.empty()) continue;
      for (const auto& candidate : {std::filesystem::path(dir) / name,
                                    std::filesystem::path(dir) / (name + ".desc")}) {
        if (std::filesystem::is_regular_file(candidate, ec)) return load_descriptor(candidate);
      }
    }
  }
  throw Error(Errc::UnknownDescriptor, "cannot resolve group '" + name + "'");
}

}  // namespace tempered
