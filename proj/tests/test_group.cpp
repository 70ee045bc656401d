#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "helpers.hpp"
#include "tempered/error.hpp"
#include "tempered/group.hpp"

using namespace tempered;
using testing::code_of;
using testing::h2;
using testing::w2;

namespace {

bool has_violation(const ValidationReport& r, const std::string& name) {
  for (const auto& v : r.violations)
    if (v.invariant == name || v.detail == name) return true;
  return false;
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "tempered-group-tests";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("catalog entries") {
  CHECK(catalog("sp4r").noncompact_weights.size() == 6);
  CHECK(catalog("sl2r").compact_roots.empty());
  CHECK(catalog("sl2c").zero_weight_s_dim == 1);
  CHECK(catalog("sp4r").rho_k() == h2(1, -1));
  CHECK(catalog("sp4r").dim_s() == 6);
  CHECK(catalog("su21").dim_s() == 4);
  CHECK(catalog("sl2c").dim_s() == 3);
  CHECK(code_of([] { catalog("nosuch"); }) == Errc::UnknownDescriptor);
  for (const auto& name : catalog_names()) {
    const auto d = catalog(name);
    CHECK(validate(d).ok());
    CHECK(d.zero_weight_s_dim == d.rank_g - d.rank_tc);
    CHECK(catalog(name) == d);
  }
}

TEST_CASE("serialize and parse round trip") {
  for (const auto& name : catalog_names()) {
    const auto d = catalog(name);
    CHECK(parse_descriptor(serialize_descriptor(d)) == d);
    CHECK(serialize_descriptor(parse_descriptor(serialize_descriptor(d))) == serialize_descriptor(d));
  }
  const auto path = scratch_dir() / "sp4r_copy.desc";
  std::ofstream(path) << serialize_descriptor(catalog("sp4r"));
  CHECK(load_descriptor(path) == catalog("sp4r"));
}

TEST_CASE("load rejects descriptors that break invariants") {
  const auto dir = scratch_dir();
  auto text = serialize_descriptor(catalog("sl2c"));

  auto bad_m0 = text;
  bad_m0.replace(bad_m0.find("zero_weight_s_dim = 1"), 21, "zero_weight_s_dim = 3");
  std::ofstream(dir / "bad_m0.desc") << bad_m0;
  CHECK(code_of([&] { load_descriptor(dir / "bad_m0.desc"); }) == Errc::ValidationError);

  auto d = catalog("sp4r");
  d.noncompact_weights.roots.erase(d.noncompact_weights.roots.begin());
  std::ofstream(dir / "no_negative.desc") << serialize_descriptor(d);
  CHECK(code_of([&] { load_descriptor(dir / "no_negative.desc"); }) == Errc::ValidationError);
  CHECK(has_violation(validate(d), "negation"));

  CHECK(code_of([&] { load_descriptor(dir / "does-not-exist.desc"); }) != Errc::InternalInvariant);
}

TEST_CASE("parse errors") {
  CHECK(code_of([] { parse_descriptor("[group]\nname = x\n"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_descriptor("[bogus]\n"); }) == Errc::ParseError);
  auto text = serialize_descriptor(catalog("sl2r"));
  CHECK(code_of([&] { parse_descriptor(text + "\n[group]\nname = again\n"); }) == Errc::ParseError);
  auto floaty = text;
  floaty.replace(floaty.find("noncompact = "), 13, "noncompact = 2.0 ");
  CHECK(code_of([&] { parse_descriptor(floaty); }) == Errc::ParseError);
}

TEST_CASE("validation reports") {
  CHECK(validate(catalog("sp4r")).ok());

  auto d = catalog("sp4r");
  d.form = BilinearForm({{1, 2}, {2, 1}});
  const auto r = validate(d);
  CHECK_FALSE(r.ok());
  CHECK(has_violation(r, "form not positive definite"));

  auto dup = catalog("sp4r");
  dup.noncompact_weights.roots.push_back(w2(2, 0));
  CHECK(has_violation(validate(dup), "multiplicity"));

  // Complex groups carry the same weights in k and s.
  auto overlap = catalog("sl2c");
  CHECK(overlap.compact_roots.contains(Weight{2}));
  CHECK(overlap.noncompact_weights.contains(Weight{2}));
  CHECK(validate(overlap).ok());

  auto two_positive = catalog("sp4r");
  two_positive.positive_compact.push_back(w2(-1, 1));
  CHECK(has_violation(validate(two_positive), "positive-compact"));

  auto coarse = catalog("sp4r");
  coarse.lattice_basis = {w2(2, 0), w2(0, 2)};
  CHECK(has_violation(validate(coarse), "lattice"));

  // Same descriptor, same report.
  CHECK(validate(dup).summary() == validate(dup).summary());
}

TEST_CASE("analytic integrality") {
  const auto sp = catalog("sp4r");
  CHECK(is_integral(sp, w2(-1, 0)));
  CHECK_FALSE(is_integral(sp, h2(-1, 1)));
  CHECK(is_integral(catalog("sl2r"), Weight{1}));
  CHECK_FALSE(is_integral(catalog("sl2r"), Weight{frac(1, 2)}));
  CHECK_FALSE(is_integral(catalog("sl2c"), Weight{frac(1, 2)}));
}

TEST_CASE("property: integrality is stable under adding roots") {
  std::mt19937 rng(3);
  for (const auto& name : catalog_names()) {
    const auto d = catalog(name);
    std::vector<Weight> roots = d.compact_roots.roots;
    roots.insert(roots.end(), d.noncompact_weights.roots.begin(), d.noncompact_weights.roots.end());
    for (int trial = 0; trial < 100; ++trial) {
      const Weight w = testing::random_weight(rng, d.rank(), 6, 2);
      for (const auto& r : roots) CHECK(is_integral(d, w) == is_integral(d, w + r));
    }
  }
}

TEST_CASE("descriptor search path") {
  const auto dir = scratch_dir() / "search";
  std::filesystem::create_directories(dir);
  auto d = catalog("su21");
  d.name = "mygroup";
  std::ofstream(dir / "mygroup.desc") << serialize_descriptor(d);
  const std::string path_value = "/nonexistent:" + dir.string();
  ::setenv("TEMPERED_ATLAS_PATH", path_value.c_str(), 1);
  CHECK(resolve_descriptor("mygroup") == d);
  CHECK(resolve_descriptor("sp4r") == catalog("sp4r"));
  CHECK(resolve_descriptor((dir / "mygroup.desc").string()) == d);
  CHECK(code_of([] { resolve_descriptor("missing-group"); }) == Errc::UnknownDescriptor);
  ::unsetenv("TEMPERED_ATLAS_PATH");
  CHECK(code_of([] { resolve_descriptor("mygroup"); }) == Errc::UnknownDescriptor);
}
