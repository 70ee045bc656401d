#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "helpers.hpp"
#include "tempered/matching.hpp"

using namespace tempered;
using testing::code_of;
using testing::h2;
using testing::w2;

namespace {

bool same_set(std::vector<Weight> a, std::vector<Weight> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

EssentialVoganDatum datum(const std::string& group, const Weight& kappa) {
  return *construct_from_kappa(catalog(group), kappa);
}

// kappa = mu - rho_G + rho_K, trying every choice of noncompact positives
// and keeping the ones that make mu + 2 rho_K dominant.
std::vector<Weight> oracle_inverse(const RealFormDescriptor& d, const Weight& mu_g) {
  const auto reps = d.noncompact_weights.pair_representatives();
  std::set<Weight> found;
  for (std::size_t mask = 0; mask < (std::size_t{1} << reps.size()); ++mask) {
    std::vector<Weight> pos;
    for (std::size_t j = 0; j < reps.size(); ++j) pos.push_back((mask >> j) & 1 ? -reps[j] : reps[j]);
    const Weight w = mu_g + 2 * d.rho_k();
    bool dominant = true;
    for (const auto& g : pos) dominant = dominant && inner(w, g, d.form) > 0;
    if (dominant) found.insert(mu_g - half_sum(pos, d.rank()));
  }
  return {found.begin(), found.end()};
}

}  // namespace

TEST_CASE("fine weights") {
  const auto sp = catalog("sp4r");
  CHECK(same_set(fine_weights(sp, datum("sp4r", h2(1, -1))), {w2(0, 1), w2(-1, 0)}));
  CHECK(same_set(fine_weights(sp, datum("sp4r", h2(1, 1))), {w2(-1, 1), w2(-1, -1)}));
  const auto ds = datum("sp4r", h2(5, 3));
  CHECK(fine_weights(sp, ds) == std::vector<Weight>{ds.mu});
}

TEST_CASE("minimal K-types") {
  const auto sp = catalog("sp4r");
  CHECK(same_set(minimal_k_types(sp, datum("sp4r", h2(1, -1))), {w2(2, -1), w2(1, -2)}));
  CHECK(same_set(minimal_k_types(sp, datum("sp4r", h2(1, 1))), {w2(2, 2), w2(2, 0)}));
  CHECK(minimal_k_types(sp, datum("sp4r", h2(5, 3))) == std::vector<Weight>{w2(4, 3)});
  const auto sl = catalog("sl2r");
  CHECK(minimal_k_types(sl, datum("sl2r", Weight{2})) == std::vector<Weight>{Weight{3}});
  CHECK(same_set(minimal_k_types(sl, datum("sl2r", Weight{0})), {Weight{1}, Weight{-1}}));
}

TEST_CASE("Dirac highest weight") {
  CHECK(dirac_highest_weight(datum("sp4r", h2(1, -1))) == h2(1, -1));
  CHECK(dirac_highest_weight(datum("sl2r", Weight{0})) == Weight{0});
  CHECK(dirac_highest_weight(datum("sl2r", Weight{2})) == Weight{2});
}

TEST_CASE("inverse matching") {
  const auto sp = catalog("sp4r");
  CHECK(match_inverse(sp, w2(2, 0)) == h2(1, 1));
  CHECK(match_inverse(sp, w2(1, -2)) == h2(1, -1));
  CHECK(match_inverse(sp, w2(4, 3)) == h2(5, 3));
  CHECK(code_of([&] { match_inverse(sp, w2(0, 0)); }) == Errc::AmbiguousPositiveSystem);
  CHECK(code_of([&] { match_inverse(sp, w2(0, 1)); }) == Errc::NotDominant);
  CHECK(match_inverse(catalog("sl2r"), Weight{-1}) == Weight{0});
  CHECK(match_inverse(catalog("sl2r"), Weight{3}) == Weight{2});
}

TEST_CASE("R-group order") {
  CHECK(r_group_order(catalog("sp4r"), datum("sp4r", h2(1, -1))) == 2);
  CHECK(r_group_order(catalog("sp4r"), datum("sp4r", h2(5, 3))) == 1);
  CHECK(r_group_order(catalog("sl2r"), datum("sl2r", Weight{0})) == 2);
}

TEST_CASE("summaries") {
  const auto sp = catalog("sp4r");
  const auto s = summarize(sp, h2(1, 1));
  CHECK(s.r_order == 2);
  CHECK(s.levi_rank == 1);
  CHECK(same_set(s.minimal_k_types, {w2(2, 2), w2(2, 0)}));
  CHECK(s.dirac_hw == h2(1, 1));

  const auto t = summarize(catalog("sl2r"), Weight{0});
  CHECK(t.r_order == 2);
  CHECK(same_set(t.minimal_k_types, {Weight{1}, Weight{-1}}));

  CHECK(code_of([&] { summarize(sp, w2(1, 0)); }) == Errc::NotGenuine);
  CHECK(code_of([&] { summarize(sp, h2(-1, 1)); }) == Errc::NotDominant);
}

TEST_CASE("property: round trips, disjointness and counts on every catalog group") {
  for (const auto& name : catalog_names()) {
    const auto d = catalog(name);
    std::map<Weight, Weight> owner;
    for (const auto& e : enumerate_norm(d, 60).entries) {
      INFO(name << " kappa=" << format_weight(e.kappa));
      const auto s = summarize(d, e);
      CHECK(dirac_highest_weight(e) == e.kappa);
      CHECK(s.fine_weights.size() == (std::size_t{1} << e.levi_rank()));
      CHECK(s.minimal_k_types.size() == s.r_order);
      CHECK(s.r_order == (std::uint64_t{1} << e.levi_rank()));
      const std::size_t dim_a = e.levi_rank() + static_cast<std::size_t>(d.rank_g - d.rank_tc);
      CHECK(e.levi_rank() == dim_a - d.rank_g + d.rank_tc);
      for (const auto& f : s.fine_weights) CHECK(is_integral(d, f));
      for (const auto& mg : s.minimal_k_types) {
        CHECK(is_dominant(mg, d.positive_compact, d.form));
        CHECK(match_inverse(d, mg) == e.kappa);
        CHECK(oracle_inverse(d, mg) == std::vector<Weight>{e.kappa});
        CHECK(owner.emplace(mg, e.kappa).second);
      }
    }
  }
}
