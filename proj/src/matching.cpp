#include "tempered/matching.hpp"

#include <algorithm>

#include "tempered/error.hpp"

namespace tempered {

std::vector<Weight> fine_weights(const RealFormDescriptor& d, const EssentialVoganDatum& datum) {
  const auto& p = datum.parabolic;
  std::vector<Weight> out;
  for (const auto& signs : sign_vectors(p.levi_rank())) {
    Weight w = datum.kappa_l + rho_l_plus(p, signs);
    if (!is_integral(d, w)) {
      throw Error(Errc::InternalInvariant,
                  "fine weight " + format_weight(w) + " is not analytically integral");
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Weight> minimal_k_types(const RealFormDescriptor& d,
                                    const EssentialVoganDatum& datum) {
  const Weight two_rho = Rational(2) * rho_s_cap_u(datum.parabolic);
  std::vector<Weight> out;
  for (const auto& fine : fine_weights(d, datum)) {
    Weight mu_g = fine + two_rho;
    if (!is_dominant(mu_g, d.positive_compact, d.form)) {
      throw Error(Errc::DominanceFailure, "minimal K-type " + format_weight(mu_g) + " of kappa = " +
                                              format_weight(datum.kappa) + " is not dominant");
    }
    out.push_back(std::move(mu_g));
  }
  auto sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(Errc::InternalInvariant,
                "repeated minimal K-type for kappa = " + format_weight(datum.kappa));
  }
  return out;
}

Weight dirac_highest_weight(const EssentialVoganDatum& datum) {
  Weight kappa_g = datum.kappa_l + rho_s_cap_u(datum.parabolic);
  if (!(kappa_g == datum.kappa)) {
    throw Error(Errc::InternalInvariant, "Dirac highest weight " + format_weight(kappa_g) +
                                             " differs from kappa = " + format_weight(datum.kappa));
  }
  return kappa_g;
}

Weight match_inverse(const RealFormDescriptor& d, const Weight& mu_g) {
  if (mu_g.rank() != d.rank()) throw Error(Errc::DimensionMismatch, "K-type has the wrong length");
  if (!is_dominant(mu_g, d.positive_compact, d.form))
    throw Error(Errc::NotDominant, format_weight(mu_g) + " is not dominant");

  const Weight rho_k = d.rho_k();
  const Weight w = mu_g + Rational(2) * rho_k;
  std::vector<Weight> positive_s;
  for (const auto& g : d.noncompact_weights.roots) {
    const Rational s = inner(w, g, d.form);
    if (s == 0) {
      throw Error(Errc::AmbiguousPositiveSystem,
                  "mu + 2 rho_K = " + format_weight(w) + " is orthogonal to " + format_weight(g) +
                      "; not a minimal K-type of an essential component");
    }
    if (s > 0) positive_s.push_back(g);
  }
  // rho_G - rho_K = rho(Delta+(s))
  return mu_g - half_sum(positive_s, d.rank());
}

std::uint64_t r_group_order(const RealFormDescriptor& d, const EssentialVoganDatum& datum) {
  const auto n = static_cast<long>(datum.levi_rank());
  const long dim_a = n + (d.rank_g - d.rank_tc);
  const long formula_n = dim_a - d.rank_g + d.rank_tc;
  if (formula_n != n) {
    throw Error(Errc::InternalInvariant, "N = dim a - rank G + rank K fails: " +
                                             std::to_string(formula_n) + " != " + std::to_string(n));
  }
  return std::uint64_t{1} << n;
}

ComponentSummary summarize(const RealFormDescriptor& d, const EssentialVoganDatum& datum) {
  ComponentSummary s;
  s.kappa = datum.kappa;
  s.levi_rank = datum.levi_rank();
  s.r_order = r_group_order(d, datum);
  s.fine_weights = fine_weights(d, datum);
  s.minimal_k_types = minimal_k_types(d, datum);
  s.dirac_hw = dirac_highest_weight(datum);

  if (s.fine_weights.size() != s.r_order || s.minimal_k_types.size() != s.r_order)
    throw Error(Errc::InternalInvariant, "|A(q,delta)| or the minimal K-type count differs from 2^N");
  for (const auto& mu_g : s.minimal_k_types) {
    const Weight back = match_inverse(d, mu_g);
    if (!(back == s.kappa)) {
      throw Error(Errc::InternalInvariant, "minimal K-type " + format_weight(mu_g) + " matches " +
                                               format_weight(back) + ", expected " +
                                               format_weight(s.kappa));
    }
  }
  return s;
}

ComponentSummary summarize(const RealFormDescriptor& d, const Weight& kappa) {
  if (kappa.rank() != d.rank()) throw Error(Errc::DimensionMismatch, "kappa has the wrong length");
  if (!is_dominant(kappa, d.positive_compact, d.form))
    throw Error(Errc::NotDominant, format_weight(kappa) + " is not dominant");
  if (!is_genuine(d, kappa))
    throw Error(Errc::NotGenuine, format_weight(kappa) + " is not the highest weight of a genuine K~-type");
  auto datum = construct_from_kappa(d, kappa);
  if (!datum) {
    throw Error(Errc::InternalBijectionFailure,
                "genuine " + format_weight(kappa) + " produced a non-integral mu");
  }
  return summarize(d, *datum);
}

}  // namespace tempered
