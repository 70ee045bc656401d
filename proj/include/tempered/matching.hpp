#pragma once

#include <cstdint>
#include <vector>

#include "tempered/vogan.hpp"

namespace tempered {

/// Discrete data of one essential component of the tempered dual.
struct ComponentSummary {
  Weight kappa;
  std::size_t levi_rank = 0;  // N
  std::uint64_t r_order = 1;  // |R_delta| = 2^N
  std::vector<Weight> fine_weights;
  std::vector<Weight> minimal_k_types;
  Weight dirac_hw;
};

/// A(q, delta): kappa_l + 1/2 sum_j s_j beta_j over all sign vectors s.
std::vector<Weight> fine_weights(const RealFormDescriptor& d, const EssentialVoganDatum& datum);

/// mu^G = mu^L + 2 rho(s cap u) for each fine weight mu^L.
std::vector<Weight> minimal_k_types(const RealFormDescriptor& d,
                                    const EssentialVoganDatum& datum);

/// kappa^G = kappa_l + rho(u cap s); equals datum.kappa.
Weight dirac_highest_weight(const EssentialVoganDatum& datum);

/// kappa = mu - rho_G + rho_K, for the unique positive system making
/// mu + 2 rho_K dominant.
Weight match_inverse(const RealFormDescriptor& d, const Weight& mu_g);

std::uint64_t r_group_order(const RealFormDescriptor& d, const EssentialVoganDatum& datum);

ComponentSummary summarize(const RealFormDescriptor& d, const Weight& kappa);
ComponentSummary summarize(const RealFormDescriptor& d, const EssentialVoganDatum& datum);

}  // namespace tempered
