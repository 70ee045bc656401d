#pragma once

#include <span>
#include <vector>

#include "tempered/group.hpp"

namespace tempered {

/// The theta-stable parabolic q = l + u cut out by the sign of the pairing
/// against a strictly compact-dominant weight. The nonzero t^c-weights of
/// l are the noncompact pairs +-beta_j, one sl(2,R) summand each.
struct ThetaParabolic {
  Weight defining_weight;
  std::vector<Weight> u_compact;
  std::vector<Weight> u_noncompact;
  std::vector<Weight> l_pairs;  // lexicographically positive representatives
  int m0 = 0;

  std::size_t rank() const { return defining_weight.rank(); }
  std::size_t levi_rank() const { return l_pairs.size(); }  // N

  friend bool operator==(const ThetaParabolic&, const ThetaParabolic&) = default;
};

ThetaParabolic build_parabolic(const RealFormDescriptor& d, const Weight& lambda);

/// rho(s cap u, t^c)
Weight rho_s_cap_u(const ThetaParabolic& p);
/// 1/2 sum_j signs[j] beta_j
Weight rho_l_plus(const ThetaParabolic& p, std::span<const int> signs);
/// rho(u, t^c); checks that it is orthogonal to every beta_j.
Weight rho_u(const ThetaParabolic& p, const BilinearForm& form);

/// The noncompact positive roots of Delta(u) together with {signs[j] beta_j}.
std::vector<Weight> assembled_noncompact_positives(const ThetaParabolic& p,
                                                   std::span<const int> signs);

/// All 2^n sign vectors as a binary counter, bit j set meaning -1 in slot j.
/// The all +1 vector comes first.
std::vector<std::vector<int>> sign_vectors(std::size_t n);

}  // namespace tempered
