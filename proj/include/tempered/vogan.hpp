#pragma once

#include <optional>
#include <vector>

#include "tempered/parabolic.hpp"

namespace tempered {

/// Parameter-level shadow of a set of essential Vogan data (q, H, delta).
/// The character delta is carried by kappa_l together with its values on
/// the elements m_j, one per sl(2,R) summand of the Levi.
struct EssentialVoganDatum {
  ThetaParabolic parabolic;
  Weight kappa;
  Weight mu;       // kappa - rho(s cap u) - rho(Delta+(l)), all signs +1
  Weight kappa_l;  // mu with its components along each beta_j removed
  std::vector<int> m_values;

  std::size_t levi_rank() const { return parabolic.levi_rank(); }
};

/// Returns the datum generated by a dominant kappa, or nothing when mu is
/// not analytically integral.
std::optional<EssentialVoganDatum> construct_from_kappa(const RealFormDescriptor& d,
                                                        const Weight& kappa);

/// delta(m) = (-1)^c with c the coroot pairing of mu against beta.
int m_value(const Weight& mu, const Weight& beta, const BilinearForm& form);

bool is_essential(const EssentialVoganDatum& datum);

/// kappa - rho(Delta+(s)) is analytically integral.
bool is_genuine(const RealFormDescriptor& d, const Weight& kappa);

/// rho(Delta+(s)) for the positive system of lexicographically positive
/// noncompact weights. Any other choice differs by a lattice vector.
Weight genuine_shift(const RealFormDescriptor& d);

/// Re-checks every datum invariant; throws InternalInvariant on failure.
void check_datum(const RealFormDescriptor& d, const EssentialVoganDatum& datum);

struct ClassificationRun {
  std::string descriptor;
  Rational radius_squared;
  std::vector<EssentialVoganDatum> entries;  // sorted by kappa
};

/// Every genuine dominant kappa with <kappa,kappa> <= radius^2.
ClassificationRun enumerate(const RealFormDescriptor& d, const Rational& radius);
ClassificationRun enumerate_norm(const RealFormDescriptor& d, const Rational& radius_squared);

/// Genuine dominant kappa in the lattice coset with <kappa,kappa> <= bound.
std::vector<Weight> genuine_dominant_weights(const RealFormDescriptor& d,
                                             const Rational& radius_squared);

}  // namespace tempered
