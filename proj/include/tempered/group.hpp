#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "tempered/weight.hpp"

namespace tempered {

/// A connected linear real reductive group, described through the weights
/// of its compact Cartan t^c on g = k + s.
struct RealFormDescriptor {
  std::string name;
  int rank_tc = 0;  // dim t^c = rank K
  int rank_g = 0;
  BilinearForm form;
  SignedRootList compact_roots;          // Delta(k, t^c)
  std::vector<Weight> positive_compact;  // the fixed Delta+(k, t^c)
  SignedRootList noncompact_weights;     // nonzero t^c-weights of s
  int zero_weight_s_dim = 0;             // dimension of the t^c-fixed part of s
  std::vector<Weight> lattice_basis;     // rows span the analytically integral lattice

  std::size_t rank() const { return static_cast<std::size_t>(rank_tc); }

  Weight zero() const { return Weight(rank()); }
  Weight rho_k() const;
  /// dim s = number of nonzero noncompact weights plus the zero-weight part.
  int dim_s() const;

  /// Copy with the Gram matrix multiplied by c > 0.
  RealFormDescriptor with_scaled_form(const Rational& c) const;

  friend bool operator==(const RealFormDescriptor&, const RealFormDescriptor&) = default;
};

struct Violation {
  std::string invariant;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

ValidationReport validate(const RealFormDescriptor& d);

/// Membership in the integer span of the lattice basis.
bool is_integral(const RealFormDescriptor& d, const Weight& w);

// Built-in groups: sl2r, sl2c, su21, sp4r.
const std::vector<std::string>& catalog_names();
RealFormDescriptor catalog(std::string_view name);

// Text descriptor format; see README.
RealFormDescriptor parse_descriptor(std::string_view text);
std::string serialize_descriptor(const RealFormDescriptor& d);
RealFormDescriptor load_descriptor(const std::filesystem::path& path);

/// Catalog name, then an existing file path, then `<name>` or
/// `<name>.desc` in each directory of TEMPERED_ATLAS_PATH.
RealFormDescriptor resolve_descriptor(std::string_view name_or_path);

}  // namespace tempered
