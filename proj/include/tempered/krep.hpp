#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "tempered/group.hpp"

namespace tempered {

struct WeightMultiset {
  std::map<Weight, std::int64_t> entries;

  std::int64_t total_mass() const;
  std::int64_t multiplicity(const Weight& w) const;
  void add(const Weight& w, std::int64_t m);

  friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;
};

struct IrreducibleKType {
  Weight highest_weight;
};

/// Simple roots of the fixed compact positive system.
std::vector<Weight> compact_simple_roots(const RealFormDescriptor& d);

std::int64_t weyl_dim(const RealFormDescriptor& d, const Weight& hw);

WeightMultiset freudenthal(const RealFormDescriptor& d, const Weight& hw);

/// Brauer-Klimyk: V(hw1) (x) V(hw2) as a list of (highest weight, multiplicity).
std::vector<std::pair<Weight, std::int64_t>> tensor_decompose(const RealFormDescriptor& d,
                                                              const Weight& hw1,
                                                              const Weight& hw2);

/// Weights of the spin module of Cliff(s) restricted to the spin cover of K.
WeightMultiset spin_weights(const RealFormDescriptor& d);

/// Multiplicity of tau in V (x) S.
std::int64_t dirac_multiplicity(const RealFormDescriptor& d, const IrreducibleKType& tau,
                                const IrreducibleKType& v);

}  // namespace tempered
