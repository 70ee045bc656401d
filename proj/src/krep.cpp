#include "tempered/krep.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "tempered/error.hpp"
#include "tempered/linalg.hpp"
#include "tempered/vogan.hpp"

namespace tempered {

std::int64_t WeightMultiset::total_mass() const {
  std::int64_t sum = 0;
  for (const auto& [w, m] : entries) sum += m;
  return sum;
}

std::int64_t WeightMultiset::multiplicity(const Weight& w) const {
  const auto it = entries.find(w);
  return it == entries.end() ? 0 : it->second;
}

void WeightMultiset::add(const Weight& w, std::int64_t m) {
  if (m == 0) return;
  auto& slot = entries[w];
  slot += m;
  if (slot == 0) entries.erase(w);
}

std::vector<Weight> compact_simple_roots(const RealFormDescriptor& d) {
  const auto& pos = d.positive_compact;
  std::vector<Weight> simple;
  for (const auto& a : pos) {
    bool decomposable = false;
    for (std::size_t i = 0; i < pos.size() && !decomposable; ++i)
      for (std::size_t j = i; j < pos.size() && !decomposable; ++j)
        decomposable = (pos[i] + pos[j]) == a;
    if (!decomposable) simple.push_back(a);
  }
  return simple;
}

namespace {

void require_highest_weight(const RealFormDescriptor& d, const Weight& hw) {
  if (hw.rank() != d.rank()) throw Error(Errc::DimensionMismatch, "highest weight has the wrong length");
  if (!is_dominant(hw, d.positive_compact, d.form))
    throw Error(Errc::NotDominant, format_weight(hw) + " is not dominant");
  for (const auto& a : d.positive_compact) {
    if (!is_integer(coroot_pairing(hw, a, d.form))) {
      throw Error(Errc::NotDominant, format_weight(hw) + " has a non-integral coroot pairing with " +
                                         format_weight(a));
    }
  }
}

std::int64_t to_int64(const Rational& q, const char* what) {
  if (!is_integer(q) || !q.get_num().fits_slong_p())
    throw Error(Errc::InternalInvariant, std::string(what) + " is not a machine integer: " + format_rational(q));
  return q.get_num().get_si();
}

// Reflects x into the closed dominant chamber by simple reflections. Returns
// nothing if the result lies on a wall; otherwise the dominant weight and
// the sign of the Weyl element used.
std::optional<std::pair<Weight, int>> to_dominant_regular(const RealFormDescriptor& d,
                                                          const std::vector<Weight>& simple,
                                                          Weight x) {
  int sign = 1;
  bool moved = true;
  while (moved) {
    moved = false;
    for (const auto& a : simple) {
      if (inner(x, a, d.form) < 0) {
        x = reflect(x, a, d.form);
        sign = -sign;
        moved = true;
        break;
      }
    }
  }
  for (const auto& a : d.positive_compact)
    if (inner(x, a, d.form) == 0) return std::nullopt;
  return std::make_pair(std::move(x), sign);
}

// Accumulates V(hw) (x) W into `out` via the Brauer-Klimyk rule.
void klimyk(const RealFormDescriptor& d, const Weight& hw, const WeightMultiset& w,
            WeightMultiset& out) {
  const auto simple = compact_simple_roots(d);
  const Weight rho = d.rho_k();
  for (const auto& [nu, m] : w.entries) {
    auto reflected = to_dominant_regular(d, simple, hw + nu + rho);
    if (!reflected) continue;
    out.add(reflected->first - rho, reflected->second * m);
  }
}

}  // namespace

std::int64_t weyl_dim(const RealFormDescriptor& d, const Weight& hw) {
  require_highest_weight(d, hw);
  const Weight rho = d.rho_k();
  Rational dim = 1;
  for (const auto& a : d.positive_compact) dim *= inner(hw + rho, a, d.form) / inner(rho, a, d.form);
  return to_int64(dim, "Weyl dimension");
}

WeightMultiset freudenthal(const RealFormDescriptor& d, const Weight& hw) {
  require_highest_weight(d, hw);
  const auto simple = compact_simple_roots(d);
  const auto& positive = d.positive_compact;
  const std::size_t r = simple.size();
  const Weight rho = d.rho_k();

  // Positive roots in simple-root coordinates.
  std::vector<std::vector<long>> pos_coords;
  for (const auto& a : positive) {
    const auto c = linalg::solve_in_span(simple, a);
    if (!c) throw Error(Errc::InternalInvariant, "positive root outside the simple root span");
    std::vector<long> v;
    for (const auto& x : *c) {
      if (!is_integer(x) || x < 0) throw Error(Errc::InternalInvariant, "non-positive simple root expansion");
      v.push_back(x.get_num().get_si());
    }
    pos_coords.push_back(std::move(v));
  }

  auto weight_of = [&](const std::vector<long>& n) {
    Weight w = hw;
    for (std::size_t i = 0; i < r; ++i) w -= Rational(n[i]) * simple[i];
    return w;
  };

  const Rational top = norm2(hw + rho, d.form);
  std::map<std::vector<long>, std::int64_t> mult;
  mult[std::vector<long>(r, 0)] = 1;
  std::set<std::vector<long>> level{std::vector<long>(r, 0)};

  while (!level.empty()) {
    std::set<std::vector<long>> next;
    for (const auto& n : level) {
      for (std::size_t i = 0; i < r; ++i) {
        auto m = n;
        ++m[i];
        next.insert(std::move(m));
      }
    }
    level.clear();
    for (const auto& n : next) {
      const Weight nu = weight_of(n);
      const Rational denom = top - norm2(nu + rho, d.form);
      if (denom <= 0) continue;
      Rational num = 0;
      for (std::size_t p = 0; p < positive.size(); ++p) {
        auto higher = n;
        for (long k = 1;; ++k) {
          bool valid = true;
          for (std::size_t i = 0; i < r; ++i) {
            higher[i] -= pos_coords[p][i];
            valid = valid && higher[i] >= 0;
          }
          if (!valid) break;
          const auto it = mult.find(higher);
          if (it == mult.end()) continue;
          num += Rational(it->second) * inner(nu + Rational(k) * positive[p], positive[p], d.form);
        }
      }
      const std::int64_t m = to_int64(Rational(2 * num / denom), "Freudenthal multiplicity");
      if (m < 0) throw Error(Errc::InternalInvariant, "negative Freudenthal multiplicity");
      if (m > 0) {
        mult[n] = m;
        level.insert(n);
      }
    }
  }

  WeightMultiset out;
  for (const auto& [n, m] : mult) out.add(weight_of(n), m);
  return out;
}

std::vector<std::pair<Weight, std::int64_t>> tensor_decompose(const RealFormDescriptor& d,
                                                              const Weight& hw1,
                                                              const Weight& hw2) {
  require_highest_weight(d, hw1);
  WeightMultiset acc;
  klimyk(d, hw1, freudenthal(d, hw2), acc);
  std::vector<std::pair<Weight, std::int64_t>> out;
  for (const auto& [w, m] : acc.entries) {
    if (m < 0) throw Error(Errc::InternalInvariant, "negative tensor multiplicity at " + format_weight(w));
    out.emplace_back(w, m);
  }
  return out;
}

WeightMultiset spin_weights(const RealFormDescriptor& d) {
  const auto reps = d.noncompact_weights.pair_representatives();
  if (reps.size() > 24) throw Error(Errc::InvalidArgument, "too many noncompact weights for spin enumeration");
  const Weight rho = half_sum(reps, d.rank());
  const std::int64_t factor = std::int64_t{1} << (d.zero_weight_s_dim / 2);
  WeightMultiset out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << reps.size()); ++mask) {
    Weight w = rho;
    for (std::size_t j = 0; j < reps.size(); ++j)
      if ((mask >> j) & 1u) w -= reps[j];
    out.add(w, factor);
  }
  return out;
}

std::int64_t dirac_multiplicity(const RealFormDescriptor& d, const IrreducibleKType& tau,
                                const IrreducibleKType& v) {
  const Weight& t = tau.highest_weight;
  if (t.rank() != d.rank() || v.highest_weight.rank() != d.rank())
    throw Error(Errc::DimensionMismatch, "K-type has the wrong length");
  if (!is_genuine(d, t)) throw Error(Errc::NotGenuine, format_weight(t) + " is not genuine");
  require_highest_weight(d, t);
  require_highest_weight(d, v.highest_weight);
  if (!is_integral(d, v.highest_weight))
    throw Error(Errc::NotDominant, format_weight(v.highest_weight) + " is not analytically integral");

  WeightMultiset acc;
  klimyk(d, v.highest_weight, spin_weights(d), acc);
  return acc.multiplicity(t);
}

}  // namespace tempered
