#include "tempered/parabolic.hpp"

#include "tempered/error.hpp"

namespace tempered {

ThetaParabolic build_parabolic(const RealFormDescriptor& d, const Weight& lambda) {
  const auto& form = d.form;
  if (lambda.rank() != d.rank()) throw Error(Errc::DimensionMismatch, "defining weight");
  if (!is_dominant(lambda, d.positive_compact, form, /*strict=*/true)) {
    throw Error(Errc::NotStrictlyDominant,
                format_weight(lambda) + " is not strictly dominant for the compact positive roots");
  }

  ThetaParabolic p;
  p.defining_weight = lambda;
  p.m0 = d.zero_weight_s_dim;

  for (const auto& a : d.compact_roots.roots) {
    const Rational s = inner(lambda, a, form);
    if (s == 0) {
      throw Error(Errc::NondegeneracyViolation,
                  "compact root " + format_weight(a) + " pairs to zero with " + format_weight(lambda));
    }
    if (s > 0) p.u_compact.push_back(a);
  }
  for (const auto& g : d.noncompact_weights.roots) {
    const Rational s = inner(lambda, g, form);
    if (s > 0) p.u_noncompact.push_back(g);
    else if (s == 0 && lex_positive(g)) p.l_pairs.push_back(g);
  }

  // The Levi must be a sum of mutually orthogonal sl(2) summands.
  for (std::size_t i = 0; i < p.l_pairs.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (inner(p.l_pairs[i], p.l_pairs[j], form) != 0) {
        throw Error(Errc::InternalInvariant, "Levi roots " + format_weight(p.l_pairs[j]) + " and " +
                                                 format_weight(p.l_pairs[i]) + " are not orthogonal");
      }
    }
  }
  return p;
}

Weight rho_s_cap_u(const ThetaParabolic& p) { return half_sum(p.u_noncompact, p.rank()); }

Weight rho_l_plus(const ThetaParabolic& p, std::span<const int> signs) {
  if (signs.size() != p.l_pairs.size()) {
    throw Error(Errc::LengthMismatch, "expected " + std::to_string(p.l_pairs.size()) +
                                          " signs, got " + std::to_string(signs.size()));
  }
  Weight sum(p.rank());
  for (std::size_t j = 0; j < signs.size(); ++j) {
    if (signs[j] == 1) sum += p.l_pairs[j];
    else if (signs[j] == -1) sum -= p.l_pairs[j];
    else throw Error(Errc::InvalidArgument, "signs must be +1 or -1");
  }
  sum *= frac(1, 2);
  return sum;
}

Weight rho_u(const ThetaParabolic& p, const BilinearForm& form) {
  std::vector<Weight> u = p.u_compact;
  u.insert(u.end(), p.u_noncompact.begin(), p.u_noncompact.end());
  Weight rho = half_sum(u, p.rank());
  for (const auto& b : p.l_pairs) {
    if (inner(rho, b, form) != 0) {
      throw Error(Errc::InternalInvariant,
                  "rho(u) = " + format_weight(rho) + " is not orthogonal to " + format_weight(b));
    }
  }
  return rho;
}

std::vector<Weight> assembled_noncompact_positives(const ThetaParabolic& p,
                                                   std::span<const int> signs) {
  if (signs.size() != p.l_pairs.size()) throw Error(Errc::LengthMismatch, "sign vector length");
  std::vector<Weight> out = p.u_noncompact;
  for (std::size_t j = 0; j < signs.size(); ++j)
    out.push_back(signs[j] > 0 ? p.l_pairs[j] : -p.l_pairs[j]);
  return out;
}

std::vector<std::vector<int>> sign_vectors(std::size_t n) {
  if (n >= 31) throw Error(Errc::InvalidArgument, "too many sign slots");
  std::vector<std::vector<int>> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> s(n);
    for (std::size_t j = 0; j < n; ++j) s[j] = (mask >> j) & 1u ? -1 : 1;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace tempered
