#include "tempered/vogan.hpp"

#include <algorithm>

#include "tempered/error.hpp"
#include "tempered/linalg.hpp"

namespace tempered {

namespace {

[[noreturn]] void invariant_failure(const std::string& what) {
  throw Error(Errc::InternalInvariant, what);
}

Integer floor_q(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_q(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace

int m_value(const Weight& mu, const Weight& beta, const BilinearForm& form) {
  const Rational c = coroot_pairing(mu, beta, form);
  if (!is_integer(c)) {
    throw Error(Errc::NonIntegralPairing,
                format_weight(mu) + " pairs to " + format_rational(c) + " with the coroot of " +
                    format_weight(beta));
  }
  return mpz_even_p(c.get_num_mpz_t()) ? 1 : -1;
}

std::optional<EssentialVoganDatum> construct_from_kappa(const RealFormDescriptor& d,
                                                        const Weight& kappa) {
  if (kappa.rank() != d.rank()) throw Error(Errc::DimensionMismatch, "kappa has the wrong length");
  if (!is_dominant(kappa, d.positive_compact, d.form)) {
    throw Error(Errc::NotDominant, format_weight(kappa) + " is not dominant");
  }

  ThetaParabolic p = build_parabolic(d, kappa + d.rho_k());
  const std::vector<int> plus(p.levi_rank(), 1);
  Weight mu = kappa - rho_s_cap_u(p) - rho_l_plus(p, plus);
  if (!is_integral(d, mu)) return std::nullopt;

  Weight kappa_l = mu;
  std::vector<int> m_values;
  for (const auto& beta : p.l_pairs) {
    kappa_l -= Rational(inner(mu, beta, d.form) / inner(beta, beta, d.form)) * beta;
    m_values.push_back(m_value(mu, beta, d.form));
  }

  EssentialVoganDatum datum{std::move(p), kappa, std::move(mu), std::move(kappa_l),
                            std::move(m_values)};
  check_datum(d, datum);
  return datum;
}

bool is_essential(const EssentialVoganDatum& datum) {
  return std::all_of(datum.m_values.begin(), datum.m_values.end(), [](int m) { return m == -1; });
}

void check_datum(const RealFormDescriptor& d, const EssentialVoganDatum& datum) {
  const auto& p = datum.parabolic;
  const auto& form = d.form;
  const std::string tag = "kappa = " + format_weight(datum.kappa) + ": ";

  if (!is_integral(d, datum.mu)) invariant_failure(tag + "mu is not analytically integral");
  if (datum.m_values.size() != p.levi_rank()) invariant_failure(tag + "one m-value per Levi pair");
  if (!is_essential(datum)) invariant_failure(tag + "delta(m_j) = +1 for some j; datum not essential");

  for (const auto& beta : p.l_pairs) {
    if (inner(datum.kappa_l, beta, form) != 0)
      invariant_failure(tag + "kappa_L is not orthogonal to " + format_weight(beta));
    if (coroot_pairing(datum.mu, beta, form) != -1)
      invariant_failure(tag + "mu does not restrict to -beta/2 on the so(2) of " + format_weight(beta));
  }

  const Weight lambda = datum.kappa + d.rho_k();
  if (!(lambda == p.defining_weight)) invariant_failure(tag + "parabolic not defined by kappa + rho_K");
  for (const auto* list : {&p.u_compact, &p.u_noncompact}) {
    for (const auto& g : *list) {
      if (inner(lambda, g, form) <= 0)
        invariant_failure(tag + "<lambda^G, " + format_weight(g) + "> is not positive");
    }
  }
  rho_u(p, form);
}

Weight genuine_shift(const RealFormDescriptor& d) {
  return half_sum(d.noncompact_weights.pair_representatives(), d.rank());
}

bool is_genuine(const RealFormDescriptor& d, const Weight& kappa) {
  if (kappa.rank() != d.rank()) throw Error(Errc::DimensionMismatch, "kappa has the wrong length");
  Weight rho_s;
  if (is_dominant(kappa, d.positive_compact, d.form)) {
    const auto p = build_parabolic(d, kappa + d.rho_k());
    const std::vector<int> plus(p.levi_rank(), 1);
    rho_s = half_sum(assembled_noncompact_positives(p, plus), d.rank());
  } else {
    rho_s = genuine_shift(d);
  }
  return is_integral(d, kappa - rho_s);
}

std::vector<Weight> genuine_dominant_weights(const RealFormDescriptor& d,
                                             const Rational& radius_squared) {
  if (radius_squared < 0) throw Error(Errc::InvalidArgument, "negative radius");
  const auto& basis = d.lattice_basis;
  const std::size_t n = d.rank();

  linalg::Matrix gram(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram[i][j] = inner(basis[i], basis[j], d.form);
  const auto gram_inv = linalg::inverse(gram);
  if (!gram_inv) throw Error(Errc::ValidationError, "lattice basis is singular");

  // kappa = shift + sum c_i b_i. Writing x = c + s with shift = sum s_i b_i,
  // x^T M x <= r^2 forces x_i^2 <= r^2 (M^-1)_ii.
  const Weight shift = genuine_shift(d);
  const auto s = linalg::solve_in_span(basis, shift);
  if (!s) throw Error(Errc::InternalInvariant, "genuine shift outside the lattice span");

  std::vector<Integer> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Integer t = ceil_sqrt(Rational(radius_squared * (*gram_inv)[i][i]));
    lo[i] = floor_q(Rational(-(*s)[i])) - t;
    hi[i] = ceil_q(Rational(-(*s)[i])) + t;
  }

  std::vector<Weight> out;
  std::vector<Integer> c = lo;
  while (true) {
    Weight kappa = shift;
    for (std::size_t i = 0; i < n; ++i) kappa += Rational(c[i]) * basis[i];
    if (norm2(kappa, d.form) <= radius_squared && is_dominant(kappa, d.positive_compact, d.form))
      out.push_back(std::move(kappa));

    std::size_t i = 0;
    while (i < n && c[i] == hi[i]) {
      c[i] = lo[i];
      ++i;
    }
    if (i == n) break;
    c[i] += 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

ClassificationRun enumerate_norm(const RealFormDescriptor& d, const Rational& radius_squared) {
  ClassificationRun run;
  run.descriptor = d.name;
  run.radius_squared = radius_squared;
  for (const auto& kappa : genuine_dominant_weights(d, radius_squared)) {
    auto datum = construct_from_kappa(d, kappa);
    if (!datum) {
      throw Error(Errc::InternalBijectionFailure,
                  "genuine dominant " + format_weight(kappa) + " produced a non-integral mu");
    }
    run.entries.push_back(std::move(*datum));
  }
  for (std::size_t i = 1; i < run.entries.size(); ++i) {
    if (!(run.entries[i - 1].kappa < run.entries[i].kappa))
      throw Error(Errc::InternalBijectionFailure, "repeated kappa in classification");
  }
  return run;
}

ClassificationRun enumerate(const RealFormDescriptor& d, const Rational& radius) {
  if (radius < 0) throw Error(Errc::InvalidArgument, "negative radius");
  return enumerate_norm(d, Rational(radius * radius));
}

}  // namespace tempered
