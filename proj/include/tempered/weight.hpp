#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tempered {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical p/q.
Rational frac(long p, long q = 1);

/// Parses "n", "-n" or "p/q". Decimal points and exponents are rejected.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

/// A weight of the compact Cartan, in coordinates of a fixed basis.
/// Ordering is lexicographic on coordinates.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank) : coords_(rank) {}
  explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<Rational> coords) : coords_(coords) {}

  std::size_t rank() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight& operator*=(const Rational& c);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& c, Weight a) { return a *= c; }
  friend Weight operator-(Weight a) { return a *= Rational(-1); }

  friend bool operator==(const Weight& a, const Weight& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const Weight& a, const Weight& b) { return a.coords_ < b.coords_; }

 private:
  std::vector<Rational> coords_;
};

/// "(1/2,-1/2)"; rank-one weights print as a bare rational.
std::string format_weight(const Weight& w);
/// Comma separated rationals, optionally wrapped in parentheses.
Weight parse_weight(std::string_view text);

/// First nonzero coordinate positive.
bool lex_positive(const Weight& w);

/// Symmetric Gram matrix of the invariant form on the weight space.
class BilinearForm {
 public:
  BilinearForm() = default;
  explicit BilinearForm(std::vector<std::vector<Rational>> gram);

  static BilinearForm identity(std::size_t rank);

  std::size_t rank() const { return gram_.size(); }
  const std::vector<std::vector<Rational>>& gram() const { return gram_; }

  bool symmetric() const;
  /// Sylvester's criterion on the leading principal minors.
  bool positive_definite() const;

  BilinearForm scaled(const Rational& c) const;

  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

 private:
  std::vector<std::vector<Rational>> gram_;
};

/// A list of roots or weights closed under negation, no repeats.
struct SignedRootList {
  std::vector<Weight> roots;

  std::size_t size() const { return roots.size(); }
  bool empty() const { return roots.empty(); }
  bool contains(const Weight& w) const;
  bool closed_under_negation() const;
  bool has_duplicates() const;
  /// One representative per +-pair: the lexicographically positive member.
  std::vector<Weight> pair_representatives() const;

  friend bool operator==(const SignedRootList&, const SignedRootList&) = default;
};

Rational inner(const Weight& a, const Weight& b, const BilinearForm& form);
Rational norm2(const Weight& w, const BilinearForm& form);

/// 2<w,root>/<root,root>.
Rational coroot_pairing(const Weight& w, const Weight& root, const BilinearForm& form);

/// Half the sum of `roots`; `rank` fixes the dimension of the empty sum.
Weight half_sum(std::span<const Weight> roots, std::size_t rank);

bool is_dominant(const Weight& w, std::span<const Weight> positives,
                 const BilinearForm& form, bool strict = false);

Weight reflect(const Weight& w, const Weight& root, const BilinearForm& form);

bool is_integer(const Rational& q);

/// Smallest integer n >= 0 with n*n >= q, for q >= 0.
Integer ceil_sqrt(const Rational& q);

}  // namespace tempered
