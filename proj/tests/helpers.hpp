#pragma once

#include <random>
#include <vector>

#include "tempered/weight.hpp"

namespace testing {

using tempered::frac;
using tempered::Rational;
using tempered::Weight;

inline Weight w2(long a, long b) { return Weight{Rational(a), Rational(b)}; }
inline Weight h2(long a2, long b2) { return Weight{frac(a2, 2), frac(b2, 2)}; }  // (a2/2, b2/2)
inline Weight w1(long a) { return Weight{Rational(a)}; }

inline Rational random_rational(std::mt19937& rng, long span = 20, long max_den = 6) {
  std::uniform_int_distribution<long> num(-span, span), den(1, max_den);
  return frac(num(rng), den(rng));
}

inline Weight random_weight(std::mt19937& rng, std::size_t rank, long span = 20, long max_den = 6) {
  Weight w(rank);
  for (std::size_t i = 0; i < rank; ++i) w[i] = random_rational(rng, span, max_den);
  return w;
}

}  // namespace testing

#include <doctest.h>

#include "tempered/error.hpp"

namespace testing {

template <class F>
tempered::Errc code_of(F&& f) {
  try {
    f();
  } catch (const tempered::Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return tempered::Errc::InternalInvariant;
}

}  // namespace testing
