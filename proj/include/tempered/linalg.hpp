#pragma once

#include <optional>
#include <vector>

#include "tempered/weight.hpp"

namespace tempered::linalg {

using Matrix = std::vector<std::vector<Rational>>;

Rational determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);

/// Coefficients c with sum_i c[i] * vectors[i] == target, if any. The
/// vectors must be linearly independent.
std::optional<std::vector<Rational>> solve_in_span(const std::vector<Weight>& vectors,
                                                   const Weight& target);

/// Rank of the span of `vectors`.
std::size_t rank(const std::vector<Weight>& vectors);

}  // namespace tempered::linalg
