#include "tempered/linalg.hpp"

#include <utility>

#include "tempered/error.hpp"

namespace tempered::linalg {

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      const Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix a = m;
  Matrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw Error(Errc::DimensionMismatch, "inverse of a non-square matrix");
    inv[i][i] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[k]);
    std::swap(inv[pivot], inv[k]);
    const Rational p = a[k][k];
    for (std::size_t j = 0; j < n; ++j) {
      a[k][j] /= p;
      inv[k][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      const Rational f = a[i][k];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[k][j];
        inv[i][j] -= f * inv[k][j];
      }
    }
  }
  return inv;
}

namespace {

// Row-reduces the augmented system [v_1 ... v_k | target] (columns are the
// vectors). Returns the reduced matrix and the pivot columns.
std::pair<Matrix, std::vector<std::size_t>> reduce(const std::vector<Weight>& vectors,
                                                   const Weight* target, std::size_t dim) {
  const std::size_t k = vectors.size();
  const std::size_t cols = k + (target ? 1 : 0);
  Matrix a(dim, std::vector<Rational>(cols));
  for (std::size_t j = 0; j < k; ++j) {
    if (vectors[j].rank() != dim) throw Error(Errc::DimensionMismatch, "linear solve");
    for (std::size_t i = 0; i < dim; ++i) a[i][j] = vectors[j][i];
  }
  if (target) {
    if (target->rank() != dim) throw Error(Errc::DimensionMismatch, "linear solve");
    for (std::size_t i = 0; i < dim; ++i) a[i][k] = (*target)[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < dim; ++col) {
    std::size_t p = row;
    while (p < dim && a[p][col] == 0) ++p;
    if (p == dim) continue;
    std::swap(a[p], a[row]);
    const Rational pv = a[row][col];
    for (auto& x : a[row]) x /= pv;
    for (std::size_t i = 0; i < dim; ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

}  // namespace

std::optional<std::vector<Rational>> solve_in_span(const std::vector<Weight>& vectors,
                                                   const Weight& target) {
  const std::size_t dim = target.rank();
  const std::size_t k = vectors.size();
  auto [a, pivots] = reduce(vectors, &target, dim);
  if (pivots.size() != k) throw Error(Errc::InvalidArgument, "solve_in_span: dependent vectors");
  // Consistency: rows below the pivots must have a zero right-hand side.
  for (std::size_t i = pivots.size(); i < dim; ++i)
    if (a[i][k] != 0) return std::nullopt;
  std::vector<Rational> c(k);
  for (std::size_t r = 0; r < pivots.size(); ++r) c[pivots[r]] = a[r][k];
  return c;
}

std::size_t rank(const std::vector<Weight>& vectors) {
  if (vectors.empty()) return 0;
  return reduce(vectors, nullptr, vectors.front().rank()).second.size();
}

}  // namespace tempered::linalg
