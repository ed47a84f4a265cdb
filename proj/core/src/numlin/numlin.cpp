#include <cmath>
#include <string>
#include <utility>

#include "hybridlang/numlin/numlin.hpp"

namespace hybridlang::numlin {

namespace {

std::string shape(const NumVec& v) { return "vector[" + std::to_string(v.size()) + "]"; }

std::string shape(const NumMat& m) {
  return "matrix[" + std::to_string(m.size()) + "x" +
         std::to_string(m.empty() ? 0 : m[0].size()) + "]";
}

void require_same_length(const NumVec& a, const NumVec& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("dimension mismatch: " + shape(a) + " vs " + shape(b));
}

void require_same_shape(const NumMat& a, const NumMat& b) {
  if (a.size() != b.size() || (!a.empty() && a[0].size() != b[0].size()))
    throw DimensionMismatch("dimension mismatch: " + shape(a) + " vs " + shape(b));
}

}  // namespace

double dot(const NumVec& a, const NumVec& b) {
  require_same_length(a, b);
  double sum = 0.0;
  for (size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

NumVec cross(const NumVec& a, const NumVec& b) {
  if (a.size() != 3 || b.size() != 3)
    throw DimensionMismatch("cross requires length-3 vectors: " + shape(a) + ", " + shape(b));
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double norm(const NumVec& a) { return std::sqrt(dot(a, a)); }

NumVec add(const NumVec& a, const NumVec& b) {
  require_same_length(a, b);
  NumVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

NumVec sub(const NumVec& a, const NumVec& b) {
  require_same_length(a, b);
  NumVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

NumVec scale(double s, const NumVec& a) {
  NumVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

NumMat add(const NumMat& a, const NumMat& b) {
  require_same_shape(a, b);
  NumMat out = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) out[i][j] = a[i][j] + b[i][j];
  return out;
}

NumMat sub(const NumMat& a, const NumMat& b) {
  require_same_shape(a, b);
  NumMat out = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) out[i][j] = a[i][j] - b[i][j];
  return out;
}

NumMat scale(double s, const NumMat& a) {
  NumMat out = a;
  for (auto& row : out)
    for (auto& x : row) x *= s;
  return out;
}

NumVec matvec(const NumMat& m, const NumVec& v) {
  if (m.empty() || m[0].size() != v.size())
    throw DimensionMismatch("dimension mismatch: " + shape(m) + " * " + shape(v));
  NumVec out(m.size(), 0.0);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

NumMat matmul(const NumMat& a, const NumMat& b) {
  if (a.empty() || b.empty() || a[0].size() != b.size())
    throw DimensionMismatch("dimension mismatch: " + shape(a) + " * " + shape(b));
  NumMat out(a.size(), NumVec(b[0].size(), 0.0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k)
      for (size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

NumVec gaussian_solve(NumMat a, NumVec b) {
  const size_t n = a.size();
  if (n == 0 || a[0].size() != n)
    throw DimensionMismatch("gaussian_solve requires a square matrix, got " + shape(a));
  if (b.size() != n)
    throw DimensionMismatch("gaussian_solve: " + shape(a) + " vs " + shape(b));

  double max_abs = 0.0;
  for (const auto& row : a)
    for (double x : row) max_abs = std::max(max_abs, std::fabs(x));

  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    for (size_t row = col + 1; row < n; ++row)
      if (std::fabs(a[row][col]) > std::fabs(a[pivot][col])) pivot = row;
    if (std::fabs(a[pivot][col]) < 1e-12 * max_abs || a[pivot][col] == 0.0)
      throw Singular("singular matrix: pivot " + std::to_string(col) + " is " +
                     std::to_string(a[pivot][col]));
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      std::swap(b[pivot], b[col]);
    }
    for (size_t row = col + 1; row < n; ++row) {
      double factor = a[row][col] / a[col][col];
      if (factor == 0.0) continue;
      a[row][col] = 0.0;
      for (size_t j = col + 1; j < n; ++j) a[row][j] -= factor * a[col][j];
      b[row] -= factor * b[col];
    }
  }

  NumVec x(n, 0.0);
  for (size_t i = n; i-- > 0;) {
    double sum = b[i];
    for (size_t j = i + 1; j < n; ++j) sum -= a[i][j] * x[j];
    x[i] = sum / a[i][i];
  }
  return x;
}

}  // namespace hybridlang::numlin
