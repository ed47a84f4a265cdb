#pragma once

#include <vector>

#include "hybridlang/errors.hpp"

namespace hybridlang::numlin {

using NumVec = std::vector<double>;
using NumMat = std::vector<std::vector<double>>;  // rectangular, non-empty

double dot(const NumVec& a, const NumVec& b);
NumVec cross(const NumVec& a, const NumVec& b);  // length-3 only
double norm(const NumVec& a);
NumVec add(const NumVec& a, const NumVec& b);
NumVec sub(const NumVec& a, const NumVec& b);
NumVec scale(double s, const NumVec& a);
NumMat add(const NumMat& a, const NumMat& b);
NumMat sub(const NumMat& a, const NumMat& b);
NumMat scale(double s, const NumMat& a);
NumVec matvec(const NumMat& m, const NumVec& v);
NumMat matmul(const NumMat& a, const NumMat& b);

// Gaussian elimination with partial pivoting (pivot = max |column entry|).
// Throws Singular when the selected pivot magnitude < 1e-12 * max|A|.
NumVec gaussian_solve(NumMat a, NumVec b);

}  // namespace hybridlang::numlin
