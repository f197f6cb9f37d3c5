#pragma once

// Deterministic dense eigen/SVD kernels. Both solvers use cyclic Jacobi
// rotations with a fixed (p, q) sweep order, so results are reproducible
// run to run; the one-sided variant keeps high relative accuracy for tiny
// singular values.

#include <cstddef>
#include <vector>

namespace hermop {

struct SymmetricEigen {
    std::vector<double> values;   // descending
    std::vector<double> vectors;  // row-major n x n, column j pairs with values[j]
};

// Cyclic Jacobi for a symmetric matrix (row-major n x n). Converges when the
// off-diagonal Frobenius mass drops below 1e-14 times the matrix norm.
SymmetricEigen jacobi_eigen_symmetric(const std::vector<double>& a, std::size_t n);

struct Svd {
    std::vector<double> values;  // descending, length min(m, n)
    std::vector<double> u;       // row-major m x k, column j = left vector j
    std::vector<double> v;       // row-major n x k, column j = right vector j
};

// One-sided Jacobi SVD of a row-major m x n matrix. Columns of u paired with
// zero singular values are left as zero vectors.
Svd jacobi_svd(const std::vector<double>& a, std::size_t m, std::size_t n);

}  // namespace hermop
