#pragma once

// Truncated Hermite-coefficient matrix of an operator and its algebra.
// Rows are indexed by the output variable (d2, N2), columns by the input
// variable (d1, N1), both in graded ordering.

#include <cstddef>
#include <span>
#include <vector>

#include "hermop/hermite.hpp"
#include "hermop/multiindex.hpp"
#include "hermop/weights.hpp"

namespace hermop {

class KernelMatrix {
public:
    KernelMatrix(GradedIndexMap row_map, GradedIndexMap col_map);
    KernelMatrix(GradedIndexMap row_map, GradedIndexMap col_map, std::vector<double> entries);

    static KernelMatrix identity(const GradedIndexMap& map);
    static KernelMatrix diagonal(const GradedIndexMap& map, std::vector<double> diag);

    const GradedIndexMap& row_map() const { return row_map_; }
    const GradedIndexMap& col_map() const { return col_map_; }
    int d1() const { return col_map_.dimension(); }
    int d2() const { return row_map_.dimension(); }
    int N1() const { return col_map_.max_degree(); }
    int N2() const { return row_map_.max_degree(); }
    std::size_t rows() const { return row_map_.size(); }
    std::size_t cols() const { return col_map_.size(); }

    double operator()(std::size_t r, std::size_t c) const { return entries_[r * cols() + c]; }
    double& at(std::size_t r, std::size_t c) { return entries_[r * cols() + c]; }
    std::span<const double> entries() const { return entries_; }
    std::vector<double>& mutable_entries() { return entries_; }

    bool square_shape() const { return row_map_ == col_map_; }
    // set by the diagonal constructors and preserved where composition keeps it
    bool diagonal_hint() const { return diagonal_hint_; }

    double max_abs() const;
    double frobenius_norm() const;

private:
    GradedIndexMap row_map_;
    GradedIndexMap col_map_;
    std::vector<double> entries_;
    bool diagonal_hint_ = false;
};

// g = K f with f zero-padded up to the input truncation (f.N <= N1 required).
CoeffVector apply(const KernelMatrix& K, const CoeffVector& f);

// Matrix product K2 * K1, the coefficient realization of operator
// composition. The inner maps must agree exactly (no silent padding).
KernelMatrix compose(const KernelMatrix& K2, const KernelMatrix& K1);

KernelMatrix adjoint(const KernelMatrix& K);

// Kernel of T0 (x) g: output variable of dimension d2 + dim(g), entry at
// ((alpha, gamma), beta) equal to K0(alpha, beta) * g_gamma.
KernelMatrix tensor_with(const KernelMatrix& K0, const CoeffVector& g);

struct DiagonalCheck {
    bool ok = false;
    std::size_t row = 0, col = 0;  // offending entry when !ok
};

// True when K acts diagonally on the Hermite basis: the square case with all
// off-diagonal entries below tol * max|entries|, or (d2 > d1) a diagonal
// matrix tensored with a single Hermite function, detected by slice
// inspection.
DiagonalCheck is_hermite_diagonal(const KernelMatrix& K, double tol);

// Symmetric to tol and minimum eigenvalue >= -tol * max |eigenvalue|.
bool is_positive_semidefinite(const KernelMatrix& K, double tol = 1e-10);

struct WeightedSup {
    double norm = 0.0;
    std::size_t row = 0, col = 0;
};

// Exact l1_[w1] -> linf_[w2] operator norm: sup |a_{alpha,beta}|
// w2(alpha)/w1(beta), attained at the reported index pair.
WeightedSup op_norm_l1_to_linf(const KernelMatrix& K, const WeightSpec& w1,
                               const WeightSpec& w2);

// Serial reference implementations; the parallel paths above must match them
// bitwise.
namespace reference {
CoeffVector apply(const KernelMatrix& K, const CoeffVector& f);
KernelMatrix compose(const KernelMatrix& K2, const KernelMatrix& K1);
}  // namespace reference

}  // namespace hermop
