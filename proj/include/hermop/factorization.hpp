#pragma once

// Constructive factorizations of truncated kernels: two-factor exponential
// (Roumieu and Beurling variants), three-factor flat, the diagonal
// square-root split, and fractional powers of positive semi-definite kernels
// through the spectral calculus.

#include <optional>
#include <vector>

#include "hermop/class_fit.hpp"
#include "hermop/kernel.hpp"

namespace hermop {

// Degree-banded partition of a graded index range. Block j (1-based) holds
// the ranks assigned at stage j; blocks are pairwise disjoint and cover the
// whole truncated range.
struct PartitionPlan {
    std::vector<int> thresholds;                   // stage degree thresholds
    std::vector<std::vector<std::size_t>> blocks;  // blocks[j-1] = ranks in I_j
    std::vector<int> block_of;                     // rank -> 1-based block index
};

struct FactorizationResult {
    // Factors in composition order: the input kernel equals
    // factors[0] ∘ factors[1] ∘ ... (the last entry is applied first).
    std::vector<KernelMatrix> factors;
    double residual = 0.0;  // Frobenius-relative reconstruction error
    std::vector<std::optional<ClassEstimate>> factor_classes;
    std::vector<bool> diagonal_flags;
    std::vector<PartitionPlan> partitions;  // input-side [, output-side]
    double rate = 0.0;                      // r or R actually used
};

KernelMatrix compose_factors(const FactorizationResult& res);

// K = K2 * K1 with K1 = diag(exp(-(r/2)|beta|^(1/(2s)))) positive
// semi-definite Hermite diagonal and K2 the rescaled coefficients
// a * exp((r/2)|beta|^(1/(2s))). With r absent, r is half the fitted
// Roumieu rate.
FactorizationResult factor_roumieu(const KernelMatrix& K, double s,
                                   std::optional<double> r = std::nullopt);

// Beurling variant: a degree-banded partition I_j of the input indices with
// block-dependent scalings exp(±j |beta|^(1/(2s))).
FactorizationResult factor_beurling(const KernelMatrix& K, double s);

// K = K2 * K0 * K1 with diagonal outer factors (a!)^(-1/(2 sigma)) R^(2|a|)
// and middle factor a (a! b!)^(1/(2 sigma)) R^(-2(|a|+|b|)). With R absent,
// R = max(1.5 * fitted flat base, 1.5); R > 1 is required.
FactorizationResult factor_flat_roumieu(const KernelMatrix& K, double sigma,
                                        std::optional<double> R = std::nullopt);

// Flat Beurling variant: separate partitions of the input and output index
// ranges with block-dependent scalings m^(-|a+b|).
FactorizationResult factor_flat_beurling(const KernelMatrix& K, double sigma);

// Diagonal square-root split of a diagonal kernel with non-negative
// diagonal: K1 = diag(sqrt(a) (a!)^(-1/(2 sigma))),
// K2 = diag(sqrt(a) (a!)^(1/(2 sigma))); the two composition orders agree.
FactorizationResult factor_diagonal_sqrt(const KernelMatrix& K, double sigma);

// Spectral power of a positive semi-definite kernel: K = Q L Q^T with
// negative eigenvalues clamped to zero, returns Q L^exponent Q^T.
// exponent must lie in (0, 1].
KernelMatrix fractional_power(const KernelMatrix& K, double exponent,
                              double tol = 1e-10);

}  // namespace hermop
