#pragma once

// Singular values, Schatten norms, decay-law fitting, composition
// inequalities, the sigma(T*T) = sigma(T)^2 relation, the Schmidt-type
// expansion, and harmonic-oscillator norm sequences of truncated kernels.

#include <span>
#include <string>
#include <vector>

#include "hermop/hermite.hpp"
#include "hermop/kernel.hpp"

namespace hermop {

struct SingularSpectrum {
    std::vector<double> values;  // non-increasing, length min(rows, cols)
    std::size_t rows = 0, cols = 0;

    // values below this are numerically meaningless and excluded from fits
    double fit_floor() const;
};

// One-sided Jacobi SVD with a fixed sweep order: deterministic and accurate
// for the tiny singular values the decay laws produce.
SingularSpectrum singular_values(const KernelMatrix& K);

// lp quasi-norm of the singular values; p = inf gives sigma_1, p = 2 the
// Frobenius norm of the source kernel.
double schatten_norm(const SingularSpectrum& spec, double p);

enum class DecayLaw { ExpPower, FlatFactorial, Polynomial };

struct DecayFitRequest {
    DecayLaw law = DecayLaw::ExpPower;
    int dimension = 1;   // effective d = min(d1, d2)
    double param = 0.5;  // s (ExpPower) or sigma (FlatFactorial); unused otherwise
};

struct DecayFit {
    DecayLaw law = DecayLaw::ExpPower;
    double rate = 0.0;       // c, R, or N
    double prefactor = 0.0;  // C
    double exponent = 0.0;   // 1/(2ds) or 1/(2 sigma d); 0 for Polynomial
    double residual = 0.0;   // rms log-domain error
    std::size_t points = 0;
};

// Least squares in the log domain over the 1-based value index k:
//   ExpPower:      log sigma_k ~ log C - c k^(1/(2ds))
//   FlatFactorial: log sigma_k ~ log C + k log R - (1/(2 sigma d)) lgamma(k+1)
//   Polynomial:    log sigma_k ~ log C - N log k
// Requires at least 8 values above the fit floor.
DecayFit fit_decay(const SingularSpectrum& spec, const DecayFitRequest& req);

struct CompositionBoundReport {
    struct Violation {
        std::size_t k = 0;
        double value = 0.0, bound = 0.0;
    };
    std::vector<Violation> violations;
    std::size_t checked = 0;
    bool ok() const { return violations.empty(); }
};

// Checks sigma_k(K2 K1) <= min(||K1|| sigma_k(K2), ||K2|| sigma_k(K1)) for
// k <= k_max, with constant 1 and 1e-10 relative slack.
CompositionBoundReport verify_composition_bounds(const KernelMatrix& K2,
                                                 const KernelMatrix& K1,
                                                 std::size_t k_max);

struct SquareRelationReport {
    double max_rel_err_gram_in = 0.0;   // sigma_k(K* K) vs sigma_k(K)^2
    double max_rel_err_gram_out = 0.0;  // sigma_k(K K*) vs sigma_k(K)^2
    std::size_t compared = 0;
    bool ok(double tol = 1e-8) const {
        return max_rel_err_gram_in <= tol && max_rel_err_gram_out <= tol;
    }
};

// Verifies sigma_k(K*K) = sigma_k(KK*) = sigma_k(K)^2 for sigma_k(K) above
// 1e-3 * sigma_1 (explicitly formed Gram matrices lose anything smaller at
// formation).
SquareRelationReport check_square_relation(const KernelMatrix& K);

// K = sum_j lambda_j f_{1,j} (x) f_{2,j} with orthogonal, unnormalized
// families: lambda_j = sigma_j^(1-2q), f_{1,j} = sigma_j^q v_j (input side),
// f_{2,j} = sigma_j^q u_j (output side). q in (0, 1/2); the default 1/3 gives
// lambda_j = sigma_j^(1/3).
struct SchmidtExpansion {
    std::vector<double> lambdas;
    std::vector<CoeffVector> left;   // f_{1,j}, input side
    std::vector<CoeffVector> right;  // f_{2,j}, output side
    double exponent = 1.0 / 3.0;
};

SchmidtExpansion schmidt_expansion(const KernelMatrix& K, double q = 1.0 / 3.0);

KernelMatrix schmidt_reconstruct(const SchmidtExpansion& exp,
                                 const GradedIndexMap& row_map,
                                 const GradedIndexMap& col_map);

struct OscillatorNorms {
    std::vector<double> log_norms;  // log ||H^N K||, N = 0..n_max
    std::vector<double> norms;      // exp of the above; inf entries flagged
    bool overflowed = false;
};

// ||H^N K|| computed coefficient-side: entry (alpha, beta) is scaled by
// ((2|alpha| + d2) + (2|beta| + d1))^N before the Frobenius norm. n_max <= 40.
OscillatorNorms oscillator_norm_sequence(const KernelMatrix& K, int n_max);

// Split powers: scales entries by (2|beta| + d1)^n1 (2|alpha| + d2)^n2.
double oscillator_split_log_norm(const KernelMatrix& K, int n1, int n2);
double oscillator_split_norm(const KernelMatrix& K, int n1, int n2);

// Slope fit of log ||H^N K|| - 2 s lgamma(N+1) against N; returns the
// geometric growth base h.
double fit_oscillator_rate(std::span<const double> log_norms, double s);

// CSV with header "k,sigma", 1-based k, 17-significant-digit values.
std::string spectrum_to_csv(const SingularSpectrum& spec);

}  // namespace hermop
