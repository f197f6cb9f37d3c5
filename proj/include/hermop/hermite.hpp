#pragma once

// L2-orthonormal Hermite functions, Gauss-Hermite quadrature, and conversion
// between point samples and Hermite coefficients.

#include <functional>
#include <span>
#include <vector>

#include "hermop/multiindex.hpp"

namespace hermop {

// Coefficient array over {alpha : |alpha| <= N} in N^d, graded ordering.
class CoeffVector {
public:
    explicit CoeffVector(GradedIndexMap map);
    CoeffVector(GradedIndexMap map, std::vector<double> values);
    static CoeffVector unit(const GradedIndexMap& map, std::size_t rank);

    const GradedIndexMap& map() const { return map_; }
    int dimension() const { return map_.dimension(); }
    int max_degree() const { return map_.max_degree(); }
    std::size_t size() const { return values_.size(); }

    double operator[](std::size_t i) const { return values_[i]; }
    double& operator[](std::size_t i) { return values_[i]; }
    std::span<const double> values() const { return values_; }
    std::vector<double>& mutable_values() { return values_; }

    double norm2() const;

private:
    GradedIndexMap map_;
    std::vector<double> values_;
};

// Orthonormal Hermite function by the stable three-term recurrence
//   h_{n+1}(x) = x sqrt(2/(n+1)) h_n(x) - sqrt(n/(n+1)) h_{n-1}(x),
// seeded with h_0(x) = pi^{-1/4} exp(-x^2/2).
double hermite_eval(int n, double x);

// h_0(x) .. h_n(x) in one recurrence pass.
std::vector<double> hermite_eval_all(int n, double x);

struct QuadratureRule {
    int order = 0;
    std::vector<double> nodes;          // strictly increasing, symmetric about 0
    std::vector<double> weights;        // for the weight exp(-x^2)
    std::vector<double> total_weights;  // weights[i] * exp(nodes[i]^2)
};

// Gauss-Hermite rule of order M (1 <= M <= 256): nodes are the roots of the
// degree-M physicists' Hermite polynomial, located by a tridiagonal
// eigenvalue solve and polished by Newton iteration.
QuadratureRule gauss_hermite(int M);

using RealFunction = std::function<double(std::span<const double>)>;

// Hermite coefficients c_alpha = integral of f * h_alpha over R^d (d <= 3)
// by tensor-product quadrature of order M >= N+1; exact for f in
// span{h_beta : |beta| <= N} up to rounding.
CoeffVector analyze(const RealFunction& f, int d, int N, int M);

inline int default_analysis_order(int N) { return 2 * N + 8; }

double synthesize(const CoeffVector& c, std::span<const double> x);

// Diagonal action of the harmonic oscillator |x|^2 - Delta: multiplies each
// c_alpha by (2|alpha| + d)^power.
CoeffVector apply_harmonic_oscillator(const CoeffVector& c, int power);

}  // namespace hermop
