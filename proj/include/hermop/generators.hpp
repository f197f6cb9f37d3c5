#pragma once

// Reference kernels with known class membership and known spectra: the
// ground truth behind every acceptance check.

#include <cstdint>
#include <string>

#include "hermop/class_fit.hpp"
#include "hermop/kernel.hpp"

namespace hermop {

// SplitMix64 (Steele, Lea, Flood 2014): fixed-increment 64-bit generator,
// splittable, identical output on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    double next_double();  // [0, 1)
    SplitMix64 split();

private:
    std::uint64_t state_;
};

// Diagonal kernel of e^{-tH}: entries exp(-t(2|alpha| + d)), exact spectrum.
KernelMatrix gen_semigroup(int d, double t, int N);

// Seeded in-class kernel: a = u * template with u uniform on [1/2, 1]
// (optionally sign-randomized), so the realized sup-constant is <= 1 and
// fitted rates are sharp. Templates:
//   Roumieu(s, r):       exp(-(r/2)(p_a + p_b)),  p = deg^(1/(2s))
//   Beurling(s, r):      exp(-(r/8)(p_a + p_b)^2)
//   FlatRoumieu(sg, b):  b^(|a|+|b|) (a! b!)^(-1/(2 sg))
//   FlatBeurling(sg, b): b^((|a|+|b|)^2/2) (a! b!)^(-1/(2 sg)),  b in (0,1)
//   Schwartz(order):     <(a,b)>^(-order)
struct RandomClassSpec {
    ClassKind kind = ClassKind::Roumieu;
    double param = 0.5;  // s or sigma (ignored for Schwartz)
    double rate = 1.0;   // r, base, or order
    std::uint64_t seed = 0;
    bool signs = false;
};

KernelMatrix gen_random_class(const RandomClassSpec& spec, int d1, int d2, int N);

// a_{alpha,beta} = <(alpha,beta)>^(-order) with <x> = (1 + |x|^2)^(1/2).
KernelMatrix gen_schwartz(int d1, int d2, int N, double order);

// Coefficients of the closed-form heat kernel on R x R,
//   K_t(x, y) = e^{-t} (pi (1 - q))^{-1/2}
//               exp(-((1 + q)(x^2 + y^2) - 4 e^{-2t} x y) / (2 (1 - q))),
// q = e^{-4t}, recovered by 2-d Gauss-Hermite analysis of order M >= 2N + 8.
// Cross-validates the quadrature pipeline against gen_semigroup.
KernelMatrix gen_mehler_closed_form(double t, int N, int M);

// Single entry lambda at (rank(alpha), rank(beta)).
KernelMatrix gen_rank1_hermite(const GradedIndexMap& row_map, const GradedIndexMap& col_map,
                               const MultiIndex& alpha, const MultiIndex& beta,
                               double lambda);

// Textual generator specs: "semigroup:t=0.5", "random:exp:s=1:r=2:seed=42",
// "random:exp0:...", "random:flat:sigma=1:r=0.5:seed=7", "random:flat0:...",
// "schwartz:order=6", "mehler:t=0.5:M=64", "rank1:a=2:b=1:lambda=0.5".
KernelMatrix generate_from_spec(const std::string& spec, int d1, int d2, int N1, int N2);

}  // namespace hermop
