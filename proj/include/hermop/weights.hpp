#pragma once

// Weight families on N^d and weighted lp norms of coefficient arrays.
//
//   Exponential:  theta(a) = exp(r * |a|^(1/(2s))),      s > 0
//   Flat:         theta(a) = r^|a| * (a!)^(1/(2 sigma)), r > 0
//   Polynomial:   theta(a) = <a>^r,  <a> = (1 + |a|^2)^(1/2)

#include <optional>
#include <span>
#include <string>

#include "hermop/multiindex.hpp"

namespace hermop {

enum class WeightKind { Exponential, Flat, Polynomial };

struct WeightSpec {
    WeightKind kind = WeightKind::Polynomial;
    double s = 1.0;      // Exponential order
    double r = 0.0;      // rate (Exponential), base (Flat) or exponent (Polynomial)
    double sigma = 1.0;  // Flat order

    static WeightSpec exponential(double s, double r);
    static WeightSpec flat(double sigma, double r);
    static WeightSpec polynomial(double r);

    // Reciprocal weight: weight_value(dual(), a) * weight_value(*this, a) = 1.
    // Negates r for Exponential/Polynomial; inverts r and negates the
    // factorial exponent for Flat.
    WeightSpec dual() const;

    void validate() const;
    std::string to_string() const;  // canonical textual form, e.g. "exp:s=1:r=0.5"
};

// Parses the canonical textual form: "exp:s=1:r=0.5", "flat:sigma=1:r=2",
// "poly:r=4". Throws std::invalid_argument on malformed input.
WeightSpec parse_weight_spec(const std::string& text);

double log_weight_value(const WeightSpec& spec, const MultiIndex& a);

// Exact weight value; throws std::overflow_error naming the offending index
// if the value is not finite.
double weight_value(const WeightSpec& spec, const MultiIndex& a);

// lp quasi-norm of {c_a * theta(a)} over the truncation; spec == nullopt means
// the constant weight 1. p in (0, inf]; p = inf gives the supremum. An empty
// array gives 0; non-finite entries are an input error.
double weighted_norm(std::span<const double> values, const GradedIndexMap& map,
                     const std::optional<WeightSpec>& spec, double p);

}  // namespace hermop
