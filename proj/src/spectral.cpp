#include "hermop/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "hermop/linalg.hpp"

namespace hermop {

double SingularSpectrum::fit_floor() const {
    if (values.empty()) return 0.0;
    return 1e3 * std::numeric_limits<double>::epsilon() * values.front();
}

SingularSpectrum singular_values(const KernelMatrix& K) {
    Svd svd = jacobi_svd(std::vector<double>(K.entries().begin(), K.entries().end()),
                         K.rows(), K.cols());
    SingularSpectrum out;
    out.values = std::move(svd.values);
    out.rows = K.rows();
    out.cols = K.cols();
    return out;
}

double schatten_norm(const SingularSpectrum& spec, double p) {
    if (std::isnan(p) || p <= 0.0)
        throw std::invalid_argument("schatten_norm: p must be in (0, inf]");
    if (spec.values.empty()) return 0.0;
    if (std::isinf(p)) return spec.values.front();
    double acc = 0.0;
    for (double v : spec.values) acc += (p == 2.0) ? v * v : std::pow(v, p);
    return (p == 2.0) ? std::sqrt(acc) : std::pow(acc, 1.0 / p);
}

DecayFit fit_decay(const SingularSpectrum& spec, const DecayFitRequest& req) {
    if (req.dimension < 1)
        throw std::invalid_argument("fit_decay: dimension must be >= 1");
    if (req.law != DecayLaw::Polynomial && !(req.param > 0.0))
        throw std::invalid_argument("fit_decay: law parameter must be > 0");

    const double floor = spec.fit_floor();
    std::vector<double> xs, ys;
    double exponent = 0.0;
    switch (req.law) {
        case DecayLaw::ExpPower: exponent = 1.0 / (2.0 * req.dimension * req.param); break;
        case DecayLaw::FlatFactorial: exponent = 1.0 / (2.0 * req.param * req.dimension); break;
        case DecayLaw::Polynomial: exponent = 0.0; break;
    }
    for (std::size_t i = 0; i < spec.values.size(); ++i) {
        const double v = spec.values[i];
        if (!(v > floor)) continue;
        const double k = static_cast<double>(i + 1);
        switch (req.law) {
            case DecayLaw::ExpPower:
                xs.push_back(std::pow(k, exponent));
                ys.push_back(std::log(v));
                break;
            case DecayLaw::FlatFactorial:
                xs.push_back(k);
                ys.push_back(std::log(v) + exponent * std::lgamma(k + 1.0));
                break;
            case DecayLaw::Polynomial:
                xs.push_back(std::log(k));
                ys.push_back(std::log(v));
                break;
        }
    }
    if (xs.size() < 8)
        throw std::invalid_argument("fit_decay: fewer than 8 values above the fit floor");

    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) { sx += xs[i]; sy += ys[i]; }
    const double mx = sx / xs.size(), my = sy / ys.size();
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    const double slope = sxx > 0.0 ? sxy / sxx : 0.0;
    const double intercept = my - slope * mx;
    double rss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double e = ys[i] - (intercept + slope * xs[i]);
        rss += e * e;
    }

    DecayFit fit;
    fit.law = req.law;
    fit.exponent = exponent;
    fit.prefactor = std::exp(intercept);
    fit.residual = std::sqrt(rss / xs.size());
    fit.points = xs.size();
    switch (req.law) {
        case DecayLaw::ExpPower: fit.rate = -slope; break;
        case DecayLaw::FlatFactorial: fit.rate = std::exp(slope); break;
        case DecayLaw::Polynomial: fit.rate = -slope; break;
    }
    return fit;
}

CompositionBoundReport verify_composition_bounds(const KernelMatrix& K2,
                                                 const KernelMatrix& K1,
                                                 std::size_t k_max) {
    SingularSpectrum s12 = singular_values(compose(K2, K1));
    SingularSpectrum s2 = singular_values(K2);
    SingularSpectrum s1 = singular_values(K1);
    const double n1 = s1.values.empty() ? 0.0 : s1.values.front();
    const double n2 = s2.values.empty() ? 0.0 : s2.values.front();
    // absolute slack for rank-deficient tails, where the bound is exactly 0
    const double abs_slack = 1e3 * std::numeric_limits<double>::epsilon() * n1 * n2;

    CompositionBoundReport report;
    const std::size_t limit = std::min(k_max, s12.values.size());
    for (std::size_t k = 0; k < limit; ++k) {
        double bound = std::min(k < s2.values.size() ? n1 * s2.values[k] : 0.0,
                                k < s1.values.size() ? n2 * s1.values[k] : 0.0);
        ++report.checked;
        if (s12.values[k] > bound * (1.0 + 1e-10) + abs_slack)
            report.violations.push_back({k + 1, s12.values[k], bound});
    }
    return report;
}

SquareRelationReport check_square_relation(const KernelMatrix& K) {
    SingularSpectrum sk = singular_values(K);
    SingularSpectrum gram_in = singular_values(compose(adjoint(K), K));
    SingularSpectrum gram_out = singular_values(compose(K, adjoint(K)));

    SquareRelationReport report;
    if (sk.values.empty() || sk.values.front() == 0.0) return report;
    const double floor = 1e-3 * sk.values.front();
    for (std::size_t k = 0; k < sk.values.size(); ++k) {
        if (sk.values[k] < floor) break;
        const double sq = sk.values[k] * sk.values[k];
        const double in_v = k < gram_in.values.size() ? gram_in.values[k] : 0.0;
        const double out_v = k < gram_out.values.size() ? gram_out.values[k] : 0.0;
        report.max_rel_err_gram_in =
            std::max(report.max_rel_err_gram_in, std::abs(in_v - sq) / sq);
        report.max_rel_err_gram_out =
            std::max(report.max_rel_err_gram_out, std::abs(out_v - sq) / sq);
        ++report.compared;
    }
    return report;
}

SchmidtExpansion schmidt_expansion(const KernelMatrix& K, double q) {
    if (!(q > 0.0) || !(q < 0.5))
        throw std::invalid_argument("schmidt_expansion: exponent must lie in (0, 1/2)");
    if (K.max_abs() == 0.0)
        throw std::invalid_argument("schmidt_expansion: kernel must be nonzero");

    Svd svd = jacobi_svd(std::vector<double>(K.entries().begin(), K.entries().end()),
                         K.rows(), K.cols());
    const std::size_t kdim = svd.values.size();

    SchmidtExpansion out;
    out.exponent = q;
    for (std::size_t j = 0; j < kdim; ++j) {
        const double sigma = svd.values[j];
        if (!(sigma > 0.0)) break;
        const double scale = std::pow(sigma, q);
        out.lambdas.push_back(std::pow(sigma, 1.0 - 2.0 * q));
        CoeffVector left{K.col_map()};
        for (std::size_t i = 0; i < K.cols(); ++i) left[i] = scale * svd.v[i * kdim + j];
        CoeffVector right{K.row_map()};
        for (std::size_t i = 0; i < K.rows(); ++i) right[i] = scale * svd.u[i * kdim + j];
        out.left.push_back(std::move(left));
        out.right.push_back(std::move(right));
    }
    return out;
}

KernelMatrix schmidt_reconstruct(const SchmidtExpansion& exp,
                                 const GradedIndexMap& row_map,
                                 const GradedIndexMap& col_map) {
    KernelMatrix out(row_map, col_map);
    for (std::size_t j = 0; j < exp.lambdas.size(); ++j) {
        if (exp.right[j].size() != out.rows() || exp.left[j].size() != out.cols())
            throw std::invalid_argument("schmidt_reconstruct: shape mismatch");
        for (std::size_t r = 0; r < out.rows(); ++r) {
            const double rv = exp.lambdas[j] * exp.right[j][r];
            if (rv == 0.0) continue;
            for (std::size_t c = 0; c < out.cols(); ++c)
                out.at(r, c) += rv * exp.left[j][c];
        }
    }
    return out;
}

namespace {

// log of the Frobenius norm of the entrywise-scaled kernel, where the scale
// of entry (r, c) is exp(n * log_eig(r, c)); computed by log-sum-exp
double scaled_log_frobenius(const KernelMatrix& K,
                            const std::vector<double>& log_scale) {
    double peak = -std::numeric_limits<double>::infinity();
    const auto entries = K.entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] == 0.0) continue;
        peak = std::max(peak, std::log(std::abs(entries[i])) + log_scale[i]);
    }
    if (std::isinf(peak)) return peak;  // zero kernel
    double acc = 0.0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] == 0.0) continue;
        const double l = std::log(std::abs(entries[i])) + log_scale[i];
        acc += std::exp(2.0 * (l - peak));
    }
    return peak + 0.5 * std::log(acc);
}

}  // namespace

OscillatorNorms oscillator_norm_sequence(const KernelMatrix& K, int n_max) {
    if (n_max < 0 || n_max > 40)
        throw std::invalid_argument("oscillator_norm_sequence: n_max must be in [0, 40]");
    const auto rdeg = K.row_map().degrees();
    const auto cdeg = K.col_map().degrees();
    const int d1 = K.d1(), d2 = K.d2();

    std::vector<double> log_eig(K.rows() * K.cols());
    for (std::size_t r = 0; r < K.rows(); ++r)
        for (std::size_t c = 0; c < K.cols(); ++c)
            log_eig[r * K.cols() + c] =
                std::log(static_cast<double>((2 * rdeg[r] + d2) + (2 * cdeg[c] + d1)));

    OscillatorNorms out;
    std::vector<double> scale(log_eig.size());
    for (int n = 0; n <= n_max; ++n) {
        for (std::size_t i = 0; i < scale.size(); ++i) scale[i] = n * log_eig[i];
        double l = scaled_log_frobenius(K, scale);
        out.log_norms.push_back(l);
        double v = std::exp(l);
        if (!std::isfinite(v) && !std::isinf(l)) out.overflowed = true;
        out.norms.push_back(std::isinf(l) && l < 0.0 ? 0.0 : v);
    }
    return out;
}

double oscillator_split_log_norm(const KernelMatrix& K, int n1, int n2) {
    if (n1 < 0 || n2 < 0 || n1 > 40 || n2 > 40)
        throw std::invalid_argument("oscillator_split_log_norm: powers must be in [0, 40]");
    const auto rdeg = K.row_map().degrees();
    const auto cdeg = K.col_map().degrees();
    const int d1 = K.d1(), d2 = K.d2();
    std::vector<double> scale(K.rows() * K.cols());
    for (std::size_t r = 0; r < K.rows(); ++r)
        for (std::size_t c = 0; c < K.cols(); ++c)
            scale[r * K.cols() + c] =
                n1 * std::log(static_cast<double>(2 * cdeg[c] + d1)) +
                n2 * std::log(static_cast<double>(2 * rdeg[r] + d2));
    return scaled_log_frobenius(K, scale);
}

double oscillator_split_norm(const KernelMatrix& K, int n1, int n2) {
    double l = oscillator_split_log_norm(K, n1, n2);
    return std::isinf(l) && l < 0.0 ? 0.0 : std::exp(l);
}

double fit_oscillator_rate(std::span<const double> log_norms, double s) {
    std::vector<double> xs, ys;
    for (std::size_t n = 0; n < log_norms.size(); ++n) {
        if (!std::isfinite(log_norms[n])) continue;
        xs.push_back(static_cast<double>(n));
        ys.push_back(log_norms[n] - 2.0 * s * std::lgamma(static_cast<double>(n) + 1.0));
    }
    if (xs.size() < 2)
        throw std::invalid_argument("fit_oscillator_rate: need at least two finite norms");
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) { sx += xs[i]; sy += ys[i]; }
    const double mx = sx / xs.size(), my = sy / ys.size();
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    return std::exp(sxx > 0.0 ? sxy / sxx : 0.0);
}

std::string spectrum_to_csv(const SingularSpectrum& spec) {
    std::string out = "k,sigma\n";
    char buf[64];
    for (std::size_t i = 0; i < spec.values.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g\n", i + 1, spec.values[i]);
        out += buf;
    }
    return out;
}

}  // namespace hermop
