#include "hermop/factorization.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hermop/linalg.hpp"

namespace hermop {

namespace {

void require_nonzero(const KernelMatrix& K) {
    if (K.max_abs() == 0.0)
        throw std::invalid_argument("factorization: kernel must be nonzero");
}

double checked_exp(double t, const GradedIndexMap& map, std::size_t rank) {
    double v = std::exp(t);
    if (!std::isfinite(v))
        throw std::overflow_error("factorization: scaling overflows at index " +
                                  map.unrank(rank).to_string());
    return v;
}

// Frobenius-relative reconstruction error
double reconstruction_residual(const FactorizationResult& res, const KernelMatrix& K) {
    KernelMatrix prod = compose_factors(res);
    double num = 0.0;
    for (std::size_t i = 0; i < prod.entries().size(); ++i) {
        double d = prod.entries()[i] - K.entries()[i];
        num += d * d;
    }
    double den = K.frobenius_norm();
    return den > 0.0 ? std::sqrt(num) / den : std::sqrt(num);
}

std::optional<ClassEstimate> try_fit(const KernelMatrix& K) {
    if (K.N1() < 4 || K.N2() < 4 || K.max_abs() == 0.0) return std::nullopt;
    return fit_class(K);
}

void finalize(FactorizationResult& res, const KernelMatrix& K) {
    res.residual = reconstruction_residual(res, K);
    for (const KernelMatrix& f : res.factors) {
        res.factor_classes.push_back(try_fit(f));
        res.diagonal_flags.push_back(is_hermite_diagonal(f, 1e-12).ok);
    }
}

// Degree-banded partition: stage j assigns every unassigned rank of degree
// <= threshold(j) + j, where threshold(j) is the largest degree (on the
// partitioned side) carrying an entry at least as large as the stage-j
// admission bound. qualifies(j, r, c) decides that bound; side_deg maps the
// partitioned side's rank to its degree.
template <class Qualifies>
PartitionPlan build_partition(std::size_t count, const std::vector<int>& side_deg,
                              const KernelMatrix& K, bool partition_cols,
                              Qualifies qualifies) {
    PartitionPlan plan;
    plan.block_of.assign(count, 0);
    std::size_t assigned = 0;
    for (int j = 1; assigned < count; ++j) {
        int theta = 0;
        for (std::size_t r = 0; r < K.rows(); ++r) {
            for (std::size_t c = 0; c < K.cols(); ++c) {
                if (K(r, c) == 0.0 || !qualifies(j, r, c)) continue;
                int deg = partition_cols ? side_deg[c] : side_deg[r];
                if (deg > theta) theta = deg;
            }
        }
        plan.thresholds.push_back(theta);
        std::vector<std::size_t> block;
        const int cap = theta + j;
        for (std::size_t i = 0; i < count; ++i) {
            if (plan.block_of[i] == 0 && side_deg[i] <= cap) {
                plan.block_of[i] = j;
                block.push_back(i);
                ++assigned;
            }
        }
        plan.blocks.push_back(std::move(block));
    }
    return plan;
}

}  // namespace

KernelMatrix compose_factors(const FactorizationResult& res) {
    if (res.factors.empty())
        throw std::invalid_argument("compose_factors: no factors");
    KernelMatrix acc = res.factors.front();
    for (std::size_t i = 1; i < res.factors.size(); ++i)
        acc = compose(acc, res.factors[i]);
    return acc;
}

FactorizationResult factor_roumieu(const KernelMatrix& K, double s,
                                   std::optional<double> r_opt) {
    require_nonzero(K);
    if (!(s > 0.0)) throw std::invalid_argument("factor_roumieu: s must be > 0");

    double r;
    if (r_opt) {
        r = *r_opt;
    } else {
        ClassEstimate est = fit_single_class(K, {ClassKind::Roumieu, s});
        r = 0.5 * est.rate;
    }
    if (!(r > 0.0)) throw std::invalid_argument("factor_roumieu: rate must be > 0");

    const GradedIndexMap& cmap = K.col_map();
    const auto cdeg = cmap.degrees();
    const double e = 1.0 / (2.0 * s);

    std::vector<double> up(cmap.size()), down(cmap.size());
    for (std::size_t c = 0; c < cmap.size(); ++c) {
        double t = 0.5 * r * std::pow(static_cast<double>(cdeg[c]), e);
        up[c] = checked_exp(t, cmap, c);
        down[c] = std::exp(-t);
    }

    KernelMatrix k2(K.row_map(), cmap);
    for (std::size_t row = 0; row < K.rows(); ++row)
        for (std::size_t c = 0; c < cmap.size(); ++c) {
            double v = K(row, c) * up[c];
            if (!std::isfinite(v))
                throw std::overflow_error("factor_roumieu: scaled entry overflows at index " +
                                          cmap.unrank(c).to_string());
            k2.at(row, c) = v;
        }

    FactorizationResult res;
    res.rate = r;
    res.factors.push_back(std::move(k2));
    res.factors.push_back(KernelMatrix::diagonal(cmap, std::move(down)));
    finalize(res, K);
    return res;
}

FactorizationResult factor_beurling(const KernelMatrix& K, double s) {
    require_nonzero(K);
    if (!(s > 0.0)) throw std::invalid_argument("factor_beurling: s must be > 0");

    const GradedIndexMap& cmap = K.col_map();
    const auto cdeg = cmap.degrees();
    const auto rdeg = K.row_map().degrees();
    const double e = 1.0 / (2.0 * s);

    std::vector<double> pr(K.rows()), pc(K.cols());
    for (std::size_t r = 0; r < K.rows(); ++r) pr[r] = std::pow(static_cast<double>(rdeg[r]), e);
    for (std::size_t c = 0; c < K.cols(); ++c) pc[c] = std::pow(static_cast<double>(cdeg[c]), e);

    // stage-j admission bound: |a| >= exp(-2(j+1)(p_alpha + p_beta))
    PartitionPlan plan = build_partition(
        K.cols(), cdeg, K, /*partition_cols=*/true,
        [&](int j, std::size_t r, std::size_t c) {
            return std::log(std::abs(K(r, c))) >= -2.0 * (j + 1) * (pr[r] + pc[c]);
        });

    std::vector<double> up(K.cols()), down(K.cols());
    for (std::size_t c = 0; c < K.cols(); ++c) {
        double t = plan.block_of[c] * pc[c];
        up[c] = checked_exp(t, cmap, c);
        down[c] = std::exp(-t);
    }

    KernelMatrix k2(K.row_map(), cmap);
    for (std::size_t r = 0; r < K.rows(); ++r)
        for (std::size_t c = 0; c < K.cols(); ++c) {
            double v = K(r, c) * up[c];
            if (!std::isfinite(v))
                throw std::overflow_error("factor_beurling: scaled entry overflows at index " +
                                          cmap.unrank(c).to_string());
            k2.at(r, c) = v;
        }

    FactorizationResult res;
    res.rate = static_cast<double>(plan.blocks.size());
    res.factors.push_back(std::move(k2));
    res.factors.push_back(KernelMatrix::diagonal(cmap, std::move(down)));
    res.partitions.push_back(std::move(plan));
    finalize(res, K);
    return res;
}

FactorizationResult factor_flat_roumieu(const KernelMatrix& K, double sigma,
                                        std::optional<double> R_opt) {
    require_nonzero(K);
    if (!(sigma > 0.0)) throw std::invalid_argument("factor_flat_roumieu: sigma must be > 0");

    double R;
    if (R_opt) {
        R = *R_opt;
    } else {
        ClassEstimate est = fit_single_class(K, {ClassKind::FlatRoumieu, sigma});
        R = std::max(1.5 * est.rate, 1.5);
    }
    if (!(R > 1.0)) throw std::invalid_argument("factor_flat_roumieu: R must be > 1");

    const GradedIndexMap& cmap = K.col_map();
    const GradedIndexMap& rmap = K.row_map();
    const auto cdeg = cmap.degrees();
    const auto rdeg = rmap.degrees();
    const auto clg = cmap.log_factorials();
    const auto rlg = rmap.log_factorials();
    const double lnR = std::log(R);
    const double inv2s = 1.0 / (2.0 * sigma);

    std::vector<double> d1(cmap.size()), d2(rmap.size());
    for (std::size_t c = 0; c < cmap.size(); ++c)
        d1[c] = checked_exp(-clg[c] * inv2s + 2.0 * cdeg[c] * lnR, cmap, c);
    for (std::size_t r = 0; r < rmap.size(); ++r)
        d2[r] = checked_exp(-rlg[r] * inv2s + 2.0 * rdeg[r] * lnR, rmap, r);

    KernelMatrix k0(rmap, cmap);
    for (std::size_t r = 0; r < rmap.size(); ++r)
        for (std::size_t c = 0; c < cmap.size(); ++c) {
            const double a = K(r, c);
            if (a == 0.0) continue;
            double lv = std::log(std::abs(a)) + (rlg[r] + clg[c]) * inv2s -
                        2.0 * (rdeg[r] + cdeg[c]) * lnR;
            double v = std::copysign(std::exp(lv), a);
            if (!std::isfinite(v))
                throw std::overflow_error(
                    "factor_flat_roumieu: middle entry overflows at (" +
                    rmap.unrank(r).to_string() + "," + cmap.unrank(c).to_string() + ")");
            k0.at(r, c) = v;
        }

    FactorizationResult res;
    res.rate = R;
    res.factors.push_back(KernelMatrix::diagonal(rmap, std::move(d2)));
    res.factors.push_back(std::move(k0));
    res.factors.push_back(KernelMatrix::diagonal(cmap, std::move(d1)));
    finalize(res, K);
    return res;
}

FactorizationResult factor_flat_beurling(const KernelMatrix& K, double sigma) {
    require_nonzero(K);
    if (!(sigma > 0.0)) throw std::invalid_argument("factor_flat_beurling: sigma must be > 0");

    const GradedIndexMap& cmap = K.col_map();
    const GradedIndexMap& rmap = K.row_map();
    const auto cdeg = cmap.degrees();
    const auto rdeg = rmap.degrees();
    const auto clg = cmap.log_factorials();
    const auto rlg = rmap.log_factorials();
    const double inv2s = 1.0 / (2.0 * sigma);

    // stage-m admission bound: |a| >= (m+1)^(-6(|a|+|b|)) (a! b!)^(-1/(2 sigma))
    auto qualifies = [&](int m, std::size_t r, std::size_t c) {
        return std::log(std::abs(K(r, c))) >=
               -6.0 * (rdeg[r] + cdeg[c]) * std::log(static_cast<double>(m) + 1.0) -
                   (rlg[r] + clg[c]) * inv2s;
    };
    PartitionPlan in_plan = build_partition(K.cols(), cdeg, K, true, qualifies);
    PartitionPlan out_plan = build_partition(K.rows(), rdeg, K, false, qualifies);

    std::vector<double> d1(cmap.size()), d2(rmap.size());
    for (std::size_t c = 0; c < cmap.size(); ++c) {
        double lnm = std::log(static_cast<double>(in_plan.block_of[c]));
        d1[c] = checked_exp(-clg[c] * inv2s - 2.0 * cdeg[c] * lnm, cmap, c);
    }
    for (std::size_t r = 0; r < rmap.size(); ++r) {
        double lnm = std::log(static_cast<double>(out_plan.block_of[r]));
        d2[r] = checked_exp(-rlg[r] * inv2s - 2.0 * rdeg[r] * lnm, rmap, r);
    }

    KernelMatrix k0(rmap, cmap);
    for (std::size_t r = 0; r < rmap.size(); ++r) {
        const double lnm2 = std::log(static_cast<double>(out_plan.block_of[r]));
        for (std::size_t c = 0; c < cmap.size(); ++c) {
            const double a = K(r, c);
            if (a == 0.0) continue;
            const double lnm1 = std::log(static_cast<double>(in_plan.block_of[c]));
            double lv = std::log(std::abs(a)) + (rlg[r] + clg[c]) * inv2s +
                        2.0 * rdeg[r] * lnm2 + 2.0 * cdeg[c] * lnm1;
            double v = std::copysign(std::exp(lv), a);
            if (!std::isfinite(v))
                throw std::overflow_error(
                    "factor_flat_beurling: middle entry overflows at (" +
                    rmap.unrank(r).to_string() + "," + cmap.unrank(c).to_string() + ")");
            k0.at(r, c) = v;
        }
    }

    FactorizationResult res;
    res.rate = static_cast<double>(std::max(in_plan.blocks.size(), out_plan.blocks.size()));
    res.factors.push_back(KernelMatrix::diagonal(rmap, std::move(d2)));
    res.factors.push_back(std::move(k0));
    res.factors.push_back(KernelMatrix::diagonal(cmap, std::move(d1)));
    res.partitions.push_back(std::move(in_plan));
    res.partitions.push_back(std::move(out_plan));
    finalize(res, K);
    return res;
}

FactorizationResult factor_diagonal_sqrt(const KernelMatrix& K, double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("factor_diagonal_sqrt: sigma must be > 0");
    if (!K.square_shape())
        throw std::invalid_argument("factor_diagonal_sqrt: kernel must be square");
    if (!is_hermite_diagonal(K, 1e-14).ok)
        throw std::invalid_argument("factor_diagonal_sqrt: kernel must be diagonal");

    const GradedIndexMap& map = K.row_map();
    const auto lg = map.log_factorials();
    const double inv2s = 1.0 / (2.0 * sigma);

    std::vector<double> d1(map.size()), d2(map.size());
    for (std::size_t i = 0; i < map.size(); ++i) {
        const double a = K(i, i);
        if (a < 0.0)
            throw std::invalid_argument("factor_diagonal_sqrt: negative diagonal entry at " +
                                        map.unrank(i).to_string());
        const double sq = std::sqrt(a);
        d1[i] = sq * std::exp(-lg[i] * inv2s);
        d2[i] = sq * checked_exp(lg[i] * inv2s, map, i);
        if (!std::isfinite(d2[i]))
            throw std::overflow_error("factor_diagonal_sqrt: overflow at " +
                                      map.unrank(i).to_string());
    }

    FactorizationResult res;
    res.rate = sigma;
    res.factors.push_back(KernelMatrix::diagonal(map, std::move(d1)));
    res.factors.push_back(KernelMatrix::diagonal(map, std::move(d2)));
    finalize(res, K);
    return res;
}

KernelMatrix fractional_power(const KernelMatrix& K, double exponent, double tol) {
    if (!(exponent > 0.0) || exponent > 1.0)
        throw std::invalid_argument("fractional_power: exponent must be in (0, 1]");
    if (!K.square_shape())
        throw std::invalid_argument("fractional_power: kernel must be square");
    if (!is_positive_semidefinite(K, tol))
        throw std::invalid_argument("fractional_power: kernel is not PSD within tolerance");

    const std::size_t n = K.rows();
    std::vector<double> sym(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) sym[r * n + c] = 0.5 * (K(r, c) + K(c, r));
    SymmetricEigen eig = jacobi_eigen_symmetric(sym, n);

    std::vector<double> powed(n);
    for (std::size_t j = 0; j < n; ++j)
        powed[j] = eig.values[j] > 0.0 ? std::pow(eig.values[j], exponent) : 0.0;

    KernelMatrix out(K.row_map(), K.col_map());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                acc += eig.vectors[r * n + j] * powed[j] * eig.vectors[c * n + j];
            out.at(r, c) = acc;
        }
    return out;
}

}  // namespace hermop
