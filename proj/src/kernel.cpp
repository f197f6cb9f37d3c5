#include "hermop/kernel.hpp"

#include <cmath>
#include <stdexcept>

#include "hermop/linalg.hpp"

namespace hermop {

KernelMatrix::KernelMatrix(GradedIndexMap row_map, GradedIndexMap col_map)
    : row_map_(std::move(row_map)),
      col_map_(std::move(col_map)),
      entries_(row_map_.size() * col_map_.size(), 0.0) {}

KernelMatrix::KernelMatrix(GradedIndexMap row_map, GradedIndexMap col_map,
                           std::vector<double> entries)
    : row_map_(std::move(row_map)),
      col_map_(std::move(col_map)),
      entries_(std::move(entries)) {
    if (entries_.size() != row_map_.size() * col_map_.size())
        throw std::invalid_argument("KernelMatrix: entry count does not match the maps");
    for (double v : entries_)
        if (!std::isfinite(v))
            throw std::invalid_argument("KernelMatrix: entries must be finite");
}

KernelMatrix KernelMatrix::identity(const GradedIndexMap& map) {
    return diagonal(map, std::vector<double>(map.size(), 1.0));
}

KernelMatrix KernelMatrix::diagonal(const GradedIndexMap& map, std::vector<double> diag) {
    if (diag.size() != map.size())
        throw std::invalid_argument("KernelMatrix::diagonal: diagonal length mismatch");
    KernelMatrix k(map, map);
    for (std::size_t i = 0; i < map.size(); ++i) {
        if (!std::isfinite(diag[i]))
            throw std::invalid_argument("KernelMatrix::diagonal: entries must be finite");
        k.at(i, i) = diag[i];
    }
    k.diagonal_hint_ = true;
    return k;
}

double KernelMatrix::max_abs() const {
    double m = 0.0;
    for (double v : entries_) m = std::max(m, std::abs(v));
    return m;
}

double KernelMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : entries_) s += v * v;
    return std::sqrt(s);
}

namespace {

void check_apply_shapes(const KernelMatrix& K, const CoeffVector& f) {
    if (f.dimension() != K.d1())
        throw std::invalid_argument("apply: input dimension mismatch");
    if (f.max_degree() > K.N1())
        throw std::invalid_argument("apply: input degree exceeds the kernel truncation");
}

void check_compose_shapes(const KernelMatrix& K2, const KernelMatrix& K1) {
    if (!(K2.col_map() == K1.row_map()))
        throw std::invalid_argument(
            "compose: inner truncations disagree (no silent padding)");
}

}  // namespace

CoeffVector apply(const KernelMatrix& K, const CoeffVector& f) {
    check_apply_shapes(K, f);
    const std::size_t nf = f.size();
    CoeffVector g{K.row_map()};
    const std::size_t rows = K.rows();
    #pragma omp parallel for schedule(static)
    for (long long r = 0; r < static_cast<long long>(rows); ++r) {
        double acc = 0.0;
        for (std::size_t c = 0; c < nf; ++c)
            acc += K(static_cast<std::size_t>(r), c) * f[c];
        g[static_cast<std::size_t>(r)] = acc;
    }
    return g;
}

CoeffVector reference::apply(const KernelMatrix& K, const CoeffVector& f) {
    check_apply_shapes(K, f);
    const std::size_t nf = f.size();
    CoeffVector g{K.row_map()};
    for (std::size_t r = 0; r < K.rows(); ++r) {
        double acc = 0.0;
        for (std::size_t c = 0; c < nf; ++c) acc += K(r, c) * f[c];
        g[r] = acc;
    }
    return g;
}

KernelMatrix compose(const KernelMatrix& K2, const KernelMatrix& K1) {
    check_compose_shapes(K2, K1);

    if (K2.diagonal_hint() && K1.diagonal_hint()) {
        std::vector<double> diag(K1.cols());
        for (std::size_t i = 0; i < diag.size(); ++i) diag[i] = K2(i, i) * K1(i, i);
        return KernelMatrix::diagonal(K1.col_map(), std::move(diag));
    }

    KernelMatrix out(K2.row_map(), K1.col_map());
    const std::size_t rows = out.rows();
    const std::size_t cols = out.cols();
    const std::size_t inner = K2.cols();

    if (K2.diagonal_hint()) {  // row scaling
        #pragma omp parallel for schedule(static)
        for (long long r = 0; r < static_cast<long long>(rows); ++r) {
            const double s = K2(static_cast<std::size_t>(r), static_cast<std::size_t>(r));
            for (std::size_t c = 0; c < cols; ++c)
                out.at(static_cast<std::size_t>(r), c) = s * K1(static_cast<std::size_t>(r), c);
        }
        return out;
    }
    if (K1.diagonal_hint()) {  // column scaling
        #pragma omp parallel for schedule(static)
        for (long long r = 0; r < static_cast<long long>(rows); ++r)
            for (std::size_t c = 0; c < cols; ++c)
                out.at(static_cast<std::size_t>(r), c) =
                    K2(static_cast<std::size_t>(r), c) * K1(c, c);
        return out;
    }

    // dense product, per-row accumulation in fixed k-then-j order so the
    // result is identical to the serial reference
    #pragma omp parallel for schedule(static)
    for (long long r = 0; r < static_cast<long long>(rows); ++r) {
        double* acc = &out.mutable_entries()[static_cast<std::size_t>(r) * cols];
        for (std::size_t k = 0; k < inner; ++k) {
            const double a = K2(static_cast<std::size_t>(r), k);
            if (a == 0.0) continue;
            const double* b = &K1.entries()[k * cols];
            for (std::size_t c = 0; c < cols; ++c) acc[c] += a * b[c];
        }
    }
    return out;
}

KernelMatrix reference::compose(const KernelMatrix& K2, const KernelMatrix& K1) {
    check_compose_shapes(K2, K1);
    KernelMatrix out(K2.row_map(), K1.col_map());
    const std::size_t cols = out.cols();
    const std::size_t inner = K2.cols();
    for (std::size_t r = 0; r < out.rows(); ++r) {
        double* acc = &out.mutable_entries()[r * cols];
        for (std::size_t k = 0; k < inner; ++k) {
            const double a = K2(r, k);
            if (a == 0.0) continue;
            const double* b = &K1.entries()[k * cols];
            for (std::size_t c = 0; c < cols; ++c) acc[c] += a * b[c];
        }
    }
    return out;
}

KernelMatrix adjoint(const KernelMatrix& K) {
    KernelMatrix out(K.col_map(), K.row_map());
    for (std::size_t r = 0; r < K.rows(); ++r)
        for (std::size_t c = 0; c < K.cols(); ++c) out.at(c, r) = K(r, c);
    return out;
}

KernelMatrix tensor_with(const KernelMatrix& K0, const CoeffVector& g) {
    bool nonzero = false;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] != 0.0) { nonzero = true; break; }
    if (!nonzero) throw std::invalid_argument("tensor_with: g must be nonzero");

    const int d2 = K0.d2();
    const int dg = g.dimension();
    GradedIndexMap out_rows(d2 + dg, K0.N2() + g.max_degree());
    KernelMatrix out(out_rows, K0.col_map());

    const GradedIndexMap& rmap = K0.row_map();
    const GradedIndexMap& gmap = g.map();
    for (std::size_t r = 0; r < out_rows.size(); ++r) {
        MultiIndex full = out_rows.unrank(r);
        std::vector<int> head(full.components().begin(), full.components().begin() + d2);
        std::vector<int> tail(full.components().begin() + d2, full.components().end());
        MultiIndex alpha(std::move(head));
        MultiIndex gamma(std::move(tail));
        if (alpha.degree() > K0.N2() || gamma.degree() > g.max_degree()) continue;
        const double gv = g[gmap.rank(gamma)];
        if (gv == 0.0) continue;
        const std::size_t r0 = rmap.rank(alpha);
        for (std::size_t c = 0; c < K0.cols(); ++c) out.at(r, c) = K0(r0, c) * gv;
    }
    return out;
}

DiagonalCheck is_hermite_diagonal(const KernelMatrix& K, double tol) {
    if (tol < 0.0) throw std::invalid_argument("is_hermite_diagonal: tol must be >= 0");
    const double floor = tol * K.max_abs();

    if (K.square_shape()) {
        for (std::size_t r = 0; r < K.rows(); ++r)
            for (std::size_t c = 0; c < K.cols(); ++c)
                if (r != c && std::abs(K(r, c)) > floor) return {false, r, c};
        return {true, 0, 0};
    }

    if (K.d2() <= K.d1()) return {false, 0, 0};

    // look for K = diagonal (x) single Hermite function: every entry above
    // the floor must sit at ((alpha, gamma0), alpha) for one common gamma0
    const int d1 = K.d1();
    const int d2 = K.d2();
    const GradedIndexMap& cmap = K.col_map();
    bool gamma_set = false;
    std::vector<int> gamma0;
    for (std::size_t r = 0; r < K.rows(); ++r) {
        MultiIndex full = K.row_map().unrank(r);
        std::vector<int> head(full.components().begin(), full.components().begin() + d1);
        std::vector<int> tail(full.components().begin() + d1, full.components().end());
        (void)d2;
        for (std::size_t c = 0; c < K.cols(); ++c) {
            if (std::abs(K(r, c)) <= floor) continue;
            MultiIndex alpha(head);
            if (alpha.degree() > cmap.max_degree() || cmap.rank(alpha) != c)
                return {false, r, c};
            if (!gamma_set) {
                gamma0 = tail;
                gamma_set = true;
            } else if (tail != gamma0) {
                return {false, r, c};
            }
        }
    }
    return {true, 0, 0};
}

bool is_positive_semidefinite(const KernelMatrix& K, double tol) {
    if (!K.square_shape())
        throw std::invalid_argument("is_positive_semidefinite: kernel must be square");
    const std::size_t n = K.rows();
    const double scale = K.max_abs();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c)
            if (std::abs(K(r, c) - K(c, r)) > tol * scale) return false;

    std::vector<double> sym(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            sym[r * n + c] = 0.5 * (K(r, c) + K(c, r));
    SymmetricEigen eig = jacobi_eigen_symmetric(sym, n);
    double top = 0.0;
    for (double v : eig.values) top = std::max(top, std::abs(v));
    return eig.values.back() >= -tol * top;
}

WeightedSup op_norm_l1_to_linf(const KernelMatrix& K, const WeightSpec& w1,
                               const WeightSpec& w2) {
    const std::size_t rows = K.rows();
    const std::size_t cols = K.cols();
    std::vector<double> inv_w1(cols), w2v(rows);
    {
        const auto cidx = K.col_map().enumerate();
        for (std::size_t c = 0; c < cols; ++c) inv_w1[c] = 1.0 / weight_value(w1, cidx[c]);
        const auto ridx = K.row_map().enumerate();
        for (std::size_t r = 0; r < rows; ++r) w2v[r] = weight_value(w2, ridx[r]);
    }

    std::vector<double> row_best(rows, 0.0);
    std::vector<std::size_t> row_arg(rows, 0);
    #pragma omp parallel for schedule(static)
    for (long long r = 0; r < static_cast<long long>(rows); ++r) {
        double best = 0.0;
        std::size_t arg = 0;
        for (std::size_t c = 0; c < cols; ++c) {
            double v = std::abs(K(static_cast<std::size_t>(r), c)) * inv_w1[c] *
                       w2v[static_cast<std::size_t>(r)];
            if (v > best) { best = v; arg = c; }
        }
        row_best[static_cast<std::size_t>(r)] = best;
        row_arg[static_cast<std::size_t>(r)] = arg;
    }

    WeightedSup out;
    for (std::size_t r = 0; r < rows; ++r) {
        if (row_best[r] > out.norm) {
            out.norm = row_best[r];
            out.row = r;
            out.col = row_arg[r];
        }
    }
    return out;
}

}  // namespace hermop
