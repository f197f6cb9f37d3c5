#include "hermop/hermite.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hermop/linalg.hpp"

namespace hermop {

CoeffVector::CoeffVector(GradedIndexMap map)
    : map_(std::move(map)), values_(map_.size(), 0.0) {}

CoeffVector::CoeffVector(GradedIndexMap map, std::vector<double> values)
    : map_(std::move(map)), values_(std::move(values)) {
    if (values_.size() != map_.size())
        throw std::invalid_argument("CoeffVector: value count does not match the index map");
}

CoeffVector CoeffVector::unit(const GradedIndexMap& map, std::size_t rank) {
    CoeffVector c(map);
    if (rank >= c.size()) throw std::out_of_range("CoeffVector::unit: rank out of range");
    c[rank] = 1.0;
    return c;
}

double CoeffVector::norm2() const {
    double s = 0.0;
    for (double v : values_) s += v * v;
    return std::sqrt(s);
}

namespace {
const double kSeed = 0.7511255444649425;  // pi^{-1/4}
}

double hermite_eval(int n, double x) {
    if (n < 0) throw std::invalid_argument("hermite_eval: n must be >= 0");
    double prev = 0.0;
    double cur = kSeed * std::exp(-0.5 * x * x);
    for (int k = 0; k < n; ++k) {
        double next = x * std::sqrt(2.0 / (k + 1)) * cur - std::sqrt(k / (k + 1.0)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<double> hermite_eval_all(int n, double x) {
    if (n < 0) throw std::invalid_argument("hermite_eval_all: n must be >= 0");
    std::vector<double> h(static_cast<std::size_t>(n) + 1);
    h[0] = kSeed * std::exp(-0.5 * x * x);
    for (int k = 0; k < n; ++k)
        h[static_cast<std::size_t>(k) + 1] =
            x * std::sqrt(2.0 / (k + 1)) * h[static_cast<std::size_t>(k)] -
            (k > 0 ? std::sqrt(k / (k + 1.0)) * h[static_cast<std::size_t>(k) - 1] : 0.0);
    return h;
}

QuadratureRule gauss_hermite(int M) {
    if (M < 1 || M > 256)
        throw std::invalid_argument("gauss_hermite: order must be in [1, 256]");

    QuadratureRule rule;
    rule.order = M;
    const std::size_t n = static_cast<std::size_t>(M);

    if (M == 1) {
        rule.nodes = {0.0};
    } else {
        // Golub-Welsch: nodes are eigenvalues of the symmetric tridiagonal
        // matrix with zero diagonal and off-diagonal sqrt(k/2).
        std::vector<double> t(n * n, 0.0);
        for (std::size_t k = 1; k < n; ++k) {
            double b = std::sqrt(static_cast<double>(k) / 2.0);
            t[(k - 1) * n + k] = b;
            t[k * n + (k - 1)] = b;
        }
        SymmetricEigen eig = jacobi_eigen_symmetric(t, n);
        rule.nodes.assign(eig.values.rbegin(), eig.values.rend());  // ascending
    }

    // Newton polish on the Hermite function h_M (same roots, bounded values):
    // h_M'(x) = sqrt(2M) h_{M-1}(x) - x h_M(x).
    for (double& x : rule.nodes) {
        for (int it = 0; it < 3; ++it) {
            std::vector<double> h = hermite_eval_all(M, x);
            double f = h[n];
            double df = std::sqrt(2.0 * M) * h[n - 1] - x * f;
            if (df == 0.0) break;
            x -= f / df;
        }
    }

    // enforce exact symmetry about 0
    for (std::size_t i = 0; i < n / 2; ++i) {
        double mid = 0.5 * (rule.nodes[n - 1 - i] - rule.nodes[i]);
        rule.nodes[i] = -mid;
        rule.nodes[n - 1 - i] = mid;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;

    rule.weights.resize(n);
    rule.total_weights.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> h = hermite_eval_all(M - 1, rule.nodes[i]);
        double s = 0.0;
        for (double hv : h) s += hv * hv;
        // w_i e^{x^2} = 1 / sum_{k<M} h_k(x_i)^2
        rule.total_weights[i] = 1.0 / s;
        rule.weights[i] = rule.total_weights[i] * std::exp(-rule.nodes[i] * rule.nodes[i]);
    }

    for (std::size_t i = 0; i < n; ++i) {
        double res = hermite_eval(M, rule.nodes[i]);
        if (std::abs(res) > 1e-13)
            throw std::runtime_error("gauss_hermite: node residual above tolerance");
    }
    return rule;
}

CoeffVector analyze(const RealFunction& f, int d, int N, int M) {
    if (d < 1 || d > 3)
        throw std::invalid_argument("analyze: supported dimensions are 1..3");
    if (N < 0) throw std::invalid_argument("analyze: N must be >= 0");
    if (M < N + 1)
        throw std::invalid_argument("analyze: quadrature order must be >= N+1");

    const QuadratureRule rule = gauss_hermite(M);
    const std::size_t m = static_cast<std::size_t>(M);

    // one-dimensional Hermite table: table[n][i] = h_n(x_i)
    std::vector<std::vector<double>> table(static_cast<std::size_t>(N) + 1,
                                           std::vector<double>(m));
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<double> h = hermite_eval_all(N, rule.nodes[i]);
        for (int nn = 0; nn <= N; ++nn) table[static_cast<std::size_t>(nn)][i] = h[static_cast<std::size_t>(nn)];
    }

    // sample f on the tensor grid, scaled by the total weights
    std::size_t grid = 1;
    for (int k = 0; k < d; ++k) grid *= m;
    std::vector<double> fw(grid);
    #pragma omp parallel for schedule(static)
    for (long long gi = 0; gi < static_cast<long long>(grid); ++gi) {
        std::size_t rest = static_cast<std::size_t>(gi);
        double x[3];
        double w = 1.0;
        for (int k = d - 1; k >= 0; --k) {
            std::size_t idx = rest % m;
            rest /= m;
            x[k] = rule.nodes[idx];
            w *= rule.total_weights[idx];
        }
        double val = f(std::span<const double>(x, static_cast<std::size_t>(d)));
        if (!std::isfinite(val)) {
            fw[static_cast<std::size_t>(gi)] = std::numeric_limits<double>::quiet_NaN();
        } else {
            fw[static_cast<std::size_t>(gi)] = w * val;
        }
    }
    for (std::size_t gi = 0; gi < grid; ++gi)
        if (std::isnan(fw[gi]))
            throw std::invalid_argument("analyze: non-finite function value at grid node " +
                                        std::to_string(gi));

    GradedIndexMap map(d, N);
    CoeffVector out(map);
    const auto indices = map.enumerate();

    // c_alpha = sum over the grid of fw * prod_k h_{alpha_k}(x_k); the node
    // loop order is fixed, so results do not depend on the thread count
    #pragma omp parallel for schedule(static)
    for (long long r = 0; r < static_cast<long long>(map.size()); ++r) {
        const MultiIndex& a = indices[static_cast<std::size_t>(r)];
        double acc = 0.0;
        for (std::size_t gi = 0; gi < grid; ++gi) {
            std::size_t rest = gi;
            double prod = 1.0;
            for (int k = d - 1; k >= 0; --k) {
                std::size_t idx = rest % m;
                rest /= m;
                prod *= table[static_cast<std::size_t>(a[k])][idx];
            }
            acc += fw[gi] * prod;
        }
        out[static_cast<std::size_t>(r)] = acc;
    }
    return out;
}

double synthesize(const CoeffVector& c, std::span<const double> x) {
    const int d = c.dimension();
    if (static_cast<int>(x.size()) != d)
        throw std::invalid_argument("synthesize: point dimension mismatch");
    std::vector<std::vector<double>> h(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) h[static_cast<std::size_t>(k)] = hermite_eval_all(c.max_degree(), x[static_cast<std::size_t>(k)]);

    const auto indices = c.map().enumerate();
    double acc = 0.0;
    for (std::size_t r = 0; r < c.size(); ++r) {
        double prod = 1.0;
        for (int k = 0; k < d; ++k) prod *= h[static_cast<std::size_t>(k)][static_cast<std::size_t>(indices[r][k])];
        acc += c[r] * prod;
    }
    return acc;
}

CoeffVector apply_harmonic_oscillator(const CoeffVector& c, int power) {
    if (power < 0)
        throw std::invalid_argument("apply_harmonic_oscillator: power must be >= 0");
    CoeffVector out = c;
    const int d = c.dimension();
    const auto degs = c.map().degrees();
    for (std::size_t i = 0; i < c.size(); ++i) {
        double factor = std::pow(static_cast<double>(2 * degs[i] + d), power);
        double v = c[i] * factor;
        if (!std::isfinite(v))
            throw std::overflow_error("apply_harmonic_oscillator: overflow at rank " +
                                      std::to_string(i));
        out[i] = v;
    }
    return out;
}

}  // namespace hermop
