#include "hermop/multiindex.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hermop {

MultiIndex::MultiIndex(std::vector<int> components) : c_(std::move(components)) {
    if (c_.empty()) throw std::invalid_argument("MultiIndex: dimension must be >= 1");
    for (int v : c_)
        if (v < 0) throw std::invalid_argument("MultiIndex: components must be non-negative");
}

MultiIndex MultiIndex::zero(int d) {
    if (d < 1) throw std::invalid_argument("MultiIndex: dimension must be >= 1");
    return MultiIndex(std::vector<int>(static_cast<std::size_t>(d), 0));
}

int MultiIndex::degree() const {
    return std::accumulate(c_.begin(), c_.end(), 0);
}

double MultiIndex::log_factorial() const {
    double s = 0.0;
    for (int v : c_) s += std::lgamma(static_cast<double>(v) + 1.0);
    return s;
}

std::string MultiIndex::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ',';
        os << c_[i];
    }
    os << ')';
    return os.str();
}

std::uint64_t binomial_checked(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (2 * k > n) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        // r * (n-k+i) always divisible by i at this point
        std::uint64_t f = static_cast<std::uint64_t>(n - k + i);
        std::uint64_t prod;
        if (__builtin_mul_overflow(r, f, &prod))
            throw std::overflow_error("binomial overflows 64-bit range");
        r = prod / static_cast<std::uint64_t>(i);
    }
    return r;
}

std::uint64_t count_multi_indices(int d, int N) {
    if (d < 1) throw std::invalid_argument("count_multi_indices: d must be >= 1");
    if (N < 0) throw std::invalid_argument("count_multi_indices: N must be >= 0");
    return binomial_checked(N + d, d);
}

namespace {

// number of alpha in N^parts with |alpha| = total
std::uint64_t compositions(int total, int parts) {
    if (parts == 0) return total == 0 ? 1 : 0;
    return binomial_checked(total + parts - 1, parts - 1);
}

}  // namespace

GradedIndexMap::GradedIndexMap(int d, int N) : d_(d), N_(N) {
    if (d < 1) throw std::invalid_argument("GradedIndexMap: d must be >= 1");
    if (N < 0) throw std::invalid_argument("GradedIndexMap: N must be >= 0");
    cum_.resize(static_cast<std::size_t>(N) + 2);
    cum_[0] = 0;
    for (int k = 0; k <= N; ++k)
        cum_[static_cast<std::size_t>(k) + 1] = count_multi_indices(d, k);
}

std::size_t GradedIndexMap::rank(const MultiIndex& a) const {
    if (a.dimension() != d_)
        throw std::invalid_argument("rank: dimension mismatch");
    const int k = a.degree();
    if (k > N_)
        throw std::out_of_range("rank: degree " + std::to_string(k) +
                                " exceeds truncation " + std::to_string(N_));
    // position within the degree-k stratum, ascending lexicographic
    std::uint64_t within = 0;
    int rem = k;
    for (int i = 0; i + 1 < d_; ++i) {
        for (int v = 0; v < a[i]; ++v)
            within += compositions(rem - v, d_ - i - 1);
        rem -= a[i];
    }
    return static_cast<std::size_t>(cum_[static_cast<std::size_t>(k)] + within);
}

int GradedIndexMap::degree_of(std::size_t i) const {
    if (i >= size()) throw std::out_of_range("degree_of: index out of range");
    int k = 0;
    while (cum_[static_cast<std::size_t>(k) + 1] <= i) ++k;
    return k;
}

MultiIndex GradedIndexMap::unrank(std::size_t i) const {
    if (i >= size())
        throw std::out_of_range("unrank: index " + std::to_string(i) +
                                " out of range [0, " + std::to_string(size()) + ")");
    const int k = degree_of(i);
    std::uint64_t idx = i - cum_[static_cast<std::size_t>(k)];
    std::vector<int> c(static_cast<std::size_t>(d_), 0);
    int rem = k;
    for (int pos = 0; pos + 1 < d_; ++pos) {
        int v = 0;
        for (;;) {
            std::uint64_t block = compositions(rem - v, d_ - pos - 1);
            if (idx < block) break;
            idx -= block;
            ++v;
        }
        c[static_cast<std::size_t>(pos)] = v;
        rem -= v;
    }
    c[static_cast<std::size_t>(d_) - 1] = rem;
    return MultiIndex(std::move(c));
}

std::vector<MultiIndex> GradedIndexMap::enumerate() const {
    std::vector<MultiIndex> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(unrank(i));
    return out;
}

std::vector<int> GradedIndexMap::degrees() const {
    std::vector<int> out(size());
    std::size_t i = 0;
    for (int k = 0; k <= N_; ++k)
        for (; i < cum_[static_cast<std::size_t>(k) + 1]; ++i) out[i] = k;
    return out;
}

std::vector<double> GradedIndexMap::log_factorials() const {
    std::vector<double> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = unrank(i).log_factorial();
    return out;
}

std::vector<MultiIndex> enumerate_multi_indices(int d, int N) {
    return GradedIndexMap(d, N).enumerate();
}

}  // namespace hermop
