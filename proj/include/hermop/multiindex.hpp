#pragma once

// Multi-indices in N^d and the graded ordering used for all matrix storage:
// indices are sorted by degree |alpha| first, then ascending lexicographically
// on the component tuple read left to right.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hermop {

class MultiIndex {
public:
    explicit MultiIndex(std::vector<int> components);
    static MultiIndex zero(int d);

    int dimension() const { return static_cast<int>(c_.size()); }
    int degree() const;
    int operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& components() const { return c_; }

    // sum of log(alpha_i!), evaluated through lgamma
    double log_factorial() const;

    bool operator==(const MultiIndex&) const = default;
    std::string to_string() const;  // "(1,0,2)"

private:
    std::vector<int> c_;
};

// binomial(n, k) with overflow detection; throws std::overflow_error
std::uint64_t binomial_checked(int n, int k);

// Number of alpha in N^d with |alpha| <= N, i.e. binomial(N+d, d).
std::uint64_t count_multi_indices(int d, int N);

// Bijection between {alpha : |alpha| <= N} and [0, binomial(N+d,d)) in graded
// ordering. rank and unrank are mutually inverse.
class GradedIndexMap {
public:
    GradedIndexMap(int d, int N);

    int dimension() const { return d_; }
    int max_degree() const { return N_; }
    std::size_t size() const { return static_cast<std::size_t>(cum_.back()); }

    std::size_t rank(const MultiIndex& a) const;
    MultiIndex unrank(std::size_t i) const;
    int degree_of(std::size_t i) const;

    std::vector<MultiIndex> enumerate() const;
    std::vector<int> degrees() const;
    std::vector<double> log_factorials() const;

    bool operator==(const GradedIndexMap&) const = default;

private:
    int d_;
    int N_;
    std::vector<std::uint64_t> cum_;  // cum_[k] = #{alpha : |alpha| < k}
};

std::vector<MultiIndex> enumerate_multi_indices(int d, int N);

}  // namespace hermop
