#include "hermop/generators.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hermop/hermite.hpp"

namespace hermop {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

SplitMix64 SplitMix64::split() { return SplitMix64(next()); }

KernelMatrix gen_semigroup(int d, double t, int N) {
    if (!(t > 0.0)) throw std::invalid_argument("gen_semigroup: t must be > 0");
    GradedIndexMap map(d, N);
    const auto deg = map.degrees();
    std::vector<double> diag(map.size());
    for (std::size_t i = 0; i < map.size(); ++i)
        diag[i] = std::exp(-t * (2.0 * deg[i] + d));
    return KernelMatrix::diagonal(map, std::move(diag));
}

KernelMatrix gen_random_class(const RandomClassSpec& spec, int d1, int d2, int N) {
    if (spec.kind != ClassKind::Schwartz && !(spec.param > 0.0))
        throw std::invalid_argument("gen_random_class: class parameter must be > 0");
    if (spec.kind == ClassKind::FlatBeurling && !(spec.rate > 0.0 && spec.rate < 1.0))
        throw std::invalid_argument("gen_random_class: flat Beurling base must lie in (0, 1)");
    if ((spec.kind == ClassKind::FlatRoumieu) && !(spec.rate > 0.0))
        throw std::invalid_argument("gen_random_class: flat base must be > 0");

    GradedIndexMap rows(d2, N), cols(d1, N);
    const auto rdeg = rows.degrees();
    const auto cdeg = cols.degrees();
    const auto rlg = rows.log_factorials();
    const auto clg = cols.log_factorials();

    SplitMix64 rng(spec.seed);
    KernelMatrix out(rows, cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            double u = 0.5 + 0.5 * rng.next_double();
            double sign = 1.0;
            if (spec.signs && (rng.next() & 1u)) sign = -1.0;
            double lt = 0.0;
            switch (spec.kind) {
                case ClassKind::Roumieu: {
                    const double e = 1.0 / (2.0 * spec.param);
                    lt = -0.5 * spec.rate *
                         (std::pow(static_cast<double>(rdeg[r]), e) +
                          std::pow(static_cast<double>(cdeg[c]), e));
                    break;
                }
                case ClassKind::Beurling: {
                    const double e = 1.0 / (2.0 * spec.param);
                    const double p = std::pow(static_cast<double>(rdeg[r]), e) +
                                     std::pow(static_cast<double>(cdeg[c]), e);
                    lt = -0.125 * spec.rate * p * p;
                    break;
                }
                case ClassKind::FlatRoumieu:
                    lt = (rdeg[r] + cdeg[c]) * std::log(spec.rate) -
                         (rlg[r] + clg[c]) / (2.0 * spec.param);
                    break;
                case ClassKind::FlatBeurling: {
                    const double q = static_cast<double>(rdeg[r] + cdeg[c]);
                    lt = 0.5 * q * q * std::log(spec.rate) -
                         (rlg[r] + clg[c]) / (2.0 * spec.param);
                    break;
                }
                case ClassKind::Schwartz: {
                    const double q = static_cast<double>(rdeg[r] + cdeg[c]);
                    lt = -0.5 * spec.rate * std::log1p(q * q);
                    break;
                }
            }
            out.at(r, c) = sign * u * std::exp(lt);
        }
    }
    return out;
}

KernelMatrix gen_schwartz(int d1, int d2, int N, double order) {
    if (order < 0.0) throw std::invalid_argument("gen_schwartz: order must be >= 0");
    GradedIndexMap rows(d2, N), cols(d1, N);
    const auto rdeg = rows.degrees();
    const auto cdeg = cols.degrees();
    KernelMatrix out(rows, cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const double q = static_cast<double>(rdeg[r] + cdeg[c]);
            out.at(r, c) = std::exp(-0.5 * order * std::log1p(q * q));
        }
    return out;
}

KernelMatrix gen_mehler_closed_form(double t, int N, int M) {
    if (!(t > 0.0)) throw std::invalid_argument("gen_mehler_closed_form: t must be > 0");
    if (N < 0) throw std::invalid_argument("gen_mehler_closed_form: N must be >= 0");
    if (M < 2 * N + 8)
        throw std::invalid_argument("gen_mehler_closed_form: quadrature order too small");

    const double rho = std::exp(-2.0 * t);
    const double q = rho * rho;
    const double prefactor = std::exp(-t) / std::sqrt(M_PI * (1.0 - q));
    auto kernel = [&](double x, double y) {
        return prefactor *
               std::exp(-((1.0 + q) * (x * x + y * y) - 4.0 * rho * x * y) /
                        (2.0 * (1.0 - q)));
    };

    const QuadratureRule rule = gauss_hermite(M);
    const std::size_t m = static_cast<std::size_t>(M);
    std::vector<std::vector<double>> table(static_cast<std::size_t>(N) + 1,
                                           std::vector<double>(m));
    for (std::size_t i = 0; i < m; ++i) {
        auto h = hermite_eval_all(N, rule.nodes[i]);
        for (int n = 0; n <= N; ++n) table[static_cast<std::size_t>(n)][i] = h[static_cast<std::size_t>(n)];
    }
    std::vector<double> fw(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            fw[i * m + j] = rule.total_weights[i] * rule.total_weights[j] *
                            kernel(rule.nodes[i], rule.nodes[j]);

    GradedIndexMap map(1, N);
    KernelMatrix out(map, map);
    #pragma omp parallel for schedule(static)
    for (long long n = 0; n <= static_cast<long long>(N); ++n) {
        for (int k = 0; k <= N; ++k) {
            double acc = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                const double hn = table[static_cast<std::size_t>(n)][i];
                if (hn == 0.0) continue;
                double inner = 0.0;
                for (std::size_t j = 0; j < m; ++j)
                    inner += fw[i * m + j] * table[static_cast<std::size_t>(k)][j];
                acc += hn * inner;
            }
            out.at(static_cast<std::size_t>(n), static_cast<std::size_t>(k)) = acc;
        }
    }
    return out;
}

KernelMatrix gen_rank1_hermite(const GradedIndexMap& row_map, const GradedIndexMap& col_map,
                               const MultiIndex& alpha, const MultiIndex& beta,
                               double lambda) {
    KernelMatrix out(row_map, col_map);
    out.at(row_map.rank(alpha), col_map.rank(beta)) = lambda;
    return out;
}

namespace {

struct SpecTokens {
    std::string kind;
    std::string subkind;  // random class kind, when present
    std::map<std::string, std::string> kv;
};

SpecTokens tokenize_spec(const std::string& text) {
    SpecTokens out;
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ':') { parts.push_back(cur); cur.clear(); }
        else cur.push_back(ch);
    }
    parts.push_back(cur);
    if (parts.empty() || parts[0].empty())
        throw std::invalid_argument("generator spec: empty");
    out.kind = parts[0];
    std::size_t first_kv = 1;
    if (out.kind == "random") {
        if (parts.size() < 2)
            throw std::invalid_argument("generator spec: random needs a class kind");
        out.subkind = parts[1];
        first_kv = 2;
    }
    for (std::size_t i = first_kv; i < parts.size(); ++i) {
        auto eq = parts[i].find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("generator spec: expected key=value, got '" +
                                        parts[i] + "'");
        out.kv[parts[i].substr(0, eq)] = parts[i].substr(eq + 1);
    }
    return out;
}

double spec_number(const SpecTokens& t, const std::string& key) {
    auto it = t.kv.find(key);
    if (it == t.kv.end())
        throw std::invalid_argument("generator spec: missing '" + key + "'");
    std::size_t pos = 0;
    double v = std::stod(it->second, &pos);
    if (pos != it->second.size())
        throw std::invalid_argument("generator spec: malformed number for '" + key + "'");
    return v;
}

std::uint64_t spec_seed(const SpecTokens& t) {
    auto it = t.kv.find("seed");
    if (it == t.kv.end())
        throw std::invalid_argument("generator spec: missing 'seed'");
    return std::stoull(it->second);
}

MultiIndex spec_index(const SpecTokens& t, const std::string& key, int d) {
    auto it = t.kv.find(key);
    if (it == t.kv.end())
        throw std::invalid_argument("generator spec: missing '" + key + "'");
    std::vector<int> comps;
    std::stringstream ss(it->second);
    std::string tok;
    while (std::getline(ss, tok, ',')) comps.push_back(std::stoi(tok));
    if (static_cast<int>(comps.size()) != d)
        throw std::invalid_argument("generator spec: '" + key + "' has wrong dimension");
    return MultiIndex(std::move(comps));
}

}  // namespace

KernelMatrix generate_from_spec(const std::string& spec, int d1, int d2, int N1, int N2) {
    SpecTokens t = tokenize_spec(spec);

    if (t.kind == "semigroup") {
        if (d1 != d2 || N1 != N2)
            throw std::invalid_argument("semigroup generator needs d1 == d2 and N1 == N2");
        return gen_semigroup(d1, spec_number(t, "t"), N1);
    }
    if (t.kind == "random") {
        if (N1 != N2)
            throw std::invalid_argument("random generator needs N1 == N2");
        RandomClassSpec rs;
        if (t.subkind == "exp") rs.kind = ClassKind::Roumieu;
        else if (t.subkind == "exp0") rs.kind = ClassKind::Beurling;
        else if (t.subkind == "flat") rs.kind = ClassKind::FlatRoumieu;
        else if (t.subkind == "flat0") rs.kind = ClassKind::FlatBeurling;
        else if (t.subkind == "schwartz") rs.kind = ClassKind::Schwartz;
        else throw std::invalid_argument("generator spec: unknown random class '" +
                                         t.subkind + "'");
        if (rs.kind == ClassKind::Roumieu || rs.kind == ClassKind::Beurling)
            rs.param = spec_number(t, "s");
        else if (rs.kind != ClassKind::Schwartz)
            rs.param = spec_number(t, "sigma");
        rs.rate = spec_number(t, rs.kind == ClassKind::Schwartz ? "order" : "r");
        rs.seed = spec_seed(t);
        if (t.kv.count("signs")) rs.signs = spec_number(t, "signs") != 0.0;
        return gen_random_class(rs, d1, d2, N1);
    }
    if (t.kind == "schwartz") {
        if (N1 != N2)
            throw std::invalid_argument("schwartz generator needs N1 == N2");
        return gen_schwartz(d1, d2, N1, spec_number(t, "order"));
    }
    if (t.kind == "mehler") {
        if (d1 != 1 || d2 != 1 || N1 != N2)
            throw std::invalid_argument("mehler generator needs d1 == d2 == 1 and N1 == N2");
        return gen_mehler_closed_form(spec_number(t, "t"), N1,
                                      static_cast<int>(spec_number(t, "M")));
    }
    if (t.kind == "rank1") {
        GradedIndexMap rows(d2, N2), cols(d1, N1);
        return gen_rank1_hermite(rows, cols, spec_index(t, "a", d2), spec_index(t, "b", d1),
                                 spec_number(t, "lambda"));
    }
    throw std::invalid_argument("generator spec: unknown kind '" + t.kind + "'");
}

}  // namespace hermop
