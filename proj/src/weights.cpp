#include "hermop/weights.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hermop {

WeightSpec WeightSpec::exponential(double s, double r) {
    WeightSpec w{WeightKind::Exponential, s, r, 1.0};
    w.validate();
    return w;
}

WeightSpec WeightSpec::flat(double sigma, double r) {
    WeightSpec w{WeightKind::Flat, 1.0, r, sigma};
    w.validate();
    return w;
}

WeightSpec WeightSpec::polynomial(double r) {
    WeightSpec w{WeightKind::Polynomial, 1.0, r, 1.0};
    w.validate();
    return w;
}

WeightSpec WeightSpec::dual() const {
    WeightSpec w = *this;
    switch (kind) {
        case WeightKind::Exponential:
        case WeightKind::Polynomial:
            w.r = -r;
            break;
        case WeightKind::Flat:
            w.r = 1.0 / r;
            w.sigma = -sigma;
            break;
    }
    return w;
}

void WeightSpec::validate() const {
    switch (kind) {
        case WeightKind::Exponential:
            if (!(s > 0.0) || !std::isfinite(s))
                throw std::invalid_argument("weight: exponential kind needs s > 0");
            if (!std::isfinite(r)) throw std::invalid_argument("weight: rate must be finite");
            break;
        case WeightKind::Flat:
            if (sigma == 0.0 || !std::isfinite(sigma))
                throw std::invalid_argument("weight: flat kind needs sigma != 0");
            if (!(r > 0.0) || !std::isfinite(r))
                throw std::invalid_argument("weight: flat kind needs r > 0");
            break;
        case WeightKind::Polynomial:
            if (!std::isfinite(r)) throw std::invalid_argument("weight: exponent must be finite");
            break;
    }
}

std::string WeightSpec::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case WeightKind::Exponential: os << "exp:s=" << s << ":r=" << r; break;
        case WeightKind::Flat: os << "flat:sigma=" << sigma << ":r=" << r; break;
        case WeightKind::Polynomial: os << "poly:r=" << r; break;
    }
    return os.str();
}

namespace {

std::vector<std::string> split_colon(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == ':') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

double parse_named(const std::string& token, const std::string& key) {
    const std::string prefix = key + "=";
    if (token.rfind(prefix, 0) != 0)
        throw std::invalid_argument("weight spec: expected '" + key + "=', got '" + token + "'");
    std::size_t pos = 0;
    double v = std::stod(token.substr(prefix.size()), &pos);
    if (pos != token.size() - prefix.size())
        throw std::invalid_argument("weight spec: malformed number in '" + token + "'");
    return v;
}

}  // namespace

WeightSpec parse_weight_spec(const std::string& text) {
    auto tokens = split_colon(text);
    if (tokens.empty()) throw std::invalid_argument("weight spec: empty");
    const std::string& kind = tokens[0];
    if (kind == "exp") {
        if (tokens.size() != 3)
            throw std::invalid_argument("weight spec: expected exp:s=..:r=..");
        return WeightSpec::exponential(parse_named(tokens[1], "s"), parse_named(tokens[2], "r"));
    }
    if (kind == "flat") {
        if (tokens.size() != 3)
            throw std::invalid_argument("weight spec: expected flat:sigma=..:r=..");
        double sigma = parse_named(tokens[1], "sigma");
        if (!(sigma > 0.0))
            throw std::invalid_argument("weight spec: flat kind needs sigma > 0");
        return WeightSpec::flat(sigma, parse_named(tokens[2], "r"));
    }
    if (kind == "poly") {
        if (tokens.size() != 2)
            throw std::invalid_argument("weight spec: expected poly:r=..");
        return WeightSpec::polynomial(parse_named(tokens[1], "r"));
    }
    throw std::invalid_argument("weight spec: unknown kind '" + kind + "'");
}

double log_weight_value(const WeightSpec& spec, const MultiIndex& a) {
    const double deg = static_cast<double>(a.degree());
    switch (spec.kind) {
        case WeightKind::Exponential:
            return spec.r * std::pow(deg, 1.0 / (2.0 * spec.s));
        case WeightKind::Flat:
            return deg * std::log(spec.r) + a.log_factorial() / (2.0 * spec.sigma);
        case WeightKind::Polynomial:
            return 0.5 * spec.r * std::log1p(deg * deg);
    }
    return 0.0;  // unreachable
}

double weight_value(const WeightSpec& spec, const MultiIndex& a) {
    double v = std::exp(log_weight_value(spec, a));
    if (!std::isfinite(v))
        throw std::overflow_error("weight overflows at index " + a.to_string());
    return v;
}

double weighted_norm(std::span<const double> values, const GradedIndexMap& map,
                     const std::optional<WeightSpec>& spec, double p) {
    if (values.size() != map.size())
        throw std::invalid_argument("weighted_norm: array length does not match the index map");
    if (std::isnan(p) || p <= 0.0)
        throw std::invalid_argument("weighted_norm: p must be in (0, inf]");
    if (values.empty()) return 0.0;

    const bool sup = std::isinf(p);
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i]))
            throw std::invalid_argument("weighted_norm: non-finite entry at rank " +
                                        std::to_string(i));
        double w = spec ? weight_value(*spec, map.unrank(i)) : 1.0;
        double term = std::abs(values[i] * w);
        if (sup) {
            if (term > acc) acc = term;
        } else if (p == 2.0) {
            acc += term * term;
        } else if (p == 1.0) {
            acc += term;
        } else {
            acc += std::pow(term, p);
        }
    }
    if (sup) return acc;
    if (p == 2.0) return std::sqrt(acc);
    if (p == 1.0) return acc;
    return std::pow(acc, 1.0 / p);
}

}  // namespace hermop
