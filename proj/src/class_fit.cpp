#include "hermop/class_fit.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "hermop/kernel.hpp"

namespace hermop {

std::string class_kind_name(ClassKind kind) {
    switch (kind) {
        case ClassKind::Roumieu: return "roumieu";
        case ClassKind::Beurling: return "beurling";
        case ClassKind::FlatRoumieu: return "flat-roumieu";
        case ClassKind::FlatBeurling: return "flat-beurling";
        case ClassKind::Schwartz: return "schwartz";
    }
    return "?";
}

std::string ClassEstimate::describe() const {
    std::ostringstream os;
    os << "class=" << class_kind_name(kind);
    if (kind == ClassKind::Roumieu || kind == ClassKind::Beurling)
        os << " s=" << param;
    else if (kind == ClassKind::FlatRoumieu || kind == ClassKind::FlatBeurling)
        os << " sigma=" << param;
    os << " rate=" << rate << " residual=" << residual
       << " sup_constant=" << sup_constant << " sup_at=(" << sup_row << ","
       << sup_col << ")" << " points=" << points;
    return os.str();
}

std::vector<ClassCandidate> default_class_candidates() {
    std::vector<ClassCandidate> out;
    for (double s : {0.25, 0.5, 1.0, 1.5, 2.0}) out.push_back({ClassKind::Roumieu, s});
    for (double sg : {0.5, 1.0, 2.0}) out.push_back({ClassKind::FlatRoumieu, sg});
    out.push_back({ClassKind::Schwartz, 0.0});
    return out;
}

namespace {

struct FitData {
    std::vector<int> row_deg, col_deg;
    std::vector<double> row_lg, col_lg;
    double max_abs = 0.0;
    double floor = 0.0;
};

FitData prepare(const KernelMatrix& K) {
    FitData f;
    f.row_deg = K.row_map().degrees();
    f.col_deg = K.col_map().degrees();
    f.row_lg = K.row_map().log_factorials();
    f.col_lg = K.col_map().log_factorials();
    f.max_abs = K.max_abs();
    if (f.max_abs == 0.0)
        throw std::invalid_argument("fit_class: effectively zero kernel");
    f.floor = 1e3 * std::numeric_limits<double>::epsilon() * f.max_abs;
    return f;
}

struct LineFit {
    double slope = 0.0, intercept = 0.0, residual = 0.0;
    std::size_t points = 0;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    LineFit fit;
    fit.points = x.size();
    if (x.empty()) return fit;
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) { sx += x[i]; sy += y[i]; }
    const double mx = sx / x.size(), my = sy / y.size();
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx > 0.0) {
        fit.slope = sxy / sxx;
        fit.intercept = my - fit.slope * mx;
    } else {
        fit.slope = 0.0;
        fit.intercept = my;
    }
    double rss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double e = y[i] - (fit.intercept + fit.slope * x[i]);
        rss += e * e;
    }
    fit.residual = std::sqrt(rss / x.size());
    return fit;
}

// log of the decay template with unit prefactor
double log_template(const ClassEstimate& est, const FitData& f, std::size_t r,
                    std::size_t c) {
    switch (est.kind) {
        case ClassKind::Roumieu:
        case ClassKind::Beurling: {
            const double e = 1.0 / (2.0 * est.param);
            return -0.5 * est.rate *
                   (std::pow(static_cast<double>(f.row_deg[r]), e) +
                    std::pow(static_cast<double>(f.col_deg[c]), e));
        }
        case ClassKind::FlatRoumieu:
        case ClassKind::FlatBeurling:
            return (f.row_deg[r] + f.col_deg[c]) * std::log(est.rate) -
                   (f.row_lg[r] + f.col_lg[c]) / (2.0 * est.param);
        case ClassKind::Schwartz: {
            double q = static_cast<double>(f.row_deg[r] + f.col_deg[c]);
            return -0.5 * est.rate * std::log1p(q * q);
        }
    }
    return 0.0;
}

ClassEstimate fit_one(const KernelMatrix& K, const FitData& f,
                      const ClassCandidate& cand) {
    if ((cand.kind == ClassKind::Roumieu || cand.kind == ClassKind::Beurling ||
         cand.kind == ClassKind::FlatRoumieu || cand.kind == ClassKind::FlatBeurling) &&
        !(cand.param > 0.0))
        throw std::invalid_argument("fit_class: candidate parameter must be > 0");

    std::vector<double> xs, ys;
    xs.reserve(K.rows() * K.cols());
    ys.reserve(K.rows() * K.cols());
    for (std::size_t r = 0; r < K.rows(); ++r) {
        for (std::size_t c = 0; c < K.cols(); ++c) {
            const double a = std::abs(K(r, c));
            if (a < f.floor) continue;
            const double y = std::log(a);
            double x = 0.0;
            switch (cand.kind) {
                case ClassKind::Roumieu:
                case ClassKind::Beurling: {
                    const double e = 1.0 / (2.0 * cand.param);
                    x = 0.5 * (std::pow(static_cast<double>(f.row_deg[r]), e) +
                               std::pow(static_cast<double>(f.col_deg[c]), e));
                    ys.push_back(y);
                    break;
                }
                case ClassKind::FlatRoumieu:
                case ClassKind::FlatBeurling:
                    x = static_cast<double>(f.row_deg[r] + f.col_deg[c]);
                    ys.push_back(y + (f.row_lg[r] + f.col_lg[c]) / (2.0 * cand.param));
                    break;
                case ClassKind::Schwartz: {
                    double q = static_cast<double>(f.row_deg[r] + f.col_deg[c]);
                    x = 0.5 * std::log1p(q * q);
                    ys.push_back(y);
                    break;
                }
            }
            xs.push_back(x);
        }
    }
    if (xs.empty()) throw std::invalid_argument("fit_class: effectively zero kernel");

    LineFit lf = least_squares(xs, ys);
    ClassEstimate est;
    est.kind = cand.kind;
    est.param = cand.param;
    est.residual = lf.residual;
    est.points = lf.points;
    switch (cand.kind) {
        case ClassKind::Roumieu:
        case ClassKind::Beurling:
        case ClassKind::Schwartz:
            est.rate = -lf.slope;
            break;
        case ClassKind::FlatRoumieu:
        case ClassKind::FlatBeurling:
            est.rate = std::exp(lf.slope);
            break;
    }

    // realized sup of |a| / template over the whole truncation
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < K.rows(); ++r) {
        for (std::size_t c = 0; c < K.cols(); ++c) {
            const double a = std::abs(K(r, c));
            if (a == 0.0) continue;
            double v = std::log(a) - log_template(est, f, r, c);
            if (v > best) {
                best = v;
                est.sup_row = r;
                est.sup_col = c;
            }
        }
    }
    est.sup_constant = std::exp(best);
    return est;
}

}  // namespace

ClassEstimate fit_single_class(const KernelMatrix& K, const ClassCandidate& candidate) {
    return fit_one(K, prepare(K), candidate);
}

ClassEstimate fit_class(const KernelMatrix& K, const std::vector<ClassCandidate>& candidates) {
    if (candidates.empty()) throw std::invalid_argument("fit_class: no candidates");
    if (K.N1() < 4 || K.N2() < 4)
        throw std::invalid_argument("fit_class: truncation degree must be >= 4 in each variable");
    FitData f = prepare(K);

    std::vector<ClassEstimate> fits;
    fits.reserve(candidates.size());
    for (const auto& cand : candidates) fits.push_back(fit_one(K, f, cand));

    std::size_t best = 0;
    for (std::size_t i = 1; i < fits.size(); ++i)
        if (fits[i].residual < fits[best].residual) best = i;

    // a vanishing exponential rate means no decay was detected; report the
    // Schwartz fit instead when it explains the data equally well
    if ((fits[best].kind == ClassKind::Roumieu || fits[best].kind == ClassKind::Beurling) &&
        std::abs(fits[best].rate) < 1e-6) {
        for (std::size_t i = 0; i < fits.size(); ++i) {
            if (fits[i].kind == ClassKind::Schwartz &&
                fits[i].residual <= fits[best].residual + 1e-9) {
                best = i;
                break;
            }
        }
    }
    return fits[best];
}

}  // namespace hermop
