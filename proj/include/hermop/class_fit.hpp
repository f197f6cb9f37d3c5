#pragma once

// Estimation of which coefficient-decay class a truncated kernel plausibly
// belongs to, by least squares on log|a_{alpha,beta}| against each
// candidate's decay template.
//
// Rate conventions (matched by the generators module):
//   Roumieu(s):      |a| ~ C exp(-(r/2)(p_a + p_b)), p = deg^(1/(2s));
//                    the fitted r is the decay rate along the diagonal.
//   FlatRoumieu(sg): |a| ~ C base^(|a|+|b|) (a! b!)^(-1/(2 sg))
//   Schwartz:        |a| ~ C <(a,b)>^(-order)
//
// Finite data cannot separate Beurling from Roumieu conditions ("for every r"
// vs "for some r"), so fits only ever report the Roumieu-type kinds; Beurling
// labels are reserved for kernels of known provenance.

#include <string>
#include <vector>

namespace hermop {

class KernelMatrix;

enum class ClassKind { Roumieu, Beurling, FlatRoumieu, FlatBeurling, Schwartz };

std::string class_kind_name(ClassKind kind);

struct ClassCandidate {
    ClassKind kind = ClassKind::Schwartz;
    double param = 0.0;  // s (Roumieu/Beurling) or sigma (flat kinds)
};

struct ClassEstimate {
    ClassKind kind = ClassKind::Schwartz;
    double param = 0.0;
    double rate = 0.0;          // fitted r, base, or polynomial order
    double residual = 0.0;      // rms error of the log-domain fit
    double sup_constant = 0.0;  // realized sup |a| / template(alpha, beta)
    std::size_t sup_row = 0, sup_col = 0;
    std::size_t points = 0;

    std::string describe() const;
};

// s-grid {1/4, 1/2, 1, 3/2, 2} for Roumieu and FlatRoumieu, plus Schwartz.
std::vector<ClassCandidate> default_class_candidates();

ClassEstimate fit_single_class(const KernelMatrix& K, const ClassCandidate& candidate);

// Fits every candidate and returns the smallest-residual one. Entries below
// 1e3 * eps * max|a| are excluded from the regression; requires truncation
// degree >= 4 in each variable and a nonzero kernel.
ClassEstimate fit_class(const KernelMatrix& K,
                        const std::vector<ClassCandidate>& candidates =
                            default_class_candidates());

}  // namespace hermop
