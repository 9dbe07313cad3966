#pragma once

namespace orbchi::analytic {

/// Comparison of the gamma-function closed form against a truncated
/// Stirling series at one point t.
struct AsymptoticResidual {
    double t = 0.0;
    int terms_used = 0;
    double lhs = 0.0;      // log of the gamma expression
    double rhs = 0.0;      // partial sum of the exact series
    double residual = 0.0; // |lhs - rhs|
    double bound = 0.0;    // magnitude of the first omitted term
    bool pass = false;     // residual <= kBoundSlack * bound
};

inline constexpr double kBoundSlack = 10.0;

/// log( (e t)^{1/t} / sqrt(2 pi t) * Gamma(1/t) )
///   = (1/t)(1 + log t) - log(2 pi t) / 2 + log Gamma(1/t),   0 < t < 1.
/// Evaluated in extended precision.
double gamma_expression(double t);

/// sum_{n=1}^{K} B_{2n} / (2n (2n - 1)) t^{2n-1}; coefficients are exact
/// rationals converted to floating point only at the end.
double stirling_partial_sum(double t, int terms);

/// Requires 0 < t <= 1/5 and 1 <= terms <= 5. rhs_perturbation is added to
/// the partial sum (used as a negative control).
AsymptoticResidual check_commutative_asymptotics(double t, int terms, double rhs_perturbation = 0.0);

} // namespace orbchi::analytic
