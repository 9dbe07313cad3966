#include "orbchi/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "orbchi/bernoulli.hpp"

namespace orbchi::analytic {

namespace {

long double stirling_coefficient(const std::vector<Rational>& b, int n)
{
    const Rational c = b[2 * n] / Rational(static_cast<long>(2 * n) * (2 * n - 1));
    // Quotient of the two integers at extended precision.
    return static_cast<long double>(c.numerator().get_d()) / static_cast<long double>(c.denominator().get_d());
}

} // namespace

double gamma_expression(double t)
{
    if (!(t > 0.0 && t < 1.0)) {
        throw std::domain_error("gamma_expression requires 0 < t < 1");
    }
    const long double tl = t;
    const long double z = 1.0L / tl;
    const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    return static_cast<double>(z * (1.0L + std::log(tl)) - 0.5L * std::log(two_pi * tl) + std::lgamma(z));
}

double stirling_partial_sum(double t, int terms)
{
    if (terms < 1) {
        throw std::invalid_argument("stirling_partial_sum needs at least one term");
    }
    const auto b = bernoulli_numbers(2 * terms);
    const long double tl = t;
    const long double t2 = tl * tl;
    // Horner in t^2, then one factor of t.
    long double acc = 0.0L;
    for (int n = terms; n >= 1; --n) {
        acc = acc * t2 + stirling_coefficient(b, n);
    }
    return static_cast<double>(acc * tl);
}

AsymptoticResidual check_commutative_asymptotics(double t, int terms, double rhs_perturbation)
{
    if (!(t > 0.0 && t <= 0.2)) {
        throw std::domain_error("asymptotic check requires 0 < t <= 1/5");
    }
    if (terms < 1 || terms > 5) {
        throw std::invalid_argument("asymptotic check requires 1 <= terms <= 5");
    }
    AsymptoticResidual r;
    r.t = t;
    r.terms_used = terms;
    r.lhs = gamma_expression(t);
    r.rhs = stirling_partial_sum(t, terms) + rhs_perturbation;
    r.residual = std::abs(r.lhs - r.rhs);
    const auto b = bernoulli_numbers(2 * terms + 2);
    r.bound = static_cast<double>(std::abs(stirling_coefficient(b, terms + 1))
                                  * std::pow(static_cast<long double>(t), 2 * terms + 1));
    r.pass = r.residual <= kBoundSlack * r.bound;
    return r;
}

} // namespace orbchi::analytic
