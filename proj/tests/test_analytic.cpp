#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "orbchi/analytic.hpp"

using namespace orbchi::analytic;

// Reference values from a 50-digit evaluation of
// (1/t)(1 + log t) - log(2 pi t)/2 + log Gamma(1/t).
TEST_CASE("gamma_expression golden values")
{
    CHECK(gamma_expression(0.5) == doctest::Approx(0.04134069595540929409).epsilon(1e-13));
    CHECK(gamma_expression(0.2) == doctest::Approx(0.01664469118982119216).epsilon(1e-12));
    CHECK(gamma_expression(0.1) == doctest::Approx(0.008330563433362871256).epsilon(1e-12));
    CHECK(gamma_expression(0.05) == doctest::Approx(0.004166319691996922457).epsilon(1e-12));
}

TEST_CASE("gamma_expression domain")
{
    CHECK_THROWS_AS(gamma_expression(1.0), std::domain_error);
    CHECK_THROWS_AS(gamma_expression(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_expression(-0.1), std::domain_error);
}

TEST_CASE("gamma_expression at t = 1/k matches log((k-1)!)")
{
    for (int k = 2; k <= 15; ++k) {
        const double t = 1.0 / k;
        double log_fact = 0.0;
        for (int i = 2; i < k; ++i) {
            log_fact += std::log(static_cast<double>(i));
        }
        const double direct = k * (1.0 + std::log(t)) - 0.5 * std::log(2.0 * M_PI * t) + log_fact;
        CAPTURE(k);
        CHECK(gamma_expression(t) == doctest::Approx(direct).epsilon(1e-10));
    }
}

TEST_CASE("stirling_partial_sum examples")
{
    CHECK(stirling_partial_sum(0.1, 1) == doctest::Approx(1.0 / 120.0).epsilon(1e-15));
    CHECK(stirling_partial_sum(0.1, 2) == doctest::Approx(1.0 / 120.0 - 1e-3 / 360.0).epsilon(1e-15));
    CHECK(stirling_partial_sum(0.0, 4) == 0.0);
    CHECK_THROWS_AS(stirling_partial_sum(0.1, 0), std::invalid_argument);
}

TEST_CASE("check_commutative_asymptotics examples")
{
    const auto a = check_commutative_asymptotics(0.1, 3);
    CHECK(a.pass);
    CHECK(a.terms_used == 3);
    CHECK(a.residual == doctest::Approx(5.870062081e-11).epsilon(1e-4));
    CHECK(a.bound == doctest::Approx(1.0 / 30.0 / 56.0 * 1e-7).epsilon(1e-12));
    CHECK(a.residual == doctest::Approx(std::abs(a.lhs - a.rhs)));

    const auto b = check_commutative_asymptotics(0.2, 1);
    CHECK(b.pass);
    CHECK(b.residual <= 10.0 * (1.0 / 360.0) * 0.008);

    CHECK_FALSE(check_commutative_asymptotics(0.1, 3, 1e-6).pass);

    CHECK_THROWS_AS(check_commutative_asymptotics(0.3, 1), std::domain_error);
    CHECK_THROWS_AS(check_commutative_asymptotics(0.1, 0), std::invalid_argument);
    CHECK_THROWS_AS(check_commutative_asymptotics(0.1, 6), std::invalid_argument);
}

TEST_CASE("residual scales like the first omitted power of t")
{
    for (int k = 1; k <= 3; ++k) {
        double lo = INFINITY;
        double hi = 0.0;
        for (double t : {0.1, 0.05, 0.025}) {
            const auto r = check_commutative_asymptotics(t, k);
            CHECK(r.pass);
            const double scaled = r.residual / std::pow(t, 2 * k + 1);
            lo = std::min(lo, scaled);
            hi = std::max(hi, scaled);
        }
        CAPTURE(k);
        CHECK(hi / lo < 2.0);
    }
}
