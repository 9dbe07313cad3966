#include "orbchi/moments.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace orbchi {

Integer gaussian_moment(int k)
{
    if (k < 0) {
        throw std::invalid_argument("moment order must be non-negative");
    }
    if (k % 2 != 0) {
        return Integer(0);
    }
    Integer r(1);
    for (int i = k - 1; i > 1; i -= 2) {
        r *= i;
    }
    return r;
}

MomentTable::MomentTable(int max_k)
{
    if (max_k < 0) {
        throw std::invalid_argument("moment order must be non-negative");
    }
    values_.resize(static_cast<std::size_t>(max_k) + 1);
    values_[0] = 1;
    if (max_k >= 1) {
        values_[1] = 0;
    }
    for (std::size_t k = 2; k < values_.size(); ++k) {
        values_[k] = values_[k - 2] * static_cast<unsigned long>(k - 1);
    }
}

BivariatePoly build_exponent(const Species& species, int s_cutoff)
{
    BivariatePoly exponent(s_cutoff);
    const int top = s_cutoff + 2;
    if (s_cutoff >= 1 && !species.covers(top)) {
        throw std::invalid_argument("species '" + species.name() + "' covers Q_n only up to n = "
                                    + std::to_string(*species.max_n()) + "; n up to " + std::to_string(top)
                                    + " is required");
    }
    for (int n = 3; n <= top; ++n) {
        exponent.add_term(-species.q(n), n - 2, n);
    }
    return exponent;
}

BivariatePoly expand_h(const BivariatePoly& exponent)
{
    return poly_exp_graded(exponent);
}

TSeries substitute_moments(const BivariatePoly& p)
{
    if (p.s_cutoff() % 2 != 0) {
        throw std::invalid_argument("moment substitution needs an even s cutoff");
    }
    int max_y = 0;
    for (const auto& [m, c] : p.terms()) {
        max_y = std::max(max_y, m.y);
    }
    const MomentTable moments(max_y);

    TSeries result(p.s_cutoff() / 2);
    for (const auto& [m, c] : p.terms()) {
        const Integer& ch = moments[m.y];
        if (ch == 0) {
            continue;
        }
        if (m.s % 2 != 0) {
            throw std::domain_error("half-integer power of t");
        }
        result[m.s / 2] += c * Rational(ch);
    }
    return result;
}

} // namespace orbchi
