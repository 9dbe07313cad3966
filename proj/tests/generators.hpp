#pragma once

#include <random>

#include "orbchi/rational.hpp"
#include "orbchi/series.hpp"

namespace orbchi::testing {

// Small generators for the property checks; fixed seeds keep runs reproducible.
class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational rational()
    {
        return rational_from(uniform(-9, 9), uniform(1, 9));
    }

    Rational nonzero_rational()
    {
        Rational r;
        while (r.is_zero()) {
            r = rational();
        }
        return r;
    }

    // Unit constant term, order 1..max_order.
    TSeries unit_series(int max_order)
    {
        TSeries s(uniform(1, max_order));
        s[0] = Rational{1};
        for (int k = 1; k <= s.order(); ++k) {
            s[k] = rational();
        }
        return s;
    }

    // Every term has s-degree >= 1, as the graded exponential requires.
    BivariatePoly graded_poly(int s_cutoff, int max_terms = 4)
    {
        BivariatePoly p(s_cutoff);
        const int n = uniform(0, max_terms);
        for (int i = 0; i < n; ++i) {
            p.add_term(rational(), uniform(1, s_cutoff), uniform(0, 6));
        }
        return p;
    }

    // Odd s-degrees only paired with odd y-degrees, so the moment
    // substitution never sees a half-integer power of t.
    BivariatePoly parity_poly(int s_cutoff, int max_terms = 8)
    {
        BivariatePoly p(s_cutoff);
        const int n = uniform(0, max_terms);
        for (int i = 0; i < n; ++i) {
            const int s = uniform(0, s_cutoff);
            int y = uniform(0, 12);
            if (s % 2 == 1 && y % 2 == 0) {
                ++y;
            }
            p.add_term(rational(), s, y);
        }
        return p;
    }

private:
    std::mt19937 rng_;
};

} // namespace orbchi::testing
