#pragma once

#include <vector>

#include "orbchi/pipeline.hpp"
#include "orbchi/rational.hpp"

namespace orbchi {

/// Exact Bernoulli number with B_1 = -1/2, from
/// sum_{k=0}^{n} C(n+1, k) B_k = 0.
Rational bernoulli_number(int n);

/// B_0..B_max_n computed in one pass of the recurrence.
std::vector<Rational> bernoulli_numbers(int max_n);

/// entries[m] = B_m / (m (m - 1)) for m = 2..loops (zero for odd m).
EulerTable closed_form_table(int loops);

struct BernoulliCheck {
    int loops = 0;
    Rational computed;
    Rational expected;
    bool pass = false;
};

struct BernoulliReport {
    std::string species_name;
    std::vector<BernoulliCheck> checks;

    bool all_pass() const;
};

/// Entry-by-entry exact comparison against closed_form_table.
BernoulliReport verify_bernoulli(const EulerTable& table);

} // namespace orbchi
