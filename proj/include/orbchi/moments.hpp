#pragma once

#include <vector>

#include "orbchi/rational.hpp"
#include "orbchi/series.hpp"
#include "orbchi/species.hpp"

namespace orbchi {

/// k-th moment of the standard Gaussian: (k-1)!! for even k, 0 for odd k.
/// Equals the number of chord diagrams on k points.
Integer gaussian_moment(int k);

/// Moments Ch_0..Ch_max built once by the recurrence Ch_k = (k-1) Ch_{k-2}.
class MomentTable {
public:
    explicit MomentTable(int max_k);

    int max_k() const { return static_cast<int>(values_.size()) - 1; }
    const Integer& operator[](int k) const { return values_.at(static_cast<std::size_t>(k)); }

private:
    std::vector<Integer> values_;
};

/// The exponent -t^{-1} Q(t^{1/2} y) written in s = t^{1/2}:
/// -sum_{n=3}^{s_cutoff+2} q_n s^{n-2} y^n.
BivariatePoly build_exponent(const Species& species, int s_cutoff);

/// h = exp(exponent), truncated at the exponent's cutoff.
BivariatePoly expand_h(const BivariatePoly& exponent);

/// Replaces every y^k by Ch_k and s^{2m} by t^m. Terms with odd s-degree
/// must vanish under the substitution; a surviving one throws
/// std::domain_error("half-integer power of t").
TSeries substitute_moments(const BivariatePoly& p);

} // namespace orbchi
