#pragma once

#include <map>
#include <string>

#include "orbchi/rational.hpp"
#include "orbchi/series.hpp"
#include "orbchi/species.hpp"

namespace orbchi {

/// Orbifold Euler characteristic per loop number n = 2..max_loops.
struct EulerTable {
    std::string species_name;
    bool connected = true;
    int max_loops = 0;
    std::map<int, Rational> entries;

    friend bool operator==(const EulerTable&, const EulerTable&) = default;
};

/// G(t) = sum over all (possibly disconnected, possibly empty) Q-graphs of
/// (-1)^v / |Aut|, graded by e - v, to order loops - 1.
TSeries all_graphs_series(const Species& species, int loops);

/// log G(t): the same sum restricted to connected graphs.
TSeries connected_series(const TSeries& all_graphs);

/// Table with entries[n] = C[n - 1] (or G[n - 1] when connected is false).
EulerTable euler_characteristic(const Species& species, int loops, bool connected = true);

} // namespace orbchi
