#include "orbchi/pipeline.hpp"

#include <stdexcept>

#include "orbchi/moments.hpp"

namespace orbchi {

namespace {

void require_loops(int loops)
{
    if (loops < 2) {
        throw std::invalid_argument("max-loops must be >= 2");
    }
}

} // namespace

TSeries all_graphs_series(const Species& species, int loops)
{
    require_loops(loops);
    // t^m with m = loops - 1 corresponds to s^{2m}.
    const int s_cutoff = 2 * (loops - 1);
    return substitute_moments(expand_h(build_exponent(species, s_cutoff)));
}

TSeries connected_series(const TSeries& all_graphs)
{
    return series_log(all_graphs);
}

EulerTable euler_characteristic(const Species& species, int loops, bool connected)
{
    const TSeries all = all_graphs_series(species, loops);
    const TSeries series = connected ? connected_series(all) : all;

    EulerTable table{species.name(), connected, loops, {}};
    for (int n = 2; n <= loops; ++n) {
        table.entries.emplace(n, series[n - 1]);
    }
    return table;
}

} // namespace orbchi
