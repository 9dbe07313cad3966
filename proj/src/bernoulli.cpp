#include "orbchi/bernoulli.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbchi {

std::vector<Rational> bernoulli_numbers(int max_n)
{
    if (max_n < 0) {
        throw std::invalid_argument("Bernoulli index must be non-negative");
    }
    std::vector<Rational> b(static_cast<std::size_t>(max_n) + 1);
    b[0] = Rational{1};
    for (int n = 1; n <= max_n; ++n) {
        // C(n+1, n) B_n = -sum_{k<n} C(n+1, k) B_k
        Rational acc;
        for (int k = 0; k < n; ++k) {
            acc += Rational(binomial(static_cast<unsigned>(n + 1), static_cast<unsigned>(k))) * b[k];
        }
        b[n] = -acc / Rational(Integer(n + 1));
    }
    return b;
}

Rational bernoulli_number(int n)
{
    return bernoulli_numbers(n).back();
}

EulerTable closed_form_table(int loops)
{
    if (loops < 2) {
        throw std::invalid_argument("max-loops must be >= 2");
    }
    const auto b = bernoulli_numbers(loops);
    EulerTable table{"bernoulli", true, loops, {}};
    for (int m = 2; m <= loops; ++m) {
        table.entries.emplace(m, b[m] / Rational(static_cast<long>(m) * (m - 1)));
    }
    return table;
}

bool BernoulliReport::all_pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const BernoulliCheck& c) { return c.pass; });
}

BernoulliReport verify_bernoulli(const EulerTable& table)
{
    BernoulliReport report{table.species_name, {}};
    const EulerTable expected = closed_form_table(std::max(table.max_loops, 2));
    for (const auto& [n, value] : table.entries) {
        const Rational& closed = expected.entries.at(n);
        report.checks.push_back({n, value, closed, value == closed});
    }
    return report;
}

} // namespace orbchi
