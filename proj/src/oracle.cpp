#include "orbchi/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace orbchi::oracle {

namespace {

void require_coverage(const Species& species, int k)
{
    if (k >= 3 && !species.covers(k)) {
        throw std::invalid_argument("species '" + species.name() + "' covers Q_n only up to n = "
                                    + std::to_string(*species.max_n()) + "; n up to " + std::to_string(k)
                                    + " is required");
    }
}

void require_complete(int m, int max_e)
{
    if (m < 0) {
        throw std::invalid_argument("t-degree must be non-negative");
    }
    if (max_e < 3 * m) {
        throw std::invalid_argument("incomplete sum: max_e must be >= 3m");
    }
}

Rational signed_unit(int v)
{
    return Rational(v % 2 == 0 ? 1 : -1);
}

void pairings_rec(std::uint32_t remaining, std::vector<std::pair<int, int>>& pairs,
                  const std::function<void(std::span<const std::pair<int, int>>)>& visit)
{
    if (remaining == 0) {
        visit(pairs);
        return;
    }
    const int a = std::countr_zero(remaining);
    const std::uint32_t rest = remaining & (remaining - 1);
    for (std::uint32_t partners = rest; partners != 0; partners &= partners - 1) {
        const int b = std::countr_zero(partners);
        pairs.emplace_back(a, b);
        pairings_rec(rest & ~(std::uint32_t{1} << b), pairs, visit);
        pairs.pop_back();
    }
}

void partitions_rec(std::uint32_t remaining, int min_block, std::vector<std::uint32_t>& blocks,
                    const std::function<void(std::span<const std::uint32_t>)>& visit)
{
    if (remaining == 0) {
        visit(blocks);
        return;
    }
    const std::uint32_t first = remaining & (~remaining + 1);
    const std::uint32_t others = remaining ^ first;
    // Iterate over every subset of the other elements, including the empty one.
    std::uint32_t sub = others;
    while (true) {
        const std::uint32_t block = first | sub;
        const int size = std::popcount(block);
        const int left = std::popcount(remaining ^ block);
        if (size >= min_block && (left == 0 || left >= min_block)) {
            blocks.push_back(block);
            partitions_rec(remaining ^ block, min_block, blocks, visit);
            blocks.pop_back();
        }
        if (sub == 0) {
            break;
        }
        sub = (sub - 1) & others;
    }
}

void check_points(int k)
{
    if (k < 0 || k > 31) {
        throw std::invalid_argument("enumeration supports 0..31 points");
    }
}

// Number of pairings (flattened, e pairs each) whose edges connect all v vertices.
long count_connected_pairings(const std::vector<std::pair<int, int>>& pairings, int e,
                              const std::array<int, 32>& vertex_of, int v)
{
    long connected = 0;
    const std::uint32_t all_vertices = (std::uint32_t{1} << v) - 1;
    for (std::size_t p = 0; p < pairings.size(); p += static_cast<std::size_t>(e)) {
        std::array<std::uint32_t, 32> adjacent{};
        for (int i = 0; i < e; ++i) {
            const int a = vertex_of[pairings[p + i].first];
            const int b = vertex_of[pairings[p + i].second];
            adjacent[a] |= std::uint32_t{1} << b;
            adjacent[b] |= std::uint32_t{1} << a;
        }
        // Grow the component of vertex 0 until it stops changing.
        std::uint32_t reached = 1;
        std::uint32_t frontier = 1;
        while (frontier != 0) {
            std::uint32_t next = 0;
            for (std::uint32_t bits = frontier; bits != 0; bits &= bits - 1) {
                next |= adjacent[std::countr_zero(bits)];
            }
            frontier = next & ~reached;
            reached |= next;
        }
        if (reached == all_vertices) {
            ++connected;
        }
    }
    return connected;
}

} // namespace

Integer count_pairings(int k)
{
    if (k < 0) {
        throw std::invalid_argument("point count must be non-negative");
    }
    if (k % 2 != 0) {
        return Integer(0);
    }
    const unsigned e = static_cast<unsigned>(k / 2);
    Integer two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, e);
    return factorial(static_cast<unsigned>(k)) / (two_pow * factorial(e));
}

void for_each_pairing(int k, const std::function<void(std::span<const std::pair<int, int>>)>& visit)
{
    check_points(k);
    if (k % 2 != 0) {
        return;
    }
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(k / 2));
    pairings_rec((std::uint32_t{1} << k) - 1, pairs, visit);
}

void for_each_partition(int k, int min_block, const std::function<void(std::span<const std::uint32_t>)>& visit)
{
    check_points(k);
    if (min_block < 1) {
        throw std::invalid_argument("minimum block size must be positive");
    }
    std::vector<std::uint32_t> blocks;
    partitions_rec((std::uint32_t{1} << k) - 1, min_block, blocks, visit);
}

std::map<int, Rational> partition_weights(const Species& species, int k)
{
    require_coverage(species, k);
    std::vector<Rational> counts(static_cast<std::size_t>(k) + 1);
    for (int n = 3; n <= k; ++n) {
        counts[n] = species.count(n);
    }
    std::map<int, Rational> weights;
    for_each_partition(k, 3, [&](std::span<const std::uint32_t> blocks) {
        Rational w{1};
        for (const auto b : blocks) {
            w *= counts[std::popcount(b)];
        }
        weights[static_cast<int>(blocks.size())] += w;
    });
    return weights;
}

LabeledGraphSum labeled_graph_sum(const Species& species, int edges)
{
    const int k = 2 * edges;
    LabeledGraphSum sum{species.name(), k, {}};
    const Rational pairings(count_pairings(k));
    const Rational labellings(factorial(static_cast<unsigned>(k)));
    for (const auto& [v, w] : partition_weights(species, k)) {
        if (v == 0) {
            continue;
        }
        sum.per_vertex_count.emplace(v, signed_unit(v) * pairings * w / labellings);
    }
    return sum;
}

Rational oracle_all_graphs_coefficient(const Species& species, int m, int max_e)
{
    require_complete(m, max_e);
    Rational total;
    if (m == 0) {
        total += Rational{1}; // the empty graph
    }
    for (int e = std::max(m, 1); e <= max_e; ++e) {
        const int v = e - m;
        if (v < 1 || 3 * v > 2 * e) {
            continue;
        }
        const auto sum = labeled_graph_sum(species, e);
        if (const auto it = sum.per_vertex_count.find(v); it != sum.per_vertex_count.end()) {
            total += it->second;
        }
    }
    return total;
}

Rational oracle_connected_coefficient(const Species& species, int m, int max_e)
{
    require_complete(m, max_e);
    if (2 * max_e > kJointHalfEdgeBudget) {
        throw std::invalid_argument("joint enumeration is limited to 2e <= " + std::to_string(kJointHalfEdgeBudget));
    }
    Rational total;
    for (int e = m + 1; e <= max_e; ++e) {
        const int v = e - m;
        if (3 * v > 2 * e) {
            continue;
        }
        const int k = 2 * e;
        require_coverage(species, k);

        std::vector<std::pair<int, int>> pairings;
        for_each_pairing(k, [&](std::span<const std::pair<int, int>> pairs) {
            pairings.insert(pairings.end(), pairs.begin(), pairs.end());
        });

        std::vector<Rational> counts(static_cast<std::size_t>(k) + 1);
        for (int n = 3; n <= k; ++n) {
            counts[n] = species.count(n);
        }

        Rational sum;
        std::map<std::vector<int>, long> connected_by_shape;
        std::array<int, 32> vertex_of{};
        for_each_partition(k, 3, [&](std::span<const std::uint32_t> blocks) {
            if (static_cast<int>(blocks.size()) != v) {
                return;
            }
            Rational w{1};
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                w *= counts[std::popcount(blocks[b])];
                for (std::uint32_t bits = blocks[b]; bits != 0; bits &= bits - 1) {
                    vertex_of[std::countr_zero(bits)] = static_cast<int>(b);
                }
            }
            if (w.is_zero()) {
                return;
            }
            // Relabelling points maps pairings to pairings and preserves
            // connectivity, so the count depends only on the block sizes.
            std::vector<int> shape;
            for (const auto block : blocks) {
                shape.push_back(std::popcount(block));
            }
            std::sort(shape.begin(), shape.end());
            auto [it, inserted] = connected_by_shape.try_emplace(shape, 0);
            if (inserted) {
                it->second = count_connected_pairings(pairings, e, vertex_of, v);
            }
            const long connected = it->second;
            sum += w * Rational(connected);
        });
        total += signed_unit(v) * sum / Rational(factorial(static_cast<unsigned>(k)));
    }
    return total;
}

Rational unsigned_graph_count(const Species& species, int edges)
{
    const int k = 2 * edges;
    Rational w;
    for (const auto& [v, weight] : partition_weights(species, k)) {
        w += weight;
    }
    return Rational(count_pairings(k)) * w / Rational(factorial(static_cast<unsigned>(k)));
}

} // namespace orbchi::oracle
