#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "orbchi/moments.hpp"
#include "orbchi/oracle.hpp"
#include "orbchi/pipeline.hpp"

using namespace orbchi;
using namespace orbchi::oracle;

TEST_CASE("count_pairings")
{
    CHECK(count_pairings(0) == 1);
    CHECK(count_pairings(4) == 3);
    CHECK(count_pairings(5) == 0);
    CHECK(count_pairings(6) == 15);
    for (int k = 0; k <= 12; ++k) {
        CHECK(count_pairings(k) == gaussian_moment(k));
        long visited = 0;
        for_each_pairing(k, [&](std::span<const std::pair<int, int>> pairs) {
            std::set<int> seen;
            for (const auto& [a, b] : pairs) {
                CHECK(a < b);
                seen.insert(a);
                seen.insert(b);
            }
            CHECK(static_cast<int>(seen.size()) == k);
            ++visited;
        });
        CHECK(Integer(visited) == count_pairings(k));
    }
}

TEST_CASE("partitions are canonical and respect the block minimum")
{
    std::set<std::vector<std::uint32_t>> seen;
    for_each_partition(9, 3, [&](std::span<const std::uint32_t> blocks) {
        std::uint32_t covered = 0;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            CHECK(std::popcount(blocks[i]) >= 3);
            CHECK((covered & blocks[i]) == 0);
            if (i > 0) {
                CHECK(std::countr_zero(blocks[i - 1]) < std::countr_zero(blocks[i]));
            }
            covered |= blocks[i];
        }
        CHECK(covered == (1u << 9) - 1);
        seen.emplace(blocks.begin(), blocks.end());
    });
    long total = 0;
    for_each_partition(9, 3, [&](std::span<const std::uint32_t>) { ++total; });
    CHECK(static_cast<long>(seen.size()) == total);
}

TEST_CASE("partition_weights examples")
{
    const auto comm6 = partition_weights(builtin_species("commutative"), 6);
    CHECK(comm6 == std::map<int, Rational>{{1, 1}, {2, 10}});
    const auto assoc6 = partition_weights(builtin_species("associative"), 6);
    CHECK(assoc6 == std::map<int, Rational>{{1, 120}, {2, 40}});
    for (const auto& name : builtin_species_names()) {
        const auto sp = builtin_species(name);
        CHECK(partition_weights(sp, 5) == std::map<int, Rational>{{1, sp.count(5)}});
    }
}

TEST_CASE("commutative partition weights count partitions into blocks of size >= 3")
{
    // Par3+_k = k! [x^k] exp(e^x - 1 - x - x^2/2).
    const int order = 14;
    TSeries inner(order);
    for (int n = 3; n <= order; ++n) {
        inner[n] = Rational(Integer(1), factorial(static_cast<unsigned>(n)));
    }
    const TSeries egf = series_exp(inner);
    for (int k = 0; k <= order; ++k) {
        Rational total;
        for (const auto& [v, w] : partition_weights(builtin_species("commutative"), k)) {
            total += w;
        }
        CAPTURE(k);
        CHECK(total == egf[k] * Rational(factorial(static_cast<unsigned>(k))));
    }
}

TEST_CASE("oracle_all_graphs_coefficient examples")
{
    CHECK(oracle_all_graphs_coefficient(builtin_species("commutative"), 1, 3) == rational_from(1, 12));
    CHECK(oracle_all_graphs_coefficient(builtin_species("chord"), 1, 3) == rational_from(-3, 8));
    CHECK(oracle_all_graphs_coefficient(builtin_species("lie"), 0, 0) == Rational{1});
    CHECK_THROWS_WITH_AS(oracle_all_graphs_coefficient(builtin_species("commutative"), 2, 5),
                         doctest::Contains("incomplete sum"), std::invalid_argument);
}

TEST_CASE("labeled_graph_sum keys respect the valence bound")
{
    for (int e = 1; e <= 6; ++e) {
        const auto sum = labeled_graph_sum(builtin_species("lie"), e);
        CHECK(sum.half_edges == 2 * e);
        for (const auto& [v, value] : sum.per_vertex_count) {
            CHECK(v >= 1);
            CHECK(3 * v <= 2 * e);
        }
    }
}

TEST_CASE("oracle_connected_coefficient examples")
{
    CHECK(oracle_connected_coefficient(builtin_species("commutative"), 1, 3) == rational_from(1, 12));
    CHECK(oracle_connected_coefficient(builtin_species("commutative"), 2, 6) == Rational{});
    CHECK(oracle_connected_coefficient(builtin_species("lie"), 2, 6) == rational_from(-1, 48));
    CHECK(oracle_connected_coefficient(builtin_species("commutative"), 0, 0) == Rational{});
    CHECK_THROWS_AS(oracle_connected_coefficient(builtin_species("commutative"), 2, 7), std::invalid_argument);
    CHECK_THROWS_AS(oracle_connected_coefficient(builtin_species("commutative"), 2, 4), std::invalid_argument);
}

TEST_CASE("unsigned_graph_count examples")
{
    CHECK(unsigned_graph_count(builtin_species("commutative"), 2) == rational_from(1, 8));
    CHECK(unsigned_graph_count(builtin_species("commutative"), 3) == rational_from(11, 48));
    for (const auto& name : builtin_species_names()) {
        CHECK(unsigned_graph_count(builtin_species(name), 1) == Rational{});
    }
}

TEST_CASE("pipeline agrees with the enumeration oracle for one and two loops")
{
    for (const auto& name : builtin_species_names()) {
        CAPTURE(name);
        const auto sp = builtin_species(name);
        const TSeries all = all_graphs_series(sp, 3);
        const TSeries connected = connected_series(all);
        for (int m = 1; m <= 2; ++m) {
            CAPTURE(m);
            CHECK(oracle_all_graphs_coefficient(sp, m, 3 * m) == all[m]);
            CHECK(oracle_connected_coefficient(sp, m, 3 * m) == connected[m]);
        }
    }
}

namespace {

// Every (partition, pairing) pair checked separately, no shortcuts.
Rational naive_connected_coefficient(const Species& sp, int m, int max_e)
{
    Rational total;
    for (int e = m + 1; e <= max_e; ++e) {
        const int v = e - m;
        const int k = 2 * e;
        std::vector<std::vector<std::pair<int, int>>> pairings;
        for_each_pairing(k, [&](std::span<const std::pair<int, int>> pairs) {
            pairings.emplace_back(pairs.begin(), pairs.end());
        });
        Rational sum;
        for_each_partition(k, 3, [&](std::span<const std::uint32_t> blocks) {
            if (static_cast<int>(blocks.size()) != v) {
                return;
            }
            std::vector<int> vertex_of(static_cast<std::size_t>(k));
            Rational w{1};
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                w *= sp.count(std::popcount(blocks[b]));
                for (int i = 0; i < k; ++i) {
                    if (blocks[b] >> i & 1u) {
                        vertex_of[static_cast<std::size_t>(i)] = static_cast<int>(b);
                    }
                }
            }
            long connected = 0;
            std::vector<int> comp(static_cast<std::size_t>(v));
            for (const auto& pairs : pairings) {
                for (int i = 0; i < v; ++i) {
                    comp[static_cast<std::size_t>(i)] = i;
                }
                for (const auto& [a, b] : pairs) {
                    const int ca = comp[static_cast<std::size_t>(vertex_of[static_cast<std::size_t>(a)])];
                    const int cb = comp[static_cast<std::size_t>(vertex_of[static_cast<std::size_t>(b)])];
                    for (auto& c : comp) {
                        if (c == cb) {
                            c = ca;
                        }
                    }
                }
                if (std::all_of(comp.begin(), comp.end(), [&](int c) { return c == comp[0]; })) {
                    ++connected;
                }
            }
            sum += w * Rational(connected);
        });
        total += Rational(v % 2 == 0 ? 1 : -1) * sum / Rational(factorial(static_cast<unsigned>(k)));
    }
    return total;
}

} // namespace

TEST_CASE("connected oracle matches a naive per-configuration enumeration")
{
    const auto lie = builtin_species("lie");
    CHECK(oracle_connected_coefficient(lie, 1, 3) == naive_connected_coefficient(lie, 1, 3));
    CHECK(oracle_connected_coefficient(lie, 2, 6) == naive_connected_coefficient(lie, 2, 6));
    const auto weighted = species_from_file(std::string(ORBCHI_TEST_DATA_DIR) + "/rational6.json");
    CHECK(oracle_connected_coefficient(weighted, 1, 3) == naive_connected_coefficient(weighted, 1, 3));
}
