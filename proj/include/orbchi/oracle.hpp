#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orbchi/rational.hpp"
#include "orbchi/species.hpp"

namespace orbchi::oracle {

// Brute-force counterpart of the moment pipeline. A labelled graph with e
// edges is a pairing of the half-edges 1..2e together with a partition of
// them into vertices; summing over labelled graphs and dividing by (2e)!
// gives the automorphism-weighted sum over unlabelled graphs.

/// Largest half-edge count accepted by the joint (pairing x partition) enumeration.
inline constexpr int kJointHalfEdgeBudget = 12;

/// Signed, weighted contribution per vertex count v for graphs on 2e half-edges:
/// (-1)^v Ch_{2e} W_v(2e) / (2e)!.
struct LabeledGraphSum {
    std::string species_name;
    int half_edges = 0;
    std::map<int, Rational> per_vertex_count;
};

/// Number of perfect matchings on k points, k! / (2^{k/2} (k/2)!) for even k.
Integer count_pairings(int k);

/// Calls visit once per perfect matching of {0..k-1}; the span holds the
/// k/2 pairs (a, b) with a < b, ordered by a.
void for_each_pairing(int k, const std::function<void(std::span<const std::pair<int, int>>)>& visit);

/// Calls visit once per set partition of {0..k-1} whose blocks all have at
/// least min_block elements. Blocks are bitmasks ordered by smallest element.
void for_each_partition(int k, int min_block, const std::function<void(std::span<const std::uint32_t>)>& visit);

/// W_v(k): sum over partitions of {1..k} into v blocks of size >= 3 of prod Q_{|block|}.
std::map<int, Rational> partition_weights(const Species& species, int k);

LabeledGraphSum labeled_graph_sum(const Species& species, int edges);

/// Coefficient of t^m in the all-graphs series, from the factorised count
/// Ch_{2e} W_v(2e) / (2e)!. Requires max_e >= 3m ("incomplete sum" otherwise).
Rational oracle_all_graphs_coefficient(const Species& species, int m, int max_e);

/// Coefficient of t^m in the connected-graphs series by joint enumeration of
/// pairings and partitions with a connectivity filter. 2 max_e is limited
/// to kJointHalfEdgeBudget.
Rational oracle_connected_coefficient(const Species& species, int m, int max_e);

/// Unsigned sum of 1/|Aut| over Q-graphs with e edges: Ch_{2e} W(2e) / (2e)!.
Rational unsigned_graph_count(const Species& species, int edges);

} // namespace orbchi::oracle
