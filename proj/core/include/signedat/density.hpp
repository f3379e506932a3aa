#pragma once

#include <optional>
#include <vector>

#include "signedat/orientation.hpp"
#include "signedat/signed_graph.hpp"

namespace signedat {

/// Vertex-count ceiling for the exhaustive subset scan in mad().
inline constexpr int kDefaultMadVertexCap = 20;

/// Maximum average degree as an exact reduced fraction, with a vertex
/// subset attaining it.
struct DensityReport {
    long long numerator = 0;   // mad = numerator / denominator, reduced
    long long denominator = 1;
    std::vector<int> witness;  // vertex indices of a densest induced subgraph
};

/// Exact maximum over nonempty vertex subsets S of 2 * e(S) / |S|, where
/// e(S) counts induced edges; induced subgraphs suffice since dropping
/// edges at fixed vertices never raises the ratio. Signs are ignored.
/// Exhaustive over 2^|V| - 1 subsets; graphs above the cap are rejected
/// with ResourceLimitError.
DensityReport mad(const SignedGraph& g, int vertex_cap = kDefaultMadVertexCap);

/// An orientation with every outdegree at most p when one exists, i.e.
/// exactly when mad(g) <= 2p. Starts from a greedy orientation and
/// repeatedly reverses a breadth-first directed path from an overloaded
/// vertex to a vertex with spare capacity; when no overloaded vertex can
/// reach one, the reachable set is itself denser than 2p, which soundly
/// certifies failure.
std::optional<Orientation> bounded_outdegree_orientation(const SignedGraph& g, int p);

struct AtNegativeResult {
    int at_number = 0;
    DensityReport density;
    std::uint64_t orientation_mask = 0; // orientation with outdegree <= at_number - 1
};

/// The Alon-Tarsi number of an all-negative signed graph:
/// ceil(mad / 2) + 1, together with a certifying bounded-outdegree
/// orientation. Every Eulerian subdigraph of any orientation is sigma-even
/// here (no positive edges), so the orientation's imbalance equals its
/// Eulerian subdigraph count, which is at least 1. Throws
/// std::invalid_argument when some edge is positive.
AtNegativeResult at_all_negative(const SignedGraph& g, int vertex_cap = kDefaultMadVertexCap);

} // namespace signedat
