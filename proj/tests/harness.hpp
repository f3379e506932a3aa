#pragma once

// Shared generators and reference implementations for the test suites.
//
// The reference implementations ("naive_*") deliberately use the most direct
// formulation available — plain std::map keyed by exponent vectors, full
// 2^|E| subset scans with no trimming, odometer loops — so they share no
// representation or pruning logic with the library code they check.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "signedat/density.hpp"
#include "signedat/orientation.hpp"
#include "signedat/polynomial.hpp"
#include "signedat/signed_graph.hpp"
#include "signedat/triangulation.hpp"

namespace signedat::testing {

// ---------------------------------------------------------------------------
// Named graphs. Vertices are "v1", "v2", ... in order.
// ---------------------------------------------------------------------------

SignedGraph complete_graph(int n, int sign);
SignedGraph cycle_graph(int n, int sign);
SignedGraph path_graph(int n, int sign);
SignedGraph single_edge(int sign);
/// Complete bipartite graph on parts {u1, u2} and {w1..w4}, all edges +1.
SignedGraph k24();

// ---------------------------------------------------------------------------
// Random generators. Every generator takes an explicit engine so tests fix
// their seeds and stay reproducible.
// ---------------------------------------------------------------------------

/// A signed graph with 1..max_vertices vertices and at most max_edges edges,
/// edge set and signs drawn uniformly.
SignedGraph random_signed_graph(std::mt19937& rng, int max_vertices = 5, int max_edges = 8);

/// K4 under every one of the 2^6 sign vectors, in ascending bitmask order
/// (bit i set means edge i is positive).
std::vector<SignedGraph> k4_sign_patterns();

/// A uniformly random vertex subset of g, as sorted indices.
std::vector<int> random_switch_set(std::mt19937& rng, const SignedGraph& g);

/// edge_count signs drawn uniformly from {+1, -1}.
std::vector<int> random_signs(std::mt19937& rng, int edge_count);

/// A uniformly random orientation mask for g.
std::uint64_t random_orientation_mask(std::mt19937& rng, const SignedGraph& g);

// ---------------------------------------------------------------------------
// Plane shapes: the near-triangulation family used by the suites.
// ---------------------------------------------------------------------------

/// An unsigned near-triangulation skeleton. Vertices 0..outer_length-1 are
/// the outer cycle in order; vertices outer_length..vertex_count-1 are
/// interior. Edge order: outer cycle edges first, then the rest in
/// construction order.
struct PlaneShape {
    int vertex_count = 0;
    int outer_length = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::array<int, 3>> faces;
};

/// All triangulations of a convex k-gon with vertices 0..k-1, as inner-face
/// lists. Sizes follow the Catalan numbers: 1, 2, 5, 14 for k = 3..6.
std::vector<std::vector<std::array<int, 3>>> polygon_triangulations(int k);

/// Every near-triangulation skeleton with outer cycle length 3..max_outer
/// and at most max_interior interior vertices: polygon triangulations,
/// closed under stacking a new vertex into an inner face and under flipping
/// an internal edge. Deduplicated; deterministic order.
std::vector<PlaneShape> plane_shapes(int max_outer, int max_interior);

/// Attaches signs (one per edge, in shape edge order) and builds the graph
/// with vertices "v1".."vn".
NearTriangulation make_signed_shape(const PlaneShape& s, const std::vector<int>& signs);
NearTriangulation make_uniform_shape(const PlaneShape& s, int sign);

// ---------------------------------------------------------------------------
// Reference implementations.
// ---------------------------------------------------------------------------

/// Exponent vector -> coefficient, zeros removed.
using ExponentMap = std::map<std::vector<int>, BigInt>;

/// Expands the product over edges uv (u < v) of (x_u - sign * x_v) one
/// factor at a time over plain vectors.
ExponentMap naive_expand(const SignedGraph& g);

/// Coefficient lookup in an ExponentMap; zero when absent.
BigInt naive_coefficient(const ExponentMap& m, const std::vector<int>& d);

/// Least k such that some nonzero term has every exponent below k; 1 for the
/// empty product.
int naive_at_number(const ExponentMap& m);

/// Evaluates the factored product directly at an integer point.
BigInt naive_evaluate_product(const SignedGraph& g, const std::vector<long long>& point);

/// All Eulerian subdigraphs of o by a full untrimmed subset scan.
std::vector<EulerianSubdigraph> naive_eulerian(const Orientation& o);

/// Maximum average degree by scanning every nonempty vertex subset and
/// counting induced edges straight off the edge list. Requires <= 20
/// vertices. Ties resolved toward the first subset in ascending-mask order.
DensityReport naive_mad(const SignedGraph& g);

/// Least k such that some assignment from the symmetric palette of size k is
/// proper (phi(u) != sign * phi(v) on every edge), by odometer search.
int naive_chromatic(const SignedGraph& g);

/// First vertex subset X in ascending-mask order whose switch makes every
/// edge negative, checked directly on the sign formula; nullopt if none.
std::optional<std::vector<int>> naive_antibalance(const SignedGraph& g);

/// True when every edge subset that forms a simple cycle contains an even
/// number of positive edges.
bool every_cycle_has_even_positive_count(const SignedGraph& g);

/// All outdegree sequences d with 0 <= d[v] <= deg(v), any sum, in
/// lexicographic order. Sequences whose sum differs from |E| admit no
/// orientation and must pair with coefficient zero.
std::vector<std::vector<int>> all_degree_bounded_sequences(const SignedGraph& g);

/// Structural equality: same vertex names in order, same edges in order with
/// the same signs.
bool same_graph(const SignedGraph& a, const SignedGraph& b);

} // namespace signedat::testing
