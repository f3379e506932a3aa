#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace signedat {

using VertexId = std::string;

/// An undirected edge with a sign. Endpoints are indices into the owning
/// graph's vertex order, normalized so that lo < hi.
struct SignedEdge {
    int lo = 0;
    int hi = 0;
    int sign = -1; // +1 or -1
};

/// A simple graph with a sign on every edge and a fixed total ordering of
/// the vertices (the order in which they were supplied, typically the
/// input file's vertex list). Immutable after construction; all operations
/// on it are pure functions, so sharing between threads is safe.
///
/// Edge order is also preserved from construction; orientation bitmasks and
/// polynomial factor order are defined over it.
class SignedGraph {
public:
    SignedGraph() = default;

    /// Builds a graph from named vertices and (name, name, sign) edges.
    /// Rejects duplicate vertices, loops, parallel edges, unknown endpoints,
    /// signs outside {+1, -1}, and vertex names that would not survive the
    /// text formats (empty, whitespace, or containing ','  ':'  "->").
    SignedGraph(std::vector<VertexId> vertices,
                const std::vector<std::tuple<VertexId, VertexId, int>>& edges);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<SignedEdge>& edges() const { return edges_; }
    const SignedEdge& edge(int e) const { return edges_[static_cast<size_t>(e)]; }

    const VertexId& vertex_name(int v) const { return vertices_[static_cast<size_t>(v)]; }

    /// Index of a named vertex; throws std::invalid_argument if absent.
    int index_of(const VertexId& name) const;
    std::optional<int> find_vertex(const VertexId& name) const;

    /// Edge index between two vertex indices, if the edge exists.
    std::optional<int> find_edge(int u, int v) const;
    bool has_edge(int u, int v) const { return find_edge(u, v).has_value(); }

    int degree(int v) const { return static_cast<int>(incident_[static_cast<size_t>(v)].size()); }
    /// Indices of edges incident to v, in edge order.
    const std::vector<int>& incident_edges(int v) const { return incident_[static_cast<size_t>(v)]; }
    /// Neighbor vertex indices of v, in edge order.
    std::vector<int> neighbors(int v) const;

    bool all_negative() const;
    bool all_positive() const;

private:
    std::vector<VertexId> vertices_;
    std::vector<SignedEdge> edges_;
    std::vector<std::vector<int>> incident_;
};

/// The graph with the sign of every edge having exactly one end in
/// `switch_set` flipped. An involution; switching at X then at Y equals
/// switching at the symmetric difference of X and Y.
SignedGraph switched(const SignedGraph& g, const std::vector<int>& switch_set);
SignedGraph switched(const SignedGraph& g, const std::vector<VertexId>& switch_set);

/// Restriction of g to the given vertices and edges, preserving signs,
/// the induced vertex order, and the induced edge order. Every kept edge
/// must have both ends kept.
SignedGraph signed_subgraph(const SignedGraph& g,
                            const std::vector<int>& keep_vertices,
                            const std::vector<int>& keep_edge_indices);
SignedGraph signed_subgraph(const SignedGraph& g,
                            const std::vector<VertexId>& keep_vertices,
                            const std::vector<std::pair<VertexId, VertexId>>& keep_edges);

/// If g is switching-equivalent to the all-negative graph, returns a vertex
/// set X (as sorted indices, possibly empty) with switched(g, X) all
/// negative; otherwise nullopt. Works per connected component by
/// parity-labelled traversal of the sign-negated graph.
std::optional<std::vector<int>> is_antibalanced(const SignedGraph& g);

} // namespace signedat
