#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "signedat/orientation.hpp"
#include "signedat/signed_graph.hpp"

namespace signedat {

/// A plane graph whose outer boundary is a cycle and whose inner faces are
/// all triangles. The embedding is data (outer cycle plus face list), not
/// something this library computes.
struct NearTriangulation {
    SignedGraph graph;
    std::vector<int> outer_cycle;                // vertex indices v1..vk in cyclic order
    std::vector<std::array<int, 3>> inner_faces; // vertex index triples
};

struct ValidationResult {
    bool ok = true;
    std::string diagnostic; // names the first violated clause when !ok
};

/// Checks every structural invariant: the outer cycle is a cycle of the
/// graph, inner faces are distinct triangles, Euler's relation
/// |V| - |E| + (#inner faces + 1) = 2 holds, every outer edge lies on
/// exactly one inner face and every other edge on exactly two, and the
/// graph is connected.
ValidationResult validate(const NearTriangulation& t);

/// Least j (1-based position on the outer cycle, 2 <= j <= k-2) such that
/// v_k v_j is an edge, i.e. an outer chord at v_k; nullopt when chordless.
std::optional<int> find_outer_chord(const NearTriangulation& t);

/// Neighbors of v_k in facial order: v_{k-1}, u_1, ..., u_s, v_1, where
/// v_k v_{k-1} u_1, v_k u_1 u_2, ..., v_k u_s v_1 are the inner faces at
/// v_k. Requires no outer chord at v_k; throws std::invalid_argument on a
/// chord or inconsistent face data.
std::vector<int> fan_neighbors(const NearTriangulation& t);

/// The same plane structure with the outer cycle rotated (and reflected if
/// needed) so that the outer edge {u, v} occupies positions 1, 2. Throws
/// std::invalid_argument when u, v are not consecutive outer vertices.
NearTriangulation rotate_outer_to_edge(const NearTriangulation& t, const VertexId& u,
                                       const VertexId& v);

/// t's graph with the designated outer edge (positions 1, 2 of the outer
/// cycle) removed; vertex and edge order are otherwise preserved. Throws
/// std::invalid_argument when that edge is missing.
SignedGraph graph_without_designated_edge(const NearTriangulation& t);

enum class BoundClass { BoundaryAnchor, Boundary, Interior };

struct OutdegreeAuditRow {
    VertexId vertex;
    BoundClass bound_class = BoundClass::Interior;
    int bound = 0;     // allowed maximum outdegree
    int outdegree = 0; // actual outdegree
};

enum class CertificateKind {
    NiceMinusEdge, // orientation of G - e with outdegree 0 at v1 and v2
    At5Full        // orientation of all of G, the added edge directed v1 -> v2
};

/// A checkable witness: the oriented graph, its orientation mask, the
/// designated outer edge, the Eulerian imbalance, and a per-vertex
/// outdegree audit. Everything here can be recomputed from the directed
/// edge list and the plane structure alone.
struct NiceOrientationCertificate {
    CertificateKind kind = CertificateKind::NiceMinusEdge;
    NearTriangulation shape; // the full graph G with its embedding
    std::shared_ptr<const SignedGraph> oriented_graph; // G - e, or G for At5Full
    std::uint64_t mask = 0;
    std::pair<VertexId, VertexId> designated_edge;
    ImbalanceReport report;
    std::vector<OutdegreeAuditRow> audit;
    std::vector<std::string> branch_trace; // which construction branch fired per level

    Orientation orientation() const { return Orientation(*oriented_graph, mask); }
};

/// Constructs an orientation of G - v1v2 with nonzero Eulerian imbalance,
/// outdegree 0 at v1 and v2, at most 2 on the rest of the outer cycle, and
/// at most 4 at interior vertices. Recursive construction: triangle base
/// case; split along an outer chord at v_k with the imbalance multiplying
/// across the parts; peel v_k when the outer cycle is a triangle; otherwise
/// extend the peeled solution directly or, if its imbalance vanishes, from
/// the first imbalanced "special" orientation. The result is re-verified by
/// enumeration before return; an unverifiable result throws
/// std::logic_error, never returns silently.
NiceOrientationCertificate nice_orientation(const NearTriangulation& t,
                                            int enumeration_cap = kDefaultEnumerationCap);
/// Same, after rotating the outer cycle so the designated edge is {u, v}.
NiceOrientationCertificate nice_orientation(const NearTriangulation& t, const VertexId& u,
                                            const VertexId& v,
                                            int enumeration_cap = kDefaultEnumerationCap);

/// All orientations of g_prime whose outdegrees respect the per-vertex
/// bounds, in ascending mask order. The bounds encode the construction's
/// "special" roles: designated vertices 0, v_{k-1} at most 1, other outer
/// vertices at most 2, fan vertices at most 3, interior at most 4.
std::vector<Orientation> enumerate_special(const SignedGraph& g_prime,
                                           const std::vector<int>& max_outdegree,
                                           int enumeration_cap = kDefaultEnumerationCap);

/// nice_orientation plus the designated edge directed v1 -> v2. All
/// outdegrees are at most 4 and the imbalance is unchanged (v2 keeps
/// outdegree 0, so the added edge joins no Eulerian subdigraph), which
/// certifies AT(G, sigma) <= 5.
NiceOrientationCertificate at5_certificate(const NearTriangulation& t,
                                           int enumeration_cap = kDefaultEnumerationCap);

/// Audit rows (in vertex order) for an orientation o of t's graph (kind
/// At5Full) or of t's graph without the designated edge (kind
/// NiceMinusEdge): outer positions 1 and 2 are anchors bounded by 0 (the
/// first anchor gets 1 when the designated edge is present), other outer
/// vertices by 2, interior vertices by 4. Bounds are reported, not
/// enforced; callers decide what a violation means.
std::vector<OutdegreeAuditRow> audit_outdegrees(const NearTriangulation& t,
                                                CertificateKind kind, const Orientation& o);

/// Completes a plane embedding into a near triangulation by fanning
/// diagonals (sign +1) across every non-triangular inner face. The outer
/// boundary must already be a simple cycle; faces are simple polygons given
/// as vertex index sequences, outer face excluded. The input graph's
/// vertices and edges are preserved as a prefix, so certificates for the
/// result transfer to the input by subgraph monotonicity of AT.
NearTriangulation triangulate_embedding(const SignedGraph& g, const std::vector<int>& outer_cycle,
                                        const std::vector<std::vector<int>>& inner_faces);

const char* to_string(BoundClass c);
const char* to_string(CertificateKind k);

} // namespace signedat
