#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "signedat/signed_graph.hpp"

namespace signedat {

/// Default ceiling on edge counts for the exhaustive enumerations below.
inline constexpr int kDefaultEnumerationCap = 20;

/// An orientation of every edge of a signed graph, encoded as a bitmask over
/// the graph's edge order: bit e clear means edge e runs lo -> hi, bit e set
/// means hi -> lo. Masks therefore enumerate orientations reproducibly as
/// plain integers. The base graph must outlive the orientation.
class Orientation {
public:
    Orientation(const SignedGraph& g, std::uint64_t mask);

    const SignedGraph& graph() const { return *graph_; }
    std::uint64_t mask() const { return mask_; }

    bool is_reversed(int e) const { return (mask_ >> e) & 1u; }
    int tail(int e) const {
        const SignedEdge& ed = graph_->edge(e);
        return is_reversed(e) ? ed.hi : ed.lo;
    }
    int head(int e) const {
        const SignedEdge& ed = graph_->edge(e);
        return is_reversed(e) ? ed.lo : ed.hi;
    }

    int outdegree(int v) const { return outdegree_[static_cast<size_t>(v)]; }
    const std::vector<int>& outdegrees() const { return outdegree_; }
    int max_outdegree() const;

    /// (tail, head) vertex indices per edge, in edge order.
    std::vector<std::pair<int, int>> directed_edges() const;

    /// Number of sigma-decreasing edges: positive sign and oriented from the
    /// larger vertex to the smaller one. Negative edges never count.
    int sigma_decreasing_count() const;
    /// Parity class of the orientation by the count above.
    bool sigma_even() const { return sigma_decreasing_count() % 2 == 0; }

private:
    const SignedGraph* graph_;
    std::uint64_t mask_;
    std::vector<int> outdegree_;
};

/// An edge subset of an orientation in which every vertex has equal indegree
/// and outdegree; may be empty or disconnected. Classified sigma-even or
/// sigma-odd by the parity of its positive edges.
struct EulerianSubdigraph {
    std::uint64_t edge_mask = 0;
    int positive_count = 0;
    bool sigma_even() const { return positive_count % 2 == 0; }
};

struct ImbalanceReport {
    unsigned long long even_count = 0; // sigma-even Eulerian subdigraphs
    unsigned long long odd_count = 0;  // sigma-odd Eulerian subdigraphs
    long long diff = 0;                // even_count - odd_count

    bool operator==(const ImbalanceReport&) const = default;
};

/// Counts, over all 2^|E| orientations with outdegree sequence d, how many
/// are sigma-even (first) and sigma-odd (second). Their difference equals
/// the coefficient of the monomial with exponents d in the expansion.
std::pair<unsigned long long, unsigned long long>
count_by_outdegree(const SignedGraph& g, const std::vector<int>& d,
                   int enumeration_cap = kDefaultEnumerationCap);

/// All Eulerian subdigraphs of o, in ascending edge-bitmask order; always
/// contains the empty one. Directed edges that cannot lie on any directed
/// cycle (found by iteratively discarding edges at a vertex with no
/// remaining in- or out-edges) are removed before the subset scan, so the
/// cap applies to the edges that can actually participate.
std::vector<EulerianSubdigraph> enumerate_eulerian(const Orientation& o,
                                                   int enumeration_cap = kDefaultEnumerationCap);

/// Counts of sigma-even and sigma-odd Eulerian subdigraphs and their
/// difference. Same trimming and cap policy as enumerate_eulerian.
ImbalanceReport eulerian_imbalance(const Orientation& o,
                                   int enumeration_cap = kDefaultEnumerationCap);

/// The coefficient of the monomial whose exponents are o's outdegrees:
/// +diff when o is sigma-even, -diff when sigma-odd.
long long coefficient_via_orientation(const SignedGraph& g, const Orientation& o,
                                      int enumeration_cap = kDefaultEnumerationCap);

struct AtOrientResult {
    int at_number = 0;
    std::uint64_t witness_mask = 0;
    ImbalanceReport report;
};

/// The minimum k admitting an orientation with every outdegree below k and
/// nonzero Eulerian imbalance; searches k ascending and, within each k,
/// orientation masks ascending, so the witness is the least mask for the
/// minimal k.
AtOrientResult at_number_orient(const SignedGraph& g,
                                int enumeration_cap = kDefaultEnumerationCap);

/// Calls visit(mask) for every orientation whose outdegrees respect the
/// per-vertex bounds, in ascending mask order; stops early when visit
/// returns false. Returns false on early stop.
bool for_each_bounded_orientation(const SignedGraph& g, const std::vector<int>& bounds,
                                  const std::function<bool(std::uint64_t)>& visit);

/// Builds the orientation mask matching a list of (tail, head) vertex-name
/// pairs. The list must direct every edge of g exactly once; on any
/// mismatch returns nullopt and, when error is non-null, a description of
/// the first problem. Suitable for re-checking untrusted certificate data.
std::optional<std::uint64_t>
mask_from_directed_edges(const SignedGraph& g,
                         const std::vector<std::pair<VertexId, VertexId>>& directed,
                         std::string* error = nullptr);

} // namespace signedat
