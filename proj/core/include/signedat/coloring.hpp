#pragma once

#include <optional>
#include <vector>

#include "signedat/signed_graph.hpp"
#include "signedat/triangulation.hpp"

namespace signedat {

/// Combinatorial budget shared by the list-coloring and refutation searches.
inline constexpr unsigned long long kDefaultSearchCap = 10'000'000ULL;

/// The symmetric palette with exactly k colors:
/// {-q, ..., -1, 1, ..., q} for k = 2q and {-q, ..., q} for k = 2q + 1,
/// in ascending order. Throws std::invalid_argument for k < 1.
std::vector<int> palette(int k);

/// Whether the assignment phi (one color per vertex, in vertex order) is a
/// proper coloring: phi(u) != sigma(uv) * phi(v) on every edge uv. Throws
/// std::invalid_argument when the size does not match the vertex count.
bool is_proper(const SignedGraph& g, const std::vector<int>& phi);

struct ChromaticResult {
    int chromatic_number = 0;
    std::vector<int> coloring; // a proper coloring from palette(chromatic_number)
};

/// Least k such that g admits a proper coloring with colors in palette(k),
/// found by backtracking for k = 1, 2, ...; the witness is the first proper
/// coloring in lexicographic order (vertices in order, palette ascending).
/// The budget caps backtracking nodes across all k; exceeding it throws
/// ResourceLimitError.
ChromaticResult chromatic_number(const SignedGraph& g,
                                 unsigned long long budget = kDefaultSearchCap);

/// One color list per vertex, in vertex order.
using ListAssignment = std::vector<std::vector<int>>;

struct ListColorResult {
    std::optional<std::vector<int>> coloring; // first witness in list order
    unsigned long long assignments_ruled_out = 0;
    bool exhausted = false; // true when every assignment was excluded
};

/// Searches for a proper coloring with phi(v) drawn from lists[v], vertices
/// in order and each list in its stored order, so the witness is the
/// lexicographically first in list order. assignments_ruled_out counts the
/// full assignments excluded by dead partial colorings; on failure it equals
/// the product of the list sizes and exhausted is set. The product must not
/// exceed the cap (ResourceLimitError otherwise). Throws
/// std::invalid_argument on a size mismatch or an empty list.
ListColorResult list_color(const SignedGraph& g, const ListAssignment& lists,
                           unsigned long long search_cap = kDefaultSearchCap);

/// A fixed 8-vertex near-triangulation together with 3-element lists from
/// {-2,...,2} that admit no proper list coloring. Vertices are ordered
/// a, b, c, d, a', b', c', d'; a,b,c,d induce an all-negative K4, each primed
/// vertex is joined by positive edges to three unprimed ones, and the outer
/// cycle is (a', b, c).
struct HardInstance {
    NearTriangulation shape;
    ListAssignment lists;
};
HardInstance figure2_instance();

/// Structural facts behind the instance's uncolorability, checked by
/// exhausting the at most 3^4 assignments to a, b, c, d from their lists
/// that are proper on the K4 they induce.
struct ClaimsReport {
    unsigned long long proper_partial_count = 0;
    bool every_partial_uses_zero = false;     // some vertex always gets color 0
    bool zero_forces_negated_lists = false;   // phi(x) = 0 forces
                                              // phi(N(x')) = -L(x') setwise
    bool zero_at_first_forces_rest = false;   // phi(a) = 0 forces phi(b) = 2,
                                              // phi(c) = 1
    bool no_zero_free_partial_starts_minus_one = false; // phi(a) = -1 is
                                              // infeasible when 0 is unused
    bool all() const {
        return every_partial_uses_zero && zero_forces_negated_lists &&
               zero_at_first_forces_rest && no_zero_free_partial_starts_minus_one;
    }
};

/// Runs the exhaustive claim checks on a graph and list assignment shaped
/// like figure2_instance(); throws std::invalid_argument otherwise.
ClaimsReport verify_claims(const SignedGraph& g, const ListAssignment& lists);

/// Searches for a k-list assignment with colors drawn from {-m, ..., m} that
/// admits no proper coloring, i.e. a witness that g is not k-choosable.
/// Depth-first over per-vertex sorted k-subsets in lexicographic order;
/// negating every list maps refutations to refutations, so the first
/// vertex's list is restricted to at most its negation. Any returned
/// assignment is re-verified by exhaustive enumeration. The budget caps
/// elementary search steps; exceeding it throws ResourceLimitError.
std::optional<ListAssignment>
refute_choosability(const SignedGraph& g, int k, int m,
                    unsigned long long budget = kDefaultSearchCap);

} // namespace signedat
