#include "signedat/density.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

#include "signedat/errors.hpp"

namespace signedat {

namespace {

std::vector<std::uint32_t> adjacency_masks(const SignedGraph& g) {
    std::vector<std::uint32_t> adj(static_cast<size_t>(g.vertex_count()), 0);
    for (const SignedEdge& e : g.edges()) {
        adj[static_cast<size_t>(e.lo)] |= std::uint32_t{1} << e.hi;
        adj[static_cast<size_t>(e.hi)] |= std::uint32_t{1} << e.lo;
    }
    return adj;
}

} // namespace

DensityReport mad(const SignedGraph& g, int vertex_cap) {
    const int n = g.vertex_count();
    if (n == 0)
        throw std::invalid_argument("mad is undefined for a graph with no vertices");
    if (vertex_cap < 1 || vertex_cap > 30)
        throw std::invalid_argument("mad vertex cap must be between 1 and 30");
    if (n > vertex_cap)
        throw ResourceLimitError("mad: graph has " + std::to_string(n) +
                                 " vertices, above the exhaustive-scan cap of " +
                                 std::to_string(vertex_cap));

    const std::vector<std::uint32_t> adj = adjacency_masks(g);

    DensityReport best;
    best.numerator = 0;
    best.denominator = 1;
    best.witness = {0};

    const std::uint32_t full = (n == 32) ? ~std::uint32_t{0}
                                         : ((std::uint32_t{1} << n) - 1);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const int size = std::popcount(mask);
        long long edges = 0;
        std::uint32_t rest = mask;
        while (rest != 0) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            // Count only neighbours below v so each induced edge is seen once.
            edges += std::popcount(adj[static_cast<size_t>(v)] & mask &
                                   ((std::uint32_t{1} << v) - 1));
        }
        // 2*edges/size > best.numerator/best.denominator, cross-multiplied.
        if (2 * edges * best.denominator > best.numerator * size) {
            const long long d = std::gcd(2 * edges, static_cast<long long>(size));
            best.numerator = (d == 0) ? 0 : 2 * edges / d;
            best.denominator = (d == 0) ? 1 : size / d;
            best.witness.clear();
            for (int v = 0; v < n; ++v)
                if (mask & (std::uint32_t{1} << v))
                    best.witness.push_back(v);
        }
    }
    return best;
}

std::optional<Orientation> bounded_outdegree_orientation(const SignedGraph& g, int p) {
    if (p < 0)
        throw std::invalid_argument("outdegree bound must be non-negative");
    const int m = g.edge_count();
    if (m > 64)
        throw ResourceLimitError("orientations are limited to 64 edges, got " +
                                 std::to_string(m));

    const int n = g.vertex_count();
    std::vector<int> outdeg(static_cast<size_t>(n), 0);
    std::uint64_t mask = 0; // bit set <=> edge oriented hi -> lo

    // Greedy start: each edge leaves the endpoint that is currently less
    // loaded, ties broken toward the lower-indexed endpoint.
    for (int i = 0; i < m; ++i) {
        const SignedEdge& e = g.edge(i);
        int tail = e.lo;
        if (outdeg[static_cast<size_t>(e.hi)] < outdeg[static_cast<size_t>(e.lo)])
            tail = e.hi;
        if (tail == e.hi)
            mask |= std::uint64_t{1} << i;
        ++outdeg[static_cast<size_t>(tail)];
    }

    // Repair: reverse a shortest directed path from an overloaded vertex to
    // one with spare capacity. Breadth-first search follows current edge
    // directions, expanding out-neighbours in ascending vertex order.
    std::vector<int> out_tails; // scratch
    while (true) {
        int start = -1;
        for (int v = 0; v < n; ++v) {
            if (outdeg[static_cast<size_t>(v)] > p) {
                start = v;
                break;
            }
        }
        if (start < 0)
            break;

        std::vector<int> parent_edge(static_cast<size_t>(n), -1);
        std::vector<int> parent_vertex(static_cast<size_t>(n), -1);
        std::vector<char> seen(static_cast<size_t>(n), 0);
        seen[static_cast<size_t>(start)] = 1;
        std::queue<int> frontier;
        frontier.push(start);
        int target = -1;
        while (!frontier.empty() && target < 0) {
            const int u = frontier.front();
            frontier.pop();
            // Collect heads of edges leaving u, ascending by vertex index.
            std::vector<std::pair<int, int>> outs; // (head, edge index)
            for (int ei : g.incident_edges(u)) {
                const SignedEdge& e = g.edge(ei);
                const bool reversed = (mask >> ei) & 1;
                const int tail = reversed ? e.hi : e.lo;
                if (tail != u)
                    continue;
                outs.emplace_back(reversed ? e.lo : e.hi, ei);
            }
            std::sort(outs.begin(), outs.end());
            for (const auto& [w, ei] : outs) {
                if (seen[static_cast<size_t>(w)])
                    continue;
                seen[static_cast<size_t>(w)] = 1;
                parent_edge[static_cast<size_t>(w)] = ei;
                parent_vertex[static_cast<size_t>(w)] = u;
                if (outdeg[static_cast<size_t>(w)] < p) {
                    target = w;
                    break;
                }
                frontier.push(w);
            }
        }
        if (target < 0) {
            // Everything reachable from `start` keeps its out-edges inside the
            // reachable set and has outdegree >= p (with `start` above p), so
            // that set induces average degree above 2p: no orientation fits.
            return std::nullopt;
        }
        for (int w = target; w != start; w = parent_vertex[static_cast<size_t>(w)])
            mask ^= std::uint64_t{1} << parent_edge[static_cast<size_t>(w)];
        --outdeg[static_cast<size_t>(start)];
        ++outdeg[static_cast<size_t>(target)];
    }

    return Orientation(g, mask);
}

AtNegativeResult at_all_negative(const SignedGraph& g, int vertex_cap) {
    if (!g.all_negative())
        throw std::invalid_argument(
            "at_all_negative requires every edge to be negative");

    AtNegativeResult result;
    result.density = mad(g, vertex_cap);

    // k = ceil(mad / 2) + 1, on the exact fraction.
    const long long num = result.density.numerator;
    const long long den = 2 * result.density.denominator;
    const long long p = (num + den - 1) / den;
    result.at_number = static_cast<int>(p) + 1;

    std::optional<Orientation> d = bounded_outdegree_orientation(g, static_cast<int>(p));
    if (!d)
        throw std::logic_error("no orientation with outdegree at most ceil(mad/2) "
                               "despite mad <= 2*ceil(mad/2)");
    result.orientation_mask = d->mask();
    return result;
}

} // namespace signedat
