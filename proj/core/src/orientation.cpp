#include "signedat/orientation.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "signedat/errors.hpp"

namespace signedat {

namespace {

void check_mask_capacity(const SignedGraph& g) {
    if (g.edge_count() > 64)
        throw std::invalid_argument("orientation bitmasks support at most 64 edges, graph has " +
                                    std::to_string(g.edge_count()));
}

void check_enumeration_cap(int edges, int cap, const char* what) {
    if (cap > 62)
        throw std::invalid_argument("enumeration cap above 62 is not supported");
    if (edges > cap)
        throw ResourceLimitError(std::string(what) + " needs " + std::to_string(edges) +
                                 " edges enumerated, above the cap of " + std::to_string(cap));
}

std::uint64_t positive_mask(const SignedGraph& g) {
    std::uint64_t m = 0;
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.edge(e).sign == 1)
            m |= 1ull << e;
    return m;
}

} // namespace

Orientation::Orientation(const SignedGraph& g, std::uint64_t mask) : graph_(&g), mask_(mask) {
    check_mask_capacity(g);
    if (g.edge_count() < 64 && (mask >> g.edge_count()) != 0)
        throw std::invalid_argument("orientation mask has bits beyond the edge count");
    outdegree_.assign(static_cast<size_t>(g.vertex_count()), 0);
    for (int e = 0; e < g.edge_count(); ++e)
        ++outdegree_[static_cast<size_t>(tail(e))];
}

int Orientation::max_outdegree() const {
    int best = 0;
    for (int d : outdegree_)
        best = std::max(best, d);
    return best;
}

std::vector<std::pair<int, int>> Orientation::directed_edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(graph_->edge_count()));
    for (int e = 0; e < graph_->edge_count(); ++e)
        out.emplace_back(tail(e), head(e));
    return out;
}

int Orientation::sigma_decreasing_count() const {
    // A reversed edge runs hi -> lo, i.e. from the larger vertex to the
    // smaller; it is sigma-decreasing exactly when also positive.
    return static_cast<int>(std::popcount(mask_ & positive_mask(*graph_)));
}

std::pair<unsigned long long, unsigned long long>
count_by_outdegree(const SignedGraph& g, const std::vector<int>& d, int enumeration_cap) {
    if (static_cast<int>(d.size()) != g.vertex_count())
        throw std::invalid_argument("outdegree sequence has wrong length");
    check_mask_capacity(g);
    check_enumeration_cap(g.edge_count(), enumeration_cap, "orientation enumeration");

    long long total = std::accumulate(d.begin(), d.end(), 0ll);
    if (total != g.edge_count())
        return {0, 0};

    std::uint64_t pos = positive_mask(g);
    unsigned long long even = 0, odd = 0;
    std::vector<int> outdeg(static_cast<size_t>(g.vertex_count()));
    for (std::uint64_t mask = 0; mask < (1ull << g.edge_count()); ++mask) {
        std::fill(outdeg.begin(), outdeg.end(), 0);
        for (int e = 0; e < g.edge_count(); ++e) {
            const SignedEdge& ed = g.edge(e);
            int tail = ((mask >> e) & 1u) ? ed.hi : ed.lo;
            ++outdeg[static_cast<size_t>(tail)];
        }
        if (!std::equal(outdeg.begin(), outdeg.end(), d.begin()))
            continue;
        if (std::popcount(mask & pos) % 2 == 0)
            ++even;
        else
            ++odd;
    }
    return {even, odd};
}

namespace {

/// Subset scan over the directed edges that survive trimming. Edges are
/// visited in an order that finishes vertices early (sorted by larger
/// endpoint, then smaller), so the balance test |out - in| <= remaining
/// incident edges prunes most of the 2^m subsets.
class EulerianScan {
public:
    EulerianScan(const Orientation& o, int enumeration_cap) : o_(o) {
        const SignedGraph& g = o.graph();
        int m = g.edge_count();
        std::vector<char> active(static_cast<size_t>(m), 1);

        // An edge into a vertex with no usable out-edge (or out of a vertex
        // with no usable in-edge) lies on no directed cycle, hence in no
        // Eulerian subdigraph. Discard such edges to a fixpoint.
        std::vector<int> out_cap(static_cast<size_t>(g.vertex_count()), 0);
        std::vector<int> in_cap(static_cast<size_t>(g.vertex_count()), 0);
        for (int e = 0; e < m; ++e) {
            ++out_cap[static_cast<size_t>(o.tail(e))];
            ++in_cap[static_cast<size_t>(o.head(e))];
        }
        bool changed = true;
        while (changed) {
            changed = false;
            for (int e = 0; e < m; ++e) {
                if (!active[static_cast<size_t>(e)])
                    continue;
                int t = o.tail(e), h = o.head(e);
                if (in_cap[static_cast<size_t>(t)] == 0 || out_cap[static_cast<size_t>(h)] == 0) {
                    active[static_cast<size_t>(e)] = 0;
                    --out_cap[static_cast<size_t>(t)];
                    --in_cap[static_cast<size_t>(h)];
                    changed = true;
                }
            }
        }

        for (int e = 0; e < m; ++e)
            if (active[static_cast<size_t>(e)])
                order_.push_back(e);
        check_enumeration_cap(static_cast<int>(order_.size()), enumeration_cap,
                              "Eulerian subdigraph scan");
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            const SignedEdge& ea = o.graph().edge(a);
            const SignedEdge& eb = o.graph().edge(b);
            return std::pair(ea.hi, ea.lo) < std::pair(eb.hi, eb.lo);
        });

        remaining_.assign(static_cast<size_t>(g.vertex_count()), 0);
        for (int e : order_) {
            ++remaining_[static_cast<size_t>(o.tail(e))];
            ++remaining_[static_cast<size_t>(o.head(e))];
        }
        balance_.assign(static_cast<size_t>(g.vertex_count()), 0);
    }

    template <typename Leaf>
    void run(const Leaf& leaf) {
        step(0, 0ull, 0, leaf);
    }

private:
    template <typename Leaf>
    void step(size_t pos, std::uint64_t mask, int positive, const Leaf& leaf) {
        if (pos == order_.size()) {
            leaf(mask, positive);
            return;
        }
        int e = order_[pos];
        int t = o_.tail(e), h = o_.head(e);
        --remaining_[static_cast<size_t>(t)];
        --remaining_[static_cast<size_t>(h)];

        auto feasible = [&] {
            return std::abs(balance_[static_cast<size_t>(t)]) <=
                       remaining_[static_cast<size_t>(t)] &&
                   std::abs(balance_[static_cast<size_t>(h)]) <=
                       remaining_[static_cast<size_t>(h)];
        };

        if (feasible())
            step(pos + 1, mask, positive, leaf);

        ++balance_[static_cast<size_t>(t)];
        --balance_[static_cast<size_t>(h)];
        if (feasible()) {
            int p = positive + (o_.graph().edge(e).sign == 1 ? 1 : 0);
            step(pos + 1, mask | (1ull << e), p, leaf);
        }
        --balance_[static_cast<size_t>(t)];
        ++balance_[static_cast<size_t>(h)];

        ++remaining_[static_cast<size_t>(t)];
        ++remaining_[static_cast<size_t>(h)];
    }

    const Orientation& o_;
    std::vector<int> order_;      // surviving edges, vertex-finishing order
    std::vector<int> remaining_;  // undecided incident edges per vertex
    std::vector<int> balance_;    // chosen out minus chosen in per vertex
};

} // namespace

std::vector<EulerianSubdigraph> enumerate_eulerian(const Orientation& o, int enumeration_cap) {
    std::vector<EulerianSubdigraph> out;
    EulerianScan scan(o, enumeration_cap);
    scan.run([&](std::uint64_t mask, int positive) {
        out.push_back(EulerianSubdigraph{mask, positive});
    });
    std::sort(out.begin(), out.end(),
              [](const EulerianSubdigraph& a, const EulerianSubdigraph& b) {
                  return a.edge_mask < b.edge_mask;
              });
    return out;
}

ImbalanceReport eulerian_imbalance(const Orientation& o, int enumeration_cap) {
    ImbalanceReport r;
    EulerianScan scan(o, enumeration_cap);
    scan.run([&](std::uint64_t, int positive) {
        if (positive % 2 == 0)
            ++r.even_count;
        else
            ++r.odd_count;
    });
    r.diff = static_cast<long long>(r.even_count) - static_cast<long long>(r.odd_count);
    return r;
}

long long coefficient_via_orientation(const SignedGraph& g, const Orientation& o,
                                      int enumeration_cap) {
    if (&o.graph() != &g &&
        (o.graph().vertices() != g.vertices() ||
         o.graph().edge_count() != g.edge_count()))
        throw std::invalid_argument("orientation does not belong to the given graph");
    ImbalanceReport r = eulerian_imbalance(o, enumeration_cap);
    return o.sigma_even() ? r.diff : -r.diff;
}

bool for_each_bounded_orientation(const SignedGraph& g, const std::vector<int>& bounds,
                                  const std::function<bool(std::uint64_t)>& visit) {
    if (static_cast<int>(bounds.size()) != g.vertex_count())
        throw std::invalid_argument("outdegree bound vector has wrong length");
    check_mask_capacity(g);
    int m = g.edge_count();
    std::vector<int> outdeg(static_cast<size_t>(g.vertex_count()), 0);

    // Assign the highest-indexed edge first with the 0 branch (lo -> hi)
    // before the 1 branch, which emits masks in ascending integer order.
    std::function<bool(int, std::uint64_t)> rec = [&](int e, std::uint64_t mask) -> bool {
        if (e < 0)
            return visit(mask);
        const SignedEdge& ed = g.edge(e);
        for (int rev = 0; rev < 2; ++rev) {
            int tail = rev ? ed.hi : ed.lo;
            if (outdeg[static_cast<size_t>(tail)] >= bounds[static_cast<size_t>(tail)])
                continue;
            ++outdeg[static_cast<size_t>(tail)];
            bool keep = rec(e - 1, rev ? (mask | (1ull << e)) : mask);
            --outdeg[static_cast<size_t>(tail)];
            if (!keep)
                return false;
        }
        return true;
    };
    return rec(m - 1, 0ull);
}

std::optional<std::uint64_t>
mask_from_directed_edges(const SignedGraph& g,
                         const std::vector<std::pair<VertexId, VertexId>>& directed,
                         std::string* error) {
    auto fail = [&](const std::string& why) -> std::optional<std::uint64_t> {
        if (error)
            *error = why;
        return std::nullopt;
    };
    if (static_cast<int>(directed.size()) != g.edge_count())
        return fail("directed edge list has " + std::to_string(directed.size()) +
                    " entries, graph has " + std::to_string(g.edge_count()) + " edges");
    if (g.edge_count() > 64)
        return fail("graph too large for an orientation mask");
    std::uint64_t mask = 0, seen = 0;
    for (const auto& [tail_name, head_name] : directed) {
        auto t = g.find_vertex(tail_name);
        auto h = g.find_vertex(head_name);
        if (!t || !h)
            return fail("directed edge " + tail_name + "->" + head_name +
                        " mentions an unknown vertex");
        auto e = g.find_edge(*t, *h);
        if (!e)
            return fail("directed edge " + tail_name + "->" + head_name +
                        " is not an edge of the graph");
        if ((seen >> *e) & 1u)
            return fail("edge " + tail_name + "-" + head_name + " is directed twice");
        seen |= 1ull << *e;
        if (*t > *h)
            mask |= 1ull << *e;
    }
    return mask;
}

AtOrientResult at_number_orient(const SignedGraph& g, int enumeration_cap) {
    check_mask_capacity(g);
    check_enumeration_cap(g.edge_count(), enumeration_cap, "orientation search");

    // An orientation along the vertex order is acyclic, so only the empty
    // Eulerian subdigraph survives and its imbalance is 1; k never needs to
    // exceed one more than the maximum degree.
    int max_deg = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        max_deg = std::max(max_deg, g.degree(v));

    for (int k = 1; k <= max_deg + 1; ++k) {
        std::vector<int> bounds(static_cast<size_t>(g.vertex_count()), k - 1);
        AtOrientResult found;
        bool stopped = !for_each_bounded_orientation(g, bounds, [&](std::uint64_t mask) {
            Orientation o(g, mask);
            ImbalanceReport r = eulerian_imbalance(o, enumeration_cap);
            if (r.diff != 0) {
                found.at_number = k;
                found.witness_mask = mask;
                found.report = r;
                return false;
            }
            return true;
        });
        if (stopped)
            return found;
    }
    throw std::logic_error("no orientation with nonzero imbalance found; "
                           "an acyclic orientation should always qualify");
}

} // namespace signedat
