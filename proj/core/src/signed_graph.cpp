#include "signedat/signed_graph.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace signedat {

namespace {

void validate_vertex_name(const VertexId& name) {
    if (name.empty())
        throw std::invalid_argument("vertex name must be non-empty");
    for (unsigned char c : name) {
        if (std::isspace(c) || std::iscntrl(c))
            throw std::invalid_argument("vertex name '" + name +
                                        "' contains whitespace or control characters");
    }
    if (name.find(',') != std::string::npos || name.find(':') != std::string::npos ||
        name.find("->") != std::string::npos)
        throw std::invalid_argument("vertex name '" + name +
                                    "' contains a reserved character sequence");
}

} // namespace

SignedGraph::SignedGraph(std::vector<VertexId> vertices,
                         const std::vector<std::tuple<VertexId, VertexId, int>>& edges)
    : vertices_(std::move(vertices)) {
    std::unordered_map<std::string, int> index;
    index.reserve(vertices_.size());
    for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) {
        validate_vertex_name(vertices_[static_cast<size_t>(i)]);
        auto [it, inserted] = index.emplace(vertices_[static_cast<size_t>(i)], i);
        if (!inserted)
            throw std::invalid_argument("duplicate vertex '" + vertices_[static_cast<size_t>(i)] +
                                        "'");
    }

    incident_.assign(vertices_.size(), {});
    std::set<std::pair<int, int>> seen;
    edges_.reserve(edges.size());
    for (const auto& [a, b, sign] : edges) {
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end())
            throw std::invalid_argument("edge endpoint '" + a + "' is not a vertex");
        if (ib == index.end())
            throw std::invalid_argument("edge endpoint '" + b + "' is not a vertex");
        if (sign != 1 && sign != -1)
            throw std::invalid_argument("edge sign must be 1 or -1, got " +
                                        std::to_string(sign));
        int lo = std::min(ia->second, ib->second);
        int hi = std::max(ia->second, ib->second);
        if (lo == hi)
            throw std::invalid_argument("loop at vertex '" + a + "' is not allowed");
        if (!seen.emplace(lo, hi).second)
            throw std::invalid_argument("parallel edge between '" + a + "' and '" + b + "'");
        int e = static_cast<int>(edges_.size());
        edges_.push_back(SignedEdge{lo, hi, sign});
        incident_[static_cast<size_t>(lo)].push_back(e);
        incident_[static_cast<size_t>(hi)].push_back(e);
    }
}

int SignedGraph::index_of(const VertexId& name) const {
    auto v = find_vertex(name);
    if (!v)
        throw std::invalid_argument("unknown vertex '" + name + "'");
    return *v;
}

std::optional<int> SignedGraph::find_vertex(const VertexId& name) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (vertices_[static_cast<size_t>(i)] == name)
            return i;
    return std::nullopt;
}

std::optional<int> SignedGraph::find_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count() || u == v)
        return std::nullopt;
    int lo = std::min(u, v);
    int hi = std::max(u, v);
    const auto& inc = incident_[static_cast<size_t>(lo)];
    for (int e : inc) {
        const SignedEdge& ed = edges_[static_cast<size_t>(e)];
        if (ed.lo == lo && ed.hi == hi)
            return e;
    }
    return std::nullopt;
}

std::vector<int> SignedGraph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(incident_[static_cast<size_t>(v)].size());
    for (int e : incident_[static_cast<size_t>(v)]) {
        const SignedEdge& ed = edges_[static_cast<size_t>(e)];
        out.push_back(ed.lo == v ? ed.hi : ed.lo);
    }
    return out;
}

bool SignedGraph::all_negative() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const SignedEdge& e) { return e.sign == -1; });
}

bool SignedGraph::all_positive() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const SignedEdge& e) { return e.sign == 1; });
}

SignedGraph switched(const SignedGraph& g, const std::vector<int>& switch_set) {
    std::vector<char> in_set(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : switch_set) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("switch set contains out-of-range vertex index " +
                                        std::to_string(v));
        in_set[static_cast<size_t>(v)] = 1;
    }
    std::vector<std::tuple<VertexId, VertexId, int>> edges;
    edges.reserve(static_cast<size_t>(g.edge_count()));
    for (const SignedEdge& e : g.edges()) {
        int sign = e.sign;
        if (in_set[static_cast<size_t>(e.lo)] != in_set[static_cast<size_t>(e.hi)])
            sign = -sign;
        edges.emplace_back(g.vertex_name(e.lo), g.vertex_name(e.hi), sign);
    }
    return SignedGraph(g.vertices(), edges);
}

SignedGraph switched(const SignedGraph& g, const std::vector<VertexId>& switch_set) {
    std::vector<int> idx;
    idx.reserve(switch_set.size());
    for (const VertexId& name : switch_set)
        idx.push_back(g.index_of(name));
    return switched(g, idx);
}

SignedGraph signed_subgraph(const SignedGraph& g,
                            const std::vector<int>& keep_vertices,
                            const std::vector<int>& keep_edge_indices) {
    std::vector<char> kept(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<VertexId> names;
    names.reserve(keep_vertices.size());
    for (int v : keep_vertices) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("subgraph vertex index out of range: " +
                                        std::to_string(v));
        if (kept[static_cast<size_t>(v)])
            throw std::invalid_argument("subgraph vertex listed twice: " + g.vertex_name(v));
        kept[static_cast<size_t>(v)] = 1;
        names.push_back(g.vertex_name(v));
    }
    std::vector<std::tuple<VertexId, VertexId, int>> edges;
    edges.reserve(keep_edge_indices.size());
    for (int e : keep_edge_indices) {
        if (e < 0 || e >= g.edge_count())
            throw std::invalid_argument("subgraph edge index out of range: " +
                                        std::to_string(e));
        const SignedEdge& ed = g.edge(e);
        if (!kept[static_cast<size_t>(ed.lo)] || !kept[static_cast<size_t>(ed.hi)])
            throw std::invalid_argument("subgraph edge " + g.vertex_name(ed.lo) + "-" +
                                        g.vertex_name(ed.hi) + " has a dropped endpoint");
        edges.emplace_back(g.vertex_name(ed.lo), g.vertex_name(ed.hi), ed.sign);
    }
    return SignedGraph(std::move(names), edges);
}

SignedGraph signed_subgraph(const SignedGraph& g,
                            const std::vector<VertexId>& keep_vertices,
                            const std::vector<std::pair<VertexId, VertexId>>& keep_edges) {
    std::vector<int> vs;
    vs.reserve(keep_vertices.size());
    for (const VertexId& name : keep_vertices)
        vs.push_back(g.index_of(name));
    std::vector<int> es;
    es.reserve(keep_edges.size());
    for (const auto& [a, b] : keep_edges) {
        auto e = g.find_edge(g.index_of(a), g.index_of(b));
        if (!e)
            throw std::invalid_argument("subgraph edge " + a + "-" + b + " is not in the graph");
        es.push_back(*e);
    }
    return signed_subgraph(g, vs, es);
}

std::optional<std::vector<int>> is_antibalanced(const SignedGraph& g) {
    // g is switching-equivalent to the all-negative graph exactly when the
    // graph with all signs negated is switching-equivalent to the
    // all-positive one, i.e. balanced. Balance is a parity condition:
    // 2-label the vertices so that every negated-positive edge joins equal
    // labels and every negated-negative edge joins distinct labels. The
    // 1-labelled side is then the switch set.
    int n = g.vertex_count();
    std::vector<int> label(static_cast<size_t>(n), -1);
    for (int root = 0; root < n; ++root) {
        if (label[static_cast<size_t>(root)] != -1)
            continue;
        label[static_cast<size_t>(root)] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int e : g.incident_edges(v)) {
                const SignedEdge& ed = g.edge(e);
                int w = ed.lo == v ? ed.hi : ed.lo;
                // After negating g, an originally negative edge is positive
                // (labels must agree) and an originally positive edge is
                // negative (labels must differ).
                int want = ed.sign == -1 ? label[static_cast<size_t>(v)]
                                         : 1 - label[static_cast<size_t>(v)];
                if (label[static_cast<size_t>(w)] == -1) {
                    label[static_cast<size_t>(w)] = want;
                    q.push(w);
                } else if (label[static_cast<size_t>(w)] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<int> switch_set;
    for (int v = 0; v < n; ++v)
        if (label[static_cast<size_t>(v)] == 1)
            switch_set.push_back(v);
    return switch_set;
}

} // namespace signedat
