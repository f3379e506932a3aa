#include "signedat/triangulation.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "signedat/errors.hpp"

namespace signedat {

namespace {

std::array<int, 3> sorted_triple(const std::array<int, 3>& f) {
    std::array<int, 3> s = f;
    std::sort(s.begin(), s.end());
    return s;
}

bool face_has_vertex(const std::array<int, 3>& f, int v) {
    return f[0] == v || f[1] == v || f[2] == v;
}

} // namespace

ValidationResult validate(const NearTriangulation& t) {
    const SignedGraph& g = t.graph;
    auto bad = [](std::string why) { return ValidationResult{false, std::move(why)}; };

    if (g.vertex_count() < 3)
        return bad("a near triangulation needs at least 3 vertices");

    int k = static_cast<int>(t.outer_cycle.size());
    if (k < 3)
        return bad("outer cycle has fewer than 3 vertices");
    std::vector<char> on_outer(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : t.outer_cycle) {
        if (v < 0 || v >= g.vertex_count())
            return bad("outer cycle contains an out-of-range vertex index");
        if (on_outer[static_cast<size_t>(v)])
            return bad("outer cycle repeats vertex " + g.vertex_name(v));
        on_outer[static_cast<size_t>(v)] = 1;
    }
    for (int i = 0; i < k; ++i) {
        int a = t.outer_cycle[static_cast<size_t>(i)];
        int b = t.outer_cycle[static_cast<size_t>((i + 1) % k)];
        if (!g.has_edge(a, b))
            return bad("outer cycle pair " + g.vertex_name(a) + "," + g.vertex_name(b) +
                       " is not an edge");
    }

    std::set<std::array<int, 3>> seen_faces;
    for (const auto& f : t.inner_faces) {
        for (int v : f)
            if (v < 0 || v >= g.vertex_count())
                return bad("inner face contains an out-of-range vertex index");
        if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2])
            return bad("inner face repeats a vertex");
        if (!g.has_edge(f[0], f[1]) || !g.has_edge(f[1], f[2]) || !g.has_edge(f[0], f[2]))
            return bad("inner face " + g.vertex_name(f[0]) + "," + g.vertex_name(f[1]) + "," +
                       g.vertex_name(f[2]) + " is not a triangle of the graph");
        if (!seen_faces.insert(sorted_triple(f)).second)
            return bad("inner face listed twice");
    }

    long long euler = static_cast<long long>(g.vertex_count()) - g.edge_count() +
                      (static_cast<long long>(t.inner_faces.size()) + 1);
    if (euler != 2)
        return bad("Euler check failed: |V|-|E|+|F| = " + std::to_string(euler) +
                   ", expected 2");

    // Outer edges must bound exactly one inner face, all others exactly two.
    std::vector<int> face_count(static_cast<size_t>(g.edge_count()), 0);
    for (const auto& f : t.inner_faces) {
        for (auto [a, b] : {std::pair(f[0], f[1]), std::pair(f[1], f[2]), std::pair(f[0], f[2])})
            ++face_count[static_cast<size_t>(*g.find_edge(a, b))];
    }
    std::vector<char> outer_edge(static_cast<size_t>(g.edge_count()), 0);
    for (int i = 0; i < k; ++i) {
        int a = t.outer_cycle[static_cast<size_t>(i)];
        int b = t.outer_cycle[static_cast<size_t>((i + 1) % k)];
        outer_edge[static_cast<size_t>(*g.find_edge(a, b))] = 1;
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        int want = outer_edge[static_cast<size_t>(e)] ? 1 : 2;
        if (face_count[static_cast<size_t>(e)] != want) {
            const SignedEdge& ed = g.edge(e);
            return bad("edge " + g.vertex_name(ed.lo) + "-" + g.vertex_name(ed.hi) + " lies on " +
                       std::to_string(face_count[static_cast<size_t>(e)]) +
                       " inner faces, expected " + std::to_string(want));
        }
    }

    std::vector<char> reached(static_cast<size_t>(g.vertex_count()), 0);
    std::queue<int> q;
    q.push(0);
    reached[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (!reached[static_cast<size_t>(w)]) {
                reached[static_cast<size_t>(w)] = 1;
                ++count;
                q.push(w);
            }
    }
    if (count != g.vertex_count())
        return bad("graph is not connected");

    return ValidationResult{};
}

std::optional<int> find_outer_chord(const NearTriangulation& t) {
    int k = static_cast<int>(t.outer_cycle.size());
    int vk = t.outer_cycle[static_cast<size_t>(k - 1)];
    for (int j = 2; j <= k - 2; ++j)
        if (t.graph.has_edge(vk, t.outer_cycle[static_cast<size_t>(j - 1)]))
            return j;
    return std::nullopt;
}

std::vector<int> fan_neighbors(const NearTriangulation& t) {
    const SignedGraph& g = t.graph;
    int k = static_cast<int>(t.outer_cycle.size());
    int vk = t.outer_cycle[static_cast<size_t>(k - 1)];
    int v1 = t.outer_cycle[0];
    int vk1 = t.outer_cycle[static_cast<size_t>(k - 2)];

    if (find_outer_chord(t))
        throw std::invalid_argument("outer cycle has a chord at " + g.vertex_name(vk) +
                                    "; the fan is only defined without one");

    // Faces at v_k give the link edges among its neighbors; for a boundary
    // vertex the link is a path from v_{k-1} to v_1.
    std::map<int, std::vector<int>> link;
    for (const auto& f : t.inner_faces) {
        if (!face_has_vertex(f, vk))
            continue;
        std::vector<int> other;
        for (int v : f)
            if (v != vk)
                other.push_back(v);
        link[other[0]].push_back(other[1]);
        link[other[1]].push_back(other[0]);
    }

    std::vector<int> path{vk1};
    int prev = -1, cur = vk1;
    while (cur != v1) {
        if (static_cast<int>(path.size()) > g.degree(vk))
            throw std::invalid_argument("face data at " + g.vertex_name(vk) +
                                        " cycles instead of forming a path");
        auto it = link.find(cur);
        if (it == link.end())
            throw std::invalid_argument("face data at " + g.vertex_name(vk) +
                                        " does not form a fan");
        int next = -1;
        for (int w : it->second)
            if (w != prev) {
                if (next != -1)
                    throw std::invalid_argument("face data at " + g.vertex_name(vk) +
                                                " branches instead of forming a path");
                next = w;
            }
        if (next == -1)
            throw std::invalid_argument("face data at " + g.vertex_name(vk) +
                                        " ends before reaching the first outer vertex");
        path.push_back(next);
        prev = cur;
        cur = next;
    }
    if (static_cast<int>(path.size()) != g.degree(vk))
        throw std::invalid_argument("fan at " + g.vertex_name(vk) +
                                    " does not visit every neighbor");
    return path;
}

NearTriangulation rotate_outer_to_edge(const NearTriangulation& t, const VertexId& u,
                                       const VertexId& v) {
    int ui = t.graph.index_of(u);
    int vi = t.graph.index_of(v);
    int k = static_cast<int>(t.outer_cycle.size());
    for (int i = 0; i < k; ++i) {
        int a = t.outer_cycle[static_cast<size_t>(i)];
        int b = t.outer_cycle[static_cast<size_t>((i + 1) % k)];
        if ((a == ui && b == vi) || (a == vi && b == ui)) {
            NearTriangulation out = t;
            out.outer_cycle.clear();
            if (a == ui) {
                for (int p = 0; p < k; ++p)
                    out.outer_cycle.push_back(t.outer_cycle[static_cast<size_t>((i + p) % k)]);
            } else {
                // Walk the cycle backwards so u still precedes v.
                for (int p = 0; p < k; ++p)
                    out.outer_cycle.push_back(
                        t.outer_cycle[static_cast<size_t>(((i + 1 - p) % k + k) % k)]);
            }
            return out;
        }
    }
    throw std::invalid_argument("vertices " + u + "," + v +
                                " are not consecutive on the outer cycle");
}

const char* to_string(BoundClass c) {
    switch (c) {
    case BoundClass::BoundaryAnchor:
        return "boundary-anchor";
    case BoundClass::Boundary:
        return "boundary";
    case BoundClass::Interior:
        return "interior";
    }
    return "?";
}

const char* to_string(CertificateKind k) {
    switch (k) {
    case CertificateKind::NiceMinusEdge:
        return "nice";
    case CertificateKind::At5Full:
        return "at5";
    }
    return "?";
}

namespace {

using DirectedEdges = std::vector<std::pair<VertexId, VertexId>>;

struct RecResult {
    DirectedEdges directed;
    ImbalanceReport report;
};

// graph_without_designated_edge (public, defined below) is used throughout
// the recursion; "minus" in local names refers to that graph.

ImbalanceReport verify_directed(const SignedGraph& g_minus_e, const DirectedEdges& directed,
                                int cap, const char* where) {
    std::string why;
    auto mask = mask_from_directed_edges(g_minus_e, directed, &why);
    if (!mask)
        throw std::logic_error(std::string(where) + ": assembled orientation is malformed: " + why);
    Orientation o(g_minus_e, *mask);
    return eulerian_imbalance(o, cap);
}

/// Sub-triangulation on the faces listed, with the given outer cycle
/// (vertex indices of the parent). Vertex and edge order are induced from
/// the parent, so names identify vertices across recursion levels.
NearTriangulation sub_triangulation(const NearTriangulation& t, const std::vector<int>& outer,
                                    const std::vector<std::array<int, 3>>& faces,
                                    const char* where) {
    std::set<int> vertex_set(outer.begin(), outer.end());
    std::set<int> edge_set;
    for (const auto& f : faces) {
        for (int v : f)
            vertex_set.insert(v);
        for (auto [a, b] :
             {std::pair(f[0], f[1]), std::pair(f[1], f[2]), std::pair(f[0], f[2])})
            edge_set.insert(*t.graph.find_edge(a, b));
    }
    int k = static_cast<int>(outer.size());
    for (int i = 0; i < k; ++i)
        edge_set.insert(*t.graph.find_edge(outer[static_cast<size_t>(i)],
                                           outer[static_cast<size_t>((i + 1) % k)]));

    std::vector<int> vertices(vertex_set.begin(), vertex_set.end());
    std::vector<int> edges(edge_set.begin(), edge_set.end());
    NearTriangulation sub;
    sub.graph = signed_subgraph(t.graph, vertices, edges);

    std::vector<int> remap(static_cast<size_t>(t.graph.vertex_count()), -1);
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
        remap[static_cast<size_t>(vertices[static_cast<size_t>(i)])] = i;
    for (int v : outer)
        sub.outer_cycle.push_back(remap[static_cast<size_t>(v)]);
    for (const auto& f : faces)
        sub.inner_faces.push_back({remap[static_cast<size_t>(f[0])],
                                   remap[static_cast<size_t>(f[1])],
                                   remap[static_cast<size_t>(f[2])]});

    ValidationResult check = validate(sub);
    if (!check.ok)
        throw std::logic_error(std::string(where) +
                               ": constructed sub-triangulation is invalid: " + check.diagnostic);
    return sub;
}

std::string depth_prefix(int depth) {
    return "level " + std::to_string(depth) + ": ";
}

RecResult solve(const NearTriangulation& t, int cap, std::vector<std::string>& trace, int depth);

/// Chord split: recurse on the part containing the designated edge and the
/// part hanging off the chord, then take the edge-disjoint union. The
/// even/odd counts multiply like parities, which pins diff(union) =
/// diff(part1) * diff(part2).
RecResult solve_chord(const NearTriangulation& t, int j, int cap,
                      std::vector<std::string>& trace, int depth) {
    const SignedGraph& g = t.graph;
    int k = static_cast<int>(t.outer_cycle.size());
    int vk = t.outer_cycle[static_cast<size_t>(k - 1)];
    int vj = t.outer_cycle[static_cast<size_t>(j - 1)];
    int chord = *g.find_edge(vk, vj);

    // Distribute inner faces to the two sides of the chord by walking the
    // dual graph without crossing the chord.
    std::map<int, std::vector<int>> faces_at_edge;
    for (int f = 0; f < static_cast<int>(t.inner_faces.size()); ++f) {
        const auto& face = t.inner_faces[static_cast<size_t>(f)];
        for (auto [a, b] : {std::pair(face[0], face[1]), std::pair(face[1], face[2]),
                            std::pair(face[0], face[2])})
            faces_at_edge[*g.find_edge(a, b)].push_back(f);
    }
    int e_designated = *g.find_edge(t.outer_cycle[0], t.outer_cycle[1]);
    int seed1 = faces_at_edge.at(e_designated).front();
    std::vector<int> side(t.inner_faces.size(), 0);
    std::queue<int> q;
    side[static_cast<size_t>(seed1)] = 1;
    q.push(seed1);
    while (!q.empty()) {
        int f = q.front();
        q.pop();
        const auto& face = t.inner_faces[static_cast<size_t>(f)];
        for (auto [a, b] : {std::pair(face[0], face[1]), std::pair(face[1], face[2]),
                            std::pair(face[0], face[2])}) {
            int e = *g.find_edge(a, b);
            if (e == chord)
                continue;
            for (int other : faces_at_edge.at(e))
                if (other != f && side[static_cast<size_t>(other)] == 0) {
                    side[static_cast<size_t>(other)] = 1;
                    q.push(other);
                }
        }
    }
    std::vector<std::array<int, 3>> faces1, faces2;
    for (int f = 0; f < static_cast<int>(t.inner_faces.size()); ++f)
        (side[static_cast<size_t>(f)] == 1 ? faces1 : faces2)
            .push_back(t.inner_faces[static_cast<size_t>(f)]);
    int e_far = *g.find_edge(t.outer_cycle[static_cast<size_t>(j - 1)],
                             t.outer_cycle[static_cast<size_t>(j % k)]);
    if (side[static_cast<size_t>(faces_at_edge.at(e_far).front())] != 0)
        throw std::logic_error("chord split put both outer arcs on the same side");

    std::vector<int> outer1(t.outer_cycle.begin(), t.outer_cycle.begin() + j);
    outer1.push_back(vk);
    std::vector<int> outer2{vk};
    for (int p = j - 1; p <= k - 2; ++p)
        outer2.push_back(t.outer_cycle[static_cast<size_t>(p)]);

    NearTriangulation t1 = sub_triangulation(t, outer1, faces1, "chord split");
    NearTriangulation t2 = sub_triangulation(t, outer2, faces2, "chord split");

    RecResult r1 = solve(t1, cap, trace, depth + 1);
    RecResult r2 = solve(t2, cap, trace, depth + 1);

    RecResult out;
    out.directed = r1.directed;
    out.directed.insert(out.directed.end(), r2.directed.begin(), r2.directed.end());
    out.report = verify_directed(graph_without_designated_edge(t), out.directed, cap, "chord split");

    ImbalanceReport want;
    want.even_count = r1.report.even_count * r2.report.even_count +
                      r1.report.odd_count * r2.report.odd_count;
    want.odd_count = r1.report.even_count * r2.report.odd_count +
                     r1.report.odd_count * r2.report.even_count;
    want.diff = static_cast<long long>(want.even_count) - static_cast<long long>(want.odd_count);
    if (!(out.report == want))
        throw std::logic_error("chord split: imbalance of the union does not factor over the "
                               "parts");
    trace.push_back(depth_prefix(depth) + "chord at j=" + std::to_string(j) +
                    " (diff " + std::to_string(r1.report.diff) + " * " +
                    std::to_string(r2.report.diff) + ")");
    return out;
}

RecResult solve(const NearTriangulation& t, int cap, std::vector<std::string>& trace, int depth) {
    const SignedGraph& g = t.graph;
    int k = static_cast<int>(t.outer_cycle.size());

    if (g.vertex_count() == 3) {
        const VertexId& v1 = g.vertex_name(t.outer_cycle[0]);
        const VertexId& v2 = g.vertex_name(t.outer_cycle[1]);
        const VertexId& v3 = g.vertex_name(t.outer_cycle[2]);
        RecResult out;
        out.directed = {{v3, v2}, {v3, v1}};
        out.report = verify_directed(graph_without_designated_edge(t), out.directed, cap, "base case");
        if (out.report.even_count != 1 || out.report.odd_count != 0)
            throw std::logic_error("base case: two edges out of one vertex must admit only the "
                                   "empty Eulerian subdigraph");
        trace.push_back(depth_prefix(depth) + "triangle base");
        return out;
    }

    if (auto j = find_outer_chord(t))
        return solve_chord(t, *j, cap, trace, depth);

    // No chord at v_k: peel it and extend the smaller solution.
    std::vector<int> fan = fan_neighbors(t);
    int vk = t.outer_cycle[static_cast<size_t>(k - 1)];
    const VertexId& vk_name = g.vertex_name(vk);
    const VertexId& v1_name = g.vertex_name(t.outer_cycle[0]);
    const VertexId& vk1_name = g.vertex_name(t.outer_cycle[static_cast<size_t>(k - 2)]);

    std::vector<int> outer_prime(t.outer_cycle.begin(), t.outer_cycle.end() - 1);
    for (size_t i = 1; i + 1 < fan.size(); ++i)
        outer_prime.push_back(fan[i]);
    std::vector<std::array<int, 3>> faces_prime;
    for (const auto& f : t.inner_faces)
        if (!face_has_vertex(f, vk))
            faces_prime.push_back(f);
    NearTriangulation tp = sub_triangulation(t, outer_prime, faces_prime, "peel");

    RecResult rp = solve(tp, cap, trace, depth + 1);
    SignedGraph g_minus_e = graph_without_designated_edge(t);

    if (k == 3) {
        // v_3 emits to both designated vertices and absorbs the fan; since
        // v_1 and v_2 absorb everything, v_3 stays isolated in every
        // Eulerian subdigraph and both counts carry over unchanged.
        const VertexId& v2_name = g.vertex_name(t.outer_cycle[1]);
        RecResult out;
        out.directed = rp.directed;
        out.directed.emplace_back(vk_name, v1_name);
        out.directed.emplace_back(vk_name, v2_name);
        for (size_t i = 1; i + 1 < fan.size(); ++i)
            out.directed.emplace_back(g.vertex_name(fan[i]), vk_name);
        out.report = verify_directed(g_minus_e, out.directed, cap, "triangle peel");
        if (!(out.report == rp.report))
            throw std::logic_error("triangle peel: Eulerian counts changed although the peeled "
                                   "vertex must stay isolated");
        trace.push_back(depth_prefix(depth) + "peel " + vk_name);
        return out;
    }

    // First try extending the recursive solution with v_k emitting to both
    // outer neighbors; its imbalance equals the smaller one's plus the
    // contributions of cycles through v_k, which often cancel.
    RecResult candidate;
    candidate.directed = rp.directed;
    candidate.directed.emplace_back(vk_name, v1_name);
    candidate.directed.emplace_back(vk_name, vk1_name);
    for (size_t i = 1; i + 1 < fan.size(); ++i)
        candidate.directed.emplace_back(g.vertex_name(fan[i]), vk_name);
    candidate.report = verify_directed(g_minus_e, candidate.directed, cap, "direct extension");
    if (candidate.report.diff != 0) {
        trace.push_back(depth_prefix(depth) + "peel " + vk_name + ", direct extension (diff " +
                        std::to_string(candidate.report.diff) + ")");
        return candidate;
    }

    // The direct extension balanced out, which certifies that some
    // restricted ("special") orientation of the peeled graph is imbalanced:
    // take the first and route v_{k-1} through v_k instead.
    SignedGraph gp_minus_e = graph_without_designated_edge(tp);
    std::vector<int> bounds(static_cast<size_t>(gp_minus_e.vertex_count()), 4);
    int kp = static_cast<int>(outer_prime.size());
    for (int i = 0; i < kp; ++i) {
        const VertexId& name = g.vertex_name(outer_prime[static_cast<size_t>(i)]);
        int idx = gp_minus_e.index_of(name);
        if (i <= 1)
            bounds[static_cast<size_t>(idx)] = 0; // v_1, v_2
        else if (i <= k - 3)
            bounds[static_cast<size_t>(idx)] = 2; // v_3 .. v_{k-2}
        else if (i == k - 2)
            bounds[static_cast<size_t>(idx)] = 1; // v_{k-1}
        else
            bounds[static_cast<size_t>(idx)] = 3; // u_1 .. u_s
    }

    std::optional<RecResult> special;
    for_each_bounded_orientation(gp_minus_e, bounds, [&](std::uint64_t mask) {
        Orientation o(gp_minus_e, mask);
        ImbalanceReport r = eulerian_imbalance(o, cap);
        if (r.diff == 0)
            return true;
        RecResult s;
        for (auto [tail, head] : o.directed_edges())
            s.directed.emplace_back(gp_minus_e.vertex_name(tail), gp_minus_e.vertex_name(head));
        s.report = r;
        special = std::move(s);
        return false;
    });
    if (!special)
        throw std::logic_error("peel at " + vk_name +
                               ": direct extension balanced and no imbalanced special "
                               "orientation exists; the construction guarantees one");

    RecResult out;
    out.directed = special->directed;
    out.directed.emplace_back(vk_name, v1_name);
    out.directed.emplace_back(vk1_name, vk_name);
    for (size_t i = 1; i + 1 < fan.size(); ++i)
        out.directed.emplace_back(g.vertex_name(fan[i]), vk_name);
    out.report = verify_directed(g_minus_e, out.directed, cap, "special extension");
    if (!(out.report == special->report))
        throw std::logic_error("special extension: Eulerian counts changed although the peeled "
                               "vertex must stay isolated");
    trace.push_back(depth_prefix(depth) + "peel " + vk_name + ", special extension (diff " +
                    std::to_string(out.report.diff) + ")");
    return out;
}

/// Audit rows with every bound enforced; a violation is a bug in the
/// construction, hence logic_error.
std::vector<OutdegreeAuditRow> build_audit(const NearTriangulation& t, const Orientation& o,
                                           CertificateKind kind) {
    std::vector<OutdegreeAuditRow> audit = audit_outdegrees(t, kind, o);
    for (const OutdegreeAuditRow& row : audit) {
        if (row.outdegree > row.bound)
            throw std::logic_error("outdegree audit failed at vertex " + row.vertex + ": " +
                                   std::to_string(row.outdegree) + " > " +
                                   std::to_string(row.bound));
    }
    return audit;
}

} // namespace

NiceOrientationCertificate nice_orientation(const NearTriangulation& t, int enumeration_cap) {
    ValidationResult check = validate(t);
    if (!check.ok)
        throw std::invalid_argument("not a near triangulation: " + check.diagnostic);

    NiceOrientationCertificate cert;
    cert.kind = CertificateKind::NiceMinusEdge;
    cert.shape = t;
    cert.designated_edge = {t.graph.vertex_name(t.outer_cycle[0]),
                            t.graph.vertex_name(t.outer_cycle[1])};

    RecResult r = solve(t, enumeration_cap, cert.branch_trace, 0);

    auto g_minus_e = std::make_shared<const SignedGraph>(graph_without_designated_edge(t));
    std::string why;
    auto mask = mask_from_directed_edges(*g_minus_e, r.directed, &why);
    if (!mask)
        throw std::logic_error("constructed orientation is malformed: " + why);
    cert.oriented_graph = g_minus_e;
    cert.mask = *mask;
    cert.report = r.report; // verified by enumeration at the top recursion level
    if (cert.report.diff == 0)
        throw std::logic_error("constructed orientation has zero imbalance");
    cert.audit = build_audit(t, cert.orientation(), cert.kind);
    return cert;
}

NiceOrientationCertificate nice_orientation(const NearTriangulation& t, const VertexId& u,
                                            const VertexId& v, int enumeration_cap) {
    return nice_orientation(rotate_outer_to_edge(t, u, v), enumeration_cap);
}

std::vector<Orientation> enumerate_special(const SignedGraph& g_prime,
                                           const std::vector<int>& max_outdegree,
                                           int enumeration_cap) {
    if (enumeration_cap > 62)
        throw std::invalid_argument("enumeration cap above 62 is not supported");
    if (g_prime.edge_count() > enumeration_cap)
        throw ResourceLimitError("special-orientation enumeration over " +
                                 std::to_string(g_prime.edge_count()) +
                                 " edges is above the cap of " + std::to_string(enumeration_cap));
    std::vector<Orientation> out;
    for_each_bounded_orientation(g_prime, max_outdegree, [&](std::uint64_t mask) {
        out.emplace_back(g_prime, mask);
        return true;
    });
    return out;
}

NiceOrientationCertificate at5_certificate(const NearTriangulation& t, int enumeration_cap) {
    NiceOrientationCertificate nice = nice_orientation(t, enumeration_cap);

    NiceOrientationCertificate cert;
    cert.kind = CertificateKind::At5Full;
    cert.shape = t;
    cert.designated_edge = nice.designated_edge;
    cert.branch_trace = nice.branch_trace;

    // Re-orient the full graph: every edge keeps its direction, the
    // designated edge runs v1 -> v2.
    DirectedEdges directed = [&] {
        DirectedEdges d;
        Orientation o = nice.orientation();
        for (auto [tail, head] : o.directed_edges())
            d.emplace_back(o.graph().vertex_name(tail), o.graph().vertex_name(head));
        d.emplace_back(nice.designated_edge.first, nice.designated_edge.second);
        return d;
    }();

    auto full = std::make_shared<const SignedGraph>(t.graph);
    std::string why;
    auto mask = mask_from_directed_edges(*full, directed, &why);
    if (!mask)
        throw std::logic_error("full orientation is malformed: " + why);
    cert.oriented_graph = full;
    cert.mask = *mask;

    // v2 keeps outdegree 0, so the added edge can join no Eulerian
    // subdigraph; the imbalance must match the smaller orientation's
    // exactly, and the enumeration confirms it.
    cert.report = eulerian_imbalance(cert.orientation(), enumeration_cap);
    if (!(cert.report == nice.report))
        throw std::logic_error("adding the designated edge changed the Eulerian counts");
    cert.audit = build_audit(t, cert.orientation(), cert.kind);
    return cert;
}

NearTriangulation triangulate_embedding(const SignedGraph& g, const std::vector<int>& outer_cycle,
                                        const std::vector<std::vector<int>>& inner_faces) {
    if (g.vertex_count() < 3)
        throw std::invalid_argument("triangulation needs at least 3 vertices");

    for (const auto& face : inner_faces) {
        if (face.size() < 3)
            throw std::invalid_argument("inner face with fewer than 3 vertices");
        std::set<int> distinct(face.begin(), face.end());
        if (distinct.size() != face.size())
            throw std::invalid_argument("inner face repeats a vertex");
        for (size_t i = 0; i < face.size(); ++i) {
            int a = face[i];
            int b = face[(i + 1) % face.size()];
            if (a < 0 || a >= g.vertex_count() || b < 0 || b >= g.vertex_count() ||
                !g.has_edge(a, b))
                throw std::invalid_argument("inner face boundary pair is not an edge");
        }
    }

    // Diagonals are collected as vertex index pairs; existing edges and
    // previously added diagonals both block re-use.
    std::set<std::pair<int, int>> present;
    for (const SignedEdge& e : g.edges())
        present.emplace(e.lo, e.hi);
    auto exists = [&](int a, int b) {
        return present.count({std::min(a, b), std::max(a, b)}) > 0;
    };
    std::vector<std::pair<int, int>> added;
    auto add_diagonal = [&](int a, int b) {
        present.emplace(std::min(a, b), std::max(a, b));
        added.emplace_back(a, b);
    };

    std::vector<std::array<int, 3>> triangles;
    for (const auto& face : inner_faces) {
        if (face.size() == 3) {
            triangles.push_back({face[0], face[1], face[2]});
            continue;
        }
        // Prefer a single fan apex; fall back to clipping ears one at a
        // time when every apex is blocked by an existing edge.
        int n = static_cast<int>(face.size());
        int apex = -1;
        for (int a = 0; a < n && apex == -1; ++a) {
            bool ok = true;
            for (int d = 2; d < n - 1 && ok; ++d)
                ok = !exists(face[static_cast<size_t>(a)],
                             face[static_cast<size_t>((a + d) % n)]);
            if (ok)
                apex = a;
        }
        if (apex != -1) {
            for (int d = 2; d < n - 1; ++d)
                add_diagonal(face[static_cast<size_t>(apex)],
                             face[static_cast<size_t>((apex + d) % n)]);
            for (int d = 1; d < n - 1; ++d)
                triangles.push_back({face[static_cast<size_t>(apex)],
                                     face[static_cast<size_t>((apex + d) % n)],
                                     face[static_cast<size_t>((apex + d + 1) % n)]});
            continue;
        }
        std::vector<int> poly(face.begin(), face.end());
        while (poly.size() > 3) {
            int m = static_cast<int>(poly.size());
            int ear = -1;
            for (int p = 0; p < m; ++p) {
                int a = poly[static_cast<size_t>((p + m - 1) % m)];
                int b = poly[static_cast<size_t>((p + 1) % m)];
                if (!exists(a, b)) {
                    ear = p;
                    break;
                }
            }
            if (ear == -1)
                throw std::invalid_argument("face cannot be triangulated: every candidate "
                                            "diagonal already exists");
            int a = poly[static_cast<size_t>((ear + m - 1) % m)];
            int b = poly[static_cast<size_t>((ear + 1) % m)];
            add_diagonal(a, b);
            triangles.push_back({a, poly[static_cast<size_t>(ear)], b});
            poly.erase(poly.begin() + ear);
        }
        triangles.push_back({poly[0], poly[1], poly[2]});
    }

    std::vector<std::tuple<VertexId, VertexId, int>> edges;
    for (const SignedEdge& e : g.edges())
        edges.emplace_back(g.vertex_name(e.lo), g.vertex_name(e.hi), e.sign);
    for (auto [a, b] : added)
        edges.emplace_back(g.vertex_name(a), g.vertex_name(b), 1);

    NearTriangulation out;
    out.graph = SignedGraph(g.vertices(), edges);
    out.outer_cycle = outer_cycle;
    out.inner_faces = std::move(triangles);

    ValidationResult check = validate(out);
    if (!check.ok)
        throw std::invalid_argument("face data does not describe a plane near triangulation: " +
                                    check.diagnostic);
    return out;
}

SignedGraph graph_without_designated_edge(const NearTriangulation& t) {
    if (t.outer_cycle.size() < 2)
        throw std::invalid_argument("outer cycle too short to designate an edge");
    const int v1 = t.outer_cycle[0];
    const int v2 = t.outer_cycle[1];
    const std::optional<int> e = t.graph.find_edge(v1, v2);
    if (!e)
        throw std::invalid_argument("designated outer edge " + t.graph.vertex_name(v1) + "-" +
                                    t.graph.vertex_name(v2) + " is not in the graph");
    std::vector<int> vertices(static_cast<size_t>(t.graph.vertex_count()));
    for (int i = 0; i < t.graph.vertex_count(); ++i)
        vertices[static_cast<size_t>(i)] = i;
    std::vector<int> edges;
    for (int i = 0; i < t.graph.edge_count(); ++i)
        if (i != *e)
            edges.push_back(i);
    return signed_subgraph(t.graph, vertices, edges);
}

std::vector<OutdegreeAuditRow> audit_outdegrees(const NearTriangulation& t, CertificateKind kind,
                                                const Orientation& o) {
    const SignedGraph& g = t.graph;
    std::vector<int> outer_pos(static_cast<size_t>(g.vertex_count()), -1);
    for (int i = 0; i < static_cast<int>(t.outer_cycle.size()); ++i)
        outer_pos[static_cast<size_t>(t.outer_cycle[static_cast<size_t>(i)])] = i;

    std::vector<OutdegreeAuditRow> audit;
    for (int v = 0; v < g.vertex_count(); ++v) {
        OutdegreeAuditRow row;
        row.vertex = g.vertex_name(v);
        const int pos = outer_pos[static_cast<size_t>(v)];
        if (pos == 0) {
            row.bound_class = BoundClass::BoundaryAnchor;
            row.bound = kind == CertificateKind::At5Full ? 1 : 0;
        } else if (pos == 1) {
            row.bound_class = BoundClass::BoundaryAnchor;
            row.bound = 0;
        } else if (pos > 1) {
            row.bound_class = BoundClass::Boundary;
            row.bound = 2;
        } else {
            row.bound_class = BoundClass::Interior;
            row.bound = 4;
        }
        row.outdegree = o.outdegree(o.graph().index_of(row.vertex));
        audit.push_back(std::move(row));
    }
    return audit;
}

} // namespace signedat
