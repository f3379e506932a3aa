#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "harness.hpp"
#include "signedat/orientation.hpp"
#include "signedat/triangulation.hpp"

using namespace signedat;
using namespace signedat::testing;

namespace {

NearTriangulation triangle_shape(int sign) {
    NearTriangulation t;
    t.graph = complete_graph(3, sign);
    t.outer_cycle = {0, 1, 2};
    t.inner_faces = {{0, 1, 2}};
    return t;
}

/// Outer 4-cycle v1 v2 v3 v4 with the chord v2 v4.
NearTriangulation square_with_chord(int sign) {
    NearTriangulation t;
    std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}};
    std::vector<VertexId> names = {"v1", "v2", "v3", "v4"};
    std::vector<std::tuple<VertexId, VertexId, int>> named;
    for (auto [u, v] : edges)
        named.emplace_back(names[static_cast<size_t>(u)], names[static_cast<size_t>(v)], sign);
    t.graph = SignedGraph(names, named);
    t.outer_cycle = {0, 1, 2, 3};
    t.inner_faces = {{0, 1, 3}, {1, 2, 3}};
    return t;
}

/// Checks the structural clauses of a certificate directly from its
/// orientation, without trusting the stored audit.
void check_certificate_shape(const NiceOrientationCertificate& cert) {
    Orientation o = cert.orientation();
    const NearTriangulation& t = cert.shape;
    const SignedGraph& og = *cert.oriented_graph;
    int v1 = og.index_of(t.graph.vertex_name(t.outer_cycle[0]));
    int v2 = og.index_of(t.graph.vertex_name(t.outer_cycle[1]));
    if (cert.kind == CertificateKind::NiceMinusEdge) {
        CHECK(o.outdegree(v1) == 0);
    } else {
        // The designated edge itself is directed v1 -> v2 and is v1's only
        // out-edge.
        CHECK(o.outdegree(v1) == 1);
        auto e = og.find_edge(v1, v2);
        REQUIRE(e.has_value());
        CHECK(o.tail(*e) == v1);
        CHECK(o.head(*e) == v2);
    }
    CHECK(o.outdegree(v2) == 0);
    std::set<int> outer;
    for (int pos : t.outer_cycle) outer.insert(og.index_of(t.graph.vertex_name(pos)));
    for (int v = 0; v < og.vertex_count(); ++v) {
        if (v == v1 || v == v2) continue;
        CHECK(o.outdegree(v) <= (outer.count(v) ? 2 : 4));
    }
    // The report must match a fresh enumeration and be imbalanced.
    ImbalanceReport fresh = eulerian_imbalance(o);
    CHECK(fresh == cert.report);
    CHECK(cert.report.diff != 0);
}

} // namespace

TEST_CASE("validation accepts the basic shapes") {
    CHECK(validate(triangle_shape(-1)).ok);
    CHECK(validate(square_with_chord(-1)).ok);
    NearTriangulation k4;
    k4.graph = complete_graph(4, -1);
    k4.outer_cycle = {0, 1, 2};
    k4.inner_faces = {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}};
    CHECK(validate(k4).ok);
}

TEST_CASE("validation names the violated clause") {
    NearTriangulation quad;
    quad.graph = cycle_graph(4, -1);
    quad.outer_cycle = {0, 1, 2, 3};
    quad.inner_faces = {};
    ValidationResult r = validate(quad);
    CHECK(!r.ok);
    CHECK(!r.diagnostic.empty());

    NearTriangulation bad_face = triangle_shape(-1);
    bad_face.inner_faces = {{0, 1, 1}};
    CHECK(!validate(bad_face).ok);

    NearTriangulation bad_cycle = square_with_chord(-1);
    bad_cycle.outer_cycle = {0, 2, 1, 3}; // v1 v3 is not an edge
    CHECK(!validate(bad_cycle).ok);

    NearTriangulation doubled = triangle_shape(-1);
    doubled.inner_faces = {{0, 1, 2}, {0, 1, 2}};
    CHECK(!validate(doubled).ok);
}

TEST_CASE("every generated shape validates") {
    for (const PlaneShape& s : plane_shapes(5, 2)) {
        CHECK(validate(make_uniform_shape(s, -1)).ok);
    }
}

TEST_CASE("the chord finder returns the least chord position") {
    CHECK(find_outer_chord(square_with_chord(-1)) == 2);
    CHECK(!find_outer_chord(triangle_shape(-1)).has_value());
    // A wheel has no outer chord.
    for (const PlaneShape& s : plane_shapes(4, 1)) {
        if (s.vertex_count != 5) continue;
        int hub_degree = 0;
        for (const auto& e : s.edges)
            if (e.first == 4 || e.second == 4) ++hub_degree;
        if (hub_degree == 4) CHECK(!find_outer_chord(make_uniform_shape(s, -1)).has_value());
    }
}

TEST_CASE("fan neighbors walk the faces around the last outer vertex") {
    std::mt19937 rng(3001);
    for (const PlaneShape& s : plane_shapes(5, 2)) {
        NearTriangulation t = make_signed_shape(s, random_signs(rng, static_cast<int>(s.edges.size())));
        if (find_outer_chord(t).has_value()) {
            CHECK_THROWS_AS(fan_neighbors(t), std::invalid_argument);
            continue;
        }
        std::vector<int> fan = fan_neighbors(t);
        int k = static_cast<int>(t.outer_cycle.size());
        int vk = t.outer_cycle[static_cast<size_t>(k - 1)];
        REQUIRE(fan.size() >= 2);
        CHECK(fan.front() == t.outer_cycle[static_cast<size_t>(k - 2)]);
        CHECK(fan.back() == t.outer_cycle[0]);
        // Consecutive fan entries together with the apex are exactly the
        // inner faces at the apex.
        std::set<std::array<int, 3>> reconstructed;
        for (size_t i = 0; i + 1 < fan.size(); ++i) {
            std::array<int, 3> f = {vk, fan[i], fan[i + 1]};
            std::sort(f.begin(), f.end());
            reconstructed.insert(f);
        }
        std::set<std::array<int, 3>> actual;
        for (auto f : t.inner_faces) {
            if (f[0] != vk && f[1] != vk && f[2] != vk) continue;
            std::sort(f.begin(), f.end());
            actual.insert(f);
        }
        CHECK(reconstructed == actual);
    }
}

TEST_CASE("rotation places the requested outer edge first") {
    NearTriangulation t = square_with_chord(-1);
    NearTriangulation r = rotate_outer_to_edge(t, "v3", "v4");
    CHECK(r.graph.vertex_name(r.outer_cycle[0]) == "v3");
    CHECK(r.graph.vertex_name(r.outer_cycle[1]) == "v4");
    CHECK(r.outer_cycle.size() == 4);
    CHECK(validate(r).ok);
    CHECK(same_graph(r.graph, t.graph));
    // Reflections are allowed too: v3, v2 are consecutive in the other
    // direction.
    NearTriangulation refl = rotate_outer_to_edge(t, "v3", "v2");
    CHECK(refl.graph.vertex_name(refl.outer_cycle[0]) == "v3");
    CHECK(refl.graph.vertex_name(refl.outer_cycle[1]) == "v2");
    CHECK(validate(refl).ok);
    CHECK_THROWS_AS(rotate_outer_to_edge(t, "v1", "v3"), std::invalid_argument);
    CHECK_THROWS_AS(rotate_outer_to_edge(t, "v1", "v9"), std::invalid_argument);
}

TEST_CASE("removing the designated edge drops exactly one edge") {
    NearTriangulation t = square_with_chord(-1);
    SignedGraph g = graph_without_designated_edge(t);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == t.graph.edge_count() - 1);
    CHECK(!g.has_edge(0, 1));
    for (int e = 0; e < g.edge_count(); ++e) {
        const SignedEdge& ed = g.edge(e);
        CHECK(t.graph.has_edge(ed.lo, ed.hi));
    }
}

TEST_CASE("embedding completion fans non-triangular faces") {
    // A plain quadrilateral face gains one diagonal.
    SignedGraph quad = cycle_graph(4, -1);
    NearTriangulation t = triangulate_embedding(quad, {0, 1, 2, 3}, {{0, 1, 2, 3}});
    CHECK(validate(t).ok);
    CHECK(t.graph.edge_count() == 5);
    CHECK(t.inner_faces.size() == 2);
    // New diagonals carry sign +1 and the input edges are a prefix.
    for (int e = 0; e < quad.edge_count(); ++e) {
        CHECK(t.graph.edge(e).lo == quad.edge(e).lo);
        CHECK(t.graph.edge(e).hi == quad.edge(e).hi);
        CHECK(t.graph.edge(e).sign == quad.edge(e).sign);
    }
    CHECK(t.graph.edge(4).sign == 1);

    // A pentagon gains two.
    SignedGraph pent = cycle_graph(5, -1);
    NearTriangulation tp = triangulate_embedding(pent, {0, 1, 2, 3, 4}, {{0, 1, 2, 3, 4}});
    CHECK(validate(tp).ok);
    CHECK(tp.graph.edge_count() == 7);
    CHECK(tp.inner_faces.size() == 3);

    // An already triangulated embedding is unchanged.
    NearTriangulation sq = square_with_chord(-1);
    NearTriangulation same = triangulate_embedding(
        sq.graph, sq.outer_cycle,
        {{0, 1, 3}, {1, 2, 3}});
    CHECK(same_graph(same.graph, sq.graph));
    CHECK(same.inner_faces.size() == 2);
}

TEST_CASE("certificates satisfy their structural clauses on the shape family") {
    std::mt19937 rng(3002);
    for (const PlaneShape& s : plane_shapes(5, 2)) {
        std::vector<std::vector<int>> sign_sets = {
            std::vector<int>(s.edges.size(), -1),
            std::vector<int>(s.edges.size(), 1),
        };
        for (int r = 0; r < 3; ++r)
            sign_sets.push_back(random_signs(rng, static_cast<int>(s.edges.size())));
        for (const auto& signs : sign_sets) {
            NearTriangulation t = make_signed_shape(s, signs);
            NiceOrientationCertificate nice = nice_orientation(t);
            check_certificate_shape(nice);
            CHECK(!nice.branch_trace.empty());

            NiceOrientationCertificate five = at5_certificate(t);
            check_certificate_shape(five);
            CHECK(five.orientation().max_outdegree() <= 4);
            // Adding the designated edge with head v2 changes no Eulerian
            // subdigraph, so the counts carry over verbatim.
            CHECK(five.report == nice.report);
        }
    }
}

TEST_CASE("the stored audit matches a recomputation and its own orientation") {
    std::mt19937 rng(3003);
    for (const PlaneShape& s : plane_shapes(4, 2)) {
        NearTriangulation t = make_signed_shape(s, random_signs(rng, static_cast<int>(s.edges.size())));
        for (auto kind : {CertificateKind::NiceMinusEdge, CertificateKind::At5Full}) {
            NiceOrientationCertificate cert =
                kind == CertificateKind::NiceMinusEdge ? nice_orientation(t) : at5_certificate(t);
            auto rows = audit_outdegrees(cert.shape, cert.kind, cert.orientation());
            REQUIRE(rows.size() == cert.audit.size());
            for (size_t i = 0; i < rows.size(); ++i) {
                CHECK(rows[i].vertex == cert.audit[i].vertex);
                CHECK(rows[i].bound_class == cert.audit[i].bound_class);
                CHECK(rows[i].bound == cert.audit[i].bound);
                CHECK(rows[i].outdegree == cert.audit[i].outdegree);
                CHECK(rows[i].outdegree <= rows[i].bound);
            }
        }
    }
}

TEST_CASE("a designated edge can be requested by name") {
    NearTriangulation t = square_with_chord(-1);
    NiceOrientationCertificate cert = nice_orientation(t, "v3", "v2");
    CHECK(cert.designated_edge == std::pair<VertexId, VertexId>{"v3", "v2"});
    check_certificate_shape(cert);
    CHECK_THROWS_AS(nice_orientation(t, "v1", "v3"), std::invalid_argument);
}

TEST_CASE("the imbalance multiplies across a chord split") {
    // The square with chord splits along v4 v2 into two triangles; the
    // designated edge v1 v2 lies in one part and the chord plays that role
    // in the other. Restricting the final orientation to each side must
    // multiply to the whole imbalance.
    for (int sign : {-1, 1}) {
        NearTriangulation t = square_with_chord(sign);
        NiceOrientationCertificate cert = nice_orientation(t);
        const SignedGraph& og = *cert.oriented_graph; // G - v1v2
        auto side = [&](std::vector<std::pair<VertexId, VertexId>> keep_edges,
                        std::vector<VertexId> keep_vertices) {
            SignedGraph sub = signed_subgraph(og, keep_vertices, keep_edges);
            std::uint64_t mask = 0;
            Orientation full = cert.orientation();
            for (int e = 0; e < sub.edge_count(); ++e) {
                const SignedEdge& ed = sub.edge(e);
                int glo = og.index_of(sub.vertex_name(ed.lo));
                int ghi = og.index_of(sub.vertex_name(ed.hi));
                auto ge = og.find_edge(glo, ghi);
                REQUIRE(ge.has_value());
                if (full.is_reversed(*ge)) mask |= 1ull << e;
            }
            return eulerian_imbalance(Orientation(sub, mask)).diff;
        };
        long long left = side({{"v1", "v4"}, {"v2", "v4"}}, {"v1", "v2", "v4"});
        long long right = side({{"v2", "v3"}, {"v3", "v4"}}, {"v2", "v3", "v4"});
        CHECK(left * right == cert.report.diff);
        CHECK(cert.report.diff != 0);
    }
}

TEST_CASE("special-orientation enumeration respects bounds and order") {
    NearTriangulation t = square_with_chord(-1);
    SignedGraph g = graph_without_designated_edge(t);
    std::vector<int> bounds = {0, 1, 2, 1};
    std::vector<Orientation> all = enumerate_special(g, bounds);
    std::uint64_t previous = 0;
    bool first = true;
    for (const Orientation& o : all) {
        for (int v = 0; v < g.vertex_count(); ++v)
            CHECK(o.outdegree(v) <= bounds[static_cast<size_t>(v)]);
        if (!first) CHECK(o.mask() > previous);
        previous = o.mask();
        first = false;
    }
    // Cross-check the count against the plain bounded enumeration.
    int expected = 0;
    for_each_bounded_orientation(g, bounds, [&](std::uint64_t) {
        ++expected;
        return true;
    });
    CHECK(static_cast<int>(all.size()) == expected);
}

TEST_CASE("construction rejects invalid shapes") {
    NearTriangulation quad;
    quad.graph = cycle_graph(4, -1);
    quad.outer_cycle = {0, 1, 2, 3};
    quad.inner_faces = {};
    CHECK_THROWS_AS(nice_orientation(quad), std::invalid_argument);
    CHECK_THROWS_AS(at5_certificate(quad), std::invalid_argument);
}
