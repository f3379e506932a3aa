#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "harness.hpp"
#include "signedat/errors.hpp"
#include "signedat/orientation.hpp"
#include "signedat/polynomial.hpp"

using namespace signedat;
using namespace signedat::testing;

TEST_CASE("orientation accessors agree with the mask encoding") {
    SignedGraph g = complete_graph(3, -1);
    Orientation o(g, 0b101);
    for (int e = 0; e < 3; ++e) {
        CHECK(o.is_reversed(e) == (e != 1));
        int lo = g.edge(e).lo;
        int hi = g.edge(e).hi;
        CHECK(o.tail(e) == (o.is_reversed(e) ? hi : lo));
        CHECK(o.head(e) == (o.is_reversed(e) ? lo : hi));
    }
    std::vector<int> outs(3, 0);
    for (int e = 0; e < 3; ++e) ++outs[static_cast<size_t>(o.tail(e))];
    CHECK(o.outdegrees() == outs);
    CHECK(o.max_outdegree() == *std::max_element(outs.begin(), outs.end()));
}

TEST_CASE("only positive larger-to-smaller edges count against the parity") {
    SignedGraph g({"a", "b", "c"}, {{"a", "b", 1}, {"b", "c", -1}, {"a", "c", 1}});
    // Mask 0: all edges run lo -> hi, no edge runs larger to smaller.
    CHECK(Orientation(g, 0).sigma_decreasing_count() == 0);
    CHECK(Orientation(g, 0).sigma_even());
    // Reversing edge 0 (positive) makes it decreasing; reversing edge 1
    // (negative) never counts.
    CHECK(Orientation(g, 0b001).sigma_decreasing_count() == 1);
    CHECK(!Orientation(g, 0b001).sigma_even());
    CHECK(Orientation(g, 0b010).sigma_decreasing_count() == 0);
    CHECK(Orientation(g, 0b101).sigma_decreasing_count() == 2);
}

TEST_CASE("orientation counts by outdegree sequence match the expansion") {
    std::mt19937 rng(2001);
    std::vector<SignedGraph> graphs;
    for (int trial = 0; trial < 20; ++trial) graphs.push_back(random_signed_graph(rng));
    for (unsigned pattern = 0; pattern < 64; pattern += 7)
        graphs.push_back(k4_sign_patterns()[pattern]);
    for (const SignedGraph& g : graphs) {
        SignedPolynomial p = expand(g);
        for (const std::vector<int>& d : all_degree_bounded_sequences(g)) {
            auto [even, odd] = count_by_outdegree(g, d);
            BigInt expected =
                std::accumulate(d.begin(), d.end(), 0) == g.edge_count()
                    ? p.coefficient(d)
                    : BigInt(0);
            CHECK(BigInt(static_cast<long long>(even) - static_cast<long long>(odd)) ==
                  expected);
        }
    }
}

TEST_CASE("a single orientation recovers its own coefficient") {
    std::mt19937 rng(2002);
    for (int trial = 0; trial < 50; ++trial) {
        SignedGraph g = random_signed_graph(rng);
        Orientation o(g, random_orientation_mask(rng, g));
        SignedPolynomial p = expand(g);
        CHECK(BigInt(coefficient_via_orientation(g, o)) == p.coefficient(o.outdegrees()));
    }
}

TEST_CASE("the empty subdigraph is always enumerated and counts as even") {
    std::mt19937 rng(2003);
    for (int trial = 0; trial < 20; ++trial) {
        SignedGraph g = random_signed_graph(rng);
        Orientation o(g, random_orientation_mask(rng, g));
        auto subs = enumerate_eulerian(o);
        REQUIRE(!subs.empty());
        CHECK(subs.front().edge_mask == 0);
        CHECK(subs.front().positive_count == 0);
        CHECK(subs.front().sigma_even());
        ImbalanceReport r = eulerian_imbalance(o);
        CHECK(r.even_count >= 1);
        CHECK(r.even_count + r.odd_count == subs.size());
        CHECK(r.diff == static_cast<long long>(r.even_count) -
                            static_cast<long long>(r.odd_count));
    }
}

TEST_CASE("trimmed enumeration finds exactly the subdigraphs of the full scan") {
    std::mt19937 rng(2004);
    for (int trial = 0; trial < 40; ++trial) {
        SignedGraph g = random_signed_graph(rng);
        Orientation o(g, random_orientation_mask(rng, g));
        auto fast = enumerate_eulerian(o);
        auto slow = naive_eulerian(o);
        std::set<std::uint64_t> fast_masks;
        for (const auto& s : fast) fast_masks.insert(s.edge_mask);
        std::set<std::uint64_t> slow_masks;
        for (const auto& s : slow) slow_masks.insert(s.edge_mask);
        CHECK(fast_masks == slow_masks);
        // Parity classification agrees as well.
        auto count_even = [](const std::vector<EulerianSubdigraph>& v) {
            return std::count_if(v.begin(), v.end(),
                                 [](const EulerianSubdigraph& s) { return s.sigma_even(); });
        };
        CHECK(count_even(fast) == count_even(slow));
    }
}

TEST_CASE("the two level searches agree") {
    std::mt19937 rng(2005);
    for (int trial = 0; trial < 30; ++trial) {
        SignedGraph g = random_signed_graph(rng);
        CHECK(at_number_orient(g).at_number == at_number_poly(g).at_number);
    }
}

TEST_CASE("the all-negative triangle is witnessed by the cyclic orientation") {
    SignedGraph g = complete_graph(3, -1);
    AtOrientResult r = at_number_orient(g);
    CHECK(r.at_number == 2);
    Orientation o(g, r.witness_mask);
    CHECK(o.outdegrees() == std::vector<int>{1, 1, 1});
    CHECK(r.report.diff == 2);
    CHECK(r.report.even_count == 2);
    CHECK(r.report.odd_count == 0);
}

TEST_CASE("the all-positive triangle defeats every low-outdegree orientation") {
    SignedGraph g = complete_graph(3, 1);
    // Outdegrees at most 1 force the two cyclic orientations, and both are
    // balanced.
    int seen = 0;
    for_each_bounded_orientation(g, {1, 1, 1}, [&](std::uint64_t mask) {
        ++seen;
        CHECK(eulerian_imbalance(Orientation(g, mask)).diff == 0);
        return true;
    });
    CHECK(seen == 2);
    CHECK(at_number_orient(g).at_number == 3);
}

TEST_CASE("the all-negative four-cycle is witnessed at level 2") {
    SignedGraph g = cycle_graph(4, -1);
    AtOrientResult r = at_number_orient(g);
    CHECK(r.at_number == 2);
    Orientation o(g, r.witness_mask);
    CHECK(o.max_outdegree() == 1);
    CHECK(r.report.diff == 2);
}

TEST_CASE("the level search returns the least qualifying mask") {
    std::mt19937 rng(2006);
    for (int trial = 0; trial < 20; ++trial) {
        SignedGraph g = random_signed_graph(rng);
        AtOrientResult r = at_number_orient(g);
        std::vector<int> bounds(static_cast<size_t>(g.vertex_count()), r.at_number - 1);
        std::optional<std::uint64_t> first;
        for_each_bounded_orientation(g, bounds, [&](std::uint64_t mask) {
            if (eulerian_imbalance(Orientation(g, mask)).diff != 0) {
                first = mask;
                return false;
            }
            return true;
        });
        REQUIRE(first.has_value());
        CHECK(*first == r.witness_mask);
        // No lower level admits any witness.
        if (r.at_number > 1) {
            std::vector<int> lower(static_cast<size_t>(g.vertex_count()), r.at_number - 2);
            bool found = false;
            for_each_bounded_orientation(g, lower, [&](std::uint64_t mask) {
                found = eulerian_imbalance(Orientation(g, mask)).diff != 0;
                return !found;
            });
            CHECK(!found);
        }
    }
}

TEST_CASE("bounded enumeration is ascending, complete, and stoppable") {
    SignedGraph g = complete_graph(3, -1);
    std::vector<std::uint64_t> visited;
    bool completed = for_each_bounded_orientation(g, {2, 2, 2}, [&](std::uint64_t mask) {
        visited.push_back(mask);
        return true;
    });
    CHECK(completed);
    CHECK(std::is_sorted(visited.begin(), visited.end()));
    CHECK(visited.size() == 8); // every orientation of a triangle fits outdegree 2
    std::vector<std::uint64_t> expected;
    for (std::uint64_t mask = 0; mask < 8; ++mask) expected.push_back(mask);
    CHECK(visited == expected);
    int stops = 0;
    bool full = for_each_bounded_orientation(g, {2, 2, 2}, [&](std::uint64_t) {
        return ++stops < 3;
    });
    CHECK(!full);
    CHECK(stops == 3);
}

TEST_CASE("directed-edge lists reconstruct masks and reject corruption") {
    SignedGraph g = cycle_graph(4, -1);
    Orientation o(g, 0b0110);
    std::vector<std::pair<VertexId, VertexId>> directed;
    for (const auto& [tail, head] : o.directed_edges())
        directed.emplace_back(g.vertex_name(tail), g.vertex_name(head));
    std::string error;
    auto mask = mask_from_directed_edges(g, directed, &error);
    REQUIRE(mask.has_value());
    CHECK(*mask == o.mask());

    auto broken = directed;
    broken[0] = {"v9", broken[0].second};
    CHECK(!mask_from_directed_edges(g, broken, &error).has_value());
    CHECK(!error.empty());

    broken = directed;
    broken[1] = broken[0]; // one edge directed twice, one missing
    CHECK(!mask_from_directed_edges(g, broken, &error).has_value());

    broken = directed;
    broken.pop_back();
    CHECK(!mask_from_directed_edges(g, broken, &error).has_value());

    broken = directed;
    broken.push_back({"v1", "v3"}); // not an edge
    CHECK(!mask_from_directed_edges(g, broken, &error).has_value());
}

TEST_CASE("enumeration applies its cap to the edges that survive trimming") {
    SignedGraph g = complete_graph(5, -1); // ten edges
    // The circulant orientation v -> v+1, v -> v+2 (mod 5) is strongly
    // connected, so no edge trims away and the cap bites.
    std::uint64_t circulant = (1u << 2) | (1u << 3) | (1u << 6);
    CHECK_THROWS_AS(enumerate_eulerian(Orientation(g, circulant), 9), ResourceLimitError);
    CHECK_NOTHROW(eulerian_imbalance(Orientation(g, circulant), 10));
    // Directing every edge along the vertex order is acyclic: everything
    // trims and even a tiny cap passes.
    CHECK(enumerate_eulerian(Orientation(g, 0), 0).size() == 1);
    // The search caps on the raw edge count up front.
    CHECK_THROWS_AS(at_number_orient(g, 9), ResourceLimitError);
    CHECK_THROWS_AS(at_number_orient(g, 63), std::invalid_argument);
}
