#include "signedat/coloring.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "signedat/errors.hpp"

namespace signedat {

std::vector<int> palette(int k) {
    if (k < 1)
        throw std::invalid_argument("palette size must be positive, got " +
                                    std::to_string(k));
    std::vector<int> colors;
    colors.reserve(static_cast<size_t>(k));
    const int q = k / 2;
    for (int c = -q; c <= q; ++c) {
        if (c == 0 && k % 2 == 0)
            continue;
        colors.push_back(c);
    }
    return colors;
}

bool is_proper(const SignedGraph& g, const std::vector<int>& phi) {
    if (static_cast<int>(phi.size()) != g.vertex_count())
        throw std::invalid_argument("coloring must assign exactly one color per vertex");
    for (const SignedEdge& e : g.edges()) {
        if (phi[static_cast<size_t>(e.lo)] == e.sign * phi[static_cast<size_t>(e.hi)])
            return false;
    }
    return true;
}

namespace {

/// Colors of v's already-colored neighbours never collide with `color` when
/// this returns true; only vertices below `v` are consulted.
bool consistent_with_prefix(const SignedGraph& g, const std::vector<int>& phi, int v,
                            int color) {
    for (int ei : g.incident_edges(v)) {
        const SignedEdge& e = g.edge(ei);
        const int u = e.lo == v ? e.hi : e.lo;
        if (u < v && color == e.sign * phi[static_cast<size_t>(u)])
            return false;
    }
    return true;
}

class BudgetedCounter {
public:
    BudgetedCounter(unsigned long long budget, const char* what)
        : budget_(budget), what_(what) {}
    void spend(unsigned long long amount = 1) {
        used_ += amount;
        if (used_ > budget_)
            throw ResourceLimitError(std::string(what_) + ": search budget of " +
                                     std::to_string(budget_) + " steps exceeded");
    }

private:
    unsigned long long used_ = 0;
    unsigned long long budget_;
    const char* what_;
};

bool color_with_palette(const SignedGraph& g, const std::vector<int>& colors,
                        std::vector<int>& phi, int v, BudgetedCounter& counter) {
    if (v == g.vertex_count())
        return true;
    for (int c : colors) {
        counter.spend();
        if (!consistent_with_prefix(g, phi, v, c))
            continue;
        phi[static_cast<size_t>(v)] = c;
        if (color_with_palette(g, colors, phi, v + 1, counter))
            return true;
    }
    return false;
}

} // namespace

ChromaticResult chromatic_number(const SignedGraph& g, unsigned long long budget) {
    const int n = g.vertex_count();
    if (n == 0)
        return {1, {}};
    BudgetedCounter counter(budget, "chromatic_number");
    for (int k = 1; k <= n + 1; ++k) {
        std::vector<int> phi(static_cast<size_t>(n), 0);
        if (color_with_palette(g, palette(k), phi, 0, counter))
            return {k, phi};
    }
    // Unreachable: greedy coloring always fits in a palette of size
    // max degree + 1 <= |V|.
    throw std::logic_error("no proper coloring found with any palette up to |V|+1");
}

ListColorResult list_color(const SignedGraph& g, const ListAssignment& lists,
                           unsigned long long search_cap) {
    const int n = g.vertex_count();
    if (static_cast<int>(lists.size()) != n)
        throw std::invalid_argument("expected one color list per vertex");
    for (int v = 0; v < n; ++v) {
        if (lists[static_cast<size_t>(v)].empty())
            throw std::invalid_argument("empty color list at vertex '" +
                                        g.vertex_name(v) + "'");
    }

    // suffix[v] = number of assignments extending any fixed prefix on 0..v-1.
    std::vector<unsigned long long> suffix(static_cast<size_t>(n) + 1, 1);
    for (int v = n - 1; v >= 0; --v) {
        const unsigned long long size = lists[static_cast<size_t>(v)].size();
        if (suffix[static_cast<size_t>(v) + 1] > search_cap / size)
            throw ResourceLimitError(
                "list_color: assignment space exceeds the search cap of " +
                std::to_string(search_cap));
        suffix[static_cast<size_t>(v)] = suffix[static_cast<size_t>(v) + 1] * size;
    }

    ListColorResult result;
    std::vector<int> phi(static_cast<size_t>(n), 0);

    // Iterative backtracking: vertices in order, each list in stored order.
    std::vector<size_t> choice(static_cast<size_t>(n), 0);
    int v = 0;
    while (true) {
        if (v == n) {
            result.coloring = phi;
            return result;
        }
        bool advanced = false;
        for (size_t& i = choice[static_cast<size_t>(v)];
             i < lists[static_cast<size_t>(v)].size(); ++i) {
            const int c = lists[static_cast<size_t>(v)][i];
            if (!consistent_with_prefix(g, phi, v, c)) {
                result.assignments_ruled_out += suffix[static_cast<size_t>(v) + 1];
                continue;
            }
            phi[static_cast<size_t>(v)] = c;
            ++i;
            ++v;
            if (v < n)
                choice[static_cast<size_t>(v)] = 0;
            advanced = true;
            break;
        }
        if (advanced)
            continue;
        if (v == 0) {
            result.exhausted = true;
            return result;
        }
        --v;
    }
}

HardInstance figure2_instance() {
    const std::vector<VertexId> names = {"a", "b", "c", "d", "a'", "b'", "c'", "d'"};
    std::vector<std::tuple<VertexId, VertexId, int>> edges;
    const std::vector<std::pair<const char*, const char*>> pairs = {
        {"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"},
        {"a'", "a"}, {"a'", "b"}, {"a'", "c"},
        {"b'", "a"}, {"b'", "b"}, {"b'", "d"},
        {"c'", "a"}, {"c'", "c"}, {"c'", "d"},
        {"d'", "b"}, {"d'", "c"}, {"d'", "d"}};
    edges.reserve(pairs.size());
    for (const auto& [u, w] : pairs)
        edges.emplace_back(u, w, -1);

    HardInstance inst;
    inst.shape.graph = SignedGraph(names, edges);
    // Outer face a', b, c; each primed vertex subdivides one K4 face.
    inst.shape.outer_cycle = {4, 1, 2};
    inst.shape.inner_faces = {
        {0, 1, 4}, {0, 2, 4},            // around a' (minus the outer face)
        {0, 1, 5}, {1, 3, 5}, {0, 3, 5}, // around b'
        {0, 2, 6}, {2, 3, 6}, {0, 3, 6}, // around c'
        {1, 2, 7}, {2, 3, 7}, {1, 3, 7}  // around d'
    };
    const ValidationResult check = validate(inst.shape);
    if (!check.ok)
        throw std::logic_error("built-in instance is not a near-triangulation: " +
                               check.diagnostic);

    inst.lists = {
        {-2, -1, 0}, // a
        {-1, 0, 2},  // b
        {-2, 0, 1},  // c
        {0, 1, 2},   // d
        {-2, -1, 0}, // a'
        {-1, 0, 2},  // b'
        {-2, 0, 1},  // c'
        {0, 1, 2}    // d'
    };
    return inst;
}

ClaimsReport verify_claims(const SignedGraph& g, const ListAssignment& lists) {
    if (g.vertex_count() != 8 || g.edge_count() != 18 ||
        static_cast<int>(lists.size()) != 8)
        throw std::invalid_argument("verify_claims expects the built-in 8-vertex instance");
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (!g.has_edge(i, j))
                throw std::invalid_argument(
                    "verify_claims expects the first four vertices to form a K4");
        }
    }
    std::vector<int> primed_of(4, -1);
    for (int x = 0; x < 4; ++x) {
        const std::optional<int> px = g.find_vertex(g.vertex_name(x) + "'");
        if (!px || *px < 4)
            throw std::invalid_argument("verify_claims expects primed partner vertices");
        primed_of[static_cast<size_t>(x)] = *px;
    }
    for (const SignedEdge& e : g.edges()) {
        if (e.sign != -1)
            throw std::invalid_argument("verify_claims expects an all-negative graph");
    }

    ClaimsReport report;
    report.every_partial_uses_zero = true;
    report.zero_forces_negated_lists = true;
    report.zero_at_first_forces_rest = true;
    report.no_zero_free_partial_starts_minus_one = true;

    // Exhaust assignments to the K4 vertices from their lists.
    std::vector<size_t> idx(4, 0);
    std::vector<int> phi(4, 0);
    while (true) {
        for (int v = 0; v < 4; ++v)
            phi[static_cast<size_t>(v)] =
                lists[static_cast<size_t>(v)][idx[static_cast<size_t>(v)]];
        bool proper = true;
        for (int i = 0; i < 4 && proper; ++i) {
            for (int j = i + 1; j < 4 && proper; ++j) {
                // All edges are negative: phi(i) = -phi(j) is the only clash.
                if (phi[static_cast<size_t>(i)] + phi[static_cast<size_t>(j)] == 0)
                    proper = false;
            }
        }
        if (proper) {
            ++report.proper_partial_count;

            const bool uses_zero = std::find(phi.begin(), phi.end(), 0) != phi.end();
            if (!uses_zero)
                report.every_partial_uses_zero = false;

            for (int x = 0; x < 4; ++x) {
                if (phi[static_cast<size_t>(x)] != 0)
                    continue;
                const int px = primed_of[static_cast<size_t>(x)];
                std::vector<int> seen;
                for (int u : g.neighbors(px)) {
                    if (u >= 4)
                        throw std::invalid_argument(
                            "verify_claims expects primed vertices to attach to the K4 only");
                    seen.push_back(phi[static_cast<size_t>(u)]);
                }
                std::vector<int> negated;
                for (int c : lists[static_cast<size_t>(px)])
                    negated.push_back(-c);
                std::sort(seen.begin(), seen.end());
                std::sort(negated.begin(), negated.end());
                if (seen != negated)
                    report.zero_forces_negated_lists = false;
            }

            if (phi[0] == 0 && (phi[1] != 2 || phi[2] != 1))
                report.zero_at_first_forces_rest = false;
            if (!uses_zero && phi[0] == -1)
                report.no_zero_free_partial_starts_minus_one = false;
        }

        int v = 3;
        while (v >= 0 &&
               ++idx[static_cast<size_t>(v)] == lists[static_cast<size_t>(v)].size())
            idx[static_cast<size_t>(v--)] = 0;
        if (v < 0)
            break;
    }
    return report;
}

namespace {

/// All k-element subsets of `values`, each ascending, in lexicographic order.
std::vector<std::vector<int>> k_subsets(const std::vector<int>& values, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick;
    const int n = static_cast<int>(values.size());
    // Standard combination walk over index vectors.
    std::vector<int> at(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
        at[static_cast<size_t>(i)] = i;
    while (true) {
        pick.clear();
        for (int i : at)
            pick.push_back(values[static_cast<size_t>(i)]);
        out.push_back(pick);
        int i = k - 1;
        while (i >= 0 && at[static_cast<size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++at[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            at[static_cast<size_t>(j)] = at[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

std::vector<int> negated_sorted(const std::vector<int>& list) {
    std::vector<int> out;
    out.reserve(list.size());
    for (auto it = list.rbegin(); it != list.rend(); ++it)
        out.push_back(-*it);
    return out;
}

struct RefuteSearch {
    const SignedGraph& g;
    int k;
    const std::vector<std::vector<int>>& subsets;
    BudgetedCounter& counter;
    ListAssignment chosen;
    std::optional<ListAssignment> found;

    /// Depth-first over list choices. `colorings` holds every proper
    /// coloring of the first `depth` vertices from the chosen lists.
    void descend(int depth, const std::vector<std::vector<int>>& colorings) {
        const int n = g.vertex_count();
        if (colorings.empty()) {
            // No proper coloring of the prefix: whatever the remaining
            // vertices receive, the assignment stays uncolorable.
            ListAssignment full = chosen;
            while (static_cast<int>(full.size()) < n)
                full.push_back(subsets.front());
            found = full;
            return;
        }
        if (depth == n)
            return; // colorable assignment
        for (const std::vector<int>& list : subsets) {
            counter.spend();
            if (depth == 0 && negated_sorted(list) < list)
                continue; // negation symmetry: keep one representative
            chosen.push_back(list);
            std::vector<std::vector<int>> extended;
            for (const std::vector<int>& phi : colorings) {
                for (int c : list) {
                    counter.spend();
                    if (consistent_with_prefix(g, phi, depth, c)) {
                        extended.push_back(phi);
                        extended.back().push_back(c);
                    }
                }
            }
            if (!prune(depth, extended))
                descend(depth + 1, extended);
            chosen.pop_back();
            if (found)
                return;
        }
    }

    /// True when some proper coloring of the prefix is unblockable: every
    /// uncolored vertex w keeps a free color no matter which k-lists the
    /// rest receive, because the prefix forbids f distinct values on w, the
    /// uncolored neighbours forbid at most one each, and f + that count
    /// stays below k. Such a coloring extends greedily, so no assignment
    /// below this node refutes. An empty prefix never prunes here (it is
    /// handled as a refutation upstream).
    bool prune(int depth, const std::vector<std::vector<int>>& colorings) {
        const int n = g.vertex_count();
        for (const std::vector<int>& phi : colorings) {
            bool unblockable = true;
            for (int w = depth + 1; w < n && unblockable; ++w) {
                counter.spend();
                std::vector<int> forbidden;
                int uncolored_neighbors = 0;
                for (int ei : g.incident_edges(w)) {
                    const SignedEdge& e = g.edge(ei);
                    const int u = e.lo == w ? e.hi : e.lo;
                    if (u > depth) {
                        ++uncolored_neighbors;
                    } else {
                        forbidden.push_back(e.sign * phi[static_cast<size_t>(u)]);
                    }
                }
                std::sort(forbidden.begin(), forbidden.end());
                forbidden.erase(std::unique(forbidden.begin(), forbidden.end()),
                                forbidden.end());
                if (static_cast<int>(forbidden.size()) + uncolored_neighbors >= k)
                    unblockable = false;
            }
            if (unblockable)
                return true;
        }
        return false;
    }
};

} // namespace

std::optional<ListAssignment> refute_choosability(const SignedGraph& g, int k, int m,
                                                  unsigned long long budget) {
    if (k < 1)
        throw std::invalid_argument("list size k must be positive");
    if (m < 0)
        throw std::invalid_argument("palette bound m must be non-negative");
    if (k > 2 * m + 1)
        throw std::invalid_argument("cannot draw " + std::to_string(k) +
                                    " distinct colors from {-" + std::to_string(m) +
                                    ",...," + std::to_string(m) + "}");

    std::vector<int> values;
    for (int c = -m; c <= m; ++c)
        values.push_back(c);
    const std::vector<std::vector<int>> subsets = k_subsets(values, k);

    BudgetedCounter counter(budget, "refute_choosability");
    RefuteSearch search{g, k, subsets, counter, {}, std::nullopt};
    search.descend(0, {std::vector<int>{}});

    if (!search.found)
        return std::nullopt;

    // Independent re-check by plain exhaustion before reporting success.
    const ListColorResult check = list_color(g, *search.found);
    if (check.coloring || !check.exhausted)
        throw std::logic_error("refutation candidate failed re-verification");
    return search.found;
}

} // namespace signedat
