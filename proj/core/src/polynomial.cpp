#include "signedat/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "signedat/errors.hpp"

namespace signedat {

std::vector<int> SignedPolynomial::unpack(std::uint64_t key) const {
    std::vector<int> out(widths_.size());
    for (size_t v = 0; v < widths_.size(); ++v) {
        std::uint64_t mask = (widths_[v] == 64) ? ~0ull : ((1ull << widths_[v]) - 1);
        out[v] = static_cast<int>((key >> shifts_[v]) & mask);
    }
    return out;
}

std::uint64_t SignedPolynomial::pack(const std::vector<int>& exponents) const {
    std::uint64_t key = 0;
    for (size_t v = 0; v < widths_.size(); ++v) {
        std::uint64_t limit = 1ull << widths_[v];
        if (exponents[v] < 0 || static_cast<std::uint64_t>(exponents[v]) >= limit)
            return ~0ull; // unrepresentable, matches no stored key
        key |= static_cast<std::uint64_t>(exponents[v]) << shifts_[v];
    }
    return key;
}

BigInt SignedPolynomial::coefficient(const std::vector<int>& exponents) const {
    if (static_cast<int>(exponents.size()) != graph_.vertex_count())
        throw std::invalid_argument("exponent vector has length " +
                                    std::to_string(exponents.size()) + ", expected " +
                                    std::to_string(graph_.vertex_count()));
    std::uint64_t key = pack(exponents);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const auto& term, std::uint64_t k) { return term.first < k; });
    if (it == terms_.end() || it->first != key)
        return BigInt(0);
    return it->second;
}

BigInt SignedPolynomial::evaluate(const std::vector<long long>& point) const {
    if (static_cast<int>(point.size()) != graph_.vertex_count())
        throw std::invalid_argument("evaluation point has wrong length");
    BigInt total = 0;
    for (const auto& [key, coef] : terms_) {
        BigInt term = coef;
        std::vector<int> exps = unpack(key);
        for (size_t v = 0; v < exps.size(); ++v) {
            BigInt base(point[v]);
            for (int i = 0; i < exps[v]; ++i)
                term *= base;
        }
        total += term;
    }
    return total;
}

std::string SignedPolynomial::dump() const {
    std::ostringstream out;
    for (const auto& [key, coef] : terms_) {
        std::vector<int> exps = unpack(key);
        for (size_t v = 0; v < exps.size(); ++v) {
            if (v)
                out << ',';
            out << exps[v];
        }
        out << ' ' << coef << '\n';
    }
    return out.str();
}

int SignedPolynomial::max_exponent() const {
    int best = -1;
    for (const auto& [key, coef] : terms_) {
        (void)coef;
        std::vector<int> exps = unpack(key);
        for (int e : exps)
            best = std::max(best, e);
    }
    return best;
}

SignedPolynomial expand(const SignedGraph& g, int expansion_cap) {
    if (expansion_cap > 32)
        throw std::invalid_argument("expansion cap above 32 edges is not supported");
    if (g.edge_count() > expansion_cap)
        throw ResourceLimitError("graph has " + std::to_string(g.edge_count()) +
                                 " edges, above the expansion cap of " +
                                 std::to_string(expansion_cap));

    SignedPolynomial p;
    p.graph_ = g;
    int n = g.vertex_count();
    p.widths_.resize(static_cast<size_t>(n));
    p.shifts_.resize(static_cast<size_t>(n));
    int total_bits = 0;
    for (int v = 0; v < n; ++v) {
        // deg(v) must be representable, so the field is at least one bit.
        int w = std::max(1, static_cast<int>(std::bit_width(
                                static_cast<unsigned>(g.degree(v)))));
        p.widths_[static_cast<size_t>(v)] = w;
        total_bits += w;
    }
    if (total_bits > 64)
        throw ResourceLimitError("exponent fields need " + std::to_string(total_bits) +
                                 " bits, more than a packed key holds");
    // Vertex 0 occupies the highest bits so that ascending packed keys are
    // lexicographically ascending exponent vectors.
    int shift = total_bits;
    for (int v = 0; v < n; ++v) {
        shift -= p.widths_[static_cast<size_t>(v)];
        p.shifts_[static_cast<size_t>(v)] = shift;
    }

    // Start from the constant 1 and fold in one binomial per edge. Each
    // factor maps term set T to (shift T at u) union (-sign * shift T at v);
    // both shifted copies preserve sorted order, so a linear merge keeps the
    // running polynomial sorted with no re-sort.
    std::vector<std::pair<std::uint64_t, BigInt>> acc{{0ull, BigInt(1)}};
    std::vector<std::pair<std::uint64_t, BigInt>> next;
    for (const SignedEdge& e : g.edges()) {
        std::uint64_t bump_u = 1ull << p.shifts_[static_cast<size_t>(e.lo)];
        std::uint64_t bump_v = 1ull << p.shifts_[static_cast<size_t>(e.hi)];
        next.clear();
        next.reserve(acc.size() * 2);
        // ~0ull is a safe exhausted-side sentinel: a real key with every
        // field all-ones would need exponents summing to the degree sum,
        // but monomial exponents sum to the number of edges folded so far.
        size_t i = 0, j = 0;
        while (i < acc.size() || j < acc.size()) {
            std::uint64_t ki = i < acc.size() ? acc[i].first + bump_u : ~0ull;
            std::uint64_t kj = j < acc.size() ? acc[j].first + bump_v : ~0ull;
            if (ki < kj) {
                next.emplace_back(ki, acc[i].second);
                ++i;
            } else if (kj < ki) {
                BigInt c = e.sign == 1 ? -acc[j].second : acc[j].second;
                next.emplace_back(kj, std::move(c));
                ++j;
            } else {
                BigInt c = acc[i].second +
                           (e.sign == 1 ? -acc[j].second : acc[j].second);
                if (c != 0)
                    next.emplace_back(ki, std::move(c));
                ++i;
                ++j;
            }
        }
        acc.swap(next);
    }
    p.terms_ = std::move(acc);
    return p;
}

AtPolyResult at_number_poly(const SignedPolynomial& p) {
    if (p.term_count() == 0)
        throw std::logic_error("expanded signed graph polynomial has no terms");
    // The least k with a nonzero term whose exponents are all below k is one
    // more than the smallest over terms of the largest exponent. The witness
    // is the lexicographically least term achieving it, i.e. the first in
    // key order.
    int best = -1;
    std::uint64_t best_key = 0;
    BigInt best_coef;
    for (const auto& [key, coef] : p.terms()) {
        std::vector<int> exps = p.unpack(key);
        int top = 0;
        for (int e : exps)
            top = std::max(top, e);
        if (best == -1 || top < best) {
            best = top;
            best_key = key;
            best_coef = coef;
        }
    }
    AtPolyResult r;
    r.at_number = best + 1;
    r.witness_exponents = p.unpack(best_key);
    r.witness_coefficient = best_coef;
    return r;
}

AtPolyResult at_number_poly(const SignedGraph& g, int expansion_cap) {
    return at_number_poly(expand(g, expansion_cap));
}

} // namespace signedat
