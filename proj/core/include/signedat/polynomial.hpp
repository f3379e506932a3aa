#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "signedat/signed_graph.hpp"

namespace signedat {

using BigInt = boost::multiprecision::cpp_int;

/// Default edge-count ceiling for full expansion (about 16M terms worst case).
inline constexpr int kDefaultExpansionCap = 24;

/// The fully expanded product, over the edges uv of a signed graph with
/// u < v in vertex order, of (x_u - sign(uv) * x_v). Terms are kept as a
/// sorted flat map from packed exponent vectors to nonzero coefficients.
///
/// The exponent of x_v in any surviving monomial is at most deg(v), so each
/// exponent is stored in bit_width(deg(v)) bits of a 64-bit key, vertex 0
/// in the highest field. That layout makes ascending key order equal to
/// lexicographic order on exponent vectors, and it fits because the field
/// widths sum to at most 2|E|, which is at most 64 under the expansion cap.
class SignedPolynomial {
public:
    SignedPolynomial() = default;

    const SignedGraph& graph() const { return graph_; }
    /// Number of monomials with nonzero coefficient.
    size_t term_count() const { return terms_.size(); }
    const std::vector<std::pair<std::uint64_t, BigInt>>& terms() const { return terms_; }

    /// Exponent vector (one entry per vertex, vertex order) of a packed key.
    std::vector<int> unpack(std::uint64_t key) const;
    std::uint64_t pack(const std::vector<int>& exponents) const;

    /// Coefficient of the monomial with the given exponents; zero when the
    /// monomial is absent. Throws std::invalid_argument if the vector length
    /// is not the vertex count.
    BigInt coefficient(const std::vector<int>& exponents) const;

    /// Value of the polynomial at an integer point, for cross-checks.
    BigInt evaluate(const std::vector<long long>& point) const;

    /// One line per term: comma-separated exponents, a space, and the
    /// coefficient, in lexicographic exponent order; ends with a newline.
    std::string dump() const;

    /// Maximum over the terms of the maximum exponent. -1 when empty.
    int max_exponent() const;

private:
    friend SignedPolynomial expand(const SignedGraph& g, int expansion_cap);

    SignedGraph graph_;
    std::vector<int> widths_;  // bits per vertex field
    std::vector<int> shifts_;  // left shift of each vertex field
    std::vector<std::pair<std::uint64_t, BigInt>> terms_;
};

/// Expands the signed graph polynomial exactly. Graphs with more than
/// `expansion_cap` edges are rejected with ResourceLimitError; caps above
/// 32 edges are rejected outright because the packed keys no longer fit.
SignedPolynomial expand(const SignedGraph& g, int expansion_cap = kDefaultExpansionCap);

/// Outcome of the polynomial route to the Alon-Tarsi number.
struct AtPolyResult {
    int at_number = 0;
    /// Lexicographically least exponent vector among the nonzero terms
    /// witnessing the bound (all entries < at_number).
    std::vector<int> witness_exponents;
    BigInt witness_coefficient;
};

/// Alon-Tarsi number from the expansion: the least k such that some nonzero
/// term has every exponent at most k-1. The witness certifies that the graph
/// is f-choosable with f(v) = witness_exponents[v] + 1.
AtPolyResult at_number_poly(const SignedGraph& g, int expansion_cap = kDefaultExpansionCap);
AtPolyResult at_number_poly(const SignedPolynomial& p);

} // namespace signedat
