#pragma once

#include <string>
#include <utility>
#include <vector>

#include "signedat/coloring.hpp"
#include "signedat/orientation.hpp"
#include "signedat/polynomial.hpp"
#include "signedat/signed_graph.hpp"
#include "signedat/triangulation.hpp"

namespace signedat {

/// A graph file: the graph itself plus an optional plane embedding. The
/// canonical text form is a JSON object with the keys `vertices` (ordered
/// name list), `edges` (triples [u, v, sign]), and optionally `outer_cycle`
/// (name list) and `faces` (lists of names). Writing then parsing is the
/// identity, and parsing then writing reproduces canonical input bytes.
struct GraphDocument {
    SignedGraph graph;
    std::vector<VertexId> outer_cycle;        // empty when absent
    std::vector<std::vector<VertexId>> faces; // empty when absent

    bool has_embedding() const { return !outer_cycle.empty() && !faces.empty(); }
};

/// Parses the canonical text form. Malformed JSON, wrong field shapes,
/// unknown vertex names, bad signs, loops, or parallel edges all raise
/// std::invalid_argument.
GraphDocument parse_graph_document(const std::string& text);

/// Canonical serialization: fixed key order, two-space indent, trailing
/// newline. Embedding keys are emitted only when present.
std::string write_graph_document(const GraphDocument& doc);

GraphDocument document_from_graph(const SignedGraph& g);
GraphDocument document_from_shape(const NearTriangulation& t);

/// Interprets the document's embedding as a near triangulation (faces must
/// all be triangles) and validates it; std::invalid_argument otherwise.
NearTriangulation shape_from_document(const GraphDocument& doc);

/// List-assignment text: one line per vertex, "name: c1,c2,...". Parsing
/// requires exactly one line for every vertex of g (any order); writing
/// emits vertex order. Blank lines are ignored.
ListAssignment parse_list_assignment(const SignedGraph& g, const std::string& text);
std::string write_list_assignment(const SignedGraph& g, const ListAssignment& lists);

/// One line per edge, in edge order: "tail->head".
std::string dump_orientation(const Orientation& o);

/// "even:", "odd:", "diff:" lines.
std::string dump_imbalance(const ImbalanceReport& r);

/// A certificate file as data: everything needed to re-check the claim,
/// nothing about how it was constructed.
struct ParsedCertificate {
    CertificateKind kind = CertificateKind::NiceMinusEdge;
    GraphDocument document; // embedded shape of the full graph
    std::pair<VertexId, VertexId> designated_edge;
    std::vector<std::pair<VertexId, VertexId>> directed_edges;
    std::vector<OutdegreeAuditRow> audit;
    ImbalanceReport report;
};

std::string write_certificate(const NiceOrientationCertificate& cert);
ParsedCertificate parse_certificate(const std::string& text);

/// Re-checks a certificate from its serialized content alone: validates the
/// embedding, rebuilds the orientation from the directed edges, recomputes
/// the outdegree audit and the Eulerian imbalance, and compares them with
/// the stored rows and counts. Nothing from the stored metadata is trusted.
ValidationResult verify_certificate(const ParsedCertificate& cert,
                                    int enumeration_cap = kDefaultEnumerationCap);

} // namespace signedat
