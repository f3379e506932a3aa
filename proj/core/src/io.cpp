#include "signedat/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace signedat {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

json parse_json(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        bad(std::string(what) + ": not well-formed JSON");
    return j;
}

std::vector<VertexId> name_array(const json& j, const std::string& where) {
    if (!j.is_array())
        bad(where + " must be an array of vertex names");
    std::vector<VertexId> names;
    for (const json& item : j) {
        if (!item.is_string())
            bad(where + " must contain only strings");
        names.push_back(item.get<std::string>());
    }
    return names;
}

json document_to_json(const GraphDocument& doc) {
    json j = json::object();
    j["vertices"] = doc.graph.vertices();
    json edges = json::array();
    for (const SignedEdge& e : doc.graph.edges())
        edges.push_back(json::array({doc.graph.vertex_name(e.lo),
                                     doc.graph.vertex_name(e.hi), e.sign}));
    j["edges"] = std::move(edges);
    if (!doc.outer_cycle.empty())
        j["outer_cycle"] = doc.outer_cycle;
    if (!doc.faces.empty())
        j["faces"] = doc.faces;
    return j;
}

GraphDocument document_from_json(const json& j, const char* what) {
    if (!j.is_object())
        bad(std::string(what) + ": expected a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (key != "vertices" && key != "edges" && key != "outer_cycle" && key != "faces")
            bad(std::string(what) + ": unexpected field '" + key + "'");
    }
    if (!j.contains("vertices") || !j.contains("edges"))
        bad(std::string(what) + ": fields 'vertices' and 'edges' are required");

    const std::vector<VertexId> vertices = name_array(j["vertices"], "'vertices'");

    std::vector<std::tuple<VertexId, VertexId, int>> edges;
    if (!j["edges"].is_array())
        bad("'edges' must be an array of [u, v, sign] triples");
    for (const json& e : j["edges"]) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string() ||
            !e[2].is_number_integer())
            bad("'edges' entries must be [u, v, sign] triples");
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>(),
                           e[2].get<int>());
    }

    GraphDocument doc{SignedGraph(vertices, edges), {}, {}};

    if (j.contains("outer_cycle")) {
        doc.outer_cycle = name_array(j["outer_cycle"], "'outer_cycle'");
        for (const VertexId& name : doc.outer_cycle)
            doc.graph.index_of(name); // throws on unknown vertex
        if (doc.outer_cycle.size() < 3)
            bad("'outer_cycle' must list at least 3 vertices");
    }
    if (j.contains("faces")) {
        if (!j["faces"].is_array())
            bad("'faces' must be an array of vertex-name lists");
        for (const json& f : j["faces"]) {
            std::vector<VertexId> face = name_array(f, "face");
            if (face.size() < 3)
                bad("every face needs at least 3 vertices");
            for (const VertexId& name : face)
                doc.graph.index_of(name);
            doc.faces.push_back(std::move(face));
        }
    }
    return doc;
}

std::string trimmed(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    size_t e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    return s.substr(b, e - b + 1);
}

int parse_int(const std::string& token, const std::string& where) {
    const std::string t = trimmed(token);
    int value = 0;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || t.empty())
        bad(where + ": '" + token + "' is not an integer");
    return value;
}

std::string class_name(BoundClass c) { return to_string(c); }

BoundClass class_from_name(const std::string& s) {
    if (s == "boundary-anchor")
        return BoundClass::BoundaryAnchor;
    if (s == "boundary")
        return BoundClass::Boundary;
    if (s == "interior")
        return BoundClass::Interior;
    bad("unknown audit class '" + s + "'");
}

} // namespace

GraphDocument parse_graph_document(const std::string& text) {
    return document_from_json(parse_json(text, "graph document"), "graph document");
}

std::string write_graph_document(const GraphDocument& doc) {
    return document_to_json(doc).dump(2) + "\n";
}

GraphDocument document_from_graph(const SignedGraph& g) { return {g, {}, {}}; }

GraphDocument document_from_shape(const NearTriangulation& t) {
    GraphDocument doc{t.graph, {}, {}};
    for (int v : t.outer_cycle)
        doc.outer_cycle.push_back(t.graph.vertex_name(v));
    for (const std::array<int, 3>& f : t.inner_faces)
        doc.faces.push_back({t.graph.vertex_name(f[0]), t.graph.vertex_name(f[1]),
                             t.graph.vertex_name(f[2])});
    return doc;
}

NearTriangulation shape_from_document(const GraphDocument& doc) {
    if (!doc.has_embedding())
        bad("document lacks 'outer_cycle'/'faces'; an embedding is required");
    NearTriangulation t;
    t.graph = doc.graph;
    for (const VertexId& name : doc.outer_cycle)
        t.outer_cycle.push_back(t.graph.index_of(name));
    for (const std::vector<VertexId>& face : doc.faces) {
        if (face.size() != 3)
            bad("inner faces must be triangles; found one with " +
                std::to_string(face.size()) + " vertices");
        t.inner_faces.push_back({t.graph.index_of(face[0]), t.graph.index_of(face[1]),
                                 t.graph.index_of(face[2])});
    }
    const ValidationResult check = validate(t);
    if (!check.ok)
        bad("not a near triangulation: " + check.diagnostic);
    return t;
}

ListAssignment parse_list_assignment(const SignedGraph& g, const std::string& text) {
    ListAssignment lists(static_cast<size_t>(g.vertex_count()));
    std::vector<char> filled(static_cast<size_t>(g.vertex_count()), 0);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (trimmed(line).empty())
            continue;
        const size_t colon = line.find(':');
        if (colon == std::string::npos)
            bad("list line '" + line + "' lacks a ':' separator");
        const std::string name = trimmed(line.substr(0, colon));
        const int v = g.index_of(name);
        if (filled[static_cast<size_t>(v)])
            bad("vertex '" + name + "' listed twice");
        filled[static_cast<size_t>(v)] = 1;
        std::vector<int> colors;
        std::string rest = line.substr(colon + 1);
        size_t start = 0;
        while (start <= rest.size()) {
            const size_t comma = rest.find(',', start);
            const std::string token =
                rest.substr(start, comma == std::string::npos ? std::string::npos
                                                              : comma - start);
            colors.push_back(parse_int(token, "color list for '" + name + "'"));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
        lists[static_cast<size_t>(v)] = std::move(colors);
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!filled[static_cast<size_t>(v)])
            bad("no color list for vertex '" + g.vertex_name(v) + "'");
    return lists;
}

std::string write_list_assignment(const SignedGraph& g, const ListAssignment& lists) {
    if (static_cast<int>(lists.size()) != g.vertex_count())
        bad("expected one color list per vertex");
    std::ostringstream out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << g.vertex_name(v) << ": ";
        const std::vector<int>& list = lists[static_cast<size_t>(v)];
        for (size_t i = 0; i < list.size(); ++i) {
            if (i)
                out << ',';
            out << list[i];
        }
        out << '\n';
    }
    return out.str();
}

std::string dump_orientation(const Orientation& o) {
    std::ostringstream out;
    const SignedGraph& g = o.graph();
    for (int e = 0; e < g.edge_count(); ++e)
        out << g.vertex_name(o.tail(e)) << "->" << g.vertex_name(o.head(e)) << '\n';
    return out.str();
}

std::string dump_imbalance(const ImbalanceReport& r) {
    std::ostringstream out;
    out << "even: " << r.even_count << '\n';
    out << "odd: " << r.odd_count << '\n';
    out << "diff: " << r.diff << '\n';
    return out.str();
}

std::string write_certificate(const NiceOrientationCertificate& cert) {
    json j = json::object();
    j["kind"] = to_string(cert.kind);
    j["graph"] = document_to_json(document_from_shape(cert.shape));
    j["designated_edge"] =
        json::array({cert.designated_edge.first, cert.designated_edge.second});

    const Orientation o = cert.orientation();
    json directed = json::array();
    const SignedGraph& og = o.graph();
    for (int e = 0; e < og.edge_count(); ++e)
        directed.push_back(og.vertex_name(o.tail(e)) + "->" + og.vertex_name(o.head(e)));
    j["directed_edges"] = std::move(directed);

    json audit = json::array();
    for (const OutdegreeAuditRow& row : cert.audit) {
        json r = json::object();
        r["vertex"] = row.vertex;
        r["class"] = class_name(row.bound_class);
        r["bound"] = row.bound;
        r["outdegree"] = row.outdegree;
        audit.push_back(std::move(r));
    }
    j["outdegree_audit"] = std::move(audit);

    json imbalance = json::object();
    imbalance["even"] = cert.report.even_count;
    imbalance["odd"] = cert.report.odd_count;
    imbalance["diff"] = cert.report.diff;
    j["imbalance"] = std::move(imbalance);

    return j.dump(2) + "\n";
}

ParsedCertificate parse_certificate(const std::string& text) {
    const json j = parse_json(text, "certificate");
    if (!j.is_object())
        bad("certificate: expected a JSON object");
    for (const char* field :
         {"kind", "graph", "designated_edge", "directed_edges", "outdegree_audit",
          "imbalance"}) {
        if (!j.contains(field))
            bad(std::string("certificate: missing field '") + field + "'");
    }
    for (const auto& [key, value] : j.items()) {
        if (key != "kind" && key != "graph" && key != "designated_edge" &&
            key != "directed_edges" && key != "outdegree_audit" && key != "imbalance")
            bad("certificate: unexpected field '" + key + "'");
    }

    ParsedCertificate cert;
    if (!j["kind"].is_string())
        bad("certificate: 'kind' must be a string");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == to_string(CertificateKind::NiceMinusEdge))
        cert.kind = CertificateKind::NiceMinusEdge;
    else if (kind == to_string(CertificateKind::At5Full))
        cert.kind = CertificateKind::At5Full;
    else
        bad("certificate: unknown kind '" + kind + "'");

    cert.document = document_from_json(j["graph"], "certificate graph");

    const std::vector<VertexId> designated =
        name_array(j["designated_edge"], "'designated_edge'");
    if (designated.size() != 2)
        bad("'designated_edge' must name exactly two vertices");
    cert.designated_edge = {designated[0], designated[1]};

    if (!j["directed_edges"].is_array())
        bad("'directed_edges' must be an array of \"tail->head\" strings");
    for (const json& item : j["directed_edges"]) {
        if (!item.is_string())
            bad("'directed_edges' entries must be strings");
        const std::string s = item.get<std::string>();
        const size_t arrow = s.find("->");
        if (arrow == std::string::npos || s.find("->", arrow + 1) != std::string::npos)
            bad("directed edge '" + s + "' is not of the form tail->head");
        cert.directed_edges.emplace_back(s.substr(0, arrow), s.substr(arrow + 2));
    }

    if (!j["outdegree_audit"].is_array())
        bad("'outdegree_audit' must be an array");
    for (const json& r : j["outdegree_audit"]) {
        if (!r.is_object() || !r.contains("vertex") || !r.contains("class") ||
            !r.contains("bound") || !r.contains("outdegree") || !r["vertex"].is_string() ||
            !r["class"].is_string() || !r["bound"].is_number_integer() ||
            !r["outdegree"].is_number_integer())
            bad("audit rows need string 'vertex'/'class' and integer 'bound'/'outdegree'");
        OutdegreeAuditRow row;
        row.vertex = r["vertex"].get<std::string>();
        row.bound_class = class_from_name(r["class"].get<std::string>());
        row.bound = r["bound"].get<int>();
        row.outdegree = r["outdegree"].get<int>();
        cert.audit.push_back(std::move(row));
    }

    const json& imb = j["imbalance"];
    if (!imb.is_object() || !imb.contains("even") || !imb.contains("odd") ||
        !imb.contains("diff") || !imb["even"].is_number_integer() ||
        !imb["odd"].is_number_integer() || !imb["diff"].is_number_integer())
        bad("'imbalance' needs integer fields 'even', 'odd', 'diff'");
    const long long even = imb["even"].get<long long>();
    const long long odd = imb["odd"].get<long long>();
    if (even < 0 || odd < 0)
        bad("'imbalance' counts must be non-negative");
    cert.report.even_count = static_cast<unsigned long long>(even);
    cert.report.odd_count = static_cast<unsigned long long>(odd);
    cert.report.diff = imb["diff"].get<long long>();

    return cert;
}

ValidationResult verify_certificate(const ParsedCertificate& cert, int enumeration_cap) {
    try {
        const NearTriangulation shape = shape_from_document(cert.document);
        const NearTriangulation rotated = rotate_outer_to_edge(
            shape, cert.designated_edge.first, cert.designated_edge.second);

        const SignedGraph target = cert.kind == CertificateKind::NiceMinusEdge
                                       ? graph_without_designated_edge(rotated)
                                       : rotated.graph;

        std::string why;
        const std::optional<std::uint64_t> mask =
            mask_from_directed_edges(target, cert.directed_edges, &why);
        if (!mask)
            return {false, "directed edges do not orient the expected graph: " + why};
        const Orientation o(target, *mask);

        if (cert.kind == CertificateKind::At5Full) {
            const int v1 = rotated.graph.index_of(cert.designated_edge.first);
            const int v2 = rotated.graph.index_of(cert.designated_edge.second);
            const std::optional<int> e = rotated.graph.find_edge(v1, v2);
            if (!e)
                return {false, "designated edge is not in the graph"};
            if (o.tail(*e) != v1)
                return {false, "designated edge must be directed " +
                                   cert.designated_edge.first + "->" +
                                   cert.designated_edge.second};
        }

        const std::vector<OutdegreeAuditRow> audit = audit_outdegrees(rotated, cert.kind, o);
        if (audit.size() != cert.audit.size())
            return {false, "audit table has the wrong number of rows"};
        for (size_t i = 0; i < audit.size(); ++i) {
            const OutdegreeAuditRow& fresh = audit[i];
            const OutdegreeAuditRow& stored = cert.audit[i];
            if (fresh.vertex != stored.vertex || fresh.bound_class != stored.bound_class ||
                fresh.bound != stored.bound || fresh.outdegree != stored.outdegree)
                return {false, "audit row mismatch at vertex '" + fresh.vertex + "'"};
            if (fresh.outdegree > fresh.bound)
                return {false, "outdegree bound violated at vertex '" + fresh.vertex +
                                   "': " + std::to_string(fresh.outdegree) + " > " +
                                   std::to_string(fresh.bound)};
        }

        const ImbalanceReport fresh = eulerian_imbalance(o, enumeration_cap);
        if (!(fresh == cert.report))
            return {false, "stored imbalance (" + std::to_string(cert.report.even_count) +
                               "/" + std::to_string(cert.report.odd_count) +
                               ") disagrees with the recount (" +
                               std::to_string(fresh.even_count) + "/" +
                               std::to_string(fresh.odd_count) + ")"};
        if (fresh.diff == 0)
            return {false, "orientation is balanced (diff = 0); it certifies nothing"};
    } catch (const std::invalid_argument& e) {
        return {false, e.what()};
    }
    return {true, ""};
}

} // namespace signedat
