#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "CLI11.hpp"

#include "signedat/errors.hpp"
#include "signedat/io.hpp"
#include "signedat/triangulation.hpp"

namespace signedat::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << content;
    if (!out)
        throw std::runtime_error("write to '" + path + "' failed");
}

GraphDocument load_document(const std::string& path) {
    return parse_graph_document(read_file(path));
}

std::vector<VertexId> split_names(const std::string& joined) {
    std::vector<VertexId> names;
    if (joined.empty())
        return names;
    size_t start = 0;
    while (true) {
        const size_t comma = joined.find(',', start);
        names.push_back(joined.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return names;
}

void print_named_coloring(const SignedGraph& g, const std::vector<int>& phi,
                          std::ostream& out) {
    out << "coloring:\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out << g.vertex_name(v) << " = " << phi[static_cast<size_t>(v)] << '\n';
}

int cmd_poly(const RunConfig& cfg, std::ostream& out) {
    const GraphDocument doc = load_document(cfg.input_path);
    const SignedPolynomial p = expand(doc.graph, cfg.expansion_cap);
    out << "terms:\n" << p.dump();
    const AtPolyResult at = at_number_poly(p);
    out << "at_number: " << at.at_number << '\n';
    out << "witness_exponents: ";
    for (size_t i = 0; i < at.witness_exponents.size(); ++i) {
        if (i)
            out << ',';
        out << at.witness_exponents[i];
    }
    out << '\n';
    out << "witness_coefficient: " << at.witness_coefficient << '\n';
    return kExitSuccess;
}

int cmd_at(const RunConfig& cfg, std::ostream& out) {
    const GraphDocument doc = load_document(cfg.input_path);
    const AtOrientResult at = at_number_orient(doc.graph, cfg.enumeration_cap);
    out << "at_number: " << at.at_number << '\n';
    out << "orientation:\n";
    out << dump_orientation(Orientation(doc.graph, at.witness_mask));
    out << dump_imbalance(at.report);
    return kExitSuccess;
}

int emit_certificate(const NiceOrientationCertificate& cert, const std::string& output_path,
                     std::ostream& out) {
    const std::string text = write_certificate(cert);
    if (output_path.empty()) {
        out << text;
    } else {
        write_file(output_path, text);
        out << "certificate written to " << output_path << '\n';
    }
    return kExitSuccess;
}

int cmd_nice(const RunConfig& cfg, std::ostream& out) {
    const NearTriangulation shape = shape_from_document(load_document(cfg.input_path));
    NiceOrientationCertificate cert;
    if (cfg.edge.empty()) {
        cert = nice_orientation(shape, cfg.enumeration_cap);
    } else {
        const std::vector<VertexId> ends = split_names(cfg.edge);
        if (ends.size() != 2)
            throw std::invalid_argument("--edge expects two vertex names 'u,v'");
        cert = nice_orientation(shape, ends[0], ends[1], cfg.enumeration_cap);
    }
    return emit_certificate(cert, cfg.output_path, out);
}

int cmd_certify_at5(const RunConfig& cfg, std::ostream& out) {
    const NearTriangulation shape = shape_from_document(load_document(cfg.input_path));
    return emit_certificate(at5_certificate(shape, cfg.enumeration_cap), cfg.output_path,
                            out);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const ParsedCertificate cert = parse_certificate(read_file(cfg.input_path));
    const ValidationResult result = verify_certificate(cert, cfg.enumeration_cap);
    if (!result.ok) {
        out << "invalid: " << result.diagnostic << '\n';
        return kExitRefuted;
    }
    out << "verified: " << to_string(cert.kind) << " certificate (diff="
        << cert.report.diff << ")\n";
    return kExitSuccess;
}

int cmd_mad(const RunConfig& cfg, std::ostream& out) {
    const GraphDocument doc = load_document(cfg.input_path);
    const DensityReport report = mad(doc.graph, cfg.mad_vertex_cap);
    out << "mad: " << report.numerator << '/' << report.denominator << '\n';
    out << "witness: ";
    for (size_t i = 0; i < report.witness.size(); ++i) {
        if (i)
            out << ',';
        out << doc.graph.vertex_name(report.witness[i]);
    }
    out << '\n';
    return kExitSuccess;
}

int cmd_at_negative(const RunConfig& cfg, std::ostream& out) {
    const GraphDocument doc = load_document(cfg.input_path);
    const AtNegativeResult result = at_all_negative(doc.graph, cfg.mad_vertex_cap);
    out << "at_number: " << result.at_number << '\n';
    out << "mad: " << result.density.numerator << '/' << result.density.denominator
        << '\n';
    out << "orientation:\n";
    out << dump_orientation(Orientation(doc.graph, result.orientation_mask));
    return kExitSuccess;
}

int cmd_chromatic(const RunConfig& cfg, std::ostream& out) {
    const GraphDocument doc = load_document(cfg.input_path);
    const ChromaticResult result = chromatic_number(doc.graph, cfg.search_cap);
    out << "chromatic_number: " << result.chromatic_number << '\n';
    print_named_coloring(doc.graph, result.coloring, out);
    return kExitSuccess;
}

int cmd_list_color(const RunConfig& cfg, std::ostream& out) {
    const GraphDocument doc = load_document(cfg.input_path);
    const ListAssignment lists =
        parse_list_assignment(doc.graph, read_file(cfg.lists_path));
    const ListColorResult result = list_color(doc.graph, lists, cfg.search_cap);
    if (result.coloring) {
        print_named_coloring(doc.graph, *result.coloring, out);
        return kExitSuccess;
    }
    out << "no proper L-coloring (" << result.assignments_ruled_out
        << " assignments exhausted)\n";
    return kExitRefuted;
}

int cmd_refute(const RunConfig& cfg, std::ostream& out) {
    const GraphDocument doc = load_document(cfg.input_path);
    const std::optional<ListAssignment> refutation =
        refute_choosability(doc.graph, cfg.k, cfg.m, cfg.search_cap);
    if (!refutation) {
        out << "no refutation found\n";
        return kExitSuccess;
    }
    out << "refutation:\n" << write_list_assignment(doc.graph, *refutation);
    return kExitRefuted;
}

int cmd_switch(const RunConfig& cfg, std::ostream& out) {
    GraphDocument doc = load_document(cfg.input_path);
    doc.graph = switched(doc.graph, split_names(cfg.switch_set));
    const std::string text = write_graph_document(doc);
    if (cfg.output_path.empty()) {
        out << text;
    } else {
        write_file(cfg.output_path, text);
        out << "graph written to " << cfg.output_path << '\n';
    }
    return kExitSuccess;
}

int cmd_antibalanced(const RunConfig& cfg, std::ostream& out) {
    const GraphDocument doc = load_document(cfg.input_path);
    const std::optional<std::vector<int>> x = is_antibalanced(doc.graph);
    if (!x) {
        out << "antibalanced: no\n";
        return kExitRefuted;
    }
    out << "antibalanced: yes\n";
    out << "switch_set: {";
    for (size_t i = 0; i < x->size(); ++i) {
        if (i)
            out << ',';
        out << doc.graph.vertex_name((*x)[i]);
    }
    out << "}\n";
    return kExitSuccess;
}

int cmd_figure2(const RunConfig& cfg, std::ostream& out) {
    const HardInstance inst = figure2_instance();
    write_file(cfg.graph_out, write_graph_document(document_from_shape(inst.shape)));
    out << "wrote " << cfg.graph_out << '\n';
    write_file(cfg.lists_out, write_list_assignment(inst.shape.graph, inst.lists));
    out << "wrote " << cfg.lists_out << '\n';
    return kExitSuccess;
}

} // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.subcommand == "poly")
            return cmd_poly(cfg, out);
        if (cfg.subcommand == "at")
            return cmd_at(cfg, out);
        if (cfg.subcommand == "nice")
            return cmd_nice(cfg, out);
        if (cfg.subcommand == "certify-at5")
            return cmd_certify_at5(cfg, out);
        if (cfg.subcommand == "verify")
            return cmd_verify(cfg, out);
        if (cfg.subcommand == "mad")
            return cmd_mad(cfg, out);
        if (cfg.subcommand == "at-negative")
            return cmd_at_negative(cfg, out);
        if (cfg.subcommand == "chromatic")
            return cmd_chromatic(cfg, out);
        if (cfg.subcommand == "list-color")
            return cmd_list_color(cfg, out);
        if (cfg.subcommand == "refute")
            return cmd_refute(cfg, out);
        if (cfg.subcommand == "switch")
            return cmd_switch(cfg, out);
        if (cfg.subcommand == "antibalanced")
            return cmd_antibalanced(cfg, out);
        if (cfg.subcommand == "figure2")
            return cmd_figure2(cfg, out);
        err << "unknown subcommand '" << cfg.subcommand << "'\n";
        return kExitUsage;
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << '\n';
        return kExitResourceLimit;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRefuted;
    }
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Alon-Tarsi numbers of signed graphs: exact expansion, orientation "
                 "search, construction certificates, density, and list coloring"};
    app.require_subcommand(1);

    app.add_option("--expansion-cap", cfg.expansion_cap,
                   "Edge limit for full polynomial expansion")
        ->envname("SIGNEDAT_EXPANSION_CAP");
    app.add_option("--enum-cap", cfg.enumeration_cap,
                   "Edge limit for orientation/Eulerian enumeration")
        ->envname("SIGNEDAT_ENUM_CAP");
    app.add_option("--search-cap", cfg.search_cap,
                   "Step budget for coloring searches")
        ->envname("SIGNEDAT_SEARCH_CAP");
    app.add_option("--mad-cap", cfg.mad_vertex_cap,
                   "Vertex limit for the exhaustive density scan")
        ->envname("SIGNEDAT_MAD_CAP");

    const auto add_input = [&cfg](CLI::App* sub, const char* what) {
        sub->add_option("input", cfg.input_path, what)->required();
    };

    CLI::App* poly = app.add_subcommand("poly", "Expand the graph polynomial and "
                                                "read off the Alon-Tarsi number");
    add_input(poly, "graph file");
    CLI::App* at = app.add_subcommand("at", "Find the Alon-Tarsi number by "
                                            "orientation search");
    add_input(at, "graph file");
    CLI::App* nice = app.add_subcommand("nice", "Construct a certified orientation of "
                                                "a near triangulation minus one outer edge");
    add_input(nice, "graph file with embedding");
    nice->add_option("--edge", cfg.edge, "designated outer edge 'u,v' (default: the "
                                         "first two outer vertices)");
    nice->add_option("--output", cfg.output_path, "certificate file to write");
    CLI::App* at5 = app.add_subcommand("certify-at5", "Certify Alon-Tarsi number at "
                                                      "most 5 for a near triangulation");
    add_input(at5, "graph file with embedding");
    at5->add_option("--output", cfg.output_path, "certificate file to write");
    CLI::App* verify = app.add_subcommand("verify", "Re-check a certificate file");
    add_input(verify, "certificate file");
    CLI::App* madcmd = app.add_subcommand("mad", "Exact maximum average degree");
    add_input(madcmd, "graph file");
    CLI::App* atneg = app.add_subcommand("at-negative", "Alon-Tarsi number of an "
                                                        "all-negative graph, by density");
    add_input(atneg, "graph file");
    CLI::App* chrom = app.add_subcommand("chromatic", "Chromatic number over symmetric "
                                                      "palettes");
    add_input(chrom, "graph file");
    CLI::App* lc = app.add_subcommand("list-color", "Search for a proper coloring from "
                                                    "per-vertex lists");
    add_input(lc, "graph file");
    lc->add_option("--lists", cfg.lists_path, "list assignment file")->required();
    CLI::App* refute = app.add_subcommand("refute", "Search for a list assignment "
                                                    "admitting no proper coloring");
    add_input(refute, "graph file");
    refute->add_option("-k", cfg.k, "list size")->required();
    refute->add_option("-m", cfg.m, "colors come from {-m,...,m}")->required();
    CLI::App* sw = app.add_subcommand("switch", "Switch the graph at a vertex set");
    add_input(sw, "graph file");
    sw->add_option("--set", cfg.switch_set, "comma-joined vertex names ('' = empty set)")
        ->required();
    sw->add_option("--output", cfg.output_path, "graph file to write");
    CLI::App* anti = app.add_subcommand("antibalanced", "Test switching equivalence to "
                                                        "the all-negative graph");
    add_input(anti, "graph file");
    CLI::App* fig2 = app.add_subcommand("figure2", "Emit the built-in 2-colorable, "
                                                   "non-3-choosable plane instance");
    fig2->add_option("--graph-out", cfg.graph_out, "graph file to write");
    fig2->add_option("--lists-out", cfg.lists_out, "lists file to write");

    for (CLI::App* sub :
         {poly, at, nice, at5, verify, madcmd, atneg, chrom, lc, refute, sw, anti, fig2})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitSuccess;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }

    cfg.subcommand = app.get_subcommands().front()->get_name();
    return run(cfg, out, err);
}

} // namespace signedat::cli
