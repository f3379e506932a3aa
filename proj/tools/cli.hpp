#pragma once

#include <iosfwd>
#include <string>

#include "signedat/coloring.hpp"
#include "signedat/density.hpp"
#include "signedat/orientation.hpp"
#include "signedat/polynomial.hpp"

namespace signedat::cli {

/// Everything a single invocation needs; run() performs no argument
/// parsing, so tests can drive subcommands directly.
struct RunConfig {
    std::string subcommand;
    std::string input_path;  // graph or certificate file
    std::string lists_path;  // list-color
    std::string output_path; // nice / certify-at5 / switch
    std::string graph_out = "figure2-graph.json";
    std::string lists_out = "figure2-lists.txt";
    std::string edge;       // "u,v" designated edge for nice
    std::string switch_set; // comma-joined vertex names; "" = empty set
    int k = 0;
    int m = 0;
    int expansion_cap = kDefaultExpansionCap;
    int enumeration_cap = kDefaultEnumerationCap;
    unsigned long long search_cap = kDefaultSearchCap;
    int mad_vertex_cap = kDefaultMadVertexCap;
};

inline constexpr int kExitSuccess = 0;       // computed / verified
inline constexpr int kExitRefuted = 1;       // property refuted or certificate invalid
inline constexpr int kExitUsage = 2;         // bad arguments or malformed input
inline constexpr int kExitResourceLimit = 3; // a cap stopped the computation

/// Dispatches one subcommand. Reports go to `out`, diagnostics to `err`;
/// the return value is one of the exit codes above.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full pipeline: parse argv (caps may also come from SIGNEDAT_EXPANSION_CAP,
/// SIGNEDAT_ENUM_CAP, SIGNEDAT_SEARCH_CAP, SIGNEDAT_MAD_CAP; explicit flags
/// win), then run.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace signedat::cli
