#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rigidspec/framework.hpp"
#include "rigidspec/graph.hpp"

namespace rigidspec {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// complete:n | turan:n,r | file:path (edge-list text).
Graph parse_graph_spec(const std::string& spec);

/// simplex:d | turan-simplex:n,d | crosspolytope:n,d | circle:n | tetra:h |
/// random:n,d,seed[,centered] | file:path (placement JSON).
Placement parse_placement_spec(const std::string& spec);

/// "lo..hi" or a single integer.
std::pair<int, int> parse_int_range(const std::string& text, const std::string& field);

/// Full command-line entry point; argv[0] is the program name. Writes the
/// primary output to `out` (or --output) and diagnostics to `err`.
int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rigidspec
