#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "strongmatch/engine.hpp"
#include "strongmatch/exact.hpp"
#include "strongmatch/graph.hpp"

namespace strongmatch {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Graph text format: '#' lines and blank lines are ignored; the first data
// line is "<n> <m>", followed by exactly m lines "<u> <v>".

/// Throws ParseError for malformed input, including the GraphError cases
/// (self-loop, duplicate edge, id out of range).
Graph parse_graph(std::string_view text);

/// Edges sorted by (min id, max id). The header's n is one past the largest
/// identifier, so graphs with identifiers 0..n-1 round-trip exactly.
std::string format_graph(const Graph& g);

// Matching text format: one edge "<u> <v>" per line, sorted.
Matching parse_matching(std::string_view text);
std::string format_matching(const Matching& m);

// Certificate text format:
//   step <k> rule <R1..R12|EXACT> match <u>-<v>[,<u>-<v>] remove <id>,<id>,...
//   ...
//   matching <u>-<v>[,...]
// Steps are numbered from 1; an empty list is written as "-".
std::string format_certificate(const SolveResult& r);

struct ParsedCertificate {
  Certificate certificate;
  Matching matching;
};

ParsedCertificate parse_certificate(std::string_view text);

/// Whole file as a string; throws ParseError when it cannot be read.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace strongmatch
