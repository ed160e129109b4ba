#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tokenlap/graph.hpp"

namespace tokenlap {

/// Largest order accepted by parse_graph6 (single-byte size header).
inline constexpr int kGraph6MaxOrder = 62;

/// Decodes one graph6 record. An optional ">>graph6<<" prefix and trailing
/// whitespace are ignored. Throws ParseError naming the offending byte.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding. Orders above 62 use the four-byte long header
/// so that token graphs can be emitted; parse_graph6 rejects those.
std::string write_graph6(const Graph& g);

struct Graph6Record {
  std::size_t line;  // 1-based line number in the source stream
  std::string text;
};

/// Splits a graph6 stream into records, skipping blank lines. Records are
/// not decoded here.
std::vector<Graph6Record> read_graph6_records(std::istream& in);

}  // namespace tokenlap
