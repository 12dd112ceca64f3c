#ifndef HAMTOUGH_GRAPH6_HPP
#define HAMTOUGH_GRAPH6_HPP

#include <string>
#include <string_view>

#include "hamtough/graph.hpp"

namespace hamtough {

/// Decodes one graph6 line. An optional ">>graph6<<" header and trailing
/// whitespace are accepted; sparse6 (':') and digraph6 ('&') lines, bytes
/// outside [63, 126], truncated or overlong bodies and nonzero padding bits
/// throw FormatError with the offending byte offset.
Graph decode_graph6(std::string_view line);

/// Canonical graph6 text (no header, no newline).
std::string encode_graph6(const Graph& g);

}  // namespace hamtough

#endif  // HAMTOUGH_GRAPH6_HPP
