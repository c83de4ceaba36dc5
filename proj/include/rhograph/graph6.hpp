#ifndef RHOGRAPH_GRAPH6_HPP
#define RHOGRAPH_GRAPH6_HPP

#include <string>
#include <string_view>

#include "rhograph/graph.hpp"

namespace rhograph {

/// Encode in the standard graph6 format (printable 6-bit packing of the
/// order followed by the upper triangle in column-major bit order).
std::string to_graph6(const Graph& g);

/// Decode one graph6 or sparse6 line (sparse6 starts with ':'); optional
/// ">>graph6<<" / ">>sparse6<<" headers are skipped. Throws ParseError
/// with the byte offset on malformed input.
Graph parse_graph6(std::string_view line);

} // namespace rhograph

#endif
