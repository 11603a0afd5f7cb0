#ifndef DISSOC_GRAPH6_HPP
#define DISSOC_GRAPH6_HPP

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dissoc/graph.hpp"

namespace dissoc {

class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& reason, std::size_t byte_offset)
        : std::runtime_error(reason + " (byte " + std::to_string(byte_offset) + ")"),
          byte_offset_(byte_offset) {}

    std::size_t byte_offset() const { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

/// Decode one graph6 line. Accepts the one-byte size field (n <= 62) and
/// the '~' + 3 byte extension up to the 126-vertex cap. Rejects malformed
/// bytes, short input, trailing garbage and nonzero padding bits.
Graph parse_graph6(std::string_view line);

/// Encode to graph6 text, deterministic for a given labeled graph.
std::string emit_graph6(const Graph& g);

/// Line-by-line graph6 reader. In strict mode a malformed line throws a
/// Graph6Error annotated with its line number; otherwise the line is
/// skipped and recorded.
class Graph6Reader {
public:
    explicit Graph6Reader(std::istream& in, bool strict = true) : in_(in), strict_(strict) {}

    /// Next graph, or nullopt at end of stream. Blank lines are ignored.
    std::optional<Graph> next();

    std::size_t line_number() const { return line_no_; }
    const std::vector<std::pair<std::size_t, std::string>>& skipped() const { return skipped_; }

private:
    std::istream& in_;
    bool strict_;
    std::size_t line_no_ = 0;
    std::vector<std::pair<std::size_t, std::string>> skipped_;
};

/// Read a whole stream of graph6 lines; strict mode aborts on the first
/// malformed line, lenient mode skips and reports them via the reader.
std::vector<Graph> read_graph6_stream(std::istream& in, bool strict = true);

} // namespace dissoc

#endif
