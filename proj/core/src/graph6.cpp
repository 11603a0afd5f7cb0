#include "dissoc/graph6.hpp"

namespace dissoc {

namespace {

constexpr int g6_bias = 63;

int decode_byte(std::string_view line, std::size_t pos) {
    if (pos >= line.size()) throw Graph6Error("graph6: unexpected end of input", pos);
    unsigned char c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126) throw Graph6Error("graph6: byte out of printable range", pos);
    return c - g6_bias;
}

} // namespace

Graph parse_graph6(std::string_view line) {
    std::size_t pos = 0;
    int n;
    int first = decode_byte(line, pos);
    if (first < 63) {
        n = first;
        pos = 1;
    } else {
        // '~' prefix: three more 6-bit groups. A second '~' would mean the
        // 8-byte form for n >= 258048, far beyond the 126-vertex cap.
        if (line.size() >= 2 && line[1] == '~')
            throw Graph6Error("graph6: size exceeds supported range", 1);
        int b1 = decode_byte(line, 1);
        int b2 = decode_byte(line, 2);
        int b3 = decode_byte(line, 3);
        n = (b1 << 12) | (b2 << 6) | b3;
        pos = 4;
    }
    if (n > Graph::max_vertices)
        throw Graph6Error("graph6: order " + std::to_string(n) + " exceeds the " +
                              std::to_string(Graph::max_vertices) + "-vertex cap",
                          0);

    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t nbytes = (nbits + 5) / 6;
    if (line.size() < pos + nbytes)
        throw Graph6Error("graph6: truncated edge data", line.size());
    if (line.size() > pos + nbytes)
        throw Graph6Error("graph6: trailing garbage", pos + nbytes);

    std::vector<std::pair<int, int>> edges;
    int cur = 0, cur_bits = 0;
    std::size_t cur_pos = pos;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (cur_bits == 0) {
                cur = decode_byte(line, cur_pos);
                ++cur_pos;
                cur_bits = 6;
            }
            if (cur & (1 << (cur_bits - 1))) edges.emplace_back(i, j);
            --cur_bits;
        }
    }
    // Padding bits of the final byte must be zero.
    if (cur_bits > 0 && (cur & ((1 << cur_bits) - 1)) != 0)
        throw Graph6Error("graph6: nonzero padding bits", cur_pos - 1);

    return Graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
    std::string out;
    int n = g.order();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + g6_bias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + g6_bias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + g6_bias));
        out.push_back(static_cast<char>((n & 63) + g6_bias));
    }
    int cur = 0, cur_bits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            cur = (cur << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++cur_bits == 6) {
                out.push_back(static_cast<char>(cur + g6_bias));
                cur = 0;
                cur_bits = 0;
            }
        }
    }
    if (cur_bits > 0) out.push_back(static_cast<char>((cur << (6 - cur_bits)) + g6_bias));
    return out;
}

std::optional<Graph> Graph6Reader::next() {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_no_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            return parse_graph6(line);
        } catch (const Graph6Error& e) {
            if (strict_)
                throw Graph6Error(std::string(e.what()) + " at line " + std::to_string(line_no_),
                                  e.byte_offset());
            skipped_.emplace_back(line_no_, e.what());
        }
    }
    return std::nullopt;
}

std::vector<Graph> read_graph6_stream(std::istream& in, bool strict) {
    Graph6Reader reader(in, strict);
    std::vector<Graph> out;
    while (auto g = reader.next()) out.push_back(std::move(*g));
    return out;
}

} // namespace dissoc
