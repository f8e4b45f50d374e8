#include "isk4/graph_io.hpp"

#include <sstream>

namespace isk4 {

namespace {

constexpr int kMaxGraph6Order = 258047;

bool valid_g6_byte(char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw parse_error("empty graph6 input", 0);
    std::size_t pos = 0;
    long long n = 0;
    if (text[pos] == '~') {
        // three-byte order extension
        if (text.size() < 4) throw parse_error("truncated graph6 order field", text.size());
        if (text[1] == '~') throw parse_error("graph6 eight-byte orders unsupported", 1);
        for (int i = 1; i <= 3; ++i) {
            if (!valid_g6_byte(text[i])) throw parse_error("malformed graph6 byte", i);
            n = (n << 6) | (text[i] - 63);
        }
        pos = 4;
    } else {
        if (!valid_g6_byte(text[0])) throw parse_error("malformed graph6 byte", 0);
        n = text[0] - 63;
        pos = 1;
    }
    if (n > kMaxGraph6Order) throw parse_error("graph6 order out of range", 0);

    const long long nbits = n * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() < pos + nbytes)
        throw parse_error("truncated graph6 bit field", text.size());
    if (text.size() > pos + nbytes)
        throw parse_error("trailing garbage after graph6 value", pos + nbytes);

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (std::size_t i = 0; i < nbytes; ++i) {
        char c = text[pos + i];
        if (!valid_g6_byte(c)) throw parse_error("malformed graph6 byte", pos + i);
        int val = c - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            if (bit >= nbits) {
                if ((val >> b) & 1)
                    throw parse_error("nonzero padding in graph6 bit field", pos + i);
                continue;
            }
            if ((val >> b) & 1) {
                // column-major upper triangle: bit index -> (row, column)
                long long idx = bit, col = 1;
                while (idx >= col) {
                    idx -= col;
                    ++col;
                }
                edges.emplace_back(static_cast<int>(idx), static_cast<int>(col));
            }
        }
    }
    return build_graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
    if (g.n > kMaxGraph6Order) throw std::invalid_argument("graph too large for graph6");
    std::string out;
    if (g.n <= 62) {
        out.push_back(static_cast<char>(63 + g.n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((g.n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((g.n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (g.n & 63)));
    }
    int acc = 0, nbits = 0;
    for (int col = 1; col < g.n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    // strip comments, then read "n m" and m pairs
    std::string cleaned;
    cleaned.reserve(text.size());
    bool in_comment = false;
    for (char c : text) {
        if (c == '#') in_comment = true;
        if (c == '\n') in_comment = false;
        cleaned.push_back(in_comment ? ' ' : c);
    }
    std::istringstream in(cleaned);
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw parse_error("edge list header \"n m\" missing", 0);
    if (n < 0 || m < 0) throw parse_error("negative counts in edge list header", 0);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v))
            throw parse_error("edge list truncated after " + std::to_string(i) + " edges",
                              cleaned.size());
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    long long extra;
    if (in >> extra) throw parse_error("trailing tokens after edge list", cleaned.size());
    return build_graph(static_cast<int>(n), edges);
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << g.n << ' ' << es.size() << '\n';
    for (const auto& [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
    std::vector<Graph> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
        if (line.rfind(">>graph6<<", 0) == 0) line.remove_prefix(10);
        if (!line.empty()) out.push_back(parse_graph6(line));
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

}  // namespace isk4
