#include "hamtough/graph6.hpp"

#include "hamtough/error.hpp"

namespace hamtough {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view s, std::size_t pos) {
    if (pos >= s.size()) throw FormatError(pos, "truncated graph6 data");
    const int c = static_cast<unsigned char>(s[pos]);
    if (c < kBias || c > 126) throw FormatError(pos, "byte " + std::to_string(c) + " outside [63, 126]");
    return c - kBias;
}

}  // namespace

Graph decode_graph6(std::string_view line) {
    std::size_t pos = 0;
    if (line.starts_with(kHeader)) pos = kHeader.size();
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t')) {
        line.remove_suffix(1);
    }
    if (pos < line.size() && line[pos] == ':') throw FormatError(pos, "sparse6 input is not accepted");
    if (pos < line.size() && line[pos] == '&') throw FormatError(pos, "digraph6 input is not accepted");

    long long n = sextet(line, pos++);
    if (n == 63) {
        if (pos < line.size() && line[pos] == '~') {
            throw FormatError(pos, "8-byte order header exceeds the 512-vertex cap");
        }
        n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | sextet(line, pos++);
        if (n < 63) throw FormatError(pos - 1, "non-canonical long order header");
    }
    if (n > kMaxVertices) throw FormatError(pos - 1, "graph order " + std::to_string(n) + " exceeds 512");

    const int order = static_cast<int>(n);
    std::vector<VertexSet> rows(static_cast<std::size_t>(order));
    int bit = 6, chunk = 0;
    for (int j = 1; j < order; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bit == 6) {
                chunk = sextet(line, pos++);
                bit = 0;
            }
            if ((chunk >> (5 - bit)) & 1) {
                rows[i].set(j);
                rows[j].set(i);
            }
            ++bit;
        }
    }
    if (bit < 6 && (chunk & ((1 << (6 - bit)) - 1)) != 0) {
        throw FormatError(pos - 1, "nonzero padding bits");
    }
    if (pos != line.size()) throw FormatError(pos, "trailing data after graph6 body");
    return Graph::from_rows(std::move(rows));
}

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
    int bit = 0, chunk = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bit == 6) {
                out.push_back(static_cast<char>(chunk + kBias));
                bit = chunk = 0;
            }
        }
    }
    if (bit) out.push_back(static_cast<char>((chunk << (6 - bit)) + kBias));
    return out;
}

}  // namespace hamtough
