#include "hamtough/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "hamtough/error.hpp"

namespace hamtough {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidVertex: return "InvalidVertex";
        case ErrorKind::LoopRejected: return "LoopRejected";
        case ErrorKind::InvalidParameter: return "InvalidParameter";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::FormatError: return "FormatError";
        case ErrorKind::NotConnected: return "NotConnected";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::TooSmall: return "TooSmall";
        case ErrorKind::NotRealizable: return "NotRealizable";
        case ErrorKind::IOError: return "IOError";
    }
    return "Unknown";
}

namespace {

void check_order(long long n) {
    if (n < 0 || n > kMaxVertices) {
        throw Error(ErrorKind::TooLarge, "graph order " + std::to_string(n) + " outside [0, " +
                                             std::to_string(kMaxVertices) + "]");
    }
}

}  // namespace

Graph::Graph(std::vector<VertexSet> rows) : rows_(std::move(rows)) {
    long long twice = 0;
    for (const auto& r : rows_) twice += r.count();
    m_ = twice / 2;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    check_order(n);
    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw Error(ErrorKind::InvalidVertex, "edge (" + std::to_string(u) + ", " +
                                                      std::to_string(v) + ") has an endpoint outside [0, " +
                                                      std::to_string(n) + ")");
        }
        if (u == v) throw Error(ErrorKind::LoopRejected, "self-loop at vertex " + std::to_string(u));
        rows[u].set(v);
        rows[v].set(u);
    }
    return Graph(std::move(rows));
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
    check_order(static_cast<long long>(rows.size()));
    return Graph(std::move(rows));
}

Graph Graph::complete(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidParameter, "complete graph needs n >= 1");
    check_order(n);
    std::vector<VertexSet> rows(static_cast<std::size_t>(n), VertexSet::prefix(n));
    for (int v = 0; v < n; ++v) rows[v].reset(v);
    return Graph(std::move(rows));
}

Graph Graph::cycle(int n) {
    if (n < 3) throw Error(ErrorKind::InvalidParameter, "cycle needs n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return from_edges(n, e);
}

Graph Graph::path(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidParameter, "path needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return from_edges(n, e);
}

Graph Graph::complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw Error(ErrorKind::InvalidParameter, "complete bipartite needs a, b >= 1");
    return join(edgeless(a), edgeless(b));
}

Graph Graph::edgeless(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidParameter, "edgeless graph needs n >= 1");
    check_order(n);
    return Graph(std::vector<VertexSet>(static_cast<std::size_t>(n)));
}

Graph Graph::petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
        e.emplace_back(i, i + 5);                // spokes
        e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return from_edges(10, e);
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(rows_.size());
    for (std::size_t v = 0; v < rows_.size(); ++v) d[v] = rows_[v].count();
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < order(); ++u) {
        for (int v = rows_[u].next(u); v >= 0; v = rows_[u].next(v)) out.emplace_back(u, v);
    }
    return out;
}

Graph Graph::without(const VertexSet& removed) const {
    std::vector<int> relabel(rows_.size(), -1);
    int k = 0;
    for (int v = 0; v < order(); ++v)
        if (!removed.test(v)) relabel[v] = k++;
    std::vector<VertexSet> rows(static_cast<std::size_t>(k));
    for (int v = 0; v < order(); ++v) {
        if (relabel[v] < 0) continue;
        (rows_[v] - removed).for_each([&](int u) { rows[relabel[v]].set(relabel[u]); });
    }
    return Graph(std::move(rows));
}

Graph Graph::with_edges(std::span<const Edge> extra) const {
    auto e = edges();
    e.insert(e.end(), extra.begin(), extra.end());
    return from_edges(order(), e);
}

bool Graph::well_formed() const {
    long long twice = 0;
    const auto all = vertices();
    for (int v = 0; v < order(); ++v) {
        if (rows_[v].test(v)) return false;
        if ((rows_[v] - all).any()) return false;
        bool symmetric = true;
        rows_[v].for_each([&](int u) { symmetric = symmetric && rows_[u].test(v); });
        if (!symmetric) return false;
        twice += rows_[v].count();
    }
    return twice == 2 * m_;
}

Graph join(const Graph& g1, const Graph& g2) {
    const int n1 = g1.order(), n2 = g2.order();
    check_order(static_cast<long long>(n1) + n2);
    std::vector<Edge> e = g1.edges();
    for (auto [u, v] : g2.edges()) e.emplace_back(u + n1, v + n1);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v) e.emplace_back(u, n1 + v);
    return Graph::from_edges(n1 + n2, e);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const int n1 = g1.order(), n2 = g2.order();
    check_order(static_cast<long long>(n1) + n2);
    std::vector<Edge> e = g1.edges();
    for (auto [u, v] : g2.edges()) e.emplace_back(u + n1, v + n1);
    return Graph::from_edges(n1 + n2, e);
}

Graph copies(int k, const Graph& g) {
    if (k < 1) throw Error(ErrorKind::InvalidParameter, "copies needs k >= 1");
    Graph out = g;
    for (int i = 1; i < k; ++i) out = disjoint_union(out, g);
    return out;
}

DegreeSequence DegreeSequence::from_degrees(std::vector<int> degrees) {
    std::sort(degrees.begin(), degrees.end());
    DegreeSequence s;
    for (int d : degrees) {
        if (!s.runs.empty() && s.runs.back().first == d)
            ++s.runs.back().second;
        else
            s.runs.emplace_back(d, 1);
    }
    s.degrees = std::move(degrees);
    return s;
}

DegreeSequence DegreeSequence::from_runs(std::span<const std::pair<int, int>> runs) {
    std::vector<int> d;
    for (auto [value, mult] : runs) {
        if (mult < 0) throw Error(ErrorKind::InvalidParameter, "negative multiplicity");
        d.insert(d.end(), static_cast<std::size_t>(mult), value);
    }
    return from_degrees(std::move(d));
}

long long DegreeSequence::sum() const {
    return std::accumulate(degrees.begin(), degrees.end(), 0LL);
}

std::string DegreeSequence::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (i) os << ", ";
        os << runs[i].first << '^' << runs[i].second;
    }
    os << ')';
    return os.str();
}

DegreeSequence degree_sequence(const Graph& g) { return DegreeSequence::from_degrees(g.degrees()); }

std::optional<Bipartition> is_bipartite(const Graph& g) {
    const int n = g.order();
    std::vector<int> colour(static_cast<std::size_t>(n), -1);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (colour[s] >= 0) continue;
        colour[s] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            bool ok = true;
            g.neighbors(v).for_each([&](int u) {
                if (colour[u] < 0) {
                    colour[u] = 1 - colour[v];
                    queue.push_back(u);
                } else if (colour[u] == colour[v]) {
                    ok = false;
                }
            });
            if (!ok) return std::nullopt;
        }
    }
    Bipartition b;
    for (int v = 0; v < n; ++v) (colour[v] == 0 ? b.left : b.right).push_back(v);
    return b;
}

Components components(const Graph& g) {
    Components c;
    c.label.assign(static_cast<std::size_t>(g.order()), -1);
    VertexSet unseen = g.vertices();
    while (unseen.any()) {
        VertexSet frontier = VertexSet::single(unseen.first());
        VertexSet reached = frontier;
        while (frontier.any()) {
            VertexSet next;
            frontier.for_each([&](int v) { next |= g.neighbors(v); });
            next -= reached;
            reached |= next;
            frontier = next;
        }
        reached.for_each([&](int v) { c.label[v] = c.count; });
        unseen -= reached;
        ++c.count;
    }
    return c;
}

int count_components(const Graph& g, const VertexSet& removed) {
    VertexSet unseen = g.vertices() - removed;
    int count = 0;
    while (unseen.any()) {
        VertexSet frontier = VertexSet::single(unseen.first());
        unseen -= frontier;
        while (frontier.any()) {
            VertexSet next;
            frontier.for_each([&](int v) { next |= g.neighbors(v); });
            next &= unseen;
            unseen -= next;
            frontier = next;
        }
        ++count;
    }
    return count;
}

bool is_connected(const Graph& g) { return g.order() > 0 && count_components(g, VertexSet{}) == 1; }

Graph parse_edge_list(const std::string& text) {
    // Whitespace-separated integers with their byte offsets.
    std::vector<std::pair<long long, std::size_t>> tokens;
    for (std::size_t i = 0; i < text.size();) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        const std::size_t begin = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        const std::string tok = text.substr(begin, i - begin);
        long long value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
            throw FormatError(begin, "non-integer token '" + tok + "' in edge list");
        }
        tokens.emplace_back(value, begin);
    }
    if (tokens.empty()) throw FormatError(0, "edge list must start with the vertex count");
    const long long n = tokens[0].first;
    if (n < 1 || n > kMaxVertices) {
        throw Error(ErrorKind::TooLarge, "edge list vertex count " + std::to_string(n) + " outside [1, 512]");
    }
    if (tokens.size() % 2 == 0) throw FormatError(tokens.back().second, "edge list has a dangling endpoint");
    std::vector<Edge> e;
    for (std::size_t i = 1; i + 1 < tokens.size(); i += 2) {
        const auto u = tokens[i].first, v = tokens[i + 1].first;
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw Error(ErrorKind::InvalidVertex, "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                                      ") at byte " + std::to_string(tokens[i].second) +
                                                      " is out of range");
        }
        e.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph::from_edges(static_cast<int>(n), e);
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.order() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

}  // namespace hamtough
