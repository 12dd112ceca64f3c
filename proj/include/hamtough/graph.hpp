#ifndef HAMTOUGH_GRAPH_HPP
#define HAMTOUGH_GRAPH_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hamtough/vertex_set.hpp"

namespace hamtough {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1, stored as symmetric bit rows.
///
/// Values are immutable once built; every constructor goes through
/// `from_edges` or one of the composition operators, all of which keep the
/// adjacency symmetric with an empty diagonal.
class Graph {
public:
    Graph() = default;

    /// Builds the graph on `n` vertices with the given edges. Duplicate pairs
    /// collapse; out-of-range endpoints throw InvalidVertex, self-loops throw
    /// LoopRejected, n outside [0, kMaxVertices] throws TooLarge.
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    /// Builds from neighbor rows; rows must already be symmetric and loop-free.
    static Graph from_rows(std::vector<VertexSet> rows);

    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph complete_bipartite(int a, int b);
    static Graph edgeless(int n);
    static Graph path(int n);
    static Graph star(int leaves) { return complete_bipartite(1, leaves); }
    static Graph petersen();

    int order() const { return static_cast<int>(rows_.size()); }
    long long size() const { return m_; }

    bool adjacent(int u, int v) const { return rows_[u].test(v); }
    const VertexSet& neighbors(int v) const { return rows_[v]; }
    int degree(int v) const { return rows_[v].count(); }
    std::vector<int> degrees() const;
    VertexSet vertices() const { return VertexSet::prefix(order()); }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    bool is_complete() const {
        const long long n = order();
        return m_ == n * (n - 1) / 2;
    }

    /// Subgraph induced on the complement of `removed`, relabelled densely.
    Graph without(const VertexSet& removed) const;

    /// Same graph plus the listed edges (duplicates ignored).
    Graph with_edges(std::span<const Edge> extra) const;

    /// Checks symmetry, zero diagonal and the cached edge count.
    bool well_formed() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

private:
    explicit Graph(std::vector<VertexSet> rows);

    std::vector<VertexSet> rows_;
    long long m_ = 0;
};

/// g1 v g2: disjoint union plus every edge between the two vertex sets.
Graph join(const Graph& g1, const Graph& g2);

/// g1 + g2, vertices of g2 shifted by g1.order().
Graph disjoint_union(const Graph& g1, const Graph& g2);

/// k disjoint copies of g.
Graph copies(int k, const Graph& g);

/// Nondecreasing degree list with its run-length (k^{x_k}) form.
struct DegreeSequence {
    std::vector<int> degrees;
    std::vector<std::pair<int, int>> runs;  // (degree, multiplicity)

    static DegreeSequence from_degrees(std::vector<int> degrees);
    /// Expands (degree, multiplicity) runs, e.g. {{19, 24}, {38, 15}}.
    static DegreeSequence from_runs(std::span<const std::pair<int, int>> runs);

    int order() const { return static_cast<int>(degrees.size()); }
    int min() const { return degrees.empty() ? 0 : degrees.front(); }
    int max() const { return degrees.empty() ? 0 : degrees.back(); }
    long long sum() const;

    /// 1-based access d_i as written in the degree-sequence literature.
    int d(int i) const { return degrees[static_cast<std::size_t>(i - 1)]; }

    /// "(19^24, 38^15)".
    std::string to_string() const;

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
};

DegreeSequence degree_sequence(const Graph& g);

struct Bipartition {
    std::vector<int> left;
    std::vector<int> right;
};

/// BFS 2-colouring; nullopt if g has an odd cycle.
std::optional<Bipartition> is_bipartite(const Graph& g);

struct Components {
    int count = 0;
    std::vector<int> label;
};

Components components(const Graph& g);

/// Number of components of g - removed, without building the subgraph.
int count_components(const Graph& g, const VertexSet& removed);

bool is_connected(const Graph& g);

/// Parses the edge-list text format: first token n, then pairs "u v".
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

}  // namespace hamtough

#endif  // HAMTOUGH_GRAPH_HPP
