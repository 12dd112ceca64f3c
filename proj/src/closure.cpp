#include "hamtough/closure.hpp"

#include <algorithm>

#include "hamtough/error.hpp"

namespace hamtough {

namespace {

std::vector<Edge> lexicographic_pairs(int n) {
    std::vector<Edge> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

}  // namespace

ClosureResult k_closure(const Graph& g, int k) { return k_closure(g, k, lexicographic_pairs(g.order())); }

ClosureResult k_closure(const Graph& g, int k, const std::vector<Edge>& order) {
    if (k < 0) throw Error(ErrorKind::InvalidParameter, "closure parameter k must be >= 0");
    const int n = g.order();
    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) rows[v] = g.neighbors(v);
    std::vector<int> degree = g.degrees();

    ClosureResult result;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [u, v] : order) {
            if (u == v || rows[u].test(v)) continue;
            if (degree[u] + degree[v] >= k) {
                rows[u].set(v);
                rows[v].set(u);
                ++degree[u];
                ++degree[v];
                result.added.emplace_back(std::min(u, v), std::max(u, v));
                changed = true;
            }
        }
    }
    result.closed = Graph::from_rows(std::move(rows));
    result.is_complete = result.closed.is_complete();
    return result;
}

std::optional<PredicateWitness> predicate_P(const DegreeSequence& seq, int t) {
    if (t < 1) throw Error(ErrorKind::InvalidParameter, "predicate P(t) needs t >= 1");
    const int n = seq.order();
    for (int k = 1; 2 * k < n; ++k) {
        if (seq.d(k) > k) continue;
        const int shifted = n - k + t;
        if (shifted > n || shifted < 1) continue;
        if (seq.d(shifted) < n - k) return PredicateWitness{k, seq.d(k), seq.d(shifted)};
    }
    return std::nullopt;
}

std::optional<GapPair> low_degree_pair(const Graph& g) {
    const int n = g.order();
    std::optional<GapPair> best;
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            if (g.adjacent(x, y)) continue;
            const int sum = g.degree(x) + g.degree(y);
            if (!best || sum < best->degree_sum) best = GapPair{x, y, sum};
        }
    }
    if (best && best->degree_sum <= n - 5) return best;
    return std::nullopt;
}

bool many_high_degree_vertices(const Graph& g) {
    const int n = g.order();
    int high = 0;
    for (int v = 0; v < n; ++v)
        if (2 * g.degree(v) > n) ++high;
    return 3 * high > n;
}

}  // namespace hamtough
