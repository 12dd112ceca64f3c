#ifndef HAMTOUGH_CLOSURE_HPP
#define HAMTOUGH_CLOSURE_HPP

#include <optional>
#include <vector>

#include "hamtough/graph.hpp"

namespace hamtough {

struct ClosureResult {
    Graph closed;
    std::vector<Edge> added;  // insertion order
    bool is_complete = false;
};

/// Degree-sum closure C_k(G): repeatedly joins nonadjacent u, v with
/// d(u) + d(v) >= k until no such pair remains. Pairs are scanned in
/// lexicographic order, one full pass at a time, so `added` is reproducible.
ClosureResult k_closure(const Graph& g, int k);

/// Same fixpoint with pairs visited in `order` on every pass. The resulting
/// edge set is independent of the order; only `added` differs.
ClosureResult k_closure(const Graph& g, int k, const std::vector<Edge>& order);

struct PredicateWitness {
    int k = 0;
    int d_k = 0;
    int d_shifted = 0;  // d_{n-k+t}
};

/// P(t): for every k < n/2 with d_k <= k, require d_{n-k+t} >= n-k.
/// Returns the smallest violating k, or nullopt when P(t) holds. Indices
/// n-k+t beyond n are skipped as vacuous.
std::optional<PredicateWitness> predicate_P(const DegreeSequence& seq, int t);

struct GapPair {
    int x = 0;
    int y = 0;
    int degree_sum = 0;
};

/// A nonadjacent pair minimizing d(x) + d(y), if that minimum is <= n - 5.
std::optional<GapPair> low_degree_pair(const Graph& g);

/// More than n/3 vertices have degree greater than n/2 (exact integer comparisons).
bool many_high_degree_vertices(const Graph& g);

}  // namespace hamtough

#endif  // HAMTOUGH_CLOSURE_HPP
