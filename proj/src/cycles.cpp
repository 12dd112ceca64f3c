#include "hamtough/cycles.hpp"

#include <algorithm>
#include <stdexcept>

#include "hamtough/closure.hpp"
#include "hamtough/error.hpp"

namespace hamtough {

bool cycle_valid(const Graph& g, std::span<const int> cycle) {
    if (cycle.size() < 3) return false;
    VertexSet seen;
    for (int v : cycle) {
        if (v < 0 || v >= g.order() || seen.test(v)) return false;
        seen.set(v);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (!g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
    }
    return true;
}

namespace {

bool has_cut_vertex(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (count_components(g, VertexSet::single(v)) > 1) return true;
    return false;
}

/// Backtracking over simple paths with bitset bookkeeping. One instance
/// answers one query; `expansions` counts visited search-tree nodes.
class PathSearch {
public:
    PathSearch(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

    /// Spanning cycle through `start`.
    bool hamiltonian(int start) {
        start_ = start;
        target_ = g_.order();
        free_ = g_.vertices();
        free_.reset(start);
        path_.assign(1, start);
        return extend_spanning(start);
    }

    /// Cycle on exactly `length` vertices whose minimum vertex is `anchor`.
    bool anchored(int anchor, int length) {
        start_ = anchor;
        target_ = length;
        free_ = g_.vertices() - VertexSet::prefix(anchor + 1);
        if (intersection_count(g_.neighbors(anchor), free_) < 2) return false;
        path_.assign(1, anchor);
        return extend_partial(anchor);
    }

    bool exhausted() const { return exhausted_; }
    std::uint64_t expansions() const { return expansions_; }
    const std::vector<int>& path() const { return path_; }

private:
    bool tick() {
        if (++expansions_ > budget_) exhausted_ = true;
        return !exhausted_;
    }

    /// Candidates ordered by how few free neighbours they have left.
    std::vector<int> candidates(int v) const {
        std::vector<std::pair<int, int>> ranked;
        (g_.neighbors(v) & free_).for_each(
            [&](int u) { ranked.emplace_back(intersection_count(g_.neighbors(u), free_), u); });
        std::sort(ranked.begin(), ranked.end());
        std::vector<int> out;
        out.reserve(ranked.size());
        for (auto [_, u] : ranked) out.push_back(u);
        return out;
    }

    /// Vertices of `free_` reachable from v through free vertices.
    VertexSet reach(int v) const {
        VertexSet reached, frontier = g_.neighbors(v) & free_;
        reached = frontier;
        while (frontier.any()) {
            VertexSet next;
            frontier.for_each([&](int u) { next |= g_.neighbors(u); });
            next &= free_;
            next -= reached;
            reached |= next;
            frontier = next;
        }
        return reached;
    }

    bool extend_spanning(int v) {
        if (!tick()) return false;
        if (free_.none()) return g_.adjacent(v, start_);
        if (v != start_ && (g_.neighbors(start_) & free_).none()) return false;

        // Every free vertex needs two cycle neighbours among free vertices and the two path ends.
        VertexSet usable = free_;
        usable.set(v);
        usable.set(start_);
        bool feasible = true;
        free_.for_each([&](int u) {
            if (feasible && intersection_count(g_.neighbors(u), usable) < 2) feasible = false;
        });
        if (!feasible) return false;
        if (reach(v) != free_) return false;

        for (int u : candidates(v)) {
            free_.reset(u);
            path_.push_back(u);
            if (extend_spanning(u)) return true;
            path_.pop_back();
            free_.set(u);
            if (exhausted_) return false;
        }
        return false;
    }

    bool extend_partial(int v) {
        if (!tick()) return false;
        const int depth = static_cast<int>(path_.size());
        if (depth == target_) return g_.adjacent(v, start_);
        const int remaining = target_ - depth;

        // Breadth-first layers from v through free vertices: some vertex
        // adjacent to the anchor must lie within `remaining` steps, and at
        // least `remaining` free vertices must be reachable.
        const VertexSet closers = g_.neighbors(start_) & free_;
        VertexSet frontier = g_.neighbors(v) & free_;
        VertexSet reached = frontier;
        int layer = 1, closer_layer = 0;
        while (frontier.any()) {
            if (!closer_layer && (frontier & closers).any()) closer_layer = layer;
            if (closer_layer && reached.count() >= remaining) break;
            VertexSet next;
            frontier.for_each([&](int u) { next |= g_.neighbors(u); });
            next &= free_;
            next -= reached;
            reached |= next;
            frontier = next;
            ++layer;
        }
        if (!closer_layer || closer_layer > remaining || reached.count() < remaining) return false;

        for (int u : candidates(v)) {
            if (remaining == 1 && !g_.adjacent(u, start_)) continue;
            free_.reset(u);
            path_.push_back(u);
            if (extend_partial(u)) return true;
            path_.pop_back();
            free_.set(u);
            if (exhausted_) return false;
        }
        return false;
    }

    const Graph& g_;
    std::uint64_t budget_;
    std::uint64_t expansions_ = 0;
    bool exhausted_ = false;
    int start_ = 0;
    int target_ = 0;
    VertexSet free_;
    std::vector<int> path_;
};

}  // namespace

HamiltonSearch find_hamiltonian_cycle(const Graph& g, std::uint64_t budget) {
    const int n = g.order();
    if (n < 3) throw Error(ErrorKind::TooSmall, "Hamiltonicity needs at least 3 vertices");
    HamiltonSearch result;
    result.outcome = Decision::No;
    if (!is_connected(g)) return result;
    const auto degrees = g.degrees();
    if (*std::min_element(degrees.begin(), degrees.end()) < 2 || has_cut_vertex(g)) return result;
    if (auto parts = is_bipartite(g); parts && parts->left.size() != parts->right.size()) return result;
    if (auto cut = seeded_violation(g, Rational(1))) {
        result.obstruction = std::move(cut);
        return result;
    }

    const int start = static_cast<int>(std::min_element(degrees.begin(), degrees.end()) - degrees.begin());
    PathSearch search(g, budget);
    const bool found = search.hamiltonian(start);
    result.expansions = search.expansions();
    if (found) {
        result.outcome = Decision::Yes;
        result.cycle = HamiltonCertificate{search.path()};
        if (!cycle_valid(g, result.cycle->order)) throw std::logic_error("Hamiltonian search produced an invalid cycle");
    } else if (search.exhausted()) {
        result.outcome = Decision::Unknown;
    }
    return result;
}

HamiltonCertificate unwind_closure_cycle(const Graph& closed, std::span<const Edge> added, HamiltonCertificate cycle) {
    const int n = closed.order();
    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) rows[v] = closed.neighbors(v);
    auto& x = cycle.order;

    for (auto it = added.rbegin(); it != added.rend(); ++it) {
        const auto [u, v] = *it;
        rows[u].reset(v);
        rows[v].reset(u);

        const auto pu = static_cast<int>(std::find(x.begin(), x.end(), u) - x.begin());
        const int next = (pu + 1) % n, prev = (pu + n - 1) % n;
        if (x[next] != v && x[prev] != v) continue;

        // Lay the cycle out as the path u = x[0], ..., x[n-1] = v.
        std::rotate(x.begin(), x.begin() + pu, x.end());
        if (x[1] == v) std::reverse(x.begin() + 1, x.end());

        // d(u) + d(v) >= n in the graph without uv forces an index j with
        // x[0] ~ x[j+1] and x[j] ~ x[n-1].
        bool rerouted = false;
        for (int j = 1; j + 1 < n; ++j) {
            if (rows[x[0]].test(x[j + 1]) && rows[x[j]].test(x[n - 1])) {
                std::reverse(x.begin() + j + 1, x.end());
                rerouted = true;
                break;
            }
        }
        if (!rerouted) throw std::logic_error("closure edge cannot be unwound; closure parameter below n?");
    }
    return cycle;
}

ClosureHamiltonicity is_hamiltonian_via_closure(const Graph& g, std::uint64_t budget) {
    const int n = g.order();
    if (n < 3) throw Error(ErrorKind::TooSmall, "Hamiltonicity needs at least 3 vertices");
    ClosureHamiltonicity result;
    result.outcome = Decision::No;
    if (!is_connected(g)) return result;

    const auto closure = k_closure(g, n);
    result.closure_complete = closure.is_complete;
    result.closure_edges_added = static_cast<int>(closure.added.size());

    HamiltonCertificate on_closure;
    if (closure.is_complete) {
        on_closure.order.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) on_closure.order[v] = v;
    } else {
        const auto search = find_hamiltonian_cycle(closure.closed, budget);
        result.expansions = search.expansions;
        result.outcome = search.outcome;
        if (search.obstruction) {
            // g is a spanning subgraph of its closure, so the cut splits g at least as much.
            VertexSet cut;
            for (int v : search.obstruction->cut) cut.set(v);
            result.obstruction = CutCertificate{search.obstruction->cut, count_components(g, cut)};
        }
        if (search.outcome != Decision::Yes) return result;
        on_closure = *search.cycle;
    }
    result.cycle = unwind_closure_cycle(closure.closed, closure.added, std::move(on_closure));
    if (!cycle_valid(g, result.cycle->order)) throw std::logic_error("closure unwinding produced an invalid cycle");
    result.outcome = Decision::Yes;
    return result;
}

HamiltonSearch find_cycle_of_length(const Graph& g, int length, std::uint64_t budget) {
    const int n = g.order();
    HamiltonSearch result;
    result.outcome = Decision::No;
    if (length < 3 || length > n) return result;
    if (length == n) return find_hamiltonian_cycle(g, budget);

    std::uint64_t used = 0;
    for (int anchor = 0; anchor + length <= n; ++anchor) {
        PathSearch search(g, budget - used);
        const bool found = search.anchored(anchor, length);
        used += search.expansions();
        if (found) {
            result.outcome = Decision::Yes;
            result.cycle = HamiltonCertificate{search.path()};
            if (!cycle_valid(g, result.cycle->order)) throw std::logic_error("cycle search produced an invalid cycle");
            break;
        }
        if (search.exhausted()) {
            result.outcome = Decision::Unknown;
            break;
        }
    }
    result.expansions = used;
    return result;
}

std::vector<int> CycleSpectrum::present() const {
    std::vector<int> out;
    for (int l = 3; l <= order; ++l)
        if (status[l] == Decision::Yes) out.push_back(l);
    return out;
}

bool CycleSpectrum::exact() const {
    return std::none_of(status.begin(), status.end(), [](Decision d) { return d == Decision::Unknown; });
}

bool CycleSpectrum::pancyclic() const {
    if (order < 3) return false;
    for (int l = 3; l <= order; ++l)
        if (status[l] != Decision::Yes) return false;
    return true;
}

CycleSpectrum cycle_spectrum(const Graph& g, std::uint64_t budget) {
    const int n = g.order();
    CycleSpectrum spec;
    spec.order = n;
    spec.status.assign(static_cast<std::size_t>(n) + 1, Decision::No);
    const auto parts = is_bipartite(g);
    spec.bipartite = parts.has_value();

    std::vector<int> lengths;
    for (int l = 3; l <= n; ++l) {
        if (parts && (l % 2 == 1 || l > 2 * static_cast<int>(std::min(parts->left.size(), parts->right.size())))) {
            continue;
        }
        lengths.push_back(l);
    }
    if (lengths.empty()) return spec;
    const std::uint64_t share = std::max<std::uint64_t>(1, budget / lengths.size());
    for (int l : lengths) {
        if (l == n) {
            spec.status[l] = is_hamiltonian_via_closure(g, share).outcome;
        } else {
            spec.status[l] = find_cycle_of_length(g, l, share).outcome;
        }
    }
    return spec;
}

Conclusion classify_conclusion(const Graph& g, std::uint64_t budget) {
    Conclusion c;
    c.bipartite = is_bipartite(g).has_value();
    if (g.order() < 3) {
        c.hamiltonian = c.pancyclic = Decision::No;
        return c;
    }
    c.hamiltonian = is_hamiltonian_via_closure(g, budget).outcome;
    if (c.hamiltonian == Decision::No || (c.bipartite && g.order() >= 3)) {
        // Bipartite graphs have no triangle.
        c.pancyclic = Decision::No;
        return c;
    }
    const auto spec = cycle_spectrum(g, budget);
    if (spec.pancyclic()) {
        c.pancyclic = Decision::Yes;
    } else {
        const bool missing = std::any_of(spec.status.begin() + 3, spec.status.end(),
                                         [](Decision d) { return d == Decision::No; });
        c.pancyclic = missing ? Decision::No : Decision::Unknown;
    }
    return c;
}

}  // namespace hamtough
