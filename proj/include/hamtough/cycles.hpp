#ifndef HAMTOUGH_CYCLES_HPP
#define HAMTOUGH_CYCLES_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hamtough/graph.hpp"
#include "hamtough/toughness.hpp"

namespace hamtough {

/// Search-tree node expansions allowed per query.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Cyclic vertex order; the closing pair (back, front) is an edge too.
struct HamiltonCertificate {
    std::vector<int> order;
};

/// True when `cycle` lists distinct vertices of g, has length >= 3, and
/// consecutive pairs including the wraparound are edges.
bool cycle_valid(const Graph& g, std::span<const int> cycle);

struct HamiltonSearch {
    Decision outcome = Decision::Unknown;  // Yes = found, No = exhaustively none
    std::optional<HamiltonCertificate> cycle;
    std::optional<CutCertificate> obstruction;  // S with c(G - S) > |S|, when found
    std::uint64_t expansions = 0;
};

/// Exact backtracking search. Throws TooSmall for n < 3; disconnected
/// graphs answer No without searching, and so do graphs where a seeded cut
/// S leaves more than |S| components (reported as `obstruction`).
HamiltonSearch find_hamiltonian_cycle(const Graph& g, std::uint64_t budget = kDefaultBudget);

struct ClosureHamiltonicity {
    Decision outcome = Decision::Unknown;
    std::optional<HamiltonCertificate> cycle;  // a cycle of g itself when Yes
    std::optional<CutCertificate> obstruction;  // a cut of g with c(G - S) > |S|
    bool closure_complete = false;             // C_n(g) = K_n
    int closure_edges_added = 0;
    std::uint64_t expansions = 0;
};

/// Decides Hamiltonicity through C_n(g): searches the closure (or takes the
/// trivial cycle of K_n), then removes the added edges in reverse order,
/// rerouting the cycle each time, so Yes always carries a cycle of g.
ClosureHamiltonicity is_hamiltonian_via_closure(const Graph& g, std::uint64_t budget = kDefaultBudget);

/// Converts a Hamiltonian cycle of C_k(g) (k >= n) into one of g. `added`
/// must be the closure's insertion sequence.
HamiltonCertificate unwind_closure_cycle(const Graph& closed, std::span<const Edge> added,
                                         HamiltonCertificate cycle);

struct CycleSpectrum {
    int order = 0;
    /// status[l] for l in [0, n]; entries below 3 are always No.
    std::vector<Decision> status;
    bool bipartite = false;

    std::vector<int> present() const;
    bool exact() const;
    bool hamiltonian() const { return order >= 3 && status[order] == Decision::Yes; }
    bool pancyclic() const;
};

/// Per-length exact cycle search; the budget is split evenly across the
/// lengths that need a search, and exhausted lengths stay Unknown.
CycleSpectrum cycle_spectrum(const Graph& g, std::uint64_t budget = kDefaultBudget);

/// Looks for a cycle on exactly `length` vertices.
HamiltonSearch find_cycle_of_length(const Graph& g, int length, std::uint64_t budget = kDefaultBudget);

struct Conclusion {
    Decision hamiltonian = Decision::Unknown;
    Decision pancyclic = Decision::Unknown;
    bool bipartite = false;
};

/// (Hamiltonian, pancyclic, bipartite). Graphs with fewer than three
/// vertices have no cycles and report (No, No, bipartite).
Conclusion classify_conclusion(const Graph& g, std::uint64_t budget = kDefaultBudget);

}  // namespace hamtough

#endif  // HAMTOUGH_CYCLES_HPP
