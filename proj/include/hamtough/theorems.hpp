#ifndef HAMTOUGH_THEOREMS_HPP
#define HAMTOUGH_THEOREMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hamtough/cycles.hpp"
#include "hamtough/graph.hpp"
#include "hamtough/toughness.hpp"

namespace hamtough {

/// m* = C(n - 2t, 2) + 3t^2. Throws InvalidParameter unless n > 2t >= 2.
long long threshold_size(int n, int t);

enum class SpectralCondition { Adjacency, SignlessLaplacian, Distance, DistanceSignless };
enum class Direction { AtLeast, AtMost };

std::string_view to_string(SpectralCondition c);

struct Threshold {
    double value = 0;
    Direction direction = Direction::AtLeast;
};

/// Bound for one spectral sufficient condition at order n and toughness t:
///   adjacency           lambda1  >= sqrt(n^2 - (4t+2)n + 10t^2 + 2t + 1)
///   signless Laplacian  q        >= (n^2 - (4t+1)n + 10t^2 + 2t)/(n-1) + n - 2
///   distance            lambda1D <= n + 4t - 1 - (10t^2 + 2t)/n
///   distance signless   eta1     <= 2n + 8t - 2 - (20t^2 + 4t)/n
Threshold threshold_condition(SpectralCondition which, int n, int t);

/// Human-readable form of the signless Laplacian bound as implemented.
inline constexpr std::string_view kSignlessFormula = "(n^2-(4t+1)n+10t^2+2t)/(n-1)+n-2";

struct TheoremQuery {
    int t = 4;
    bool assume_tough = false;
    bool verify_conclusion = false;
    std::uint64_t budget = kDefaultBudget;
    int tough_limit = kDefaultToughLimit;
};

enum class ToughStatus { Yes, No, Assumed, Unknown };
std::string_view to_string(ToughStatus s);

struct ConditionResult {
    bool evaluated = false;
    bool holds = false;
    double value = 0;
    double bound = 0;
    /// Signed; >= 0 exactly when the condition holds.
    double margin = 0;
    std::string reason;  // set when !evaluated
};

struct TheoremVerdict {
    int n = 0;
    long long m = 0;
    int t = 0;

    bool connected = false;
    bool order_ok = false;  // n > 10t - 3
    ToughStatus toughness = ToughStatus::Unknown;
    std::optional<CutCertificate> tough_witness;
    std::string tough_reason;

    ConditionResult size;  // value = m, bound = m*, margin = m - m*
    std::optional<long long> size_margin;
    ConditionResult adjacency;
    ConditionResult signless_laplacian;
    ConditionResult distance;
    ConditionResult distance_signless;

    bool implied = false;  // Hamiltonian, and pancyclic or bipartite
    std::optional<Conclusion> observed;
    bool consistent = true;
    std::vector<std::string> notes;

    bool any_condition() const {
        return size.holds || adjacency.holds || signless_laplacian.holds || distance.holds ||
               distance_signless.holds;
    }
};

/// Evaluates preconditions and all five sufficient conditions for (g, t),
/// and optionally the exact conclusion. Never throws for well-formed input;
/// anything that cannot be decided is reported as Unknown with a reason.
TheoremVerdict check_theorems(const Graph& g, const TheoremQuery& query);

struct ChainCheck {
    int checked = 0;     // conditions that held and were traced back to the size bound
    int violations = 0;  // held, yet m < m*
};

/// For each spectral condition that holds at (n, t), checks that the size
/// bound m >= m* holds as well, the way each spectral bound reduces to the
/// edge-count condition. Needs a connected graph with n > 2t for the full
/// check; distance conditions are skipped on disconnected graphs.
ChainCheck implication_chain(const TheoremVerdict& verdict);

/// Havel-Hakimi realization (largest residual first, ties to the lower
/// index) after an Erdos-Gallai test; nullopt for non-graphical input.
/// Vertex i receives degree seq.degrees[i].
std::optional<Graph> realize_degree_sequence(const DegreeSequence& seq);

bool is_graphical(const DegreeSequence& seq);

enum class Core { C8, TwoC4, FourK2, EightK1 };
std::string_view to_string(Core c);
Graph core_graph(Core c);

/// K_i v (K_{n-8-i} + core). Throws InvalidParameter when n - 8 - i < 0 or i < 1.
Graph join_family(int i, int n, Core core);

enum class ExtremalCase { Case11, Case12 };

/// Case11: ((2t)^{2t}, (n-2t-1)^{n-3t}, (n-1)^t), built as K_t v (greedy block).
/// Case12: ((5t-1)^{6t}, (10t-2)^{4t-1}), requires n = 10t - 1.
/// Throws InvalidParameter on size mismatch and NotRealizable for
/// non-graphical blocks.
Graph extremal_sequence(int t, int n, ExtremalCase which);
DegreeSequence extremal_degrees(int t, int n, ExtremalCase which);

/// K_{n/2, n/2}; n must be even and >= 2.
Graph balanced_bipartite(int n);

}  // namespace hamtough

#endif  // HAMTOUGH_THEOREMS_HPP
