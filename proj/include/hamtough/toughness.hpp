#ifndef HAMTOUGH_TOUGHNESS_HPP
#define HAMTOUGH_TOUGHNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "hamtough/graph.hpp"

namespace hamtough {

using Rational = boost::rational<long long>;

std::string to_string(const Rational& r);

/// Vertex cut S together with c(G - S).
struct CutCertificate {
    std::vector<int> cut;
    int pieces = 0;
};

/// tau(G): exact rational, or infinite for complete graphs.
struct Toughness {
    bool infinite = false;
    Rational value{0};
    std::optional<CutCertificate> witness;

    /// "inf" or "p/q" ("p" when q = 1).
    std::string to_string() const;
};

inline constexpr int kDefaultToughLimit = 24;
/// Exhaustive enumeration is done on 64-bit masks.
inline constexpr int kMaxExhaustiveOrder = 63;

/// Minimum of |S| / c(G - S) over all cuts with c(G - S) >= 2, with a
/// minimizing certificate. Throws NotConnected for disconnected g and
/// BudgetExceeded when g.order() > limit.
Toughness toughness_exact(const Graph& g, int limit = kDefaultToughLimit);

enum class Decision { Yes, No, Unknown };

std::string_view to_string(Decision d);

struct ToughnessDecision {
    Decision outcome = Decision::Unknown;
    std::optional<CutCertificate> witness;  // set iff outcome == No
    std::string reason;                     // set iff outcome == Unknown
};

/// Decides tau(G) >= t. Exhaustive up to `limit` vertices; above it only
/// neighbourhood seeds and small cuts are tried, so the answer is No with a
/// certificate or Unknown, never a guessed Yes (complete graphs excepted).
ToughnessDecision is_t_tough(const Graph& g, Rational t, int limit = kDefaultToughLimit);

/// Cheap search for a cut S with t * c(G - S) > |S|: the sets of vertices of
/// degree >= d, every N(v), and N(u) | N(w) for nonadjacent pairs (n <= 128).
std::optional<CutCertificate> seeded_violation(const Graph& g, const Rational& t);

/// Recomputes c(G - S) and checks the certificate is a genuine cut.
bool certificate_valid(const Graph& g, const CutCertificate& cert);

}  // namespace hamtough

#endif  // HAMTOUGH_TOUGHNESS_HPP
