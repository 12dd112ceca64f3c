#include "hamtough/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hamtough/error.hpp"
#include "hamtough/spectra.hpp"

namespace hamtough {

long long threshold_size(int n, int t) {
    if (t < 1 || n <= 2 * t) {
        throw Error(ErrorKind::InvalidParameter, "size threshold needs t >= 1 and n > 2t (n=" + std::to_string(n) +
                                                     ", t=" + std::to_string(t) + ")");
    }
    const long long r = n - 2LL * t;
    return r * (r - 1) / 2 + 3LL * t * t;
}

std::string_view to_string(SpectralCondition c) {
    switch (c) {
        case SpectralCondition::Adjacency: return "spectral";
        case SpectralCondition::SignlessLaplacian: return "signless_laplacian";
        case SpectralCondition::Distance: return "distance";
        case SpectralCondition::DistanceSignless: return "distance_signless_laplacian";
    }
    return "?";
}

Threshold threshold_condition(SpectralCondition which, int n, int t) {
    const double nn = n, tt = t;
    switch (which) {
        case SpectralCondition::Adjacency: {
            const double radicand = nn * nn - (4 * tt + 2) * nn + 10 * tt * tt + 2 * tt + 1;
            return {std::sqrt(std::max(radicand, 0.0)), Direction::AtLeast};
        }
        case SpectralCondition::SignlessLaplacian:
            return {(nn * nn - (4 * tt + 1) * nn + 10 * tt * tt + 2 * tt) / (nn - 1) + nn - 2, Direction::AtLeast};
        case SpectralCondition::Distance:
            return {nn + 4 * tt - 1 - (10 * tt * tt + 2 * tt) / nn, Direction::AtMost};
        case SpectralCondition::DistanceSignless:
            return {2 * nn + 8 * tt - 2 - (20 * tt * tt + 4 * tt) / nn, Direction::AtMost};
    }
    return {};
}

std::string_view to_string(ToughStatus s) {
    switch (s) {
        case ToughStatus::Yes: return "yes";
        case ToughStatus::No: return "no";
        case ToughStatus::Assumed: return "assumed";
        case ToughStatus::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

// Margins this close to zero count as met: equality is allowed by every condition.
constexpr double kConditionTolerance = 1e-9;

ConditionResult spectral_condition(SpectralCondition which, double value, int n, int t) {
    const auto th = threshold_condition(which, n, t);
    ConditionResult r;
    r.evaluated = true;
    r.value = value;
    r.bound = th.value;
    r.margin = th.direction == Direction::AtLeast ? value - th.value : th.value - value;
    r.holds = r.margin >= -kConditionTolerance;
    return r;
}

ConditionResult skipped(std::string reason) {
    ConditionResult r;
    r.reason = std::move(reason);
    return r;
}

}  // namespace

TheoremVerdict check_theorems(const Graph& g, const TheoremQuery& query) {
    TheoremVerdict v;
    v.n = g.order();
    v.m = g.size();
    v.t = query.t;
    const int n = v.n, t = query.t;

    if (t < 4) {
        v.notes.emplace_back("t < 4: conclusions for t = 1, 2, 3 are covered by earlier results "
                             "(n >= 7, 16, 28 respectively); no implication is asserted here");
    }
    v.notes.emplace_back("signless Laplacian bound uses " + std::string(kSignlessFormula));

    v.connected = is_connected(g);
    v.order_ok = static_cast<long long>(n) > 10LL * t - 3;

    if (!v.connected) {
        v.toughness = ToughStatus::No;
        v.tough_reason = "graph is not connected";
    } else if (query.assume_tough) {
        v.toughness = ToughStatus::Assumed;
    } else {
        try {
            auto d = is_t_tough(g, Rational(t), query.tough_limit);
            v.toughness = d.outcome == Decision::Yes ? ToughStatus::Yes
                          : d.outcome == Decision::No ? ToughStatus::No
                                                      : ToughStatus::Unknown;
            v.tough_witness = std::move(d.witness);
            v.tough_reason = std::move(d.reason);
        } catch (const Error& e) {
            v.toughness = ToughStatus::Unknown;
            v.tough_reason = e.what();
        }
    }

    if (t >= 1 && n > 2 * t) {
        const long long bound = threshold_size(n, t);
        v.size.evaluated = true;
        v.size.value = static_cast<double>(v.m);
        v.size.bound = static_cast<double>(bound);
        v.size_margin = v.m - bound;
        v.size.margin = static_cast<double>(*v.size_margin);
        v.size.holds = *v.size_margin >= 0;
    } else {
        v.size = skipped("size threshold needs n > 2t");
    }

    if (n >= 2) {
        const auto s = spectral_summary(g);
        v.adjacency = spectral_condition(SpectralCondition::Adjacency, s.lambda1_A, n, t);
        v.signless_laplacian = spectral_condition(SpectralCondition::SignlessLaplacian, s.q1, n, t);
        if (s.lambda1_D) {
            v.distance = spectral_condition(SpectralCondition::Distance, *s.lambda1_D, n, t);
            v.distance_signless = spectral_condition(SpectralCondition::DistanceSignless, *s.eta1, n, t);
        } else {
            v.distance = skipped("distance matrix undefined: graph is not connected");
            v.distance_signless = v.distance;
        }
    } else {
        v.adjacency = v.signless_laplacian = v.distance = v.distance_signless = skipped("order below 2");
    }

    const bool tough_ok = v.toughness == ToughStatus::Yes || v.toughness == ToughStatus::Assumed;
    v.implied = t >= 4 && v.connected && v.order_ok && tough_ok && v.any_condition();

    if (query.verify_conclusion && v.connected) {
        v.observed = classify_conclusion(g, query.budget);
        if (v.implied) {
            const auto& o = *v.observed;
            if (o.hamiltonian == Decision::No) v.consistent = false;
            if (o.pancyclic == Decision::No && !o.bipartite) v.consistent = false;
        }
    }
    return v;
}

ChainCheck implication_chain(const TheoremVerdict& verdict) {
    ChainCheck c;
    if (!verdict.size_margin) return c;
    for (const ConditionResult* r :
         {&verdict.adjacency, &verdict.signless_laplacian, &verdict.distance, &verdict.distance_signless}) {
        if (!r->evaluated || !r->holds) continue;
        ++c.checked;
        if (*verdict.size_margin < 0) ++c.violations;
    }
    return c;
}

bool is_graphical(const DegreeSequence& seq) {
    std::vector<long long> d(seq.degrees.begin(), seq.degrees.end());
    std::sort(d.rbegin(), d.rend());
    const auto n = static_cast<long long>(d.size());
    if (n == 0) return true;
    if (d.back() < 0 || d.front() > n - 1) return false;
    if (std::accumulate(d.begin(), d.end(), 0LL) % 2 != 0) return false;
    long long prefix = 0;
    for (long long k = 1; k <= n; ++k) {
        prefix += d[k - 1];
        long long rest = 0;
        for (long long i = k; i < n; ++i) rest += std::min(d[i], k);
        if (prefix > k * (k - 1) + rest) return false;
    }
    return true;
}

std::optional<Graph> realize_degree_sequence(const DegreeSequence& seq) {
    if (!is_graphical(seq)) return std::nullopt;
    const int n = seq.order();
    std::vector<int> residual = seq.degrees;
    std::vector<Edge> edges;
    // Largest residual first; ties go to the lower index.
    auto before = [&](int a, int b) { return residual[a] != residual[b] ? residual[a] > residual[b] : a < b; };
    std::vector<int> order(static_cast<std::size_t>(n));
    while (true) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), before);
        const int v = order[0];
        const int need = residual[v];
        if (need == 0) break;
        if (need > n - 1 || residual[order[need]] == 0) return std::nullopt;
        residual[v] = 0;
        for (int i = 1; i <= need; ++i) {
            const int u = order[i];
            --residual[u];
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    return Graph::from_edges(n, edges);
}

std::string_view to_string(Core c) {
    switch (c) {
        case Core::C8: return "C8";
        case Core::TwoC4: return "2C4";
        case Core::FourK2: return "4K2";
        case Core::EightK1: return "8K1";
    }
    return "?";
}

Graph core_graph(Core c) {
    switch (c) {
        case Core::C8: return Graph::cycle(8);
        case Core::TwoC4: return copies(2, Graph::cycle(4));
        case Core::FourK2: return copies(4, Graph::complete(2));
        case Core::EightK1: return Graph::edgeless(8);
    }
    throw Error(ErrorKind::InvalidParameter, "unknown core");
}

Graph join_family(int i, int n, Core core) {
    const int rest = n - 8 - i;
    if (i < 1 || rest < 0) {
        throw Error(ErrorKind::InvalidParameter, "join family needs i >= 1 and n >= 8 + i (i=" + std::to_string(i) +
                                                     ", n=" + std::to_string(n) + ")");
    }
    const Graph inner = rest == 0 ? core_graph(core) : disjoint_union(Graph::complete(rest), core_graph(core));
    return join(Graph::complete(i), inner);
}

DegreeSequence extremal_degrees(int t, int n, ExtremalCase which) {
    if (t < 1) throw Error(ErrorKind::InvalidParameter, "extremal sequences need t >= 1");
    if (which == ExtremalCase::Case11) {
        if (n - 3 * t < 1) throw Error(ErrorKind::InvalidParameter, "case11 needs n > 3t");
        const std::pair<int, int> runs[] = {{2 * t, 2 * t}, {n - 2 * t - 1, n - 3 * t}, {n - 1, t}};
        return DegreeSequence::from_runs(runs);
    }
    if (n != 10 * t - 1) throw Error(ErrorKind::InvalidParameter, "case12 requires n = 10t - 1");
    const std::pair<int, int> runs[] = {{5 * t - 1, 6 * t}, {10 * t - 2, 4 * t - 1}};
    return DegreeSequence::from_runs(runs);
}

Graph extremal_sequence(int t, int n, ExtremalCase which) {
    const auto target = extremal_degrees(t, n, which);
    // The (n-1)-degree vertices are universal: split them off as K_u and realize the remainder.
    const int universal = which == ExtremalCase::Case11 ? t : 4 * t - 1;
    std::vector<int> block;
    for (int d : target.degrees)
        if (d != n - 1) block.push_back(d - universal);
    const auto inner = realize_degree_sequence(DegreeSequence::from_degrees(block));
    if (!inner) throw Error(ErrorKind::NotRealizable, "remainder of " + target.to_string() + " is not graphical");
    Graph g = join(Graph::complete(universal), *inner);
    if (degree_sequence(g) != target) throw Error(ErrorKind::NotRealizable, "realization drifted from target");
    return g;
}

Graph balanced_bipartite(int n) {
    if (n < 2 || n % 2 != 0) throw Error(ErrorKind::InvalidParameter, "balanced bipartite needs even n >= 2");
    return Graph::complete_bipartite(n / 2, n / 2);
}

}  // namespace hamtough
