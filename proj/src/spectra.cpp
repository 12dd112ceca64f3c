#include "hamtough/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "hamtough/error.hpp"

namespace hamtough {

SymmetricMatrix<int> adjacency_matrix(const Graph& g) {
    SymmetricMatrix<int> a(g.order());
    for (auto [u, v] : g.edges()) a.set(u, v, 1);
    return a;
}

SymmetricMatrix<int> signless_laplacian(const Graph& g) {
    auto q = adjacency_matrix(g);
    for (int v = 0; v < g.order(); ++v) q.set(v, v, g.degree(v));
    return q;
}

SymmetricMatrix<int> distance_matrix(const Graph& g) {
    const int n = g.order();
    SymmetricMatrix<int> d(n);
    for (int s = 0; s < n; ++s) {
        VertexSet seen = VertexSet::single(s);
        VertexSet frontier = seen;
        int dist = 0;
        while (frontier.any()) {
            ++dist;
            VertexSet next;
            frontier.for_each([&](int u) { next |= g.neighbors(u); });
            next -= seen;
            seen |= next;
            next.for_each([&](int u) {
                if (u > s) d.set(s, u, dist);
            });
            frontier = next;
        }
        if (seen.count() != n) throw Error(ErrorKind::NotConnected, "distance matrix of a disconnected graph");
    }
    return d;
}

SymmetricMatrix<long long> distance_signless_laplacian(const Graph& g) {
    const auto d = distance_matrix(g);
    auto qd = cast<long long>(d);
    for (Eigen::Index v = 0; v < d.order(); ++v) qd.set(v, v, d.dense().row(v).template cast<long long>().sum());
    return qd;
}

double adjacency_spectral_radius(const Graph& g) { return spectral_radius(adjacency_matrix(g)); }
double signless_laplacian_spectral_radius(const Graph& g) { return spectral_radius(signless_laplacian(g)); }
double distance_spectral_radius(const Graph& g) { return spectral_radius(distance_matrix(g)); }
double distance_signless_laplacian_spectral_radius(const Graph& g) {
    return spectral_radius(distance_signless_laplacian(g));
}

namespace {

Transmissions transmissions_of(const SymmetricMatrix<int>& d) {
    Transmissions t;
    const Eigen::Index n = d.order();
    t.per_vertex.resize(static_cast<std::size_t>(n));
    long long total = 0;
    for (Eigen::Index v = 0; v < n; ++v) {
        t.per_vertex[v] = d.dense().row(v).template cast<long long>().sum();
        total += t.per_vertex[v];
    }
    t.wiener = total / 2;
    t.regular = std::adjacent_find(t.per_vertex.begin(), t.per_vertex.end(), std::not_equal_to<>()) ==
                t.per_vertex.end();
    return t;
}

}  // namespace

Transmissions wiener_and_transmissions(const Graph& g) { return transmissions_of(distance_matrix(g)); }

SpectralSummary spectral_summary(const Graph& g) {
    SpectralSummary s;
    s.lambda1_A = adjacency_spectral_radius(g);
    s.q1 = signless_laplacian_spectral_radius(g);
    if (!is_connected(g)) return s;
    const auto d = distance_matrix(g);
    s.transmissions = transmissions_of(d);
    s.lambda1_D = spectral_radius(d);
    auto qd = cast<long long>(d);
    for (Eigen::Index v = 0; v < d.order(); ++v) qd.set(v, v, s.transmissions->per_vertex[v]);
    s.eta1 = spectral_radius(qd);
    return s;
}

int LemmaReport::violations() const {
    int v = 0;
    v += !adjacency.holds();
    v += signless && !signless->holds();
    v += !distance.holds();
    v += !distance_signless.holds();
    v += min_transmission_slack < 0;
    v += wiener_slack < 0;
    return v;
}

LemmaReport lemma_bounds_report(const Graph& g) {
    if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "lemma bounds need a connected graph");
    const auto s = spectral_summary(g);
    const long long n = g.order(), m = g.size();
    const auto& tr = *s.transmissions;

    LemmaReport r;
    r.adjacency.value = s.lambda1_A;
    r.adjacency.bound = std::sqrt(static_cast<double>(2 * m - n + 1));
    r.adjacency.slack = r.adjacency.bound - r.adjacency.value;

    if (n >= 2) {
        BoundCheck q;
        q.value = s.q1;
        q.bound = 2.0 * static_cast<double>(m) / static_cast<double>(n - 1) + static_cast<double>(n - 2);
        q.slack = q.bound - q.value;
        r.signless = q;
    }

    r.distance.value = *s.lambda1_D;
    r.distance.bound = 2.0 * static_cast<double>(tr.wiener) / static_cast<double>(n);
    r.distance.slack = r.distance.value - r.distance.bound;

    r.distance_signless.value = *s.eta1;
    r.distance_signless.bound = 4.0 * static_cast<double>(tr.wiener) / static_cast<double>(n);
    r.distance_signless.slack = r.distance_signless.value - r.distance_signless.bound;

    r.min_transmission_slack = n == 0 ? 0 : std::numeric_limits<long long>::max();
    for (int v = 0; v < n; ++v) {
        const long long slack = tr.per_vertex[v] - (2 * (n - 1) - g.degree(v));
        r.min_transmission_slack = std::min(r.min_transmission_slack, slack);
    }
    r.wiener_slack = tr.wiener - (n * (n - 1) - m);
    r.transmission_regular = tr.regular;
    return r;
}

}  // namespace hamtough
