#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "hamtough/error.hpp"
#include "hamtough/graph6.hpp"
#include "hamtough/spectra.hpp"
#include "oracles.hpp"

using namespace hamtough;

namespace {

/// Largest eigenvalue through Eigen's own solver.
template <typename Int>
double reference_radius(const SymmetricMatrix<Int>& m) {
    const Eigen::MatrixXd d = m.dense().template cast<double>();
    return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(d).eigenvalues().maxCoeff();
}

}  // namespace

TEST_CASE("matrix builders agree with direct constructions") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + trial % 14;
        const auto g = oracle::connected_gnp(n, 0.4, rng);
        const auto dist = oracle::distances(g);
        const auto a = adjacency_matrix(g);
        const auto q = signless_laplacian(g);
        const auto d = distance_matrix(g);
        const auto qd = distance_signless_laplacian(g);
        const auto tr = wiener_and_transmissions(g);
        long long wiener = 0;
        for (int i = 0; i < n; ++i) {
            long long row = 0;
            for (int j = 0; j < n; ++j) {
                CHECK(a(i, j) == (g.adjacent(i, j) ? 1 : 0));
                CHECK(d(i, j) == dist[i][j]);
                row += dist[i][j];
                if (i != j) {
                    CHECK(q(i, j) == a(i, j));
                    CHECK(qd(i, j) == dist[i][j]);
                }
            }
            CHECK(q(i, i) == g.degree(i));
            CHECK(qd(i, i) == row);
            CHECK(tr.per_vertex[i] == row);
            wiener += row;
        }
        CHECK(tr.wiener * 2 == wiener);
    }
}

TEST_CASE("spectral radii against Eigen") {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = oracle::connected_gnp(2 + trial % 25, 0.3, rng);
        CHECK(adjacency_spectral_radius(g) == doctest::Approx(reference_radius(adjacency_matrix(g))).epsilon(1e-9));
        CHECK(signless_laplacian_spectral_radius(g) ==
              doctest::Approx(reference_radius(signless_laplacian(g))).epsilon(1e-9));
        CHECK(distance_spectral_radius(g) == doctest::Approx(reference_radius(distance_matrix(g))).epsilon(1e-9));
        CHECK(distance_signless_laplacian_spectral_radius(g) ==
              doctest::Approx(reference_radius(distance_signless_laplacian(g))).epsilon(1e-9));
    }
}

TEST_CASE("closed-form spectra") {
    for (int n = 2; n <= 12; ++n) {
        const auto k = Graph::complete(n);
        CHECK(adjacency_spectral_radius(k) == doctest::Approx(n - 1));
        CHECK(signless_laplacian_spectral_radius(k) == doctest::Approx(2 * n - 2));
        CHECK(distance_spectral_radius(k) == doctest::Approx(n - 1));
        CHECK(distance_signless_laplacian_spectral_radius(k) == doctest::Approx(2 * n - 2));
        CHECK(adjacency_spectral_radius(Graph::star(n)) == doctest::Approx(std::sqrt(n)));
        CHECK(signless_laplacian_spectral_radius(Graph::star(n)) == doctest::Approx(n + 1));
        CHECK(wiener_and_transmissions(Graph::path(n)).wiener == static_cast<long long>(n) * (n * n - 1) / 6);
    }
    for (int n = 3; n <= 12; ++n) {
        CHECK(adjacency_spectral_radius(Graph::cycle(n)) == doctest::Approx(2));
        CHECK(signless_laplacian_spectral_radius(Graph::cycle(n)) == doctest::Approx(4));
        CHECK(wiener_and_transmissions(Graph::cycle(n)).regular);
    }
    const auto p = Graph::petersen();
    CHECK(adjacency_spectral_radius(p) == doctest::Approx(3));
    CHECK(signless_laplacian_spectral_radius(p) == doctest::Approx(6));
    CHECK(distance_spectral_radius(p) == doctest::Approx(15));
    CHECK(distance_signless_laplacian_spectral_radius(p) == doctest::Approx(30));
    CHECK(adjacency_spectral_radius(Graph{}) == 0);
}

TEST_CASE("distance matrices need a connected graph") {
    const auto g = Graph::edgeless(3);
    CHECK_THROWS_AS(distance_matrix(g), Error);
    CHECK_THROWS_AS(distance_signless_laplacian(g), Error);
    const auto s = spectral_summary(g);
    CHECK_FALSE(s.lambda1_D);
    CHECK_FALSE(s.eta1);
    CHECK_FALSE(s.transmissions);
}

TEST_CASE("bounds hold with equality exactly at the extremal graphs") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 20;
        const auto g = oracle::connected_gnp(n, 0.15 + 0.05 * (trial % 16), rng);
        const auto r = lemma_bounds_report(g);
        CHECK(r.violations() == 0);
        CHECK(r.adjacency.holds());
        CHECK(r.distance.holds());
        CHECK(r.distance_signless.holds());
        CHECK(r.min_transmission_slack >= 0);
        CHECK(r.wiener_slack >= 0);
        const bool star = n >= 2 && g.size() == n - 1 && degree_sequence(g).max() == n - 1;
        CHECK(r.adjacency.equality() == (g.is_complete() || star));
        if (r.signless) CHECK(r.signless->equality() == (g.is_complete() || star));
        CHECK(r.distance_signless.equality() == r.transmission_regular);
        CHECK(r.distance.equality() == r.transmission_regular);
        // Distance 1 for neighbours and at least 2 otherwise.
        CHECK(r.wiener_slack == wiener_and_transmissions(g).wiener -
                                    (static_cast<long long>(n) * (n - 1) - g.size()));
    }
    const auto p = lemma_bounds_report(Graph::petersen());
    CHECK(p.transmission_regular);
    CHECK(p.distance.equality());
    CHECK(p.min_transmission_slack == 0);
}

TEST_CASE("diameter-two graphs meet the transmission bound") {
    const auto r = lemma_bounds_report(decode_graph6("IheA@GUAo"));
    CHECK(r.wiener_slack == 0);
    const auto path = lemma_bounds_report(Graph::path(6));
    CHECK(path.wiener_slack > 0);
}
