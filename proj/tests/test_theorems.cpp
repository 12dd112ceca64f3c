#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "hamtough/closure.hpp"
#include "hamtough/error.hpp"
#include "hamtough/theorems.hpp"
#include "oracles.hpp"

using namespace hamtough;

TEST_CASE("size threshold") {
    CHECK(threshold_size(38, 4) == 483);
    CHECK(threshold_size(28, 3) == 258);
    CHECK(threshold_size(39, 4) == 513);
    CHECK(threshold_size(9, 4) == 48);
    CHECK_THROWS_AS(threshold_size(8, 4), Error);
    CHECK_THROWS_AS(threshold_size(10, 0), Error);
}

TEST_CASE("spectral thresholds at n = 38, t = 4") {
    const auto a = threshold_condition(SpectralCondition::Adjacency, 38, 4);
    const auto q = threshold_condition(SpectralCondition::SignlessLaplacian, 38, 4);
    const auto d = threshold_condition(SpectralCondition::Distance, 38, 4);
    const auto qd = threshold_condition(SpectralCondition::DistanceSignless, 38, 4);
    CHECK(std::abs(a.value - std::sqrt(929.0)) < 1e-12);
    CHECK(std::abs(q.value - (966.0 / 37 + 36)) < 1e-12);
    CHECK(std::abs(d.value - (53 - 168.0 / 38)) < 1e-12);
    CHECK(std::abs(qd.value - (106 - 336.0 / 38)) < 1e-12);
    CHECK(a.direction == Direction::AtLeast);
    CHECK(q.direction == Direction::AtLeast);
    CHECK(d.direction == Direction::AtMost);
    CHECK(qd.direction == Direction::AtMost);
}

TEST_CASE("each spectral threshold reduces to the size threshold") {
    // At 2m = n^2 - (4t+1)n + 10t^2 + 2t = 2m*, every spectral threshold equals
    // the matching spectral bound in terms of n and m.
    for (int t = 1; t <= 6; ++t) {
        for (int n = 2 * t + 1; n <= 120; ++n) {
            const long long two_m = static_cast<long long>(n) * n - (4LL * t + 1) * n + 10LL * t * t + 2LL * t;
            CHECK(two_m == 2 * threshold_size(n, t));
            const auto a = threshold_condition(SpectralCondition::Adjacency, n, t);
            CHECK(a.value * a.value == doctest::Approx(static_cast<double>(two_m - n + 1)));
            const auto q = threshold_condition(SpectralCondition::SignlessLaplacian, n, t);
            CHECK(q.value == doctest::Approx(static_cast<double>(two_m) / (n - 1) + n - 2));
            const auto d = threshold_condition(SpectralCondition::Distance, n, t);
            CHECK(d.value == doctest::Approx(2.0 * (static_cast<double>(n) * (n - 1) - two_m / 2.0) / n));
            const auto qd = threshold_condition(SpectralCondition::DistanceSignless, n, t);
            CHECK(qd.value == doctest::Approx(2 * d.value));
        }
    }
}

TEST_CASE("implication chain on random graphs") {
    std::mt19937_64 rng(404);
    std::uniform_int_distribution<int> order(10, 30);
    std::uniform_real_distribution<double> density(0.5, 1.0);
    int held = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const auto g = oracle::connected_gnp(order(rng), density(rng), rng);
        TheoremQuery q;
        q.assume_tough = true;
        const auto v = check_theorems(g, q);
        const auto chain = implication_chain(v);
        CHECK(chain.violations == 0);
        held += chain.checked;
    }
    CHECK(held > 0);
}

TEST_CASE("complete graph verdict") {
    TheoremQuery q;
    q.verify_conclusion = true;
    const auto v = check_theorems(Graph::complete(40), q);
    CHECK(v.connected);
    CHECK(v.order_ok);
    CHECK(v.toughness == ToughStatus::Yes);
    CHECK(v.size.holds);
    REQUIRE(v.size_margin);
    CHECK(threshold_size(40, 4) == 544);
    CHECK(*v.size_margin == 780 - 544);
    CHECK(v.implied);
    REQUIRE(v.observed);
    CHECK(v.observed->hamiltonian == Decision::Yes);
    CHECK(v.observed->pancyclic == Decision::Yes);
    CHECK(v.consistent);
}

TEST_CASE("verdict preconditions") {
    TheoremQuery q;
    const auto k3 = check_theorems(Graph::complete(3), q);
    CHECK_FALSE(k3.order_ok);
    CHECK_FALSE(k3.size.evaluated);
    CHECK_FALSE(k3.size.reason.empty());
    CHECK_FALSE(k3.implied);

    const auto split = check_theorems(disjoint_union(Graph::complete(20), Graph::complete(20)), q);
    CHECK_FALSE(split.connected);
    CHECK(split.toughness == ToughStatus::No);
    CHECK_FALSE(split.distance.evaluated);
    CHECK_FALSE(split.implied);

    q.t = 2;
    const auto low_t = check_theorems(Graph::complete(40), q);
    CHECK_FALSE(low_t.implied);
    CHECK(low_t.notes.size() == 2);

    // Above the exhaustive limit toughness is unknown unless assumed.
    q.t = 4;
    const auto big = check_theorems(join(Graph::complete(30), Graph::cycle(10)), q);
    CHECK(big.toughness == ToughStatus::Unknown);
    CHECK_FALSE(big.tough_reason.empty());
    CHECK_FALSE(big.implied);
    q.assume_tough = true;
    CHECK(check_theorems(join(Graph::complete(30), Graph::cycle(10)), q).toughness == ToughStatus::Assumed);
}

TEST_CASE("non-tough graphs get a cut witness") {
    TheoremQuery q;
    const auto v = check_theorems(Graph::star(5), q);
    CHECK(v.toughness == ToughStatus::No);
    REQUIRE(v.tough_witness);
    CHECK(certificate_valid(Graph::star(5), *v.tough_witness));
}

TEST_CASE("graphical sequences") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 20;
        const auto seq = degree_sequence(oracle::gnp(n, 0.4, rng));
        CHECK(is_graphical(seq));
        const auto g = realize_degree_sequence(seq);
        REQUIRE(g);
        CHECK(degree_sequence(*g) == seq);
    }
    CHECK_FALSE(is_graphical(DegreeSequence::from_degrees({1, 1, 1})));
    CHECK_FALSE(is_graphical(DegreeSequence::from_degrees({3, 3, 1, 1})));
    CHECK_FALSE(is_graphical(DegreeSequence::from_degrees({4, 1, 1})));
    CHECK(is_graphical(DegreeSequence::from_degrees({})));
    CHECK_FALSE(realize_degree_sequence(DegreeSequence::from_degrees({2, 2})));
}

TEST_CASE("graphicality against brute force") {
    // All sequences of length 5 with entries in [0, 4].
    std::set<std::vector<int>> realizable;
    for (int mask = 0; mask < (1 << 10); ++mask) {
        std::vector<Edge> edges;
        int bit = 0;
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v, ++bit)
                if ((mask >> bit) & 1) edges.emplace_back(u, v);
        realizable.insert(degree_sequence(Graph::from_edges(5, edges)).degrees);
    }
    int checked = 0;
    for (int code = 0; code < 3125; ++code) {
        std::vector<int> d;
        for (int c = code, i = 0; i < 5; ++i, c /= 5) d.push_back(c % 5);
        const auto seq = DegreeSequence::from_degrees(d);
        CHECK(is_graphical(seq) == realizable.contains(seq.degrees));
        ++checked;
    }
    CHECK(checked == 3125);
}

TEST_CASE("extremal sequence, case 12") {
    const auto g = extremal_sequence(4, 39, ExtremalCase::Case12);
    const auto seq = degree_sequence(g);
    CHECK(seq.to_string() == "(19^24, 38^15)");
    CHECK(seq.sum() == 1026);
    const auto w = predicate_P(seq, 4);
    REQUIRE(w);
    CHECK(w->k == 19);
    CHECK_FALSE(low_degree_pair(g));
    CHECK(is_connected(g));
    CHECK_THROWS_AS(extremal_sequence(4, 40, ExtremalCase::Case12), Error);
}

TEST_CASE("extremal sequence, case 11") {
    const auto g = extremal_sequence(4, 38, ExtremalCase::Case11);
    CHECK(degree_sequence(g).to_string() == "(8^8, 29^26, 37^4)");
    CHECK(k_closure(g, 37).is_complete);
    const auto h = is_hamiltonian_via_closure(g);
    REQUIRE(h.outcome == Decision::Yes);
    CHECK(cycle_valid(g, h.cycle->order));
    CHECK(g.size() == threshold_size(38, 4));
    CHECK_THROWS_AS(extremal_sequence(4, 12, ExtremalCase::Case11), Error);
}

TEST_CASE("join families") {
    const auto g = join_family(4, 20, Core::C8);
    CHECK(g.order() == 20);
    CHECK(g.size() == 6 + 28 + 8 + 4 * 16);
    CHECK(join_family(4, 12, Core::TwoC4).size() == 6 + 8 + 32);
    CHECK(join_family(5, 20, Core::FourK2).size() == 10 + 21 + 4 + 5 * 15);
    CHECK(join_family(8, 20, Core::EightK1).size() == 28 + 6 + 8 * 12);
    CHECK_THROWS_AS(join_family(9, 16, Core::C8), Error);
    CHECK_THROWS_AS(join_family(0, 16, Core::C8), Error);
    CHECK(to_string(Core::TwoC4) == "2C4");
}

TEST_CASE("K_8 joined with eight isolated vertices is not 1-tough") {
    for (int n = 17; n <= 24; ++n) {
        const auto g = join_family(8, n, Core::EightK1);
        const auto d = is_t_tough(g, Rational(1));
        REQUIRE(d.outcome == Decision::No);
        CHECK(d.witness->pieces > static_cast<int>(d.witness->cut.size()));
        CHECK(is_hamiltonian_via_closure(g).outcome == Decision::No);
    }
    // With the clique part empty the graph is K_8 v 8K_1, which is Hamiltonian.
    CHECK(is_hamiltonian_via_closure(join_family(8, 16, Core::EightK1)).outcome == Decision::Yes);
}

TEST_CASE("balanced bipartite reference") {
    TheoremQuery q;
    q.verify_conclusion = true;
    q.assume_tough = true;
    const auto v = check_theorems(balanced_bipartite(16), q);
    REQUIRE(v.observed);
    CHECK(v.observed->hamiltonian == Decision::Yes);
    CHECK(v.observed->bipartite);
    CHECK(v.observed->pancyclic == Decision::No);
    CHECK_THROWS_AS(balanced_bipartite(7), Error);
}
