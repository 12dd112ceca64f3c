#include <doctest.h>

#include <random>

#include "hamtough/error.hpp"
#include "hamtough/graph.hpp"
#include "oracles.hpp"

using namespace hamtough;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::IOError;
}

}  // namespace

TEST_CASE("vertex set operations") {
    VertexSet a = VertexSet::prefix(70);
    CHECK(a.count() == 70);
    CHECK(a.test(69));
    CHECK_FALSE(a.test(70));
    VertexSet b = VertexSet::single(65);
    b.set(3);
    CHECK((a & b).count() == 2);
    CHECK((a - b).count() == 68);
    CHECK(b.first() == 3);
    CHECK(b.next(3) == 65);
    CHECK(VertexSet{}.none());
    int sum = 0;
    b.for_each([&](int v) { sum += v; });
    CHECK(sum == 68);
}

TEST_CASE("from_edges validates input") {
    CHECK(kind_of([] { Graph::from_edges(3, {{0, 0}}); }) == ErrorKind::LoopRejected);
    CHECK(kind_of([] { Graph::from_edges(3, {{0, 3}}); }) == ErrorKind::InvalidVertex);
    CHECK(kind_of([] { Graph::from_edges(3, {{-1, 2}}); }) == ErrorKind::InvalidVertex);
    CHECK(kind_of([] { Graph::from_edges(513, {}); }) == ErrorKind::TooLarge);
    const auto g = Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(g.size() == 1);
    CHECK(g.well_formed());
    CHECK(Graph::from_edges(0, {}).order() == 0);
    CHECK(Graph::from_edges(512, {{0, 511}}).adjacent(511, 0));
}

TEST_CASE("named graphs") {
    CHECK(Graph::complete(6).size() == 15);
    CHECK(Graph::complete(6).is_complete());
    CHECK(Graph::cycle(7).size() == 7);
    CHECK(Graph::path(5).size() == 4);
    CHECK(Graph::star(3).order() == 4);
    CHECK(Graph::star(3).degree(0) == 3);
    CHECK(Graph::complete_bipartite(3, 4).size() == 12);
    CHECK(Graph::edgeless(4).size() == 0);
    const auto p = Graph::petersen();
    CHECK(p.order() == 10);
    CHECK(p.size() == 15);
    for (int v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
    // Girth 5: no triangles, no 4-cycles.
    const auto lengths = oracle::cycle_lengths(p);
    CHECK_FALSE(lengths[3]);
    CHECK_FALSE(lengths[4]);
    CHECK(lengths[5]);
}

TEST_CASE("join and disjoint union counts") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = oracle::gnp(1 + trial % 7, 0.5, rng);
        const auto b = oracle::gnp(1 + trial % 5, 0.4, rng);
        const auto u = disjoint_union(a, b);
        const auto j = join(a, b);
        CHECK(u.order() == a.order() + b.order());
        CHECK(u.size() == a.size() + b.size());
        CHECK(j.size() == a.size() + b.size() + static_cast<long long>(a.order()) * b.order());
        CHECK(j.well_formed());
        for (int v = 0; v < b.order(); ++v) CHECK(j.degree(a.order() + v) == b.degree(v) + a.order());
    }
    CHECK(copies(4, Graph::complete(2)).size() == 4);
    CHECK(kind_of([] { join(Graph::complete(300), Graph::complete(300)); }) == ErrorKind::TooLarge);
}

TEST_CASE("degree sequences") {
    const auto seq = degree_sequence(join(Graph::complete(15), copies(6, Graph::cycle(4))));
    CHECK(seq.to_string() == "(17^24, 38^15)");
    const std::pair<int, int> runs[] = {{19, 24}, {38, 15}};
    const auto s = DegreeSequence::from_runs(runs);
    CHECK(s.order() == 39);
    CHECK(s.sum() == 1026);
    CHECK(s.d(1) == 19);
    CHECK(s.d(24) == 19);
    CHECK(s.d(25) == 38);
    CHECK(s.to_string() == "(19^24, 38^15)");
    CHECK(DegreeSequence::from_degrees({3, 1, 2, 2}).degrees == std::vector<int>{1, 2, 2, 3});
}

TEST_CASE("components and bipartiteness against oracles") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 12;
        const auto g = oracle::gnp(n, 0.25, rng);
        const auto adj = oracle::lists(g);
        CHECK(components(g).count == oracle::components(adj, std::vector<bool>(n, false)));
        VertexSet removed;
        std::vector<bool> flags(n, false);
        for (int v = 0; v < n; v += 3) {
            removed.set(v);
            flags[v] = true;
        }
        CHECK(count_components(g, removed) == oracle::components(adj, flags));

        const auto lengths = oracle::cycle_lengths(g);
        bool odd = false;
        for (int l = 3; l <= n; l += 2) odd = odd || lengths[l];
        const auto parts = is_bipartite(g);
        CHECK(parts.has_value() == !odd);
        if (parts) {
            for (int u : parts->left)
                for (int v : parts->left) CHECK_FALSE(g.adjacent(u, v));
            CHECK(parts->left.size() + parts->right.size() == static_cast<std::size_t>(n));
        }
    }
    CHECK_FALSE(is_connected(Graph{}));
    CHECK(is_connected(Graph::complete(1)));
}

TEST_CASE("without relabels the remaining vertices") {
    const auto g = Graph::path(5);
    VertexSet mid = VertexSet::single(2);
    const auto h = g.without(mid);
    CHECK(h.order() == 4);
    CHECK(h.size() == 2);
    CHECK(h.adjacent(0, 1));
    CHECK(h.adjacent(2, 3));
    CHECK_FALSE(h.adjacent(1, 2));
}

TEST_CASE("edge list text format") {
    const auto g = Graph::petersen();
    CHECK(parse_edge_list(format_edge_list(g)) == g);
    CHECK(parse_edge_list("3\n0 1 1 2") == Graph::path(3));
    try {
        parse_edge_list("3 0 x");
        FAIL("expected FormatError");
    } catch (const FormatError& e) {
        CHECK(e.offset() == 4);
    }
    CHECK(kind_of([] { parse_edge_list("3 0"); }) == ErrorKind::FormatError);
    CHECK(kind_of([] { parse_edge_list(""); }) == ErrorKind::FormatError);
    CHECK(kind_of([] { parse_edge_list("3 0 5"); }) == ErrorKind::InvalidVertex);
    CHECK(kind_of([] { parse_edge_list("3 1 1"); }) == ErrorKind::LoopRejected);
    CHECK(kind_of([] { parse_edge_list("600"); }) == ErrorKind::TooLarge);
}
