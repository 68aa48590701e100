#include <doctest.h>

#include <nlohmann/json.hpp>

#include "hgq/hypergraph.hpp"
#include "hgq/prng.hpp"
#include "oracles.hpp"

using namespace hgq;

namespace {

Hypergraph make(int n, int d, FieldSpec f, std::vector<Edge> edges) {
    return Hypergraph(n, d, f, std::move(edges));
}

}  // namespace

TEST_CASE("hypergraph canonicalization and validation") {
    auto g = make(5, 3, FieldSpec::infinity(), {{{3, 1, 2}, 4}, {{1, 2}, -1}});
    CHECK(g.edges()[0].vertices == std::vector<int>{1, 2});
    CHECK(g.edges()[1].vertices == std::vector<int>{1, 2, 3});
    CHECK(g.rank() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.weight_of({1, 2, 3}) == 4);
    CHECK(g.weight_of({1, 3}) == 0);

    // Finite-field weights are reduced into [1, p).
    auto gz = make(3, 2, FieldSpec::prime(5), {{{1, 2}, -1}});
    CHECK(gz.edges()[0].weight == 4);

    CHECK_THROWS_AS(make(3, 2, FieldSpec::infinity(), {{{1, 2}, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make(3, 2, FieldSpec::infinity(), {{{1, 4}, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make(3, 2, FieldSpec::infinity(), {{{1, 2, 3}, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make(3, 2, FieldSpec::infinity(), {{{1, 1}, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make(3, 2, FieldSpec::infinity(), {{{1, 2}, 1}, {{2, 1}, 2}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(make(3, 2, FieldSpec::prime(5), {{{1, 2}, 5}}), std::invalid_argument);
}

TEST_CASE("additive query follows the definition") {
    RationalField rat;
    auto g = make(5, 3, FieldSpec::infinity(), {{{1, 2, 3}, 4}});
    CHECK(additive_query(g, Bitvec::from_indices(5, {1, 2, 3, 5}), rat) == 4);
    CHECK(additive_query(g, Bitvec(5), rat) == 0);

    auto h = make(3, 3, FieldSpec::infinity(), {{{1, 2}, 2}, {{2, 3}, 3}, {{1, 2, 3}, 5}});
    CHECK(additive_query(h, Bitvec::from_indices(3, {1, 2, 3}), rat) == 10);
    CHECK(additive_query(h, Bitvec::from_indices(3, {1, 2}), rat) == 2);
}

TEST_CASE("finite-field query equals exact query reduced mod p") {
    Rng rng(41);
    const int64_t p = 7;
    ZpField zp(p);
    RationalField rat;
    WeightDomain ints = WeightDomain::for_field(FieldSpec::infinity(), 5);
    for (int trial = 0; trial < 50; ++trial) {
        Hypergraph g = random_hypergraph(6, 2, rng.between(0, 6), ints, rng.next_u64(), true);
        Hypergraph gp(6, 2, FieldSpec::prime(p), g.edges().begin() == g.edges().end()
                                                     ? std::vector<Edge>{}
                                                     : g.edges());
        // Some integer weights may vanish mod p; rebuild dropping them.
        std::vector<Edge> kept;
        for (const Edge& e : g.edges())
            if (e.weight % p != 0) kept.push_back(e);
        gp = Hypergraph(6, 2, FieldSpec::prime(p), kept);

        Bitvec s = testing::random_subset(6, rng);
        mpq_class exact = additive_query(g, s, rat);
        int64_t reduced = zp.from_int(exact.get_num().get_si());
        // Edges dropped from gp contribute multiples of p to the exact sum.
        CHECK(additive_query(gp, s, zp) == reduced);
    }
}

TEST_CASE("graph_diff examples and properties") {
    auto g1 = make(4, 2, FieldSpec::infinity(), {{{1, 2}, 3}});
    auto g2 = make(4, 2, FieldSpec::infinity(), {{{1, 2}, 1}});
    auto g3 = make(4, 2, FieldSpec::infinity(), {{{1, 3}, 3}});

    CHECK(graph_diff(g1, g1).edge_count() == 0);
    CHECK(graph_diff(g1, g2) == make(4, 2, FieldSpec::infinity(), {{{1, 2}, 2}}));
    CHECK(graph_diff(g1, g3) ==
          make(4, 2, FieldSpec::infinity(), {{{1, 2}, 3}, {{1, 3}, -3}}));

    CHECK_THROWS_AS(graph_diff(g1, make(5, 2, FieldSpec::infinity(), {})), std::invalid_argument);
    CHECK_THROWS_AS(graph_diff(g1, make(4, 2, FieldSpec::prime(5), {})), std::invalid_argument);

    // Q_{G1-G2} = Q_{G1} - Q_{G2} on random instances.
    Rng rng(97);
    WeightDomain dom = WeightDomain::for_field(FieldSpec::prime(11));
    ZpField zp(11);
    for (int trial = 0; trial < 40; ++trial) {
        Hypergraph a = random_hypergraph(5, 2, rng.between(0, 4), dom, rng.next_u64(), true);
        Hypergraph b = random_hypergraph(5, 2, rng.between(0, 4), dom, rng.next_u64(), true);
        Hypergraph d = graph_diff(a, b);
        for (int i = 0; i < 8; ++i) {
            Bitvec s = testing::random_subset(5, rng);
            CHECK(additive_query(d, s, zp) ==
                  zp.sub(additive_query(a, s, zp), additive_query(b, s, zp)));
        }
        CHECK((graph_diff(a, b).edge_count() == 0) == (a == b));
    }
}

TEST_CASE("random_hypergraph covers the spec cases") {
    WeightDomain unit{FieldSpec::infinity(), {1}};
    Hypergraph k4 = random_hypergraph(4, 2, 6, unit, 123);
    CHECK(k4.edge_count() == 6);  // all 2-subsets of [4]
    for (const Edge& e : k4.edges()) {
        CHECK(e.vertices.size() == 2);
        CHECK(e.weight == 1);
    }

    CHECK(random_hypergraph(3, 2, 0, unit, 5).edge_count() == 0);

    WeightDomain dom = WeightDomain::for_field(FieldSpec::prime(7));
    CHECK(random_hypergraph(6, 2, 5, dom, 99) == random_hypergraph(6, 2, 5, dom, 99));
    CHECK(random_hypergraph(6, 2, 5, dom, 99) != random_hypergraph(6, 2, 5, dom, 100));

    CHECK_THROWS_AS(random_hypergraph(3, 2, 4, unit, 1), std::invalid_argument);
}

TEST_CASE("hypergraph json round trip is the identity") {
    Rng rng(7);
    WeightDomain dom = WeightDomain::for_field(FieldSpec::infinity(), 9);
    for (int trial = 0; trial < 30; ++trial) {
        Hypergraph g = random_hypergraph(7, 3, rng.between(0, 5), dom, rng.next_u64(), true);
        Hypergraph back = Hypergraph::from_json(nlohmann::json::parse(g.to_json().dump()));
        CHECK(back == g);
        CHECK(back.to_json().dump(2) == g.to_json().dump(2));
    }

    auto gz = make(3, 2, FieldSpec::prime(5), {{{2, 3}, 4}, {{1}, 2}});
    CHECK(Hypergraph::from_json(nlohmann::json::parse(gz.to_json().dump())) == gz);
}

TEST_CASE("edge universe is lexicographic over sorted vertex lists") {
    auto u = edge_universe(3, 2);
    std::vector<std::vector<int>> expect = {{1}, {1, 2}, {1, 3}, {2}, {2, 3}, {3}};
    CHECK(u == expect);
    CHECK(edge_universe(4, 1).size() == 4);
}
