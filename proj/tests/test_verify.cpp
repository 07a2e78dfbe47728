#include "uso/verify.hpp"

#include <set>

#include "doctest.h"
#include "fixtures.hpp"

using namespace uso;

TEST_CASE("subcube sink listings") {
    const Outmap m = fixtures::reference3();
    CHECK(subcube_sinks(m, full_cube(3)) == std::vector<Mask>{5});
    CHECK(subcube_sinks(m, vertex_cube(2)) == std::vector<Mask>{2});
    // Edge {4, 5}: eval(4) = {1,2} contains direction 1, so 5 is the edge sink.
    CHECK(subcube_sinks(m, Subcube{4, 5}) == std::vector<Mask>{5});
    // Face [0 : {1,2}]: eval within carrier {1,2}: 0->3, 1->2, 2->1, 3->0.
    CHECK(subcube_sinks(m, Subcube{0, 3}) == std::vector<Mask>{3});

    const Outmap c = fixtures::cyclic_square();
    CHECK(subcube_sinks(c, full_cube(2)).empty());
    CHECK_THROWS_AS(subcube_sinks(Outmap{1, {1, 0}}, Subcube{0, 3}), std::invalid_argument);
}

TEST_CASE("is_uso accepts USOs and rejects sinkless and double-sink inputs") {
    CHECK(is_uso(fixtures::reference3()));
    CHECK(is_uso(fixtures::orbit3_uso3()));
    CHECK_FALSE(is_uso(fixtures::cyclic_square()));
    CHECK_FALSE(is_uso(fixtures::two_sink_edge()));
    for (int n = 1; n <= 8; ++n) CHECK(is_uso(psi(n)));
    for (Mask a = 0; a < 8; ++a) CHECK(is_uso(uniform(3, a)));
    CHECK_THROWS_AS(is_uso(uniform(13, 0)), std::invalid_argument);
}

TEST_CASE("global sink scan") {
    CHECK(global_sink(fixtures::reference3()) == 5);
    CHECK(global_sink(uniform(4, 9)) == 9);
    CHECK(global_sink(psi(3)) == 4);
    CHECK_THROWS_AS(global_sink(fixtures::cyclic_square()), NotUsoError);
    CHECK_THROWS_AS(global_sink(fixtures::two_sink_edge()), NotUsoError);
}

TEST_CASE("decision answers membership of the global sink") {
    const Outmap m = fixtures::reference3();
    const auto [lo, hi] = lambda_facets(3, 1);
    CHECK(decide(m, hi));        // sink 5 contains direction 1
    CHECK_FALSE(decide(m, lo));
    CHECK(decide(m, full_cube(3)));
    CHECK(decide(m, vertex_cube(5)));
    CHECK_FALSE(decide(m, vertex_cube(4)));
}

TEST_CASE("bijection check") {
    CHECK(is_bijection(fixtures::reference3()));
    CHECK(is_bijection(psi(6)));
    CHECK_FALSE(is_bijection(fixtures::two_sink_edge()));
    CHECK_FALSE(is_bijection(Outmap{2, {1, 2, 2, 1}}));
}

TEST_CASE("exhaustive enumeration in small dimension") {
    CHECK(enumerate_usos(1).size() == 2);
    CHECK(enumerate_usos(2).size() == 12);
    const std::vector<Outmap> all3 = enumerate_usos(3);
    CHECK(all3.size() == 744);
    std::set<std::vector<Mask>> distinct;
    for (const Outmap& m : all3) {
        distinct.insert(m.table());
        CHECK(is_bijection(m));
    }
    CHECK(distinct.size() == 744);
    CHECK_THROWS_AS(enumerate_usos(4), std::invalid_argument);
}
