#include "uso/outmap.hpp"

#include "doctest.h"
#include "fixtures.hpp"
#include "uso/verify.hpp"

using namespace uso;

TEST_CASE("outmap construction validates shape and range") {
    CHECK_NOTHROW(Outmap(2, {0, 1, 2, 3}));
    CHECK_THROWS_AS(Outmap(2, {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Outmap(2, {0, 1, 2, 4}), std::invalid_argument);
    CHECK_THROWS_AS(Outmap(21, std::vector<Mask>(1 << 21, 0)), std::invalid_argument);

    const Outmap m = fixtures::reference3();
    CHECK(m.dim() == 3);
    CHECK(m.size() == 8);
    CHECK(m.eval(0) == 7);
    CHECK(m.eval(5) == 0);
    CHECK_THROWS_AS(m.eval(8), std::out_of_range);
}

TEST_CASE("orientation recognition") {
    CHECK(is_orientation(fixtures::reference3()));
    CHECK(is_orientation(fixtures::cyclic_square()));
    CHECK_FALSE(is_orientation(fixtures::two_sink_edge()));
    CHECK_FALSE(is_orientation(Outmap{2, {1, 2, 0, 1}}));
    CHECK(is_orientation(uniform(5, 11)));
}

TEST_CASE("flip is the xor action and an involution") {
    const Outmap m = fixtures::reference3();
    const Outmap f = flip(m, 0b101);
    for (Mask v = 0; v < m.size(); ++v) CHECK(f.eval(v) == (m.eval(v) ^ 0b101));
    CHECK(flip(f, 0b101) == m);
    CHECK(flip(m, 0) == m);
    CHECK_THROWS_AS(flip(m, 0b1000), std::invalid_argument);
}

TEST_CASE("flip moves the sink to the vertex that mapped to the flip set") {
    const Outmap m = fixtures::reference3();
    for (Mask lambda = 0; lambda < 8; ++lambda) {
        const Outmap f = flip(m, lambda);
        CHECK(is_uso(f));
        // The new sink is the unique w with eval(m, w) = lambda.
        Mask expected = 0;
        for (Mask w = 0; w < 8; ++w) {
            if (m.eval(w) == lambda) expected = w;
        }
        CHECK(global_sink(f) == expected);
    }
}

TEST_CASE("combine stacks facets and directs the new edges one way") {
    const Outmap lower{1, {1, 0}};   // psi(1)
    const Outmap upper{1, {0, 1}};   // uniform(1, 0)
    const Outmap up = combine(lower, upper, StackDir::up);
    CHECK(up.table() == std::vector<Mask>{3, 2, 0, 1});
    const Outmap down = combine(lower, upper, StackDir::down);
    CHECK(down.table() == std::vector<Mask>{1, 0, 2, 3});

    // All 2x2x2 combinations of one-dimensional USOs stay USOs.
    for (Mask a = 0; a < 2; ++a) {
        for (Mask b = 0; b < 2; ++b) {
            for (StackDir d : {StackDir::up, StackDir::down}) {
                CHECK(is_uso(combine(uniform(1, a), uniform(1, b), d)));
            }
        }
    }
    CHECK_THROWS_AS(combine(lower, uniform(2, 0), StackDir::up), std::invalid_argument);
}

TEST_CASE("uniform orientation is the xor-with-target map") {
    const Outmap m = uniform(3, 0b101);
    for (Mask v = 0; v < 8; ++v) CHECK(m.eval(v) == (v ^ 0b101));
    CHECK(uniform(4, 0).table()[7] == 7);
    CHECK_THROWS_AS(uniform(3, 0b1000), std::invalid_argument);
}

TEST_CASE("psi tables match the first-flip recursion") {
    CHECK(psi(1).table() == std::vector<Mask>{1, 0});
    CHECK(psi(2).table() == std::vector<Mask>{3, 2, 0, 1});
    CHECK(psi(3).table() == std::vector<Mask>{7, 6, 4, 5, 0, 1, 2, 3});
    // The recursion agrees with the facet product against uniform(n, 0).
    for (int n = 1; n <= 7; ++n) {
        CHECK(psi(n + 1) == combine(psi(n), uniform(n, 0), StackDir::up));
    }
    for (int n = 1; n <= 8; ++n) CHECK(is_uso(psi(n)));
}

TEST_CASE("random_uso is deterministic and always a USO") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        CHECK(random_uso(1, seed).size() == 2);
        for (int n = 2; n <= 6; ++n) {
            const Outmap m = random_uso(n, seed);
            CHECK(m == random_uso(n, seed));
            CHECK(is_uso(m));
        }
    }
    CHECK(random_uso(5, 1) == random_uso(5, 1));
    CHECK(random_uso(5, 1) != random_uso(5, 2));
}

TEST_CASE("serialize emits the uso-map v1 format") {
    CHECK(serialize(psi(1)) == "uso-map v1\nn=1\n1 0\n");
    CHECK(serialize(psi(2)) == "uso-map v1\nn=2\n3 2 0 1\n");
    const std::string text = serialize(psi(6));
    CHECK(text.back() == '\n');
    CHECK(deserialize(text) == psi(6));
}

TEST_CASE("deserialize round trips and rejects malformed input") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(deserialize(serialize(psi(n))) == psi(n));
        CHECK(deserialize(serialize(random_uso(n, 9))) == random_uso(n, 9));
    }
    // Whitespace layout is free-form.
    CHECK(deserialize("uso-map v1\nn=2\n3\n2\n0\n1\n") == psi(2));

    CHECK_THROWS_AS(deserialize("uso-map v2\nn=1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(deserialize("n=1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(deserialize("uso-map v1\nn=0\n\n"), ParseError);
    CHECK_THROWS_AS(deserialize("uso-map v1\nn=2\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(deserialize("uso-map v1\nn=2\n0 1 2 3 0\n"), ParseError);
    CHECK_THROWS_AS(deserialize("uso-map v1\nn=2\n0 1 2 4\n"), ParseError);
    CHECK_THROWS_AS(deserialize("uso-map v1\nn=2\n0 1 2 3"), ParseError);
    CHECK_THROWS_AS(deserialize("uso-map v1\nn=2\n0 1 x 3\n"), ParseError);
}
