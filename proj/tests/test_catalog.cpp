#include <catch2/catch_amalgamated.hpp>

#include "matkit/catalog.hpp"

using namespace matkit;

TEST_CASE("uniform construction") {
    CHECK(uniform(2, 4).bases().size() == 6);
    CHECK(uniform(0, 3).rank() == 0);
    CHECK(uniform(3, 3).bases().size() == 1);
    CHECK_THROWS_AS(uniform(5, 4), PreconditionError);
    CHECK_THROWS_AS(uniform(2, 17), PreconditionError);
}

TEST_CASE("wheel, whirl, spike, vamos") {
    CHECK(wheel(3).bases().size() == 16);  // spanning trees of K4
    CHECK(whirl(3).bases().size() == 17);  // one relaxed circuit-hyperplane
    CHECK(wheel(3).rank() == 3);
    CHECK(wheel(4).size() == 8);
    CHECK_THROWS_AS(wheel(2), PreconditionError);

    // The rank-3 tipless free spike has no two-full-leg 3-sets, so it is
    // exactly U(3,6); rank 4 excludes the six leg-pair quads.
    CHECK(tipless_free_spike(3).bases() == uniform(3, 6).bases());
    CHECK(tipless_free_spike(4).bases().size() == 70 - 6);
    CHECK_THROWS_AS(tipless_free_spike(2), PreconditionError);

    CHECK(vamos().bases().size() == 65);
    CHECK(vamos().rank() == 4);
}

TEST_CASE("serialize produces the canonical text") {
    const std::string expected =
        "MATROID U(2,3)\n"
        "ELEMENTS 3\n"
        "RANK 2\n"
        "BASES 3\n"
        "0 1\n"
        "0 2\n"
        "1 2\n";
    CHECK(serialize_matroid(uniform(2, 3)) == expected);
}

TEST_CASE("parse round-trips serialize, including the name") {
    for (const Matroid& m : {uniform(2, 3), wheel(3), whirl(4), tipless_free_spike(3), vamos(),
                             dual(wheel(3))}) {
        const std::string text = serialize_matroid(m);
        const Matroid back = parse_matroid(text);
        CHECK(back == m);
        CHECK(back.name() == m.name());
        CHECK(serialize_matroid(back) == text);
    }
}

TEST_CASE("parse accepts comments and rejects malformed input") {
    CHECK(parse_matroid("# header comment\nMATROID A\nELEMENTS 2\nRANK 1\nBASES 2\n0\n1\n")
              .size() == 2);
    CHECK_THROWS_AS(parse_matroid("MATROID bad name\nELEMENTS 1\nRANK 1\nBASES 1\n0\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_matroid("ELEMENTS 1\nRANK 1\nBASES 1\n0\n"), ParseError);
    CHECK_THROWS_AS(parse_matroid("MATROID A\nELEMENTS 99\nRANK 1\nBASES 1\n0\n"), ParseError);
    // Basis line size disagrees with RANK.
    CHECK_THROWS_AS(parse_matroid("MATROID A\nELEMENTS 3\nRANK 2\nBASES 1\n0\n"), ParseError);
    // Element out of range, descending order, trailing whitespace.
    CHECK_THROWS_AS(parse_matroid("MATROID A\nELEMENTS 2\nRANK 1\nBASES 1\n5\n"), ParseError);
    CHECK_THROWS_AS(parse_matroid("MATROID A\nELEMENTS 3\nRANK 2\nBASES 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_matroid("MATROID A\nELEMENTS 2\nRANK 1\nBASES 2\n0 \n1\n"), ParseError);
    // Well-formed text that violates basis exchange names the basis pair.
    CHECK_THROWS_AS(parse_matroid("MATROID A\nELEMENTS 4\nRANK 2\nBASES 2\n0 1\n2 3\n"),
                    AxiomError);
}

TEST_CASE("builtin catalog") {
    const auto catalog = builtin_catalog();
    bool has_u24 = false;
    std::set<std::string> names;
    for (const CatalogEntry& e : catalog) {
        if (e.name == "U(2,4)") has_u24 = true;
        CHECK(names.insert(e.name).second);  // unique names
    }
    CHECK(has_u24);
    // 39 uniforms + 6 wheels/whirls + 3 spikes + Vamos, each with its dual,
    // plus the seven committed fixture hosts.
    CHECK(catalog.size() == 105);
}
