#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "matkit/catalog.hpp"
#include "matkit/connectivity.hpp"
#include "matkit/matroid.hpp"
#include "oracle.hpp"

using namespace matkit;

namespace {

Matroid from_masks(int n, const oracle::Masks& masks, std::string name = "T") {
    std::vector<ElemSet> bases;
    for (std::uint32_t m : masks) bases.push_back(ElemSet(m));
    return Matroid(n, std::move(bases), std::move(name));
}

oracle::Masks to_masks(const Matroid& m) {
    oracle::Masks out;
    for (ElemSet b : m.bases()) out.push_back(b.bits);
    return out;
}

// M(K4) built from its own spanning-tree enumeration, edge order
// (01,02,03,12,13,23).  Triangle on vertices {0,1,2} = edges {0,1,3};
// vertex star of 0 = edges {0,1,2}.
const Matroid mk4 = from_masks(6, oracle::k4_spanning_trees(), "MK4");

}  // namespace

TEST_CASE("construction validates the basis family") {
    CHECK_THROWS_AS(Matroid(4, {}), AxiomError);
    CHECK_THROWS_AS(Matroid(4, {ElemSet{0, 1}, ElemSet{2}}), AxiomError);
    CHECK_THROWS_AS(Matroid(3, {ElemSet{0, 3}}), AxiomError);
    CHECK_THROWS_AS(Matroid(17, {ElemSet{0}}), AxiomError);
    // {0,1} and {2,3} violate exchange: {1,2} is not a basis.
    CHECK_THROWS_AS(Matroid(4, {ElemSet{0, 1}, ElemSet{2, 3}}), AxiomError);
    CHECK_NOTHROW(Matroid(4, {ElemSet{0, 1}, ElemSet{0, 2}, ElemSet{0, 3}, ElemSet{1, 2},
                              ElemSet{1, 3}, ElemSet{2, 3}}));
}

TEST_CASE("rank_of") {
    const Matroid u24 = uniform(2, 4);
    CHECK(u24.rank_of(ElemSet{0, 1, 2}) == 2);
    CHECK(u24.rank_of(ElemSet{}) == 0);
    CHECK(mk4.rank_of(ElemSet{0, 1, 3}) == oracle::rank(oracle::k4_spanning_trees(), 0b001011));
    CHECK(mk4.rank_of(ElemSet{0, 1, 3}) == 2);
    CHECK(u24.rank_of(u24.ground()) == u24.rank());
    CHECK_THROWS_AS(u24.rank_of(ElemSet{4}), InvalidElementError);
}

TEST_CASE("corank_of") {
    const Matroid u24 = uniform(2, 4);
    CHECK(u24.corank_of(ElemSet{0, 1}) == 2);
    CHECK(u24.corank_of(ElemSet{}) == 0);
    // A triad of M(K4): the star of vertex 0.
    const Matroid mk4_dual = dual(mk4);
    CHECK(mk4.corank_of(ElemSet{0, 1, 2}) == 2);
    CHECK(mk4.corank_of(ElemSet{0, 1, 2}) == mk4_dual.rank_of(ElemSet{0, 1, 2}));
    for (std::uint32_t s = 0; s < 64; ++s)
        CHECK(mk4.corank_of(ElemSet(s)) == mk4_dual.rank_of(ElemSet(s)));
}

TEST_CASE("dual") {
    const Matroid u24 = uniform(2, 4);
    CHECK(dual(u24).bases() == u24.bases());
    CHECK(dual(uniform(1, 3)).bases() == uniform(2, 3).bases());
    CHECK(dual(mk4).bases().size() == 16);
    for (const Matroid& m : {u24, mk4, wheel(4), vamos()}) {
        const Matroid dd = dual(dual(m));
        CHECK(dd.size() == m.size());
        CHECK(dd.bases() == m.bases());
    }
}

TEST_CASE("delete and contract") {
    const Matroid u24 = uniform(2, 4);
    MinorResult del = delete_elements(u24, ElemSet{3});
    CHECK(del.matroid.bases() == uniform(2, 3).bases());
    CHECK(del.map.image == std::vector<int>{0, 1, 2});
    MinorResult con = contract_elements(u24, ElemSet{3});
    CHECK(con.matroid.bases() == uniform(1, 3).bases());

    // Contracting a rim element of M(K4) creates a parallel pair.
    const Matroid w3 = wheel(3);
    MinorResult crim = contract_elements(w3, ElemSet{1});
    bool has_2circuit = false;
    for (ElemSet c : circuits(crim.matroid).members)
        if (c.count() == 2) has_2circuit = true;
    CHECK(has_2circuit);

    CHECK_THROWS_AS(delete_elements(u24, ElemSet{5}), InvalidElementError);

    // Minor calculus: contract(M,S) = dual(delete(dual(M),S)) element-wise.
    for (const Matroid& m : {u24, w3, vamos()}) {
        for (std::uint32_t s = 0; s < (1u << m.size()); s += 5) {
            const ElemSet sel(s);
            const Matroid lhs = contract_elements(m, sel).matroid;
            const Matroid rhs = dual(delete_elements(dual(m), sel).matroid);
            CHECK(lhs.bases() == rhs.bases());
        }
    }
}

TEST_CASE("circuits and cocircuits") {
    const Matroid u24 = uniform(2, 4);
    const SetFamily c24 = circuits(u24);
    CHECK(c24.members.size() == 4);
    for (ElemSet c : c24.members) CHECK(c.count() == 3);

    CHECK(circuits(uniform(3, 3)).members.empty());

    const SetFamily cmk4 = circuits(mk4);
    CHECK(cmk4.members.size() == 7);
    int triangles = 0, quadrilaterals = 0;
    for (ElemSet c : cmk4.members) {
        if (c.count() == 3) ++triangles;
        if (c.count() == 4) ++quadrilaterals;
    }
    CHECK(triangles == 4);
    CHECK(quadrilaterals == 3);
    {
        oracle::Masks expect = oracle::circuits(6, oracle::k4_spanning_trees());
        std::sort(expect.begin(), expect.end());
        oracle::Masks got;
        for (ElemSet c : cmk4.members) got.push_back(c.bits);
        CHECK(got == expect);
    }
    CHECK(cmk4.is_antichain());
    CHECK(cocircuits(mk4).is_antichain());

    // Cocircuits are circuits of the dual.
    const SetFamily cocirc = cocircuits(mk4);
    const SetFamily dual_circ = circuits(dual(mk4));
    CHECK(cocirc.members == dual_circ.members);
}

TEST_CASE("closure and coclosure") {
    const Matroid u24 = uniform(2, 4);
    CHECK(u24.closure(ElemSet{0, 1}) == u24.ground());
    CHECK(u24.closure(u24.ground()) == u24.ground());
    CHECK(mk4.closure(ElemSet{0, 1}) == ElemSet{0, 1, 3});
    CHECK(mk4.closure(ElemSet{0, 1}).bits ==
          oracle::closure(6, oracle::k4_spanning_trees(), 0b000011));

    for (const Matroid& m : {u24, mk4}) {
        const std::uint32_t total = 1u << m.size();
        for (std::uint32_t s = 0; s < total; ++s) {
            const ElemSet set(s);
            CHECK(set.subset_of(m.closure(set)));
            CHECK(m.closure(m.closure(set)) == m.closure(set));
            CHECK(set.subset_of(m.coclosure(set)));
            CHECK(m.coclosure(m.coclosure(set)) == m.coclosure(set));
            // Coclosure agrees with closure in the dual.
            CHECK(m.coclosure(set) == dual(m).closure(set));
        }
        // Monotone.
        for (std::uint32_t s = 0; s < total; ++s)
            for (std::uint32_t t = s; t < total; ++t)
                if ((s & ~t) == 0) CHECK(m.closure(ElemSet(s)).subset_of(m.closure(ElemSet(t))));
    }
}

TEST_CASE("swap-sides lemma, exhaustively for small catalog entries") {
    // e in cl(X) iff e not in cl*(Y), for every partition (X, Y) of E - e.
    for (const Matroid& m : {uniform(2, 4), uniform(2, 5), mk4, wheel(3), whirl(3)}) {
        for (int e = 0; e < m.size(); ++e) {
            const ElemSet rest = m.ground().without(e);
            for_each_subset(rest, [&](ElemSet x) {
                const ElemSet y = rest - x;
                CHECK(m.closure(x).contains(e) != m.coclosure(y).contains(e));
            });
        }
    }
}

TEST_CASE("simplify and cosimplify") {
    const Matroid u23 = uniform(2, 3);
    MinorResult si = simplify(u23);
    CHECK(si.matroid.bases() == u23.bases());
    CHECK(si.map.image == std::vector<int>{0, 1, 2});

    // One parallel pair {0,1}: keep the lowest label.
    const Matroid pp(2, {ElemSet{0}, ElemSet{1}}, "U(1,2)");
    MinorResult sipp = simplify(pp);
    CHECK(sipp.matroid.size() == 1);
    CHECK(sipp.map.image == std::vector<int>{0});

    // All-loop matroid simplifies to the empty matroid.
    MinorResult zero = simplify(uniform(0, 3));
    CHECK(zero.matroid.size() == 0);
    CHECK(zero.map.image.empty());

    // M(K4) / rim, simplified: 3-connected of rank 2.
    const Matroid w3 = wheel(3);
    MinorResult step = contract_elements(w3, ElemSet{1});
    MinorResult si2 = simplify(step.matroid);
    CHECK(si2.matroid.rank() == 2);
    CHECK(enumerate_k_separations(si2.matroid, 2).empty());
    CHECK(is_isomorphic(si2.matroid, uniform(2, 3)));

    for (const Matroid& m : {w3, uniform(1, 4), vamos()}) {
        const Matroid lhs = cosimplify(m).matroid;
        const Matroid rhs = dual(simplify(dual(m)).matroid);
        CHECK(lhs.bases() == rhs.bases());
    }
}

TEST_CASE("isomorphism") {
    const Matroid u24 = uniform(2, 4);
    CHECK(find_isomorphism(u24, dual(u24)).has_value());
    CHECK_FALSE(find_isomorphism(u24, uniform(3, 4)).has_value());

    // Wheel vs whirl: 16 vs 17 bases.
    CHECK(wheel(3).bases().size() == 16);
    CHECK(whirl(3).bases().size() == 17);
    CHECK_FALSE(is_isomorphic(wheel(3), whirl(3)));

    CHECK(oracle::isomorphic(6, to_masks(wheel(3)), 6, to_masks(mk4)));
    CHECK(is_isomorphic(wheel(3), mk4));

    // Invariance under relabelling, seeded.
    std::mt19937 rng(20260809);
    for (const Matroid& m : {mk4, whirl(3), vamos(), tipless_free_spike(3)}) {
        std::vector<int> perm(static_cast<std::size_t>(m.size()));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        ElementMap relabel{perm};
        std::vector<ElemSet> mapped;
        for (ElemSet b : m.bases()) mapped.push_back(relabel.apply(b));
        const Matroid shuffled(m.size(), std::move(mapped), "shuffled");
        auto iso = find_isomorphism(m, shuffled);
        REQUIRE(iso.has_value());
        for (ElemSet b : m.bases()) CHECK(shuffled.is_basis(iso->apply(b)));
        CHECK(find_isomorphism(shuffled, m).has_value());
    }
}

TEST_CASE("the two lambda formulas agree") {
    for (const Matroid& m : {uniform(2, 5), mk4, whirl(3), vamos()}) {
        for (std::uint32_t s = 0; s < (1u << m.size()); ++s) {
            const ElemSet set(s);
            const int via_rank = m.rank_of(set) + m.rank_of(m.ground() - set) - m.rank();
            const int via_corank = m.rank_of(set) + m.corank_of(set) - set.count();
            CHECK(via_rank == via_corank);
            CHECK(via_rank == oracle::lambda(m.size(), to_masks(m), s));
        }
    }
}
