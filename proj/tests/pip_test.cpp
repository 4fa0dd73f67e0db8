#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "coralarm/enumeration.hpp"
#include "coralarm/pip.hpp"

using namespace coralarm;

TEST_CASE("the width-2 length-3 poset by hand") {
    CoralPip cp = build_coral_pip(2, 3);
    REQUIRE(cp.size() == 6);
    CoralSnake cell(1, {});
    CoralSnake up = CoralSnake::from_steps("u");
    CoralSnake right = CoralSnake::from_steps("r");

    int c0 = cp.index_of(cell, 0), c1 = cp.index_of(cell, 1), c2 = cp.index_of(cell, 2);
    int u0 = cp.index_of(up, 0), u1 = cp.index_of(up, 1);
    int r0 = cp.index_of(right, 0);
    CHECK_THROWS_AS(cp.index_of(right, 1), UnknownVertex);

    const Pip& p = cp.pip();
    // same shape: larger s sits lower
    CHECK(p.less(c2, c1));
    CHECK(p.less(c1, c0));
    CHECK_FALSE(p.less(c0, c1));
    // growing the snake moves up, keeping s
    CHECK(p.less(c0, u0));
    CHECK(p.less(c1, u0));
    CHECK(p.less(c1, u1));
    CHECK_FALSE(p.less(c0, u1));
    CHECK(p.less(c0, r0));
    // incomparable shapes are inconsistent
    CHECK(p.inconsistent(u0, r0));
    CHECK(p.inconsistent(u1, r0));
    CHECK_FALSE(p.inconsistent(c0, u1));

    CHECK(enumerate_ideals(p).size() == 8);
    auto pairs = p.minimal_inconsistent_pairs();
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0] == std::pair<int, int>{std::min(u1, r0), std::max(u1, r0)});
}

TEST_CASE("poset axioms are enforced") {
    std::vector<std::string> labels{"a", "b", "c"};
    auto no = [](int, int) { return false; };
    CHECK_THROWS_AS(Pip(labels, [](int a, int b) { return (a == 0 && b == 1) || (a == 1 && b == 0); }, no),
                    Error);  // antisymmetry
    CHECK_THROWS_AS(Pip(labels, [](int a, int b) { return b == a + 1; }, no),
                    Error);  // transitivity
    CHECK_THROWS_AS(Pip(labels, no, [](int a, int b) { return a == 0 && b == 1; }),
                    Error);  // symmetry of inconsistency
    CHECK_THROWS_AS(Pip(labels, [](int a, int b) { return a == 0 && b == 1; },
                        [](int a, int b) { return a + b == 1; }),
                    Error);  // comparable pair marked inconsistent
    // inconsistency must propagate upward: 0 incons 1, 1 < 2, but 0 not incons 2
    CHECK_THROWS_AS(Pip(labels, [](int a, int b) { return a == 1 && b == 2; },
                        [](int a, int b) { return a + b == 1; }),
                    Error);
    CHECK_NOTHROW(Pip(labels, [](int a, int b) { return a == 0 && b == 1; },
                      [](int a, int b) { return a + b == 3; }));
}

TEST_CASE("ideal encodings of tableaux") {
    CoralPip cp = build_coral_pip(2, 3);
    // the horizontal position is the empty ideal
    CHECK_FALSE(tableau_to_ideal(CoralTableau(), cp).any());
    CHECK(ideal_to_tableau(Bitset(cp.size()), cp).empty());
    // an inconsistent subset is rejected
    Bitset bad(cp.size());
    bad.set(cp.index_of(CoralSnake::from_steps("u"), 0));
    bad.set(cp.index_of(CoralSnake::from_steps("r"), 0));
    CHECK_THROWS_AS(ideal_to_tableau(bad, cp), InconsistentIdeal);
    // a non-downward-closed subset is rejected
    Bitset open(cp.size());
    open.set(cp.index_of(CoralSnake::from_steps("r"), 0));
    CHECK_THROWS_AS(ideal_to_tableau(open, cp), InconsistentIdeal);
}

TEST_CASE("round-trips and the jump description of maximal elements") {
    for (auto [m, n] : {std::pair{2, 5}, {3, 4}}) {
        CoralPip cp = build_coral_pip(m, n);
        TransitionGraph g = enumerate_states(m, n);
        for (const auto& key : g.states) {
            CoralTableau t = state_to_tableau(parse_state(key, m));
            Bitset ideal = tableau_to_ideal(t, cp);
            CHECK(ideal_to_tableau(ideal, cp) == t);

            // maximal elements of the ideal = tights pinned at the jump cells
            std::vector<int> expect;
            for (int c : jumps(t, m, n)) {
                NumberedSnake e = jump_tight(t, c);
                expect.push_back(cp.index_of(e.shape, e.s));
            }
            std::sort(expect.begin(), expect.end());
            std::vector<int> got = maximal_elements(cp.pip(), ideal);
            std::sort(got.begin(), got.end());
            CHECK(got == expect);

            // and the ideal is the union of their principal ideals
            Bitset join(cp.size());
            for (int e : got) {
                join.set(e);
                for (int b : cp.pip().below(e).bits()) join.set(b);
            }
            CHECK(join == ideal);
        }
        CHECK(enumerate_ideals(cp.pip()).size() == g.states.size());
    }
}

TEST_CASE("the ideal complex is the brute-force complex") {
    for (auto [m, n] : {std::pair{2, 4}, {2, 5}, {3, 4}}) {
        CubeComplex brute = enumerate_cubes(enumerate_states(m, n));
        CubeComplex ideal = complex_from_pip(build_coral_pip(m, n));
        CHECK(ideal.fvector() == brute.fvector());
        auto sorted = [](std::vector<std::string> v) {
            std::sort(v.begin(), v.end());
            return v;
        };
        CHECK(sorted(ideal.labels) == sorted(brute.labels));
        CHECK(ideal.labels[static_cast<size_t>(ideal.root)] ==
              brute.labels[static_cast<size_t>(brute.root)]);
    }
}

TEST_CASE("reconstructing the poset from the complex") {
    for (auto [m, n] : {std::pair{1, 5}, {2, 4}, {2, 5}, {3, 3}}) {
        CubeComplex x = enumerate_cubes(enumerate_states(m, n));
        auto mismatch = coral_pip_mismatch(x, m, n);
        if (mismatch) FAIL(("(" + std::to_string(m) + "," + std::to_string(n) + "): " + *mismatch));
        ReconstructedPip recon = pip_from_complex(x);
        CHECK(recon.pip.size() == build_coral_pip(m, n).size());
        // the root crosses nothing; crossing-set sizes are graph distances
        CHECK_FALSE(recon.vertex_crossings[static_cast<size_t>(x.root)].any());
    }
}

TEST_CASE("a hollow square is flagged as not CAT(0)") {
    CubeComplex x;
    for (const char* v : {"a", "b", "c", "d"}) x.add_vertex(v);
    x.root = 0;
    x.cubes.resize(2);
    x.cubes[1] = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};  // a cycle with no filling square
    CHECK_THROWS_AS(pip_from_complex(x), NotCat0Evidence);
}
