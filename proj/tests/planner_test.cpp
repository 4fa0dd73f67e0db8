#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "coralarm/enumeration.hpp"
#include "coralarm/planner.hpp"

using namespace coralarm;

TEST_CASE("vertical labelling") {
    CHECK(vertical_labelling(parse_state("uurddr", 2)) == std::vector<int>{6, 5, 3, 2});
    CHECK(vertical_labelling(parse_state("rrrr", 2)).empty());
}

TEST_CASE("decomposition splits at the shared sub-snake") {
    ArmState a = parse_state("uurddr", 2), b = parse_state("uurdru", 2);
    Decomposition d = decompose(a, b);
    CHECK(d.common == 3);  // shapes differ at the fourth cell
    CHECK(d.kept_a == std::vector<int>{6, 5, 3});
    CHECK(d.removed_a == std::vector<int>{2});
    CHECK(d.removed_b == std::vector<int>{1});
    CHECK(d.total() == distance_edge(a, b));

    CHECK(decompose(a, a).total() == 0);
    CHECK_THROWS_AS(decompose(a, parse_state("rr", 2)), LengthMismatch);
    CHECK_THROWS_AS(decompose(a, parse_state("uurddr", 3)), WidthMismatch);
}

// two length-23 positions whose vertical labellings decompose as
// v = (21,20,19,17,16), w = (14,12,10,8,7,5) and
// v' = (22,19,17,14,11), w' = (10,7,5,3,1)
static const char* kLongA = "rruuurddrurdrurddrurrrr";
static const char* kLongB = "rurrururrdrrddrrurdrurd";

TEST_CASE("hand-checked length-23 distance instance") {
    ArmState a = parse_state(kLongA, 3), b = parse_state(kLongB, 3);
    Decomposition d = decompose(a, b);
    CHECK(d.kept_a == std::vector<int>{21, 20, 19, 17, 16});
    CHECK(d.removed_a == std::vector<int>{14, 12, 10, 8, 7, 5});
    CHECK(d.kept_b == std::vector<int>{22, 19, 17, 14, 11});
    CHECK(d.removed_b == std::vector<int>{10, 7, 5, 3, 1});
    CHECK(d.removal_cost() == 56);
    CHECK(d.transfer_cost() == 12);
    CHECK(d.insertion_cost() == 26);
    CHECK(d.total() == 94);
    CHECK(distance_edge(a, b) == 94);
    CHECK(distance_tableau(state_to_tableau(a), state_to_tableau(b), 23) == 94);
}

TEST_CASE("closed-form distance equals breadth-first search") {
    for (auto [m, n] : {std::pair{1, 6}, {2, 5}, {3, 4}}) {
        TransitionGraph g = enumerate_states(m, n);
        for (int u = 0; u < static_cast<int>(g.states.size()); ++u) {
            auto dist = bfs_distances(g, u);
            ArmState su = parse_state(g.states[static_cast<size_t>(u)], m);
            for (int v = 0; v < static_cast<int>(g.states.size()); ++v)
                CHECK(distance_edge(su, parse_state(g.states[static_cast<size_t>(v)], m)) ==
                      dist[static_cast<size_t>(v)]);
        }
    }
}

static void check_geodesic(const ArmState& a, const ArmState& b) {
    std::vector<Move> plan = geodesic_edge(a, b);
    CHECK(static_cast<long long>(plan.size()) == distance_edge(a, b));
    ArmState cur = a;
    for (const Move& mv : plan) cur = apply_move(cur, mv);  // throws if any step is illegal
    CHECK(cur == b);
}

TEST_CASE("geodesics are legal and tight") {
    TransitionGraph g = enumerate_states(2, 5);
    for (const auto& ka : g.states)
        for (const auto& kb : g.states) check_geodesic(parse_state(ka, 2), parse_state(kb, 2));
    check_geodesic(parse_state(kLongA, 3), parse_state(kLongB, 3));
}

TEST_CASE("normal cube paths are optimal in both metrics") {
    int m = 2, n = 5;
    TransitionGraph g = enumerate_states(m, n);
    CoralPip cp = build_coral_pip(m, n);
    for (int u = 0; u < static_cast<int>(g.states.size()); ++u) {
        auto cube_dist = cube_metric_distances(g, u);
        ArmState su = parse_state(g.states[static_cast<size_t>(u)], m);
        for (const auto& kv : g.states) {
            ArmState sv = parse_state(kv, m);
            auto steps = normal_cube_path(cp, su, sv);
            CHECK(static_cast<int>(steps.size()) == cube_dist[static_cast<size_t>(g.vertex(kv))]);
            long long moves = 0;
            ArmState cur = su;
            for (const auto& step : steps) {
                // the bundled moves must be pairwise independent at the
                // current state, so they span one cube
                for (size_t i = 0; i < step.size(); ++i)
                    for (size_t j = i + 1; j < step.size(); ++j)
                        CHECK(independent(cur, step[i], step[j]));
                for (const Move& mv : step) cur = apply_move(cur, mv);
                moves += static_cast<long long>(step.size());
            }
            CHECK(cur == sv);
            CHECK(moves == distance_edge(su, sv));
        }
    }
}

TEST_CASE("special positions") {
    CHECK(render_state(zigzag_position(2, 6)) == "uurddr");
    CHECK(render_state(zigzag_position(2, 7)) == "uurddru");
    CHECK(render_state(zigzag_position(1, 5)) == "urdru");
    CHECK(render_state(near_zigzag_position(2, 6)) == "urdruu");
    CHECK(render_state(horizontal_position(2, 4)) == "rrrr");
    CHECK_THROWS_AS(near_zigzag_position(2, 3), BoundsError);
}

TEST_CASE("diameter formula") {
    CHECK(diameter(2, 6) == 17);
    CHECK(diameter(2, 4) == 8);
    for (int m = 1; m <= 3; ++m)
        for (int n = 0; n <= 7; ++n)
            CHECK(diameter(m, n) == all_pairs_diameter(enumerate_states(m, n)));
    CHECK_THROWS_AS(diameter(0, 3), BoundsError);
}

TEST_CASE("the zigzag pair overtakes the stretched arm exactly at length 6") {
    for (int m = 2; m <= 3; ++m)
        for (int n = 4; n <= 12; ++n) {
            ArmState l = zigzag_position(m, n);
            long long folded = distance_edge(l, near_zigzag_position(m, n));
            long long stretched = distance_edge(l, horizontal_position(m, n));
            CHECK((folded >= stretched) == (n >= 6));
        }
}
