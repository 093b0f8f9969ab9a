#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidfloer/braid.hpp"

using namespace bf;

TEST_CASE("parse") {
    BraidWord w = parse_braid("1,1,1", 2);
    CHECK(w.strands == 2);
    CHECK(w.letters == std::vector<int>{1, 1, 1});
    BraidWord v = parse_braid("1,-2, 1 -2", 3);
    CHECK(v.letters == std::vector<int>{1, -2, 1, -2});
    CHECK(parse_braid("", 4).letters.empty());
    CHECK_THROWS_AS(parse_braid("3", 2), BraidParseError);
    CHECK_THROWS_AS(parse_braid("0", 2), BraidParseError);
    CHECK_THROWS_AS(parse_braid("1,x", 3), BraidParseError);
    CHECK_THROWS_AS(parse_braid("1", 1), BraidParseError);
}

TEST_CASE("writhe and components") {
    CHECK(writhe(parse_braid("1,1,1", 2)) == 3);
    CHECK(writhe(parse_braid("", 2)) == 0);
    CHECK(writhe(parse_braid("1,-2,1,-2", 3)) == 0);
    CHECK(closure_components(parse_braid("1,1,1", 2)) == 1);
    CHECK(closure_components(parse_braid("", 2)) == 2);
    CHECK(closure_components(parse_braid("1", 3)) == 2);
}

TEST_CASE("self linking and expected gradings") {
    CHECK(self_linking(parse_braid("1,1,1", 2)) == 1);
    CHECK(self_linking(parse_braid("1", 2)) == -1);
    CHECK(self_linking(parse_braid("", 2)) == -2);
    auto [m0, a0] = expected_invariant_gradings(parse_braid("1,1,1", 2));
    CHECK(m0 == 2);
    CHECK(a0 == Half::whole(1));
    auto [m1, a1] = expected_invariant_gradings(parse_braid("1", 2));
    CHECK(m1 == 0);
    CHECK(a1 == Half::whole(0));
    auto [m2, a2] = expected_invariant_gradings(parse_braid("", 2));
    CHECK(m2 == -1);
    CHECK(a2 == Half::halves(-1));
}

TEST_CASE("conjugation and stabilization invariance of sl") {
    BraidWord w = parse_braid("1,-2,1,-2", 3);
    for (int i = 1; i <= 2; ++i) {
        BraidWord c;
        c.strands = 3;
        c.letters.push_back(i);
        c.letters.insert(c.letters.end(), w.letters.begin(), w.letters.end());
        c.letters.push_back(-i);
        CHECK(self_linking(c) == self_linking(w));
        CHECK(closure_components(c) == closure_components(w));
    }
    BraidWord s = w;
    s.strands = 4;
    s.letters.push_back(3);
    CHECK(self_linking(s) == self_linking(w));
    CHECK(closure_components(s) == closure_components(w));
    BraidWord sm = w;
    sm.strands = 4;
    sm.letters.push_back(-3);
    CHECK(closure_components(sm) == closure_components(w));
}
