#include <catch2/catch_amalgamated.hpp>

#include "permpoly/io.hpp"

using namespace permpoly;

TEST_CASE("field JSON round trip") {
    Field f(3, 2);
    json j = to_json(f);
    CHECK(j == json{{"p", 3}, {"n", 2}, {"modulus", {1, 0, 1}}});
    CHECK(field_from_json(j) == f);
}

TEST_CASE("permutation JSON is the image table") {
    auto p = Permutation::from_cycles(4, {{0, 1}, {2, 3}});
    CHECK(to_json(p) == json::array({1, 0, 3, 2}));
    CHECK(permutation_from_json(to_json(p)) == p);
}

TEST_CASE("ordered group JSON round trip") {
    auto g = klenian_group({2, 3, 1});
    json j = to_json(g);
    auto g2 = group_from_json(j);
    CHECK(g2.q() == g.q());
    CHECK(g2.bounds() == g.bounds());
    CHECK(g2.elements() == g.elements());

    j["elements"][3] = to_json(Permutation::identity(8));
    CHECK_THROWS_AS(group_from_json(j), Error);
}

TEST_CASE("square text, csv and JSON formats") {
    auto s = tuple_to_square(group_tuple(t31_group({2, 2, 1})));
    CHECK(square_to_text(s) == "0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n");
    CHECK(square_to_csv(s) == "0,1,2,3\n1,0,3,2\n2,3,0,1\n3,2,1,0\n");

    CHECK(parse_square(square_to_text(s)) == s);
    CHECK(parse_square(square_to_csv(s)) == s);
    CHECK(parse_square(to_json(s).dump()) == s);
    CHECK(square_from_json(to_json(s)) == s);

    CHECK_THROWS_AS(parse_square(""), Error);
    CHECK_THROWS_AS(parse_square("0 1\n1"), Error);
    CHECK_THROWS_AS(parse_square("0 x\n1 0\n"), Error);
}

TEST_CASE("polynomial JSON round trip") {
    Field f(2, 2);
    std::vector<std::vector<int>> c(4, std::vector<int>(4, 0));
    c[1][0] = 1;
    c[0][1] = 1;
    BivariatePoly P(f, c);
    CHECK(poly_from_json(to_json(P)) == P);
}

TEST_CASE("pair export and count report") {
    auto s = tuple_to_square(group_tuple(t31_group({2, 2, 1})));
    auto t = group_tuple(t31_group({2, 2, 1}));
    auto comp = tuple_to_square(companion_tuple(t, companion_h({2, 2, 1})));
    json pair = pair_to_json(s, comp, true, "closed_form");
    CHECK(pair["orthogonal"] == true);
    CHECK(pair["q"] == 4);
    CHECK(square_from_json(json{{"cells", pair["companion"]}}) == comp);

    BigCount oracle = 24;
    json rep = count_report("t31", json{{"p", 2}, {"n", 2}, {"delta", 1}}, BigCount(24), &oracle);
    CHECK(rep["closed_form"] == "24");
    CHECK(rep["oracle"] == "24");
    CHECK(rep["match"] == true);
    json rep2 = count_report("t31", json{{"p", 2}}, BigCount(24), nullptr);
    CHECK(rep2["oracle"].is_null());
    CHECK(rep2["match"] == true);
}
