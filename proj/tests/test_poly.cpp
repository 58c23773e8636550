#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "permpoly/groups.hpp"
#include "permpoly/latin.hpp"
#include "permpoly/poly.hpp"

using namespace permpoly;

namespace {

BivariatePoly x1_plus_x2(const Field& f) {
    std::vector<std::vector<int>> c(f.q(), std::vector<int>(f.q(), 0));
    c[1][0] = 1;
    c[0][1] = 1;
    return {f, c};
}

}  // namespace

TEST_CASE("interpolation recovers simple polynomials") {
    Field f2(2, 1);
    auto p = interpolate_bivariate(f2, {{0, 1}, {1, 0}});
    CHECK(p == x1_plus_x2(f2));

    Field f4(2, 2);
    auto sq = tuple_to_square(group_tuple(t31_group({2, 2, 1})));
    auto p4 = interpolate_bivariate(f4, sq.cells());
    CHECK(p4 == x1_plus_x2(f4));
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) REQUIRE(eval_poly(p4, x, y) == sq.cell(x, y));

    auto z = interpolate_bivariate(f4, std::vector<std::vector<int>>(4, std::vector<int>(4, 0)));
    CHECK(z == BivariatePoly::zero(f4));
}

TEST_CASE("evaluation") {
    Field f4(2, 2);
    CHECK(eval_poly(BivariatePoly::zero(f4), 2, 3) == 0);
    CHECK(eval_poly(x1_plus_x2(f4), 1, 2) == 3);

    std::vector<std::vector<int>> c(4, std::vector<int>(4, 0));
    c[1][1] = 1;  // X1 * X2
    BivariatePoly prod(f4, c);
    CHECK(eval_poly(prod, 2, 2) == 3);

    FieldElement r = eval_poly(x1_plus_x2(f4), f4.element(1), f4.element(2));
    CHECK(r.index() == 3);
    Field f9(3, 2);
    CHECK_THROWS_AS(eval_poly(x1_plus_x2(f4), f9.element(1), f9.element(2)), FieldMismatch);
}

TEST_CASE("local permutation test on coefficients") {
    Field f4(2, 2);
    CHECK(is_lpp_poly(x1_plus_x2(f4)));

    std::vector<std::vector<int>> c(4, std::vector<int>(4, 0));
    c[0][1] = 1;  // X2: permutes columns but rows are constant in X1 direction
    CHECK_FALSE(is_lpp_poly(BivariatePoly(f4, c)));

    c[0][1] = 0;
    c[1][1] = 1;  // X1 * X2: the zero section kills it
    CHECK_FALSE(is_lpp_poly(BivariatePoly(f4, c)));

    Field f9(3, 2);
    CHECK(is_lpp_poly(x1_plus_x2(f9)));
}

TEST_CASE("interpolation round trip on random polynomials") {
    std::mt19937 rng(31337);
    for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {2, 3},
                                                        {3, 2}, {2, 4}}) {
        Field f(p, n);
        const int q = f.q();
        std::uniform_int_distribution<int> dist(0, q - 1);
        for (int rep = 0; rep < 5; ++rep) {
            std::vector<std::vector<int>> coeffs(q, std::vector<int>(q));
            for (auto& row : coeffs)
                for (int& v : row) v = dist(rng);
            BivariatePoly P(f, coeffs);
            REQUIRE(interpolate_bivariate(f, eval_table(P)) == P);
        }
    }
}

TEST_CASE("coefficient test agrees with the Latin test on grids up to q = 16") {
    for (auto prm : std::vector<T31Params>{{2, 2, 1}, {2, 3, 1}, {2, 3, 2}, {3, 2, 1},
                                           {3, 2, 2}, {2, 4, 1}, {2, 4, 2}}) {
        Field f(prm.p, prm.n);
        auto sq = tuple_to_square(group_tuple(t31_group(prm)));
        REQUIRE(sq.is_latin());
        REQUIRE(is_lpp_poly(interpolate_bivariate(f, sq.cells())));

        // damaged grid: still interpolable, no longer an LPP
        auto cells = sq.cells();
        cells[0][0] = cells[0][1];
        REQUIRE_FALSE(LatinSquare(cells).is_latin());
        REQUIRE_FALSE(is_lpp_poly(interpolate_bivariate(f, cells)));
    }
}
