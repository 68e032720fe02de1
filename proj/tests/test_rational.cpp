#include <catch2/catch_amalgamated.hpp>

#include "quotientopes/rational.hpp"

using namespace qtp;

TEST_CASE("rationals parse and print in lowest terms") {
    REQUIRE(format_rational(parse_rational("28/81")) == "28/81");
    REQUIRE(format_rational(parse_rational("-4/6")) == "-2/3");
    REQUIRE(format_rational(parse_rational("3")) == "3");
    REQUIRE(format_rational(parse_rational("0/5")) == "0");
    REQUIRE(parse_rational("-53/81") == Rational(-53, 81));

    REQUIRE_THROWS_AS(parse_rational(""), validation_error);
    REQUIRE_THROWS_AS(parse_rational("1/0"), validation_error);
    REQUIRE_THROWS_AS(parse_rational("x"), validation_error);
    REQUIRE_THROWS_AS(parse_rational("1/2/3"), validation_error);
    REQUIRE_THROWS_AS(parse_rational("1.5"), validation_error);
}

TEST_CASE("arithmetic stays canonical") {
    Rational r(28, 81);
    r -= 1;
    REQUIRE(format_rational(r) == "-53/81");
    REQUIRE(Rational(1, 3) + Rational(1, 81) == Rational(28, 81));
}

TEST_CASE("dot products") {
    RationalVector u{Rational(1, 2), Rational(-1), Rational(3)};
    RationalVector v{Rational(4), Rational(1, 3), Rational(0)};
    REQUIRE(dot(u, v) == Rational(5, 3));
    REQUIRE_THROWS_AS(dot(u, RationalVector{Rational(1)}), validation_error);
}

TEST_CASE("square solve with exact back-substitution") {
    // Rows of the identity chamber system for n = 3 with a frozen right side.
    RationalMatrix A(3, 3);
    int rows[3][3] = {{-2, 1, 1}, {-1, -1, 2}, {1, 1, 1}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) A.at(r, c) = rows[r][c];
    RationalVector b{Rational(1, 3), Rational(28, 81), Rational(0)};
    RationalVector x = solve_linear_system(A, b);
    REQUIRE(x == RationalVector{Rational(-1, 9), Rational(-1, 243), Rational(28, 243)});
}

TEST_CASE("singular systems report rank and the dependent row") {
    RationalMatrix A(2, 2);
    A.at(0, 0) = 1; A.at(0, 1) = 1;
    A.at(1, 0) = 2; A.at(1, 1) = 2;
    try {
        solve_linear_system(A, RationalVector{Rational(1), Rational(2)});
        FAIL("expected singular_matrix_error");
    } catch (const singular_matrix_error& e) {
        REQUIRE(e.rank == 1);
        REQUIRE(e.dependent_row == 1);
    }

    // A zero row that the pivot search skips is still identified by its
    // original index after the row swap.
    RationalMatrix B(2, 2);
    B.at(0, 0) = 0; B.at(0, 1) = 0;
    B.at(1, 0) = 1; B.at(1, 1) = 1;
    try {
        solve_linear_system(B, RationalVector{Rational(0), Rational(1)});
        FAIL("expected singular_matrix_error");
    } catch (const singular_matrix_error& e) {
        REQUIRE(e.rank == 1);
        REQUIRE(e.dependent_row == 0);
    }

    RationalMatrix C(2, 3);
    REQUIRE_THROWS_AS(solve_linear_system(C, RationalVector{Rational(0), Rational(0)}),
                      validation_error);
}

TEST_CASE("rank and affine dimension") {
    RationalMatrix A(3, 3);
    int rows[3][3] = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) A.at(r, c) = rows[r][c];
    REQUIRE(matrix_rank(A) == 2);

    std::vector<RationalVector> triangle{
        {Rational(0), Rational(0), Rational(0)},
        {Rational(1), Rational(0), Rational(0)},
        {Rational(0), Rational(1), Rational(0)}};
    REQUIRE(affine_dimension(triangle) == 2);
    REQUIRE(affine_dimension({triangle[0], triangle[0]}) == 0);
    REQUIRE(affine_dimension({triangle[0]}) == 0);
    REQUIRE(affine_dimension({}) == -1);
}
