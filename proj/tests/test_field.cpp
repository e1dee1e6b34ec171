#include "doctest.h"

#include "kanex/field.hpp"
#include "kanex/matrix.hpp"

using namespace kanex;

TEST_CASE("prime field arithmetic")
{
    auto f5 = Field::prime(5);
    CHECK(f5.mul(Scalar(2), Scalar(3)) == 1);
    CHECK(f5.add(Scalar(4), Scalar(3)) == 2);
    CHECK(f5.sub(Scalar(1), Scalar(3)) == 3);
    CHECK(f5.neg(Scalar(0)) == 0);
    CHECK(f5.inv(Scalar(2)) == 3);
    CHECK(f5.canonical(Scalar(1, 2)) == 3);
    CHECK(f5.canonical(Scalar(-7)) == 3);
    CHECK_THROWS_AS(Field::prime(6), std::invalid_argument);
    CHECK_THROWS_AS(f5.inv(Scalar(0)), std::domain_error);
}

TEST_CASE("rational text form")
{
    CHECK(to_string(Scalar(3, 6)) == "1/2");
    CHECK(to_string(Scalar(-4, 2)) == "-2");
    CHECK_THROWS(parse_rational("6/-4"));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("x"));
    CHECK_THROWS(parse_rational("1/"));
    CHECK(parse_rational("-10/4") == Scalar(-5, 2));
}

TEST_CASE("rref, nullspace and solve")
{
    auto q = Field::rationals();
    Matrix m(2, 3);
    m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
    m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 7;
    auto e = rref(q, m);
    CHECK(e.pivots == std::vector<std::size_t>{0, 2});
    auto k = nullspace(q, m);
    REQUIRE(k.cols() == 1);
    CHECK(multiply(q, m, k).is_zero());
    CHECK(k(1, 0) == 1);

    Matrix b(2, 1);
    b(0, 0) = 1;
    b(1, 0) = 3;
    auto x = solve(q, m, b);
    REQUIRE(x);
    CHECK(multiply(q, m, *x) == b);

    Matrix singular(2, 2);
    singular(0, 0) = 1; singular(0, 1) = 1;
    singular(1, 0) = 1; singular(1, 1) = 1;
    Matrix rhs(2, 1);
    rhs(0, 0) = 1;
    CHECK_FALSE(solve(q, singular, rhs));
}

TEST_CASE("incremental row reduction agrees with batch nullspace")
{
    auto f3 = Field::prime(3);
    Matrix m(3, 4);
    int vals[3][4] = {{1, 2, 0, 1}, {2, 1, 1, 0}, {0, 0, 1, 1}};
    RowReducer rr(f3, 4);
    for (int i = 0; i < 3; ++i) {
        std::vector<Scalar> row;
        for (int j = 0; j < 4; ++j) {
            m(i, j) = f3.from_int(vals[i][j]);
            row.push_back(f3.from_int(vals[i][j]));
        }
        rr.add_row(row);
    }
    CHECK(rr.rank() == rank(f3, m));
    CHECK(rr.kernel() == nullspace(f3, m));
}
