#include <doctest.h>

#include "starcat/combinatorics.hpp"

using namespace starcat;

TEST_CASE("factorial and binomial basics") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(binomial(7, 1) == 7);
    CHECK(binomial(7, 2) == 21);
    CHECK(binomial(5, 1) == 5);
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(0, 0) == 1);
}

TEST_CASE("binomial conventions at the edges") {
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(0, 2) == 0);
    // generalized upper index
    CHECK(binomial(-1, 2) == 1);
    CHECK(binomial(-2, 3) == -4);
    CHECK(binomial(-1, 0) == 1);
}

TEST_CASE("Pascal rule as a property") {
    for (long n = 1; n <= 40; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("double factorial with the (-1)!! = 0!! = 1 convention") {
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(1) == 1);
    CHECK(double_factorial(5) == 15);
    CHECK(double_factorial(6) == 48);
    CHECK_THROWS_AS(double_factorial(-2), std::invalid_argument);
    // n!! = n (n-2)!!
    for (long x = 1; x <= 30; ++x) CHECK(double_factorial(x) == x * double_factorial(x - 2));
}

TEST_CASE("subset masks come out in lexicographic tuple order") {
    const auto masks = lex_subset_masks(4, 2);
    const std::vector<std::uint32_t> expect = {0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100};
    CHECK(masks == expect);  // {0,1},{0,2},{0,3},{1,2},{1,3},{2,3}
    CHECK(lex_subset_masks(6, 3).size() == 20);
    CHECK(lex_subset_masks(5, 0).size() == 1);
}

TEST_CASE("fraction strings round-trip") {
    Rational q(-22, 8);
    CHECK(fraction_string(q) == "-11/4");
    q.canonicalize();  // mpq comparisons expect canonical operands
    CHECK(parse_fraction("-11/4") == q);
    CHECK(parse_fraction("3") == Rational(3));
    CHECK(parse_fraction("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(parse_fraction("1/0"), std::invalid_argument);
}
