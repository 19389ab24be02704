#include <doctest.h>

#include "starcat/identities.hpp"

using namespace starcat;
using namespace starcat::identities;

TEST_CASE("summand spot values") {
    CHECK(lambda_summand(1, 0, 0, 0) == 1);
    CHECK(lambda_summand(1, 0, 0, 1) == -2);
    CHECK(lambda_summand(0, 0, 0, 0) == 1);
}

TEST_CASE("summand vanishes outside the support") {
    for (int m = 0; m <= 6; ++m)
        for (int k = 0; k <= m + 1; ++k) {
            CHECK(lambda_summand(m, k, -1, 0) == 0);
            CHECK(lambda_summand(m, k, k + 1, 0) == 0);
            CHECK(lambda_summand(m, k, 0, -1) == 0);
            CHECK(lambda_summand(m, k, 0, m - k + 1) == 0);
        }
    // negative first arguments only ever reach empty supports
    CHECK(lambda_summand(-1, -1, 0, 0) == 0);
    CHECK(lambda_summand(-3, 0, 0, 0) == 0);
}

TEST_CASE("key identity over the full stencil, one step past the support") {
    for (int m = 4; m <= 8; ++m)
        for (int k = 0; k <= m; ++k)
            for (int j = -1; j <= k + 1; ++j)
                for (int p = -1; p <= m - k + 1; ++p) CHECK(verify_key_identity(m, k, j, p));
}

TEST_CASE("key identity trivia") {
    CHECK(verify_key_identity(4, 4, 0, 0));
    // all eight shifted supports empty: 0 = 0
    CHECK(verify_key_identity(0, 0, 5, 5));
}

TEST_CASE("diagonal recurrence") {
    for (int m = 1; m <= 6; ++m)
        for (int p = -1; p <= m + 3; ++p) CHECK(verify_diagonal_recurrence(m, p));
    CHECK(verify_diagonal_recurrence(2, 2));
    CHECK(verify_diagonal_recurrence(3, 40));  // far outside the support: 0 = 0
}

TEST_CASE("closed-form sums") {
    CHECK(lambda_sum(1, 0) == -1);
    CHECK(lambda_sum(3, 2) == Rational(-7, 3));
    CHECK(lambda_sum(8, 8) == 17);
    for (int m = 0; m <= 12; ++m)
        for (int k = 0; k <= m; ++k) CHECK(lambda_sum(m, k) == lambda_sum_closed_form(m, k));
}

TEST_CASE("diagonal sums alternate in sign") {
    for (int m = 0; m <= 20; ++m) {
        const Rational s = lambda_sum(m, 0);
        CHECK(s == (m % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("summing the key identity telescopes into a recurrence for the sums") {
    // over the full support both telescoping sides cancel, so the four-term
    // combination of shifted sums vanishes
    const auto S = [](int mm, int kk) { return lambda_sum(mm, kk); };  // empty ranges give 0
    for (int m = 4; m <= 10; ++m)
        for (int k = 0; k <= m; ++k) {
            Rational acc = Rational(4 * (k - 3) * (k - 2) * (k - 1) * (2 * m - 5)) * S(m - 4, k - 4);
            acc += Rational(4 * (k - 2) * (k - 1) * (2 * m - 7) * (k + 2 * m - 6)) * S(m - 3, k - 3);
            acc += Rational((2 * m - 7) * (2 * m - 5) * (k - 1) * (4 * k + 2 * m - 9)) * S(m - 2, k - 2);
            acc += Rational((2 * m - 7) * (2 * m - 5) * (2 * m - 3) * (k - 1)) * S(m - 1, k - 1);
            CHECK(acc == 0);
        }
}
