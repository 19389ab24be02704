#include "starcat/identities.hpp"

#include "starcat/combinatorics.hpp"

namespace starcat::identities {

Rational lambda_summand(int m, int k, int j, int p) {
    if (p < 0 || p > m - k || j < 0 || j > k) return 0;
    // On the support all binomial arguments are standard and the double
    // factorials stay >= -1.
    BigInt num = binomial(k, j) * binomial(m - j, p) * binomial(j - k + m, j + p);
    num *= double_factorial(2 * (j + p));
    num *= double_factorial(2 * m - 2 * j - 2 * p - 1);
    if ((k + p) % 2 != 0) num = -num;
    Rational r(num, double_factorial(2 * m - 1));
    r.canonicalize();
    return r;
}

Rational antidiff_j(int m, int k, int j, int p) {
    const auto F = [](int mm, int kk, int jj, int pp) {
        return lambda_summand(mm, kk, jj, pp);
    };
    Rational acc = 0;
    acc += Rational(-4 * (k - 2) * (k + m - 4)) * F(m - 3, k - 3, j, p + 1);
    acc += Rational(4 * (m - 2) * (k - m)) * F(m - 3, k - 2, j, p);
    acc += Rational(-4 * (m - 2) * (k - m)) * F(m - 3, k - 2, j, p + 1);
    acc += Rational(-(2 * m - 5) * (4 * k + 2 * m - 9)) * F(m - 2, k - 2, j, p + 1);
    acc += Rational(-(2 * k - 3) * (2 * m - 5)) * F(m - 2, k - 2, j + 1, p + 1);
    acc += Rational(2 * (2 * m - 5) * (k - m)) * F(m - 2, k - 1, j, p);
    acc += Rational(2 * (2 * m - 5) * (m - k)) * F(m - 2, k - 1, j, p + 1);
    acc += Rational(2 * (2 * m - 5) * (k - m)) * F(m - 2, k - 1, j + 1, p);
    acc += Rational(2 * (2 * m - 5) * (m - k)) * F(m - 2, k - 1, j + 1, p + 1);
    acc += Rational(-(2 * m - 5) * (2 * m - 3)) * F(m - 1, k - 1, j, p + 1);
    acc += Rational(-(2 * m - 5) * (2 * m - 3)) * F(m - 1, k - 1, j + 1, p + 1);
    return Rational((2 * m - 7) * (k - 1)) * acc;
}

Rational antidiff_p(int m, int k, int j, int p) {
    const auto F = [](int mm, int kk, int jj, int pp) {
        return lambda_summand(mm, kk, jj, pp);
    };
    Rational acc = 0;
    acc += Rational(-4 * (k - 3) * (k - 2) * (2 * m - 5)) * F(m - 4, k - 4, j, p);
    acc += Rational(-4 * (k - 2) * (2 * m - 7) * (k + 2 * m - 6)) * F(m - 3, k - 3, j, p);
    acc += Rational(4 * (m - 2) * (2 * m - 7) * (m - k)) * F(m - 3, k - 2, j, p);
    acc += Rational(-(2 * m - 7) * (2 * m - 5) * (4 * k + 2 * m - 9)) * F(m - 2, k - 2, j, p);
    acc += Rational(2 * (2 * m - 7) * (2 * m - 5) * (m - k)) * F(m - 2, k - 1, j, p);
    acc += Rational(-(2 * m - 7) * (2 * m - 5) * (2 * m - 3)) * F(m - 1, k - 1, j, p);
    return Rational(k - 1) * acc;
}

Rational diagonal_certificate(int m, int p) {
    const auto S = [](int mm, int pp) { return lambda_summand(mm, 0, 0, pp); };
    Rational acc = 0;
    acc += Rational(4 * m * m) * S(m - 1, p - 2);
    acc += Rational(-(2 * m - 1) * (2 * m + 1)) * S(m, p - 2);
    acc += Rational((2 * m - 1) * (2 * m + 1)) * S(m, p - 1);
    acc += Rational(-(2 * m - 1) * (2 * m + 1)) * S(m + 1, p - 2);
    acc += Rational(-(2 * m - 1) * (2 * m + 1)) * S(m + 1, p - 1);
    return acc;
}

bool verify_key_identity(int m, int k, int j, int p) {
    const auto F = [](int mm, int kk, int jj, int pp) {
        return lambda_summand(mm, kk, jj, pp);
    };
    Rational lhs = 0;
    lhs += Rational(4 * (k - 3) * (k - 2) * (k - 1) * (2 * m - 5)) * F(m - 4, k - 4, j, p);
    lhs += Rational(4 * (k - 2) * (k - 1) * (2 * m - 7) * (k + 2 * m - 6)) * F(m - 3, k - 3, j, p);
    lhs += Rational((2 * m - 7) * (2 * m - 5) * (k - 1) * (4 * k + 2 * m - 9)) * F(m - 2, k - 2, j, p);
    lhs += Rational((2 * m - 7) * (2 * m - 5) * (2 * m - 3) * (k - 1)) * F(m - 1, k - 1, j, p);

    const Rational rhs = antidiff_j(m, k, j + 1, p) - antidiff_j(m, k, j, p) +
                         antidiff_p(m, k, j, p + 1) - antidiff_p(m, k, j, p);
    return lhs == rhs;
}

bool verify_diagonal_recurrence(int m, int p) {
    const Rational lhs = Rational((2 * m - 1) * (2 * m + 1)) *
                         (lambda_summand(m, 0, 0, p - 2) + lambda_summand(m + 1, 0, 0, p - 2));
    const Rational rhs = diagonal_certificate(m, p + 1) - diagonal_certificate(m, p);
    return lhs == rhs;
}

Rational lambda_sum(int m, int k) {
    Rational acc = 0;
    for (int j = 0; j <= k; ++j)
        for (int p = 0; p <= m - k; ++p) acc += lambda_summand(m, k, j, p);
    return acc;
}

Rational lambda_sum_closed_form(int m, int k) {
    Rational r(2 * m + 1, 2 * (m - k) + 1);
    r.canonicalize();
    if (m % 2 != 0) r = -r;
    return r;
}

}  // namespace starcat::identities
