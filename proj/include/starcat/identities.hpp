#pragma once

#include "starcat/rational.hpp"

namespace starcat::identities {

// Summand of the specialized eigenvalue sums. Zero outside the support
// 0 <= p <= m-k, 0 <= j <= k.
Rational lambda_summand(int m, int k, int j, int p);

// Telescoping certificates in the j and p directions, and the certificate
// for the k = 0 diagonal sums. All are fixed integer-coefficient
// combinations of shifted lambda_summand values.
Rational antidiff_j(int m, int k, int j, int p);
Rational antidiff_p(int m, int k, int j, int p);
Rational diagonal_certificate(int m, int p);

// Four-term recurrence in (m,k) against the telescoped differences.
bool verify_key_identity(int m, int k, int j, int p);

// (2m-1)(2m+1)[S(m,p-2) + S(m+1,p-2)] = g(m,p+1) - g(m,p),
// with S(m,q) = lambda_summand(m,0,0,q).
bool verify_diagonal_recurrence(int m, int p);

// sum over the full support; closed form (-1)^m (2m+1)/(2(m-k)+1).
Rational lambda_sum(int m, int k);
Rational lambda_sum_closed_form(int m, int k);

}  // namespace starcat::identities
