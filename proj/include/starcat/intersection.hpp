#pragma once

#include <vector>

#include "starcat/linalg.hpp"
#include "starcat/rational.hpp"

namespace starcat {

// Matrix on the m-subsets of a 2m-set whose entry at (sigma, tau) depends
// only on |sigma intersect tau|.
struct IntersectionMatrixSpec {
    int m = 0;
    std::vector<Rational> b;  // b_0..b_m
};

SymmetricRationalMatrix build_intersection_matrix(const IntersectionMatrixSpec& spec);

// lambda_k = sum_{j<=k} sum_{p<=m-k} (-1)^{k-j} C(k,j) C(m-j,p) C(j-k+m, m-k-p) b_{j+p}
// (ground-set size 2m).
Rational lambda_formula(int m, int k, const std::vector<Rational>& b);

// Eigenspace dimension (2m)! (2m-2k+1) / (k! (2m-k+1)!); throws if the
// division is not exact.
BigInt mu(int m, int k);

// Exact check: char poly of the matrix equals prod_k (lambda - lambda_k)^{mu_k},
// and rank(M - lambda_k I) = C(2m,m) - mu_k for each k. Guarded for m > 5.
bool verify_spectrum(const IntersectionMatrixSpec& spec);

// b_p = (-1)^p (2p)!! (2m-2p-1)!! / (2m-1)!!; equals w_{m-p}.
std::vector<Rational> specialized_b(int m);

// (-1)^m (2m+1)/(2m-2k+1) for k = 0..m.
std::vector<Rational> proposition_three_eigs(int m);

}  // namespace starcat
