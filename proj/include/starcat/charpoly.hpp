#pragma once

#include <vector>

#include "starcat/linalg.hpp"
#include "starcat/rational.hpp"

namespace starcat {

// Characteristic polynomial of an integer matrix, coefficients in
// descending powers: c[0] = 1 for lambda^n, ..., c[n] = det(-M)...
// i.e. det(lambda I - M) = sum c[i] lambda^{n-i}.

// Berkowitz: division-free, exact. Fine up to dimension ~30.
std::vector<BigInt> char_poly_berkowitz(const std::vector<std::vector<BigInt>>& m);

// Hessenberg reduction modulo 62-bit primes, recombined by CRT with a
// per-coefficient Hadamard-style bound, so the result is exact.
std::vector<BigInt> char_poly_modular(const std::vector<std::vector<BigInt>>& m);

// Exact char poly of a rational symmetric matrix. Clears denominators with
// the global lcm D, computes the integer char poly (Berkowitz for small
// dimensions, modular otherwise) and rescales:
//   det(lambda I - M) = D^-n det((D lambda) I - D M).
std::vector<Rational> char_poly_exact(const SymmetricRationalMatrix& m);

// Utility: expand prod_k (lambda - root_k)^{mult_k} exactly, descending powers.
std::vector<Rational> expand_from_roots(const std::vector<std::pair<Rational, long>>& roots);

}  // namespace starcat
