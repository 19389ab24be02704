#pragma once

#include <cstdint>
#include <vector>

#include "starcat/rational.hpp"

namespace starcat {

BigInt factorial(long n);

// C(n, k). Zero for k < 0, and for k > n when n >= 0. For negative n the
// generalized form n(n-1)...(n-k+1)/k! is used.
BigInt binomial(long n, long k);

// x!! with (-1)!! = 0!! = 1. Rejects x < -1.
BigInt double_factorial(long x);

// All k-subsets of {0..n-1} as bitmasks, in lexicographic order of the
// sorted element tuples: {0,1} < {0,2} < ... < {1,2} < ...
std::vector<std::uint32_t> lex_subset_masks(int n, int k);

}  // namespace starcat
