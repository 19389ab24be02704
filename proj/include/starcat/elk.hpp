#pragma once

#include <iosfwd>
#include <vector>

#include "starcat/linalg.hpp"
#include "starcat/milnor.hpp"
#include "starcat/rational.hpp"

namespace starcat {

// l(sigma * tau): zero unless the degrees sum to n-1, in which case the
// product's parity class gives w_{m-p} with p = |intersection|, whose
// l-value is b_p = (-1)^p (2p)!! (2m-2p-1)!! / (2m-1)!!.
Rational beta_entry(SquareFreeMonomial sigma, SquareFreeMonomial tau, int n);

// Bilinear form of the 3-jet on the 2^{n-1} square-free basis, ordered by
// degree then lexicographically. Guarded for n > 11.
SymmetricRationalMatrix build_B(int n);

// The degree-m x degree-m block alone.
SymmetricRationalMatrix middle_block(int n);

// Square-free basis masks in the build_B order.
std::vector<std::uint32_t> squarefree_basis(int n);

// Signature of build_B(n); by the signature formula this equals the gradient
// index of the degenerate star.
BigInt elk_index(int n);

bool block_signature_check(int n);

// One row per line, entries as "num/den".
void dump_matrix(const SymmetricRationalMatrix& m, std::ostream& os);

}  // namespace starcat
