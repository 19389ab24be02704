#pragma once

#include <string>
#include <vector>

#include "starcat/catalog.hpp"
#include "starcat/polygon.hpp"
#include "starcat/rational.hpp"

namespace starcat {

struct EigenvalueGroup {
    double value = 0.0;
    int multiplicity = 0;
};

struct SpectrumReport {
    std::vector<EigenvalueGroup> eigenvalues;  // multiplicities sum to n-1
    double p = 0.0;                            // sin(alpha_n)
    int morse_index = 0;
    bool degenerate = false;
};

// Closed-form Hessian spectrum at a regular or zigzag star, computed for
// the pattern exactly as realized (no cyclic reordering, so it matches the
// numeric spectrum of realize(spec) eigenvalue by eigenvalue).
SpectrumReport closed_form_spectrum(const CriticalSpec& spec);

// Eigenvalues of hessian(cfg), ascending. The independent oracle.
std::vector<double> numeric_spectrum(const Configuration& cfg);

// f-1 when f > b, f when f < b.
int morse_index(const CriticalSpec& spec);

// Gradient index of the degenerate star, 2 (-1)^m C(n-2, m-1), exact.
BigInt degenerate_index(int n);
// The same index as the Euler-characteristic alternating sum
// -2 sum_b (-1)^b C(n,b)(m-b); kept as an independent route.
BigInt degenerate_index_alternating(int n);

struct LedgerRow {
    std::string description;
    BigInt count;
    int morse_index = 0;
    BigInt contribution;  // (-1)^index * count
};

struct IndexLedger {
    std::vector<LedgerRow> rows;
    BigInt degenerate_contribution;
    BigInt total;  // must be 0, the Euler characteristic of the torus
};

IndexLedger poincare_hopf_ledger(int n);

}  // namespace starcat
