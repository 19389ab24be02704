#pragma once

#include <cstdint>
#include <vector>

#include "starcat/rational.hpp"

namespace starcat {

struct SymmetricRationalMatrix {
    int dim = 0;
    std::vector<Rational> entries;  // row-major, full storage

    SymmetricRationalMatrix() = default;
    explicit SymmetricRationalMatrix(int d) : dim(d), entries(static_cast<size_t>(d) * d, Rational(0)) {}

    Rational& at(int i, int j) { return entries[static_cast<size_t>(i) * dim + j]; }
    const Rational& at(int i, int j) const { return entries[static_cast<size_t>(i) * dim + j]; }

    void set_sym(int i, int j, const Rational& v) {
        at(i, j) = v;
        at(j, i) = v;
    }
};

struct SignatureResult {
    int positives = 0;
    int negatives = 0;
    int zeros = 0;
    int signature() const { return positives - negatives; }
};

// Exact signature by symmetric congruence reduction: diagonal pivots when
// available, otherwise a 2x2 hyperbolic pivot contributing (+1, -1).
SignatureResult exact_signature(const SymmetricRationalMatrix& m);

// Rank of an exact matrix, fraction-free (Bareiss). Rows of rationals are
// scaled to integers first; row scaling leaves the rank unchanged.
long rank_bareiss(std::vector<std::vector<Rational>> rows);
long rank_bareiss_int(std::vector<std::vector<BigInt>> rows);

// Rank over F_p. Always a lower bound for the rank over Q.
long rank_mod_p(const std::vector<std::vector<BigInt>>& rows, std::uint64_t p);

// Deterministic stream of 62-bit primes (Miller-Rabin certified).
std::uint64_t nth_modular_prime(int index);

}  // namespace starcat
