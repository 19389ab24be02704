#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "starcat/rational.hpp"

namespace starcat {

// Monomial without repeated factors in the variables {1..n-1}, as a bitmask.
struct SquareFreeMonomial {
    std::uint32_t support = 0;

    int degree() const { return __builtin_popcount(support); }
    bool operator==(const SquareFreeMonomial&) const = default;
};

// Rational linear combination of square-free monomials.
struct AlgebraElement {
    std::map<std::uint32_t, Rational> terms;  // support mask -> coefficient

    void add(std::uint32_t mask, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms.emplace(mask, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
};

// Sparse polynomial over exponent vectors; only used for the cubic germ and
// the elimination oracles.
using ExponentVector = std::vector<int>;
using SparsePolynomial = std::map<ExponentVector, Rational>;

struct ThreeJet {
    int n = 0;                                 // vertex count; n-1 variables
    SparsePolynomial cubic;                    // (1/3)(sum x_i^3 - (sum x_i)^3)
    std::vector<SparsePolynomial> partials;    // x_i^2 - (sum x_j)^2
    Rational relation_coefficient;             // -2/(n-2) in x_i^2 = c * sum_{i<j} x_i x_j
};

ThreeJet three_jet(int n);

struct BasisDimensions {
    std::vector<BigInt> per_degree;  // C(n-1, d) for d = 0..n-1
    bool even_warning = false;       // even n: the complexified singularity is not isolated
    BigInt total() const;
};

BasisDimensions basis_dimensions(int n);

// Top-degree classes w_0..w_m of the Milnor algebra, normalized to w_m = 1:
// w_k = (-1)^{m-k} (2m-2k)!! (2k-1)!! / (2m-1)!!.
struct WVector {
    int m = 0;
    std::vector<Rational> values;  // w_0..w_m
};

WVector w_values(int m);

// Substitutes w_values into the degree-(n-1) three-term relations
//   C(2p,2) w_{p-1} + {(n-2)/2 + 2p(n-1-2p)} w_p + C(n-1-2p,2) w_{p+1} = 0
// for p = 0..m-1 and checks them exactly.
bool verify_three_term_relations(int m);

// Independent derivation of the top-degree relation space: spans the
// degree-(n-1) slice of the Jacobian ideal by {partial_i * q}, reduces each
// monomial to its parity class, eliminates exactly, and returns the
// null space over (w_0..w_m). Expected: 1-dimensional, proportional to
// w_values. Guarded for n > 9.
struct TopRelationSpace {
    int m = 0;
    std::vector<std::vector<Rational>> null_basis;  // each of length m+1
};

TopRelationSpace derive_top_relations(int n);

// Coefficient c in [h_f] = c * w_m; evaluates the class of the Hessian
// determinant of the cubic by the term count argument. Must come out as n.
Rational hessian_class_coefficient(int n);

// Hessian determinant of the cubic germ (normalized by 2^{n-1}) expanded as
// a polynomial; the n=3 cross-check reduces this symbolically.
SparsePolynomial hessian_determinant_display(int n);

// Reduce a homogeneous degree-(n-1) polynomial to w-classes by exponent
// parity; returns coefficients of (w_0..w_m).
std::vector<Rational> reduce_top_degree_to_w(int n, const SparsePolynomial& poly);

// Parity class index of a top-degree exponent vector: (#odd entries)/2.
int parity_class(const ExponentVector& e);

SparsePolynomial differentiate(const SparsePolynomial& poly, int var);
SparsePolynomial multiply(const SparsePolynomial& a, const SparsePolynomial& b);

// Certified check that dim (O/J)_d = C(n-1, d): rank of the ideal slice over
// F_p (a lower rank bound) plus exact null functionals obtained by
// multiplying into top degree (an upper rank bound). Exact, no heuristics.
bool verify_quotient_dimension(int n, int d);

// Plain fraction-free rank of the degree-d ideal slice; small cases only.
long jacobian_slice_rank(int n, int d);
long jacobian_slice_columns(int n, int d);

}  // namespace starcat
