#include "starcat/intersection.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "starcat/charpoly.hpp"
#include "starcat/combinatorics.hpp"

namespace starcat {

SymmetricRationalMatrix build_intersection_matrix(const IntersectionMatrixSpec& spec) {
    if (spec.m < 1) throw std::invalid_argument("build_intersection_matrix: m must be >= 1");
    if (spec.b.size() != static_cast<size_t>(spec.m + 1))
        throw std::invalid_argument("build_intersection_matrix: need b_0..b_m");
    const auto subsets = lex_subset_masks(2 * spec.m, spec.m);
    const int dim = static_cast<int>(subsets.size());
    SymmetricRationalMatrix out(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) {
            const int p = __builtin_popcount(subsets[static_cast<size_t>(i)] & subsets[static_cast<size_t>(j)]);
            out.set_sym(i, j, spec.b[static_cast<size_t>(p)]);
        }
    return out;
}

Rational lambda_formula(int m, int k, const std::vector<Rational>& b) {
    if (k < 0 || k > m) throw std::invalid_argument("lambda_formula: k out of range");
    if (b.size() != static_cast<size_t>(m + 1))
        throw std::invalid_argument("lambda_formula: need b_0..b_m");
    Rational acc = 0;
    for (int j = 0; j <= k; ++j)
        for (int p = 0; p <= m - k; ++p) {
            BigInt coef = binomial(k, j) * binomial(m - j, p) * binomial(j - k + m, m - k - p);
            if ((k - j) % 2 != 0) coef = -coef;
            acc += Rational(coef) * b[static_cast<size_t>(j + p)];
        }
    return acc;
}

BigInt mu(int m, int k) {
    if (k < 0 || k > m) throw std::invalid_argument("mu: k out of range");
    const BigInt num = factorial(2 * m) * BigInt(2 * m - 2 * k + 1);
    const BigInt den = factorial(k) * factorial(2 * m - k + 1);
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("mu: non-integer value, formula transcription bug");
    return q;
}

bool verify_spectrum(const IntersectionMatrixSpec& spec) {
    if (spec.m > 5) throw std::invalid_argument("verify_spectrum: m > 5 exceeds the resource guard");

    const SymmetricRationalMatrix M = build_intersection_matrix(spec);
    const BigInt dim(M.dim);

    std::vector<std::pair<Rational, long>> predicted;
    BigInt mu_total = 0;
    for (int k = 0; k <= spec.m; ++k) {
        const BigInt mk = mu(spec.m, k);
        mu_total += mk;
        predicted.emplace_back(lambda_formula(spec.m, k, spec.b), mk.get_si());
    }
    if (mu_total != dim) return false;

    if (char_poly_exact(M) != expand_from_roots(predicted)) return false;

    // rank checks: one good prime certifies rank >= dim - mult, and the char
    // poly of a symmetric matrix caps the nullity at the algebraic
    // multiplicity, so equality is exact. Coinciding predicted eigenvalues
    // pool their multiplicities.
    std::map<Rational, long> grouped;
    for (const auto& [value, mult] : predicted) grouped[value] += mult;
    for (const auto& [value, mult] : grouped) {
        const long expected = M.dim - mult;
        SymmetricRationalMatrix shifted = M;
        for (int i = 0; i < M.dim; ++i) shifted.at(i, i) -= value;
        // clear denominators into integer rows
        BigInt den = 1;
        for (const auto& e : shifted.entries) {
            BigInt l;
            mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), e.get_den().get_mpz_t());
            den = l;
        }
        std::vector<std::vector<BigInt>> rows(static_cast<size_t>(M.dim),
                                              std::vector<BigInt>(static_cast<size_t>(M.dim)));
        for (int i = 0; i < M.dim; ++i)
            for (int j = 0; j < M.dim; ++j) {
                const Rational& e = shifted.at(i, j);
                rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = e.get_num() * (den / e.get_den());
            }
        long best = 0;
        for (int attempt = 0; attempt < 3 && best < expected; ++attempt)
            best = std::max(best, rank_mod_p(rows, nth_modular_prime(attempt)));
        if (best != expected) return false;
    }
    return true;
}

std::vector<Rational> specialized_b(int m) {
    if (m < 1) throw std::invalid_argument("specialized_b: m must be >= 1");
    std::vector<Rational> b;
    const BigInt den = double_factorial(2 * m - 1);
    for (int p = 0; p <= m; ++p) {
        Rational r(double_factorial(2 * p) * double_factorial(2 * m - 2 * p - 1), den);
        r.canonicalize();
        b.push_back(p % 2 == 0 ? r : -r);
    }
    return b;
}

std::vector<Rational> proposition_three_eigs(int m) {
    if (m < 1) throw std::invalid_argument("proposition_three_eigs: m must be >= 1");
    std::vector<Rational> out;
    for (int k = 0; k <= m; ++k) {
        Rational r(2 * m + 1, 2 * m - 2 * k + 1);
        r.canonicalize();
        out.push_back(m % 2 == 0 ? r : -r);
    }
    return out;
}

}  // namespace starcat
