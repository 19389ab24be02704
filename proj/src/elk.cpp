#include "starcat/elk.hpp"

#include <ostream>
#include <stdexcept>

#include "starcat/combinatorics.hpp"

namespace starcat {

namespace {

void check_odd(int n, const char* who) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument(std::string(who) + ": n must be odd, >= 3");
}

Rational b_value(int p, int m) {
    Rational r(double_factorial(2 * p) * double_factorial(2 * m - 2 * p - 1),
               double_factorial(2 * m - 1));
    r.canonicalize();
    return (p % 2 == 0) ? r : -r;
}

}  // namespace

Rational beta_entry(SquareFreeMonomial sigma, SquareFreeMonomial tau, int n) {
    check_odd(n, "beta_entry");
    const std::uint32_t allowed = (1u << (n - 1)) - 1u;
    if ((sigma.support & ~allowed) || (tau.support & ~allowed))
        throw std::invalid_argument("beta_entry: support outside {1..n-1}");
    if (sigma.degree() + tau.degree() != n - 1) return 0;
    const int m = (n - 1) / 2;
    const int p = __builtin_popcount(sigma.support & tau.support);
    return b_value(p, m);
}

std::vector<std::uint32_t> squarefree_basis(int n) {
    const int v = n - 1;
    std::vector<std::uint32_t> basis;
    basis.reserve(1u << v);
    for (int d = 0; d <= v; ++d) {
        const auto level = lex_subset_masks(v, d);
        basis.insert(basis.end(), level.begin(), level.end());
    }
    return basis;
}

SymmetricRationalMatrix build_B(int n) {
    check_odd(n, "build_B");
    if (n > 11) throw std::invalid_argument("build_B: n > 11 exceeds the resource guard");
    const auto basis = squarefree_basis(n);
    const int dim = static_cast<int>(basis.size());
    const int m = (n - 1) / 2;
    SymmetricRationalMatrix B(dim);
    for (int i = 0; i < dim; ++i) {
        const int deg_i = __builtin_popcount(basis[static_cast<size_t>(i)]);
        for (int j = i; j < dim; ++j) {
            const int deg_j = __builtin_popcount(basis[static_cast<size_t>(j)]);
            if (deg_i + deg_j != n - 1) continue;
            const int p = __builtin_popcount(basis[static_cast<size_t>(i)] & basis[static_cast<size_t>(j)]);
            B.set_sym(i, j, b_value(p, m));
        }
    }
    return B;
}

SymmetricRationalMatrix middle_block(int n) {
    check_odd(n, "middle_block");
    const int m = (n - 1) / 2;
    const auto basis = squarefree_basis(n);
    std::vector<std::uint32_t> mid;
    for (std::uint32_t mask : basis)
        if (__builtin_popcount(mask) == m) mid.push_back(mask);
    SymmetricRationalMatrix B(static_cast<int>(mid.size()));
    for (size_t i = 0; i < mid.size(); ++i)
        for (size_t j = i; j < mid.size(); ++j) {
            const int p = __builtin_popcount(mid[i] & mid[j]);
            B.set_sym(static_cast<int>(i), static_cast<int>(j), b_value(p, m));
        }
    return B;
}

BigInt elk_index(int n) {
    const SignatureResult sig = exact_signature(build_B(n));
    if (sig.zeros != 0) throw std::logic_error("elk_index: bilinear form is degenerate");
    return BigInt(sig.signature());
}

bool block_signature_check(int n) {
    const SignatureResult full = exact_signature(build_B(n));
    const SignatureResult mid = exact_signature(middle_block(n));
    return full.signature() == mid.signature();
}

void dump_matrix(const SymmetricRationalMatrix& m, std::ostream& os) {
    for (int i = 0; i < m.dim; ++i) {
        for (int j = 0; j < m.dim; ++j) {
            if (j) os << ' ';
            os << fraction_string(m.at(i, j));
        }
        os << '\n';
    }
}

}  // namespace starcat
