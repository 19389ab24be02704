#include "starcat/milnor.hpp"

#include <algorithm>
#include <stdexcept>

#include "starcat/combinatorics.hpp"
#include "starcat/linalg.hpp"

namespace starcat {

namespace {

void add_term(SparsePolynomial& p, const ExponentVector& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = p.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

// all exponent vectors in v variables of total degree d, lexicographic
void gen_monomials(int v, int d, ExponentVector& cur, std::vector<ExponentVector>& out) {
    if (static_cast<int>(cur.size()) == v - 1) {
        cur.push_back(d);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur.push_back(e);
        gen_monomials(v, d - e, cur, out);
        cur.pop_back();
    }
}

std::vector<ExponentVector> monomials(int v, int d) {
    std::vector<ExponentVector> out;
    ExponentVector cur;
    gen_monomials(v, d, cur, out);
    return out;
}

// degree-(n-1) slice of the Jacobian ideal as integer rows over the given
// column index map
std::vector<std::vector<BigInt>> ideal_slice_rows(const ThreeJet& jet, int d,
                                                  const std::map<ExponentVector, int>& col_of) {
    const int v = jet.n - 1;
    std::vector<std::vector<BigInt>> rows;
    if (d < 2) return rows;
    const auto qs = monomials(v, d - 2);
    for (int i = 0; i < v; ++i) {
        for (const auto& q : qs) {
            std::vector<BigInt> row(col_of.size(), BigInt(0));
            for (const auto& [e, c] : jet.partials[static_cast<size_t>(i)]) {
                ExponentVector prod(e);
                for (int t = 0; t < v; ++t) prod[static_cast<size_t>(t)] += q[static_cast<size_t>(t)];
                if (!is_integer(c)) throw std::logic_error("ideal slice: non-integer coefficient");
                row[static_cast<size_t>(col_of.at(prod))] += c.get_num();
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace

SparsePolynomial differentiate(const SparsePolynomial& poly, int var) {
    SparsePolynomial out;
    for (const auto& [e, c] : poly) {
        const int k = e[static_cast<size_t>(var)];
        if (k == 0) continue;
        ExponentVector d(e);
        d[static_cast<size_t>(var)] -= 1;
        add_term(out, d, c * Rational(k));
    }
    return out;
}

SparsePolynomial multiply(const SparsePolynomial& a, const SparsePolynomial& b) {
    SparsePolynomial out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            ExponentVector e(ea);
            for (size_t t = 0; t < e.size(); ++t) e[t] += eb[t];
            add_term(out, e, ca * cb);
        }
    return out;
}

ThreeJet three_jet(int n) {
    if (n < 3) throw std::invalid_argument("three_jet: n must be >= 3");
    const int v = n - 1;
    ThreeJet jet;
    jet.n = n;
    jet.relation_coefficient = Rational(-2, n - 2);
    jet.relation_coefficient.canonicalize();

    // (1/3)(sum x_i^3 - (sum x_i)^3); the x_i^3 terms cancel
    for (const auto& e : monomials(v, 3)) {
        long mult = 6;  // 3! / prod e_i!
        for (int t : e) mult /= factorial(t).get_si();
        if (mult == 6) {
            add_term(jet.cubic, e, Rational(-2));
        } else if (mult == 3) {
            add_term(jet.cubic, e, Rational(-1));
        }
        // mult == 1 is x_i^3: coefficient (1/3)(1 - 1) = 0
    }
    jet.partials.reserve(static_cast<size_t>(v));
    for (int i = 0; i < v; ++i) jet.partials.push_back(differentiate(jet.cubic, i));
    return jet;
}

BigInt BasisDimensions::total() const {
    BigInt t = 0;
    for (const auto& d : per_degree) t += d;
    return t;
}

BasisDimensions basis_dimensions(int n) {
    BasisDimensions bd;
    bd.even_warning = (n % 2 == 0);
    for (int d = 0; d <= n - 1; ++d) bd.per_degree.push_back(binomial(n - 1, d));
    return bd;
}

WVector w_values(int m) {
    if (m < 1) throw std::invalid_argument("w_values: m must be >= 1");
    WVector w;
    w.m = m;
    const BigInt den = double_factorial(2 * m - 1);
    for (int k = 0; k <= m; ++k) {
        Rational r(double_factorial(2 * m - 2 * k) * double_factorial(2 * k - 1), den);
        r.canonicalize();
        if ((m - k) % 2 != 0) r = -r;
        w.values.push_back(r);
    }
    return w;
}

bool verify_three_term_relations(int m) {
    if (m < 1) throw std::invalid_argument("verify_three_term_relations: m must be >= 1");
    const int n = 2 * m + 1;
    const WVector w = w_values(m);
    for (int p = 0; p <= m - 1; ++p) {
        Rational acc = Rational(n - 2, 2) + Rational(2 * p * (n - 1 - 2 * p));
        acc *= w.values[static_cast<size_t>(p)];
        if (p >= 1) acc += Rational(binomial(2 * p, 2)) * w.values[static_cast<size_t>(p - 1)];
        acc += Rational(binomial(n - 1 - 2 * p, 2)) * w.values[static_cast<size_t>(p + 1)];
        if (acc != 0) return false;
    }
    return true;
}

int parity_class(const ExponentVector& e) {
    int odd = 0;
    for (int t : e) odd += t & 1;
    if (odd % 2 != 0) throw std::logic_error("parity_class: odd number of odd exponents");
    return odd / 2;
}

std::vector<Rational> reduce_top_degree_to_w(int n, const SparsePolynomial& poly) {
    const int m = (n - 1) / 2;
    std::vector<Rational> out(static_cast<size_t>(m + 1), Rational(0));
    for (const auto& [e, c] : poly) {
        int deg = 0;
        for (int t : e) deg += t;
        if (deg != n - 1) throw std::invalid_argument("reduce_top_degree_to_w: not top degree");
        out[static_cast<size_t>(parity_class(e))] += c;
    }
    return out;
}

TopRelationSpace derive_top_relations(int n) {
    if (n % 2 == 0 || n < 3) throw std::invalid_argument("derive_top_relations: n must be odd");
    if (n > 9) throw std::invalid_argument("derive_top_relations: n > 9 exceeds the resource guard");
    const int v = n - 1;
    const int m = (n - 1) / 2;
    const ThreeJet jet = three_jet(n);

    // rows over (w_0..w_m): parity-reduced expansions of partial_i * q
    std::vector<std::vector<Rational>> rows;
    for (int i = 0; i < v; ++i) {
        for (const auto& q : monomials(v, n - 3)) {
            std::vector<Rational> row(static_cast<size_t>(m + 1), Rational(0));
            for (const auto& [e, c] : jet.partials[static_cast<size_t>(i)]) {
                ExponentVector prod(e);
                for (int t = 0; t < v; ++t) prod[static_cast<size_t>(t)] += q[static_cast<size_t>(t)];
                row[static_cast<size_t>(parity_class(prod))] += c;
            }
            if (std::any_of(row.begin(), row.end(), [](const Rational& x) { return x != 0; }))
                rows.push_back(std::move(row));
        }
    }

    // exact Gaussian elimination to reduced row echelon form
    const int cols = m + 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(piv)]);
        const Rational d = rows[static_cast<size_t>(rank)][static_cast<size_t>(col)];
        for (int c = 0; c < cols; ++c) rows[static_cast<size_t>(rank)][static_cast<size_t>(c)] /= d;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank) continue;
            const Rational f = rows[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (int c = 0; c < cols; ++c)
                rows[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                    f * rows[static_cast<size_t>(rank)][static_cast<size_t>(c)];
        }
        ++rank;
    }
    rows.resize(static_cast<size_t>(rank));

    // null space from the echelon form
    TopRelationSpace space;
    space.m = m;
    std::vector<int> pivot_col(static_cast<size_t>(rank));
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int r = 0; r < rank; ++r) {
        int c = 0;
        while (rows[static_cast<size_t>(r)][static_cast<size_t>(c)] == 0) ++c;
        pivot_col[static_cast<size_t>(r)] = c;
        is_pivot[static_cast<size_t>(c)] = true;
    }
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<Rational> vbasis(static_cast<size_t>(cols), Rational(0));
        vbasis[static_cast<size_t>(free)] = 1;
        for (int r = 0; r < rank; ++r)
            vbasis[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] =
                -rows[static_cast<size_t>(r)][static_cast<size_t>(free)];
        space.null_basis.push_back(std::move(vbasis));
    }
    return space;
}

SparsePolynomial hessian_determinant_display(int n) {
    const int v = n - 1;
    SparsePolynomial h;
    ExponentVector ones(static_cast<size_t>(v), 1);
    add_term(h, ones, Rational(1));
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j) {
            ExponentVector e(ones);
            e[static_cast<size_t>(i)] += 1;
            e[static_cast<size_t>(j)] -= 1;
            add_term(h, e, Rational(-1));
        }
    return h;
}

Rational hessian_class_coefficient(int n) {
    if (n % 2 == 0 || n < 3) throw std::invalid_argument("hessian_class_coefficient: n must be odd");
    const int m = (n - 1) / 2;
    const std::vector<Rational> reduced = reduce_top_degree_to_w(n, hessian_determinant_display(n));
    const WVector w = w_values(m);
    Rational c = 0;
    for (int k = 0; k <= m; ++k)
        c += reduced[static_cast<size_t>(k)] * w.values[static_cast<size_t>(k)];
    return c;
}

long jacobian_slice_columns(int n, int d) {
    return binomial(n - 2 + d, d).get_si();
}

long jacobian_slice_rank(int n, int d) {
    if (d < 0 || d > n - 1) throw std::invalid_argument("jacobian_slice_rank: degree out of range");
    const ThreeJet jet = three_jet(n);
    const auto cols = monomials(n - 1, d);
    std::map<ExponentVector, int> col_of;
    for (size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = static_cast<int>(i);
    return rank_bareiss_int(ideal_slice_rows(jet, d, col_of));
}

bool verify_quotient_dimension(int n, int d) {
    if (n % 2 == 0 || n < 3) throw std::invalid_argument("verify_quotient_dimension: n must be odd");
    if (d < 0 || d > n - 1) throw std::invalid_argument("verify_quotient_dimension: degree out of range");
    const int v = n - 1;
    const int m = (n - 1) / 2;
    const ThreeJet jet = three_jet(n);
    const WVector w = w_values(m);

    // the top functional must kill the whole top slice; exact check
    {
        const auto qs = monomials(v, n - 3);
        for (int i = 0; i < v; ++i)
            for (const auto& q : qs) {
                Rational acc = 0;
                for (const auto& [e, c] : jet.partials[static_cast<size_t>(i)]) {
                    ExponentVector prod(e);
                    for (int t = 0; t < v; ++t)
                        prod[static_cast<size_t>(t)] += q[static_cast<size_t>(t)];
                    acc += c * w.values[static_cast<size_t>(parity_class(prod))];
                }
                if (acc != 0) return false;
            }
    }

    const auto cols = monomials(v, d);
    std::map<ExponentVector, int> col_of;
    for (size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = static_cast<int>(i);
    const auto rows = ideal_slice_rows(jet, d, col_of);
    const long quotient_dim = binomial(n - 1, d).get_si();
    const long expected_rank = static_cast<long>(cols.size()) - quotient_dim;

    // rank over F_p never exceeds the rank over Q
    long best = 0;
    for (int attempt = 0; attempt < 3 && best < expected_rank; ++attempt)
        best = std::max(best, rank_mod_p(rows, nth_modular_prime(attempt)));
    if (best != expected_rank) return false;
    if (d < 2) return true;  // empty slice: nothing more to certify

    // null functionals phi_u = w-functional of (x^u * .), u of degree n-1-d;
    // each kills the slice because x^u * row stays in the ideal. Their count
    // bounds the nullity from below, hence the rank from above.
    const BigInt scale = double_factorial(2 * m - 1);
    std::vector<std::vector<BigInt>> zrows;
    for (const auto& u : monomials(v, (n - 1) - d)) {
        std::vector<BigInt> zr(cols.size());
        for (size_t ci = 0; ci < cols.size(); ++ci) {
            ExponentVector e(cols[ci]);
            for (int t = 0; t < v; ++t) e[static_cast<size_t>(t)] += u[static_cast<size_t>(t)];
            const Rational val = w.values[static_cast<size_t>(parity_class(e))] * Rational(scale);
            if (!is_integer(val)) throw std::logic_error("functional scaling failed");
            zr[ci] = val.get_num();
        }
        zrows.push_back(std::move(zr));
    }
    long zrank = 0;
    for (int attempt = 0; attempt < 3 && zrank < quotient_dim; ++attempt)
        zrank = std::max(zrank, rank_mod_p(zrows, nth_modular_prime(attempt)));
    return zrank >= quotient_dim;
}

}  // namespace starcat
