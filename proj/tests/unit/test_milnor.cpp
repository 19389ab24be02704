#include <doctest.h>

#include "starcat/combinatorics.hpp"
#include "starcat/milnor.hpp"

using namespace starcat;

namespace {

SparsePolynomial poly(std::initializer_list<std::pair<ExponentVector, Rational>> terms) {
    SparsePolynomial p;
    for (const auto& [e, c] : terms) p[e] = c;
    return p;
}

}  // namespace

TEST_CASE("cubic germ at n=3") {
    const ThreeJet jet = three_jet(3);
    CHECK(jet.cubic == poly({{{2, 1}, Rational(-1)}, {{1, 2}, Rational(-1)}}));
    // df/dx1 = -2 x1 x2 - x2^2
    CHECK(jet.partials[0] == poly({{{1, 1}, Rational(-2)}, {{0, 2}, Rational(-1)}}));
    CHECK(jet.relation_coefficient == Rational(-2));
    CHECK(three_jet(5).relation_coefficient == Rational(-2, 3));
    CHECK_THROWS_AS(three_jet(2), std::invalid_argument);
}

TEST_CASE("partial derivatives equal x_i^2 - (sum x)^2") {
    const int n = 5;
    const ThreeJet jet = three_jet(n);
    const int v = n - 1;
    for (int i = 0; i < v; ++i) {
        SparsePolynomial expect;
        ExponentVector sq(static_cast<size_t>(v), 0);
        sq[static_cast<size_t>(i)] = 2;
        expect[sq] = 1;
        for (int a = 0; a < v; ++a)
            for (int b = 0; b < v; ++b) {
                ExponentVector e(static_cast<size_t>(v), 0);
                e[static_cast<size_t>(a)] += 1;
                e[static_cast<size_t>(b)] += 1;
                auto [it, fresh] = expect.emplace(e, Rational(-1));
                if (!fresh) it->second -= 1;
            }
        for (auto it = expect.begin(); it != expect.end();)
            it = (it->second == 0) ? expect.erase(it) : std::next(it);
        CHECK(jet.partials[static_cast<size_t>(i)] == expect);
    }
}

TEST_CASE("basis dimensions") {
    const BasisDimensions b7 = basis_dimensions(7);
    CHECK(b7.per_degree == std::vector<BigInt>{1, 6, 15, 20, 15, 6, 1});
    CHECK(b7.total() == 64);
    CHECK_FALSE(b7.even_warning);

    const BasisDimensions b3 = basis_dimensions(3);
    CHECK(b3.per_degree == std::vector<BigInt>{1, 2, 1});
    CHECK(b3.total() == 4);

    CHECK(basis_dimensions(6).even_warning);
}

TEST_CASE("w values") {
    CHECK(w_values(1).values == std::vector<Rational>{Rational(-2), Rational(1)});
    CHECK(w_values(2).values == std::vector<Rational>{Rational(8, 3), Rational(-2, 3), Rational(1)});
    CHECK(w_values(3).values == std::vector<Rational>{Rational(-16, 5), Rational(8, 15),
                                                      Rational(-2, 5), Rational(1)});
    CHECK_THROWS_AS(w_values(0), std::invalid_argument);
}

TEST_CASE("w recurrence and closed form agree") {
    for (int m = 1; m <= 20; ++m) {
        const WVector w = w_values(m);
        CHECK(w.values.back() == 1);
        for (int p = 1; p <= m; ++p) {
            const Rational lhs = w.values[static_cast<size_t>(p - 1)];
            Rational factor(-(2 * m + 2 - 2 * p), 2 * p - 1);
            factor.canonicalize();
            CHECK(lhs == factor * w.values[static_cast<size_t>(p)]);
        }
    }
}

TEST_CASE("three-term relations") {
    for (int m = 1; m <= 8; ++m) CHECK(verify_three_term_relations(m));
    // the m=2, p=1 relation by hand: C(2,2) 8/3 + (3/2 + 4)(-2/3) + C(2,2) 1 = 0
    const Rational check = Rational(8, 3) + Rational(11, 2) * Rational(-2, 3) + Rational(1);
    CHECK(check == 0);
}

TEST_CASE("derived top-degree relation space is the w line") {
    for (int n : {3, 5, 7}) {
        const TopRelationSpace space = derive_top_relations(n);
        const int m = (n - 1) / 2;
        REQUIRE(space.null_basis.size() == 1);
        const auto& vec = space.null_basis[0];
        const WVector w = w_values(m);
        const Rational scale = vec.back();
        REQUIRE(scale != 0);
        for (int k = 0; k <= m; ++k)
            CHECK(vec[static_cast<size_t>(k)] / scale == w.values[static_cast<size_t>(k)]);
    }
    CHECK_THROWS_AS(derive_top_relations(11), std::invalid_argument);
}

TEST_CASE("hessian class coefficient is n") {
    for (int n : {3, 5, 7, 9}) CHECK(hessian_class_coefficient(n) == n);
}

TEST_CASE("ELK admissibility: l(h_f) > 0 with l(w_m) = 1") {
    for (int n : {3, 5, 7, 9}) CHECK(hessian_class_coefficient(n) > 0);
}

TEST_CASE("n=3 hessian determinant reduced symbolically") {
    const ThreeJet jet = three_jet(3);
    const SparsePolynomial f11 = differentiate(jet.partials[0], 0);
    const SparsePolynomial f12 = differentiate(jet.partials[0], 1);
    const SparsePolynomial f22 = differentiate(jet.partials[1], 1);
    SparsePolynomial det;
    for (const auto& [e, c] : multiply(f11, f22)) det[e] = c;
    for (const auto& [e, c] : multiply(f12, f12)) {
        auto [it, fresh] = det.emplace(e, -c);
        if (!fresh) it->second -= c;
    }
    // determinant of the quadratic form carries the 2^{n-1} factor
    SparsePolynomial scaled;
    for (const auto& [e, c] : det)
        if (c != 0) scaled[e] = c / Rational(4);
    CHECK(scaled == hessian_determinant_display(3));

    // and reducing against the relation x_i^2 = -2 x1 x2 gives 3 w_1
    const auto reduced = reduce_top_degree_to_w(3, scaled);
    const WVector w = w_values(1);
    CHECK(reduced[0] * w.values[0] + reduced[1] * w.values[1] == 3);
}

TEST_CASE("parity reduction sends squarefree products to w_{m-p}") {
    const int n = 5, v = 4, m = 2;
    const auto masks_deg2 = lex_subset_masks(v, 2);
    for (std::uint32_t a : masks_deg2)
        for (std::uint32_t b : masks_deg2) {
            ExponentVector e(static_cast<size_t>(v), 0);
            for (int t = 0; t < v; ++t)
                e[static_cast<size_t>(t)] = ((a >> t) & 1u) + ((b >> t) & 1u);
            const int p = __builtin_popcount(a & b);
            CHECK(parity_class(e) == m - p);
        }
}

TEST_CASE("jacobian slice ranks give the quotient dimensions (small exact)") {
    for (int d = 0; d <= 4; ++d)
        CHECK(jacobian_slice_columns(5, d) - jacobian_slice_rank(5, d) ==
              binomial(4, d).get_si());
    CHECK(jacobian_slice_rank(5, 2) == 4);  // 10 monomials, quotient dimension 6
    for (int d = 0; d <= 4; ++d)
        CHECK(jacobian_slice_columns(7, d) - jacobian_slice_rank(7, d) ==
              binomial(6, d).get_si());
}

TEST_CASE("certified quotient dimensions") {
    for (int d = 0; d <= 4; ++d) CHECK(verify_quotient_dimension(5, d));
    for (int d = 0; d <= 6; ++d) CHECK(verify_quotient_dimension(7, d));
    CHECK_THROWS_AS(verify_quotient_dimension(6, 2), std::invalid_argument);
}
