#include "starcat/morse.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "starcat/combinatorics.hpp"

namespace starcat {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

// The Hessian at a realized star is -p (J + D) with J the all-ones matrix,
// D = diag(eps_i eps_n) and p = sin(alpha_n). With ft = #{i < n : eps_i =
// eps_n} and bt = n-1-ft its spectrum is
//   bt = 0:            -np (x1), -p (x n-2)
//   ft = 0:            -(n-2)p (x1), +p (x n-2)
//   otherwise          +p (x bt-1), -p (x ft-1) and the two roots of
//                      lambda^2 + (n-1) p lambda + (bt - ft - 1) p^2.
// For eps_n = +1 this is the factorization
//   (lambda^2 + (b+f-1) p lambda + (b-f) p^2)(lambda - p)^{b-1}(lambda + p)^{f-2}.
SpectrumReport closed_form_spectrum(const CriticalSpec& spec) {
    if (spec.cls != CriticalClass::RegularStar && spec.cls != CriticalClass::ZigzagStar)
        throw std::invalid_argument("closed_form_spectrum: degenerate class");
    const int n = spec.n;
    const int eps_n = spec.pattern.signs.back();
    const double p = eps_n * std::sin(spec.theta);

    int ft = 0;
    for (int i = 0; i < n - 1; ++i)
        if (spec.pattern.signs[static_cast<size_t>(i)] == eps_n) ++ft;
    const int bt = n - 1 - ft;

    SpectrumReport rep;
    rep.p = p;
    rep.degenerate = false;

    std::vector<double> eig;
    if (bt == 0) {
        eig.push_back(-n * p);
        eig.insert(eig.end(), static_cast<size_t>(n - 2), -p);
    } else if (ft == 0) {
        eig.push_back(-(n - 2) * p);
        eig.insert(eig.end(), static_cast<size_t>(n - 2), p);
    } else {
        const double disc = std::sqrt(static_cast<double>((n - 1) * (n - 1) - 4 * (bt - ft - 1)));
        eig.push_back(p * (-(n - 1) + disc) / 2.0);
        eig.push_back(p * (-(n - 1) - disc) / 2.0);
        eig.insert(eig.end(), static_cast<size_t>(bt - 1), p);
        eig.insert(eig.end(), static_cast<size_t>(ft - 1), -p);
    }
    std::sort(eig.begin(), eig.end());

    rep.morse_index = 0;
    for (double v : eig)
        if (v < 0.0) ++rep.morse_index;

    for (double v : eig) {
        if (!rep.eigenvalues.empty() && std::fabs(rep.eigenvalues.back().value - v) < 1e-12)
            ++rep.eigenvalues.back().multiplicity;
        else
            rep.eigenvalues.push_back({v, 1});
    }
    return rep;
}

std::vector<double> numeric_spectrum(const Configuration& cfg) {
    const HessianMatrix h = hessian(cfg);
    Eigen::MatrixXd m(h.dim, h.dim);
    for (int i = 0; i < h.dim; ++i)
        for (int j = 0; j < h.dim; ++j) m(i, j) = h.at(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    std::vector<double> eig(solver.eigenvalues().data(), solver.eigenvalues().data() + h.dim);
    std::sort(eig.begin(), eig.end());
    return eig;
}

int morse_index(const CriticalSpec& spec) {
    if (spec.cls != CriticalClass::RegularStar && spec.cls != CriticalClass::ZigzagStar)
        throw std::invalid_argument("morse_index: only regular and zigzag stars are Morse");
    return spec.f > spec.b ? spec.f - 1 : spec.f;
}

BigInt degenerate_index(int n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("degenerate_index: n must be odd, >= 3");
    const int m = (n - 1) / 2;
    BigInt v = 2 * binomial(n - 2, m - 1);
    return (m % 2 == 0) ? v : -v;
}

BigInt degenerate_index_alternating(int n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("degenerate_index_alternating: n must be odd, >= 3");
    const int m = (n - 1) / 2;
    BigInt acc = 0;
    for (int b = 0; b <= m - 1; ++b) {
        BigInt t = binomial(n, b) * BigInt(m - b);
        acc += (b % 2 == 0) ? t : -t;
    }
    return -2 * acc;
}

IndexLedger poincare_hopf_ledger(int n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("poincare_hopf_ledger: n must be odd (isolated zeros)");
    const int m = (n - 1) / 2;
    IndexLedger ledger;
    ledger.total = 0;

    const auto add_row = [&](int b_edges, int index, const std::string& side) {
        LedgerRow row;
        row.count = count_by_b(n, b_edges);
        row.morse_index = index;
        row.contribution = (index % 2 == 0) ? row.count : -row.count;
        row.description = side + " stars with b=" + std::to_string(b_edges) + ", index " +
                          std::to_string(index);
        ledger.total += row.contribution;
        ledger.rows.push_back(std::move(row));
    };

    for (int b = 0; b <= m - 1; ++b) add_row(b, n - b - 1, "f>b");
    ledger.degenerate_contribution = degenerate_index(n);
    ledger.total += ledger.degenerate_contribution;
    for (int b = m + 2; b <= n; ++b) add_row(b, n - b, "f<b");
    return ledger;
}

}  // namespace starcat
