#include "starcat/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "starcat/combinatorics.hpp"

namespace starcat {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

int half_floor(int n) { return (n - 1) / 2; }

// all k-subsets of {0..n-1} in lexicographic order
template <typename F>
void for_each_subset(int n, int k, F&& fn) {
    std::vector<int> idx(static_cast<size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

SignPattern pattern_from_backward(int n, const std::vector<int>& backward) {
    SignPattern p;
    p.signs.assign(static_cast<size_t>(n), 1);
    for (int i : backward) p.signs[static_cast<size_t>(i)] = -1;
    return p;
}

SignPattern all_forward(int n) {
    SignPattern p;
    p.signs.assign(static_cast<size_t>(n), 1);
    return p;
}

CriticalSpec star_spec(int n, const SignPattern& pat, int omega) {
    CriticalSpec s;
    s.n = n;
    s.pattern = pat;
    s.f = pat.forward();
    s.b = pat.backward();
    s.m = half_floor(n);
    s.omega = omega;
    const int d = std::abs(s.f - s.b);
    s.theta = 2.0 * kPi * std::abs(omega) / d;
    s.cls = (s.b == 0 || s.f == 0) ? CriticalClass::RegularStar : CriticalClass::ZigzagStar;
    return s;
}

int star_morse_index(const CriticalSpec& s) { return s.f > s.b ? s.f - 1 : s.f; }

}  // namespace

std::string to_string(CriticalClass c) {
    switch (c) {
        case CriticalClass::RegularStar: return "regular_star";
        case CriticalClass::ZigzagStar: return "zigzag_star";
        case CriticalClass::ZigzagTrain: return "zigzag_train";
        case CriticalClass::DegenerateStar: return "degenerate_star";
        case CriticalClass::CompleteFold: return "complete_fold";
    }
    return "?";
}

int SignPattern::forward() const {
    return static_cast<int>(std::count(signs.begin(), signs.end(), 1));
}

int SignPattern::backward() const {
    return static_cast<int>(std::count(signs.begin(), signs.end(), -1));
}

std::string SignPattern::to_string() const {
    std::string s;
    s.reserve(signs.size());
    for (int v : signs) s.push_back(v > 0 ? '+' : '-');
    return s;
}

std::vector<CriticalSpec> enumerate_isolated(int n) {
    if (n < 3) throw std::invalid_argument("enumerate_isolated: n must be >= 3");
    const int m = half_floor(n);
    std::vector<CriticalSpec> out;

    for (int b = 0; b <= m - 1; ++b) {
        for_each_subset(n, b, [&](const std::vector<int>& backward) {
            const SignPattern pat = pattern_from_backward(n, backward);
            for (int omega = 1; omega <= m - b; ++omega) out.push_back(star_spec(n, pat, omega));
        });
    }
    if (n % 2 == 1) {
        CriticalSpec s;
        s.n = n;
        s.cls = CriticalClass::DegenerateStar;
        s.pattern = all_forward(n);
        s.omega = 0;
        s.theta = 0.0;
        s.f = n;
        s.b = 0;
        s.m = m;
        out.push_back(s);
    }
    for (int b = n - m + 1; b <= n; ++b) {
        const int f = n - b;  // f < b, winding negative
        for_each_subset(n, b, [&](const std::vector<int>& backward) {
            const SignPattern pat = pattern_from_backward(n, backward);
            for (int omega = 1; omega <= m - f; ++omega) out.push_back(star_spec(n, pat, -omega));
        });
    }
    return out;
}

BigInt count_by_b(int n, int b) {
    if (b < 0 || b > n) throw std::invalid_argument("count_by_b: b out of range");
    const int f = n - b;
    if (f == b) throw std::invalid_argument("count_by_b: f == b is the non-isolated regime");
    const int m = half_floor(n);
    if (f > b) return binomial(n, b) * BigInt(m - b);
    return binomial(n, f) * BigInt(m - f);
}

double critical_value(const CriticalSpec& spec) {
    switch (spec.cls) {
        case CriticalClass::RegularStar:
        case CriticalClass::ZigzagStar: {
            const int d = spec.n - 2 * spec.b;
            return d * std::sin(2.0 * kPi * spec.omega / d);
        }
        default: return 0.0;
    }
}

std::vector<SignPattern> enumerate_train_branches(int n) {
    if (n % 2 != 0 || n < 4)
        throw std::invalid_argument("enumerate_train_branches: n must be even and >= 4");
    std::vector<SignPattern> out;
    for_each_subset(n, n / 2, [&](const std::vector<int>& backward) {
        out.push_back(pattern_from_backward(n, backward));
    });
    return out;
}

Configuration realize(const CriticalSpec& spec, std::optional<double> theta_override) {
    double theta = 0.0;
    switch (spec.cls) {
        case CriticalClass::DegenerateStar: theta = 0.0; break;
        case CriticalClass::CompleteFold: theta = kPi; break;
        case CriticalClass::ZigzagTrain: {
            theta = theta_override.value_or(spec.theta);
            if (!(theta > 0.0 && theta < kPi))
                throw std::invalid_argument("realize: train needs theta in (0, pi)");
            break;
        }
        default: {
            const int d = std::abs(spec.f - spec.b);
            if (d == 0 || spec.omega == 0)
                throw std::invalid_argument("realize: star spec with f == b or omega == 0");
            theta = 2.0 * kPi * std::abs(spec.omega) / d;
            if (theta_override && std::fabs(*theta_override - theta) > 1e-9)
                throw std::invalid_argument("realize: theta does not match omega and |f-b|");
            if (std::fabs(spec.theta - theta) > 1e-9)
                throw std::invalid_argument("realize: inconsistent spec theta");
            if ((spec.f > spec.b) != (spec.omega > 0))
                throw std::invalid_argument("realize: omega sign does not match orientation");
        }
    }
    if (spec.pattern.n() != spec.n) throw std::invalid_argument("realize: pattern length != n");
    std::vector<double> alphas;
    alphas.reserve(static_cast<size_t>(spec.n - 1));
    for (int i = 0; i < spec.n - 1; ++i) alphas.push_back(spec.pattern.signs[static_cast<size_t>(i)] * theta);
    Configuration cfg(spec.n, alphas);
    const double want = normalize_angle(spec.pattern.signs.back() * theta).value;
    if (std::fabs(normalize_angle(cfg.closing_angle() - want).value) > 1e-9)
        throw std::invalid_argument("realize: closing angle inconsistent with pattern");
    return cfg;
}

std::optional<CriticalSpec> classify(const Configuration& cfg, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("classify: tol must be positive");
    const int n = cfg.n();
    std::vector<double> all(cfg.alphas());
    all.push_back(cfg.closing_angle());

    const double cn = std::cos(all.back());
    for (int i = 0; i + 1 < n; ++i)
        if (std::fabs(std::cos(all[static_cast<size_t>(i)]) - cn) > tol) return std::nullopt;

    double theta = 0.0;
    for (double a : all) theta += std::fabs(a);
    theta /= n;

    SignPattern pat;
    pat.signs.reserve(static_cast<size_t>(n));
    for (double a : all) pat.signs.push_back(a >= 0.0 ? 1 : -1);
    const int f = pat.forward(), b = pat.backward();
    const int m = half_floor(n);

    CriticalSpec s;
    s.n = n;
    s.m = m;
    if (f == b) {
        s.cls = CriticalClass::ZigzagTrain;
        s.pattern = pat;
        s.f = f;
        s.b = b;
        s.omega = 0;
        s.theta = theta;
        return s;
    }
    const int d = std::abs(f - b);
    const int omega_abs = static_cast<int>(std::lround(theta * d / (2.0 * kPi)));
    if (omega_abs == 0) {
        s.cls = CriticalClass::DegenerateStar;
        s.pattern = all_forward(n);
        s.f = n;
        s.b = 0;
        s.omega = 0;
        s.theta = 0.0;
        return s;
    }
    if (2 * omega_abs == d) {
        s.cls = CriticalClass::CompleteFold;
        s.pattern = all_forward(n);
        s.f = n;
        s.b = 0;
        s.omega = n / 2;
        s.theta = kPi;
        return s;
    }
    return star_spec(n, pat, f > b ? omega_abs : -omega_abs);
}

std::vector<CatalogEntry> build_catalog(int n) {
    std::vector<CatalogEntry> out;
    for (const CriticalSpec& s : enumerate_isolated(n)) {
        CatalogEntry e;
        e.spec = s;
        e.critical_value = critical_value(s);
        if (s.cls == CriticalClass::RegularStar || s.cls == CriticalClass::ZigzagStar) {
            e.morse_index = star_morse_index(s);
            const int bb = std::min(s.b, s.f);
            e.multiplicity_note = "one of " + count_by_b(n, s.b).get_str() + " stars with b=" +
                                  std::to_string(s.b) + " (C(n," + std::to_string(bb) + ")*(m-" +
                                  std::to_string(bb) + "))";
        } else {
            e.multiplicity_note = "isolated degenerate critical point";
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace starcat
