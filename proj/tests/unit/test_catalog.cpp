#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "starcat/catalog.hpp"
#include "starcat/polygon.hpp"

using namespace starcat;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// brute-force oracle for n=3: scan the 2-torus on a grid and flood-fill
// the connected components of the sublevel set {|g| < tau}. Each component
// must surround exactly one zero: the gradient's Lipschitz constant keeps
// a small sublevel set close to the zero set, and the zeros of the theorem
// are isolated points here.
std::vector<std::pair<double, double>> grid_zero_components_n3() {
    const int grid = 600;
    const double tau = 0.05;
    std::vector<char> low(static_cast<size_t>(grid) * grid, 0);
    const auto angle = [&](int i) { return -kPi + 2.0 * kPi * (i + 0.5) / grid; };
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j) {
            const Configuration cfg(3, {angle(i), angle(j)});
            low[static_cast<size_t>(i) * grid + j] = gradient(cfg).sup_norm() < tau ? 1 : 0;
        }
    std::vector<std::pair<double, double>> centers;
    std::vector<char> seen(low.size(), 0);
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j) {
            const size_t at = static_cast<size_t>(i) * grid + j;
            if (!low[at] || seen[at]) continue;
            // BFS with torus wraparound; track the cell of smallest |g|
            std::vector<std::pair<int, int>> queue = {{i, j}};
            seen[at] = 1;
            double best = 1e300;
            std::pair<double, double> best_pt{0, 0};
            while (!queue.empty()) {
                const auto [a, b] = queue.back();
                queue.pop_back();
                const Configuration cfg(3, {angle(a), angle(b)});
                const double norm = gradient(cfg).sup_norm();
                if (norm < best) {
                    best = norm;
                    best_pt = {angle(a), angle(b)};
                }
                const int da[] = {1, -1, 0, 0, 1, 1, -1, -1}, db[] = {0, 0, 1, -1, 1, -1, 1, -1};
                for (int t = 0; t < 8; ++t) {
                    const int na = (a + da[t] + grid) % grid, nb = (b + db[t] + grid) % grid;
                    const size_t nat = static_cast<size_t>(na) * grid + nb;
                    if (low[nat] && !seen[nat]) {
                        seen[nat] = 1;
                        queue.emplace_back(na, nb);
                    }
                }
            }
            centers.push_back(best_pt);
        }
    return centers;
}

}  // namespace

TEST_CASE("enumeration counts") {
    CHECK(enumerate_isolated(7).size() == 77);  // 3+14+21+1+21+14+3
    CHECK(enumerate_isolated(3).size() == 3);
    CHECK(enumerate_isolated(4).size() == 2);
    CHECK(enumerate_isolated(6).size() == 16);
    CHECK_THROWS_AS(enumerate_isolated(2), std::invalid_argument);

    int n5_b1 = 0;
    for (const auto& s : enumerate_isolated(5))
        if (s.b == 1 && s.cls == CriticalClass::ZigzagStar) {
            ++n5_b1;
            CHECK(s.omega == 1);
        }
    CHECK(n5_b1 == 5);
}

TEST_CASE("the n=3 torus grid oracle agrees with the enumeration") {
    const auto components = grid_zero_components_n3();
    CHECK(components.size() == 3);  // regular stars w = +-1 and the degenerate star
    const auto specs = enumerate_isolated(3);
    REQUIRE(specs.size() == 3);
    // bijection between sublevel components and predicted zeros; the
    // degenerate star's quadratic basin is wide, hence the loose radius
    for (const auto& spec : specs) {
        const Configuration target = realize(spec);
        int near = 0;
        for (const auto& z : components) {
            const double du = std::fabs(normalize_angle(z.first - target.alpha(0)).value);
            const double dv = std::fabs(normalize_angle(z.second - target.alpha(1)).value);
            if (std::max(du, dv) < 0.25) ++near;
        }
        CHECK(near == 1);
    }
}

TEST_CASE("counting formula") {
    CHECK(count_by_b(7, 1) == 14);
    CHECK(count_by_b(7, 2) == 21);
    CHECK(count_by_b(7, 0) == 3);
    CHECK(count_by_b(7, 6) == 14);
    CHECK_THROWS_AS(count_by_b(6, 3), std::invalid_argument);

    for (int n = 3; n <= 12; ++n) {
        BigInt total = n % 2 == 1 ? 1 : 0;  // degenerate star
        for (int b = 0; b <= n; ++b) {
            if (2 * b == n) continue;
            total += count_by_b(n, b);
        }
        CHECK(total == BigInt(static_cast<long>(enumerate_isolated(n).size())));
    }
}

TEST_CASE("critical values") {
    const auto find_spec = [](int n, int b, int omega) {
        for (const auto& s : enumerate_isolated(n))
            if (s.b == b && s.omega == omega) return s;
        throw std::runtime_error("spec not found");
    };
    CHECK(critical_value(find_spec(7, 0, 1)) == doctest::Approx(5.472820).epsilon(1e-6));
    CHECK(critical_value(find_spec(7, 1, 2)) == doctest::Approx(2.938926).epsilon(1e-6));

    CriticalSpec train;
    train.n = 6;
    train.cls = CriticalClass::ZigzagTrain;
    train.pattern.signs = {1, -1, 1, -1, 1, -1};
    train.theta = 1.0;
    train.f = train.b = 3;
    train.m = 2;
    CHECK(critical_value(train) == 0.0);

    for (int n = 3; n <= 12; ++n)
        for (const auto& spec : enumerate_isolated(n))
            CHECK(std::fabs(critical_value(spec) - signed_area(realize(spec))) < 1e-12);
}

TEST_CASE("train branches") {
    CHECK(enumerate_train_branches(4).size() == 6);
    CHECK(enumerate_train_branches(6).size() == 20);
    CHECK_THROWS_AS(enumerate_train_branches(5), std::invalid_argument);

    // gradient vanishes identically along each branch
    for (int n : {4, 6}) {
        for (const auto& pattern : enumerate_train_branches(n)) {
            CriticalSpec spec;
            spec.n = n;
            spec.cls = CriticalClass::ZigzagTrain;
            spec.pattern = pattern;
            spec.f = spec.b = n / 2;
            spec.m = (n - 1) / 2;
            for (int s = 1; s <= 100; ++s) {
                const double theta = kPi * s / 101.0;
                CHECK(gradient(realize(spec, theta)).sup_norm() < 1e-12);
            }
        }
    }
}

TEST_CASE("realize spot values") {
    const auto specs5 = enumerate_isolated(5);
    const auto degenerate =
        std::find_if(specs5.begin(), specs5.end(),
                     [](const CriticalSpec& s) { return s.cls == CriticalClass::DegenerateStar; });
    REQUIRE(degenerate != specs5.end());
    const Configuration flat = realize(*degenerate);
    for (double a : flat.alphas()) CHECK(a == 0.0);

    for (const auto& s : enumerate_isolated(7))
        if (s.cls == CriticalClass::RegularStar && s.omega == 2) {
            const Configuration star = realize(s);
            for (double a : star.alphas())
                CHECK(a == doctest::Approx(4.0 * kPi / 7.0).epsilon(1e-15));
        }

    CriticalSpec zig;
    zig.n = 7;
    zig.cls = CriticalClass::ZigzagStar;
    zig.pattern.signs = {-1, -1, 1, 1, 1, 1, 1};
    zig.omega = 1;
    zig.f = 5;
    zig.b = 2;
    zig.m = 3;
    zig.theta = 2.0 * kPi / 3.0;
    const Configuration cfg = realize(zig);
    CHECK(cfg.alpha(0) == doctest::Approx(-2.0 * kPi / 3.0));
    CHECK(cfg.alpha(1) == doctest::Approx(-2.0 * kPi / 3.0));
    for (int i = 2; i < 6; ++i) CHECK(cfg.alpha(i) == doctest::Approx(2.0 * kPi / 3.0));
    CHECK(cfg.closing_angle() == doctest::Approx(2.0 * kPi / 3.0));
    CHECK(gradient(cfg).sup_norm() < 1e-12);
}

TEST_CASE("realize rejects inconsistent specs") {
    CriticalSpec bad;
    bad.n = 7;
    bad.cls = CriticalClass::ZigzagStar;
    bad.pattern.signs = {-1, -1, 1, 1, 1, 1, 1};
    bad.omega = 1;
    bad.f = 5;
    bad.b = 2;
    bad.m = 3;
    bad.theta = 1.0;  // should be 2 pi/3
    CHECK_THROWS_AS(realize(bad), std::invalid_argument);
    bad.theta = 2.0 * kPi / 3.0;
    CHECK_THROWS_AS(realize(bad, 1.0), std::invalid_argument);

    CriticalSpec train;
    train.n = 4;
    train.cls = CriticalClass::ZigzagTrain;
    train.pattern.signs = {1, -1, 1, -1};
    train.f = train.b = 2;
    train.m = 1;
    CHECK_THROWS_AS(realize(train), std::invalid_argument);  // no theta supplied
    CHECK(gradient(realize(train, kPi / 3.0)).sup_norm() < 1e-15);
}

TEST_CASE("classification") {
    const auto star = classify(Configuration(7, std::vector<double>(6, 2.0 * kPi / 7.0)), 1e-9);
    REQUIRE(star.has_value());
    CHECK(star->cls == CriticalClass::RegularStar);
    CHECK(star->omega == 1);

    CHECK_FALSE(classify(Configuration(4, {0.1, 0.2, 0.3}), 1e-9).has_value());

    std::vector<double> trainlike = {1.0, -1.0, 1.0, -1.0, 1.0};
    const auto train = classify(Configuration(6, trainlike), 1e-9);
    REQUIRE(train.has_value());
    CHECK(train->cls == CriticalClass::ZigzagTrain);
    CHECK(train->f == train->b);

    CHECK_THROWS_AS(classify(Configuration(4, {0.1, 0.2, 0.3}), 0.0), std::invalid_argument);
}

TEST_CASE("classify inverts realize") {
    for (int n = 3; n <= 9; ++n) {
        for (const auto& spec : enumerate_isolated(n)) {
            const auto back = classify(realize(spec), 1e-9);
            REQUIRE(back.has_value());
            CHECK(back->cls == spec.cls);
            CHECK(back->omega == spec.omega);
            if (spec.cls != CriticalClass::DegenerateStar) {
                CHECK(back->pattern.signs == spec.pattern.signs);
                CHECK(back->f == spec.f);
                CHECK(back->b == spec.b);
            }
        }
    }
}

TEST_CASE("every enumerated spec realizes to a gradient zero") {
    for (int n = 3; n <= 12; ++n)
        for (const auto& spec : enumerate_isolated(n))
            CHECK(gradient(realize(spec)).sup_norm() < 1e-12);
}

TEST_CASE("catalog order and content") {
    const auto entries = build_catalog(7);
    REQUIRE(entries.size() == 77);
    // f > b block first, then the degenerate star, then f < b
    CHECK(entries[0].spec.b == 0);
    CHECK(entries[38].spec.cls == CriticalClass::DegenerateStar);
    CHECK_FALSE(entries[38].morse_index.has_value());
    CHECK(entries[39].spec.b == 5);
    CHECK(entries.back().spec.b == 7);
    CHECK(entries.back().morse_index == 0);
    for (const auto& e : entries)
        if (e.morse_index) CHECK(*e.morse_index == (e.spec.f > e.spec.b ? e.spec.f - 1 : e.spec.f));
}
