#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "starcat/catalog.hpp"
#include "starcat/morse.hpp"

using namespace starcat;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

CriticalSpec find_spec(int n, int b, int omega) {
    for (const auto& s : enumerate_isolated(n))
        if (s.b == b && s.omega == omega) return s;
    throw std::runtime_error("spec not found");
}

std::vector<double> flatten(const SpectrumReport& rep) {
    std::vector<double> out;
    for (const auto& g : rep.eigenvalues)
        out.insert(out.end(), static_cast<size_t>(g.multiplicity), g.value);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("regular star spectrum, n=7 maximum") {
    const CriticalSpec spec = find_spec(7, 0, 1);
    const SpectrumReport rep = closed_form_spectrum(spec);
    const double p = std::sin(2.0 * kPi / 7.0);
    CHECK(rep.p == doctest::Approx(p).epsilon(1e-15));
    const auto flat = flatten(rep);
    REQUIRE(flat.size() == 6);
    CHECK(flat[0] == doctest::Approx(-7.0 * p));
    for (int i = 1; i < 6; ++i) CHECK(flat[static_cast<size_t>(i)] == doctest::Approx(-p));
    CHECK(rep.morse_index == 6);
}

TEST_CASE("zigzag spectrum, n=7 b=2") {
    // canonical pattern has the closing edge forward: quadratic
    // x^2 + 6 p x - 3 p^2 plus (x - p) and (x + p)^3
    CriticalSpec spec;
    spec.n = 7;
    spec.cls = CriticalClass::ZigzagStar;
    spec.pattern.signs = {-1, -1, 1, 1, 1, 1, 1};
    spec.omega = 1;
    spec.f = 5;
    spec.b = 2;
    spec.m = 3;
    spec.theta = 2.0 * kPi / 3.0;
    const double p = std::sin(2.0 * kPi / 3.0);
    const SpectrumReport rep = closed_form_spectrum(spec);
    std::vector<double> expect = {p * (-6.0 + std::sqrt(48.0)) / 2.0,
                                  p * (-6.0 - std::sqrt(48.0)) / 2.0, p, -p, -p, -p};
    std::sort(expect.begin(), expect.end());
    const auto flat = flatten(rep);
    REQUIRE(flat.size() == expect.size());
    for (size_t i = 0; i < flat.size(); ++i)
        CHECK(flat[i] == doctest::Approx(expect[i]).epsilon(1e-12));
    CHECK(rep.morse_index == 4);
}

TEST_CASE("index at the f=1 side") {
    const CriticalSpec spec = find_spec(7, 6, -1);
    CHECK(closed_form_spectrum(spec).morse_index == 1);
    CHECK(morse_index(spec) == 1);
}

TEST_CASE("degenerate classes are rejected") {
    for (const auto& s : enumerate_isolated(7))
        if (s.cls == CriticalClass::DegenerateStar) {
            CHECK_THROWS_AS(closed_form_spectrum(s), std::invalid_argument);
            CHECK_THROWS_AS(morse_index(s), std::invalid_argument);
        }
}

TEST_CASE("numeric spectrum oracle") {
    const CriticalSpec star5 = find_spec(5, 0, 1);
    const auto numeric = numeric_spectrum(realize(star5));
    const double p = std::sin(2.0 * kPi / 5.0);
    REQUIRE(numeric.size() == 4);
    CHECK(numeric[0] == doctest::Approx(-5.0 * p).epsilon(1e-9));
    for (int i = 1; i < 4; ++i) CHECK(numeric[static_cast<size_t>(i)] == doctest::Approx(-p).epsilon(1e-9));

    const auto zeros = numeric_spectrum(Configuration(7, std::vector<double>(6, 0.0)));
    REQUIRE(zeros.size() == 6);
    for (double v : zeros) CHECK(v == 0.0);

    const CriticalSpec zig = find_spec(7, 1, 1);
    const auto closed = flatten(closed_form_spectrum(zig));
    const auto num = numeric_spectrum(realize(zig));
    REQUIRE(closed.size() == num.size());
    for (size_t i = 0; i < num.size(); ++i)
        CHECK(closed[i] == doctest::Approx(num[i]).epsilon(1e-9));
}

TEST_CASE("closed form equals numeric for every isolated spec, n <= 10") {
    for (int n = 3; n <= 10; ++n)
        for (const auto& spec : enumerate_isolated(n)) {
            if (spec.cls == CriticalClass::DegenerateStar) continue;
            const auto closed = flatten(closed_form_spectrum(spec));
            const auto numeric = numeric_spectrum(realize(spec));
            REQUIRE(closed.size() == numeric.size());
            for (size_t i = 0; i < closed.size(); ++i)
                REQUIRE(std::fabs(closed[i] - numeric[i]) < 1e-9);
            int negatives = 0;
            for (double v : numeric)
                if (v < -1e-9) ++negatives;
            REQUIRE(negatives == morse_index(spec));
        }
}

TEST_CASE("zigzag quadratic root signs") {
    // In the frame with the closing edge forward the quadratic part is
    // x^2 + (b+f-1) p x + (b-f) p^2, so for f > b its roots split in sign.
    // Realizing the mirrored frame negates the whole spectrum.
    for (int n = 5; n <= 9; ++n)
        for (const auto& spec : enumerate_isolated(n)) {
            if (spec.cls != CriticalClass::ZigzagStar) continue;
            if (spec.f <= spec.b) continue;
            CHECK((spec.b - spec.f) < 0);  // the symbolic product statement
            const auto flat = flatten(closed_form_spectrum(spec));
            const double p = std::fabs(std::sin(spec.theta));
            std::vector<double> extras;
            for (double v : flat)
                if (std::fabs(v - p) > 1e-12 && std::fabs(v + p) > 1e-12) extras.push_back(v);
            if (spec.pattern.signs.back() == 1) {
                REQUIRE(extras.size() == 2);
                CHECK(extras.front() * extras.back() < 0.0);
            } else if (extras.size() == 2) {
                // mirrored frame: both roots land on the positive side
                CHECK(extras.front() > 0.0);
                CHECK(extras.back() > 0.0);
            } else {
                // single backward edge sitting on the closing position:
                // rank-one spectrum (n-2) sin(theta), -sin(theta) x (n-2)
                REQUIRE(extras.size() == 1);
                CHECK(spec.b == 1);
                CHECK(extras.front() > 0.0);
            }
        }
}

TEST_CASE("morse index rule") {
    CHECK(morse_index(find_spec(7, 1, 1)) == 5);
    CHECK(morse_index(find_spec(7, 5, -1)) == 2);
    CHECK(morse_index(find_spec(7, 0, 3)) == 6);
}

TEST_CASE("degenerate star gradient index") {
    CHECK(degenerate_index(7) == -20);
    CHECK(degenerate_index(3) == -2);
    CHECK(degenerate_index(9) == 70);
    CHECK_THROWS_AS(degenerate_index(6), std::invalid_argument);
    for (int n = 3; n <= 41; n += 2) CHECK(degenerate_index(n) == degenerate_index_alternating(n));
}

TEST_CASE("Poincare-Hopf ledger") {
    const IndexLedger l7 = poincare_hopf_ledger(7);
    REQUIRE(l7.rows.size() == 6);
    CHECK(l7.rows[0].contribution == 3);
    CHECK(l7.rows[1].contribution == -14);
    CHECK(l7.rows[2].contribution == 21);
    CHECK(l7.degenerate_contribution == -20);
    CHECK(l7.rows[3].contribution == 21);
    CHECK(l7.rows[4].contribution == -14);
    CHECK(l7.rows[5].contribution == 3);
    CHECK(l7.total == 0);

    CHECK(poincare_hopf_ledger(3).total == 0);
    CHECK(poincare_hopf_ledger(9).total == 0);
    CHECK(poincare_hopf_ledger(11).total == 0);
    CHECK_THROWS_AS(poincare_hopf_ledger(8), std::invalid_argument);
}
